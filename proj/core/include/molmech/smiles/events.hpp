//
// Project molmech - Copyright 2026 molmech developers.
// SPDX-License-Identifier: Apache-2.0
//
#ifndef MOLMECH_SMILES_EVENTS_HPP
#define MOLMECH_SMILES_EVENTS_HPP

#include <span>
#include <vector>

#include "molmech/smiles/token.hpp"

namespace molmech::smiles {

enum class EventKind : uint8_t { Ring, Branch };

/// A matched (opener, closer) pair. Positions are 0-based token indices.
struct GrammarEvent {
  EventKind kind;
  int open_pos = -1;
  int close_pos = -1;
  int batch_id = 0;    // filled by corpus-level callers
  int ring_label = -1; // ring events only
};

/// One ring event per closed label occurrence and one branch event per ')',
/// ordered by close_pos. The token stream must parse; parse errors propagate.
Result<std::vector<GrammarEvent>> grammar_events(std::span<const Token> tokens);

std::vector<GrammarEvent> filter_events(std::span<const GrammarEvent> events,
                                        EventKind kind);

}  // namespace molmech::smiles

#endif
