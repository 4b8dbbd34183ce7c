//
// Project molmech - Copyright 2026 molmech developers.
// SPDX-License-Identifier: Apache-2.0
//
#include "molmech/smiles/events.hpp"

#include <algorithm>
#include <map>

#include "molmech/smiles/graph.hpp"

namespace molmech::smiles {

Result<std::vector<GrammarEvent>> grammar_events(
    std::span<const Token> tokens) {
  // Validate first so downstream consumers can rely on balanced structure.
  auto parsed = parse(tokens);
  if (!parsed) return parsed.error();

  std::vector<GrammarEvent> events;
  std::map<int, int> open_rings;  // label -> open token position
  std::vector<int> paren_stack;
  for (size_t t = 0; t < tokens.size(); ++t) {
    const Token& tok = tokens[t];
    const int pos = static_cast<int>(t);
    if (tok.kind == TokenKind::RingDigit) {
      auto it = open_rings.find(tok.ring_label);
      if (it == open_rings.end()) {
        open_rings.emplace(tok.ring_label, pos);
      } else {
        GrammarEvent e;
        e.kind = EventKind::Ring;
        e.open_pos = it->second;
        e.close_pos = pos;
        e.ring_label = tok.ring_label;
        events.push_back(e);
        open_rings.erase(it);
      }
    } else if (tok.kind == TokenKind::OpenParen) {
      paren_stack.push_back(pos);
    } else if (tok.kind == TokenKind::CloseParen) {
      GrammarEvent e;
      e.kind = EventKind::Branch;
      e.open_pos = paren_stack.back();
      e.close_pos = pos;
      events.push_back(e);
      paren_stack.pop_back();
    }
  }
  std::sort(events.begin(), events.end(),
            [](const GrammarEvent& a, const GrammarEvent& b) {
              return a.close_pos < b.close_pos;
            });
  return events;
}

std::vector<GrammarEvent> filter_events(std::span<const GrammarEvent> events,
                                        EventKind kind) {
  std::vector<GrammarEvent> out;
  for (const auto& e : events) {
    if (e.kind == kind) out.push_back(e);
  }
  return out;
}

}  // namespace molmech::smiles
