//
// Project molmech - Copyright 2026 molmech developers.
// SPDX-License-Identifier: Apache-2.0
//
#ifndef MOLMECH_SMILES_VALENCE_HPP
#define MOLMECH_SMILES_VALENCE_HPP

#include <string_view>

namespace molmech::smiles {

// Supported alphabet: B C N O P S F Cl Br I, aromatic b c n o p s, plus
// bracket forms with charge in [-2, 2] and explicit H counts. Valence
// accounting is deliberately simple:
//
//   allowed_max(element, charge)  - a single ceiling per element (the highest
//                                   standard valence: B3 C4 N3 O2 P5 S6 X1),
//                                   shifted by the formal charge (+q raises,
//                                   -q lowers; carbon loses capacity in both
//                                   directions). This keeps remaining valence
//                                   monotone as bonds accumulate.
//   aromatic reserve              - an aromatic atom reserves one extra unit
//                                   for delocalization when it has spare
//                                   capacity (so benzene carbon: 4-2-1 = 1).
//                                   The reserve is waived when the atom is
//                                   already at capacity ([nH] in pyrrole).
//
// Hydrogen-filling for molecular weight uses the classic multi-valence sets
// instead (P {3,5}, S {2,4,6}); see descriptors.hpp.

bool element_supported(std::string_view element);

/// Case-sensitive element id; aromatic and aliphatic forms share an id.
/// Returns -1 for unsupported symbols (including '*').
int element_id(std::string_view element);

/// Highest standard valence for the element adjusted for formal charge.
/// Result is clamped to [0, 6].
int allowed_max(std::string_view element, int charge);

}  // namespace molmech::smiles

#endif
