//
// Project molmech - Copyright 2026 molmech developers.
// SPDX-License-Identifier: Apache-2.0
//
#include "molmech/smiles/valence.hpp"

#include <algorithm>
#include <array>

namespace molmech::smiles {

namespace {

struct ElementInfo {
  std::string_view symbol;  // canonical (aliphatic) spelling
  int max_valence;
  bool aromatic_ok;
};

// Index in this table is the element id.
constexpr std::array<ElementInfo, 10> kElements = {{
    {"B", 3, true},
    {"C", 4, true},
    {"N", 3, true},
    {"O", 2, true},
    {"P", 5, true},
    {"S", 6, true},
    {"F", 1, false},
    {"Cl", 1, false},
    {"Br", 1, false},
    {"I", 1, false},
}};

int lookup(std::string_view element) {
  std::array<char, 2> up{0, 0};
  if (element.empty() || element.size() > 2) return -1;
  up[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(element[0])));
  if (element.size() == 2) up[1] = element[1];
  const std::string_view key(up.data(), element.size());
  for (size_t i = 0; i < kElements.size(); ++i) {
    if (kElements[i].symbol == key) {
      // Aromatic (lowercase) spellings exist only for b c n o p s.
      const bool lower = std::islower(static_cast<unsigned char>(element[0]));
      if (lower && (!kElements[i].aromatic_ok || element.size() == 2)) {
        return -1;
      }
      return static_cast<int>(i);
    }
  }
  return -1;
}

}  // namespace

bool element_supported(std::string_view element) {
  return lookup(element) >= 0;
}

int element_id(std::string_view element) { return lookup(element); }

int allowed_max(std::string_view element, int charge) {
  const int id = lookup(element);
  if (id < 0) return 0;
  int v = kElements[static_cast<size_t>(id)].max_valence;
  if (kElements[static_cast<size_t>(id)].symbol == "C") {
    v -= std::abs(charge);  // carbanion and carbocation both drop to 3
  } else {
    v += charge;
  }
  return std::clamp(v, 0, 6);
}

}  // namespace molmech::smiles
