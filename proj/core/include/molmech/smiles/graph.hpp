//
// Project molmech - Copyright 2026 molmech developers.
// SPDX-License-Identifier: Apache-2.0
//
#ifndef MOLMECH_SMILES_GRAPH_HPP
#define MOLMECH_SMILES_GRAPH_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "molmech/smiles/token.hpp"

namespace molmech::smiles {

struct Atom {
  std::string element;       // canonical aliphatic spelling ("C", "Cl")
  bool aromatic = false;
  int8_t charge = 0;
  int8_t explicit_h = -1;    // -1 implicit (organic subset), >= 0 bracket count
  int32_t token_index = -1;  // token that introduced the atom
};

struct Bond {
  int32_t a = -1;
  int32_t b = -1;
  int8_t order = 1;        // 1, 2, 3; aromatic bonds carry order 1
  bool aromatic = false;
  bool from_ring = false;  // closed via a ring digit rather than adjacency
};

/// Connected molecular graph. Immutable after parse in normal use; the
/// mutating helpers exist for the scaffold rewriter and the corpus generator.
class MolGraph {
 public:
  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::vector<Bond>& bonds() const { return bonds_; }
  size_t atom_count() const { return atoms_.size(); }
  size_t bond_count() const { return bonds_.size(); }
  bool empty() const { return atoms_.empty(); }

  /// (neighbor atom, bond index) pairs in insertion order.
  const std::vector<std::pair<int, int>>& neighbors(int atom) const {
    return adj_[static_cast<size_t>(atom)];
  }
  int degree(int atom) const {
    return static_cast<int>(adj_[static_cast<size_t>(atom)].size());
  }
  /// Bond index between a and b, or -1.
  int find_bond(int a, int b) const;

  int add_atom(Atom atom);
  /// Adds a bond; caller is responsible for valence and duplicate checks.
  int add_bond(Bond bond);

 private:
  std::vector<Atom> atoms_;
  std::vector<Bond> bonds_;
  std::vector<std::vector<std::pair<int, int>>> adj_;
};

Result<MolGraph> parse(std::span<const Token> tokens);
Result<MolGraph> parse_smiles(std::string_view smiles);

/// Bond orders consumed so far: sum of bond orders (aromatic bonds count 1)
/// plus explicit hydrogens plus the aromatic delocalization reserve.
int consumed_valence(const MolGraph& graph, int atom);

/// allowed_max(element, charge) minus consumed_valence, clamped to [0, 4].
/// Throws DataError for unsupported elements in hand-built graphs.
int remaining_valence(const MolGraph& graph, int atom);

/// Token-position variant: remaining valence at the moment the atom's token
/// was emitted (parent bond and explicit hydrogens counted, ring closures and
/// later branches not).
int remaining_valence_at_emission(const MolGraph& graph, int atom);

}  // namespace molmech::smiles

#endif
