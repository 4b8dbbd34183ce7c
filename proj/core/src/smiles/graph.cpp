//
// Project molmech - Copyright 2026 molmech developers.
// SPDX-License-Identifier: Apache-2.0
//
#include "molmech/smiles/graph.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "molmech/errors.hpp"
#include "molmech/smiles/valence.hpp"

namespace molmech::smiles {

int MolGraph::find_bond(int a, int b) const {
  for (const auto& [nbr, bidx] : adj_[static_cast<size_t>(a)]) {
    if (nbr == b) return bidx;
  }
  return -1;
}

int MolGraph::add_atom(Atom atom) {
  atoms_.push_back(std::move(atom));
  adj_.emplace_back();
  return static_cast<int>(atoms_.size()) - 1;
}

int MolGraph::add_bond(Bond bond) {
  const int idx = static_cast<int>(bonds_.size());
  adj_[static_cast<size_t>(bond.a)].emplace_back(bond.b, idx);
  adj_[static_cast<size_t>(bond.b)].emplace_back(bond.a, idx);
  bonds_.push_back(bond);
  return idx;
}

namespace {

ParseError make_error(ParseError::Code code, int pos, std::string msg) {
  ParseError e;
  e.code = code;
  e.position = pos;
  e.message = std::move(msg);
  return e;
}

std::string canonical_element_spelling(std::string_view sym) {
  std::string s(sym);
  s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return s;
}

/// Parses the interior of a bracket-atom token, e.g. [nH], [N+], [CH3-].
/// Stereo marks (@, @@) are accepted and discarded; isotopes are rejected.
Result<Atom> parse_bracket_atom(const Token& token, int token_pos) {
  const std::string_view body(token.text.data() + 1, token.text.size() - 2);
  auto bad = [&](std::string msg) {
    return make_error(ParseError::Code::BadBracketAtom,
                      static_cast<int>(token.begin), std::move(msg));
  };
  if (body.empty()) return bad("empty bracket atom");
  size_t i = 0;
  if (std::isdigit(static_cast<unsigned char>(body[0]))) {
    return bad("isotope specifications are not supported");
  }

  // Element symbol, longest match first.
  std::string_view sym;
  if (body.size() >= 2 && std::isupper(static_cast<unsigned char>(body[0])) &&
      std::islower(static_cast<unsigned char>(body[1])) && body[1] != 'h' &&
      element_supported(body.substr(0, 2))) {
    sym = body.substr(0, 2);
  } else if (element_supported(body.substr(0, 1))) {
    sym = body.substr(0, 1);
  } else {
    return make_error(ParseError::Code::UnsupportedElement,
                      static_cast<int>(token.begin),
                      "unsupported element in bracket atom '" + token.text +
                          "'");
  }
  i = sym.size();

  Atom atom;
  atom.aromatic = std::islower(static_cast<unsigned char>(sym[0])) != 0;
  atom.element = canonical_element_spelling(sym);
  atom.explicit_h = 0;  // inside brackets, unspecified H means zero
  atom.token_index = token_pos;

  bool seen_h = false;
  bool seen_charge = false;
  while (i < body.size()) {
    const char c = body[i];
    if (c == '@') {
      ++i;
      if (i < body.size() && body[i] == '@') ++i;
      continue;
    }
    if (c == 'H') {
      if (seen_h) return bad("duplicate H count");
      seen_h = true;
      ++i;
      int count = 1;
      if (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) {
        count = body[i] - '0';
        ++i;
      }
      atom.explicit_h = static_cast<int8_t>(count);
      continue;
    }
    if (c == '+' || c == '-') {
      if (seen_charge) return bad("duplicate charge");
      seen_charge = true;
      const int sign = (c == '+') ? 1 : -1;
      ++i;
      int magnitude = 1;
      if (i < body.size() && body[i] == c) {  // ++ / --
        magnitude = 2;
        ++i;
      } else if (i < body.size() &&
                 std::isdigit(static_cast<unsigned char>(body[i]))) {
        magnitude = body[i] - '0';
        ++i;
      }
      if (magnitude > 2) return bad("charge magnitude beyond 2 unsupported");
      atom.charge = static_cast<int8_t>(sign * magnitude);
      continue;
    }
    return bad(std::string("unexpected '") + c + "' in bracket atom");
  }
  return atom;
}

int base_consumed(const MolGraph& g, int atom) {
  int total = 0;
  for (const auto& [nbr, bidx] : g.neighbors(atom)) {
    (void)nbr;
    const Bond& b = g.bonds()[static_cast<size_t>(bidx)];
    total += b.aromatic ? 1 : b.order;
  }
  const Atom& a = g.atoms()[static_cast<size_t>(atom)];
  if (a.explicit_h > 0) total += a.explicit_h;
  return total;
}

}  // namespace

int consumed_valence(const MolGraph& graph, int atom) {
  const Atom& a = graph.atoms()[static_cast<size_t>(atom)];
  const int cap = allowed_max(a.element, a.charge);
  int base = base_consumed(graph, atom);
  if (a.aromatic && base < cap) ++base;  // delocalization reserve
  return base;
}

int remaining_valence(const MolGraph& graph, int atom) {
  const Atom& a = graph.atoms()[static_cast<size_t>(atom)];
  if (!element_supported(a.element)) {
    throw DataError("remaining_valence: unsupported element " + a.element);
  }
  const int cap = allowed_max(a.element, a.charge);
  return std::clamp(cap - consumed_valence(graph, atom), 0, 4);
}

int remaining_valence_at_emission(const MolGraph& graph, int atom) {
  const Atom& a = graph.atoms()[static_cast<size_t>(atom)];
  if (!element_supported(a.element)) {
    throw DataError("remaining_valence: unsupported element " + a.element);
  }
  const int cap = allowed_max(a.element, a.charge);
  int base = (a.explicit_h > 0) ? a.explicit_h : 0;
  // The only bond present when an atom's token is emitted is the chain or
  // branch bond back to an earlier atom; ring bonds close at digit tokens.
  for (const auto& [nbr, bidx] : graph.neighbors(atom)) {
    const Bond& b = graph.bonds()[static_cast<size_t>(bidx)];
    if (b.from_ring) continue;
    const Atom& other = graph.atoms()[static_cast<size_t>(nbr)];
    if (other.token_index < a.token_index) {
      base += b.aromatic ? 1 : b.order;
    }
  }
  if (a.aromatic && base < cap) ++base;
  return std::clamp(cap - base, 0, 4);
}

namespace {

struct RingOpening {
  int atom = -1;
  int spec_order = -1;  // bond symbol seen right before the opening digit
  int token_pos = -1;
};

struct Parser {
  std::span<const Token> tokens;
  MolGraph graph;
  std::vector<int> consumed;  // per atom, bonds + explicit H (no reserve)
  std::map<int, RingOpening> open_rings;
  std::vector<std::pair<int, size_t>> branch_stack;  // (attach atom, #atoms)
  int attach = -1;
  int pending_order = -1;
  int pending_pos = -1;

  ParseError valence_error(int atom, int token_pos) {
    ParseError e = make_error(
        ParseError::Code::ValenceExceeded, token_pos,
        "valence exceeded on atom " + std::to_string(atom) + " (" +
            graph.atoms()[static_cast<size_t>(atom)].element + ")");
    e.atom = atom;
    return e;
  }

  int capacity(int atom) const {
    const Atom& a = graph.atoms()[static_cast<size_t>(atom)];
    return allowed_max(a.element, a.charge);
  }

  /// Creates a bond and re-checks both endpoints against their ceilings.
  Result<int> bond(int u, int v, int order, bool aromatic, bool from_ring,
                   int token_pos) {
    consumed[static_cast<size_t>(u)] += aromatic ? 1 : order;
    consumed[static_cast<size_t>(v)] += aromatic ? 1 : order;
    if (consumed[static_cast<size_t>(u)] > capacity(u)) {
      return valence_error(u, token_pos);
    }
    if (consumed[static_cast<size_t>(v)] > capacity(v)) {
      return valence_error(v, token_pos);
    }
    Bond b;
    b.a = u;
    b.b = v;
    b.order = static_cast<int8_t>(aromatic ? 1 : order);
    b.aromatic = aromatic;
    b.from_ring = from_ring;
    return graph.add_bond(b);
  }

  Result<MolGraph> run() {
    for (size_t t = 0; t < tokens.size(); ++t) {
      const Token& tok = tokens[t];
      const int pos = static_cast<int>(t);
      switch (tok.kind) {
        case TokenKind::Atom:
        case TokenKind::BracketAtom: {
          Atom atom;
          if (tok.kind == TokenKind::BracketAtom) {
            auto parsed = parse_bracket_atom(tok, pos);
            if (!parsed) return parsed.error();
            atom = std::move(parsed).value();
          } else {
            if (!element_supported(tok.text)) {
              return make_error(ParseError::Code::UnsupportedElement,
                                static_cast<int>(tok.begin),
                                "unsupported element '" + tok.text + "'");
            }
            atom.aromatic =
                std::islower(static_cast<unsigned char>(tok.text[0])) != 0;
            atom.element = canonical_element_spelling(tok.text);
            atom.token_index = pos;
          }
          const int idx = graph.add_atom(atom);
          consumed.push_back(atom.explicit_h > 0 ? atom.explicit_h : 0);
          if (consumed.back() > capacity(idx)) {
            return valence_error(idx, pos);
          }
          if (attach >= 0) {
            const bool both_aromatic =
                graph.atoms()[static_cast<size_t>(attach)].aromatic &&
                atom.aromatic;
            const bool aromatic_bond = pending_order < 0 && both_aromatic;
            const int order = pending_order < 0 ? 1 : pending_order;
            auto b = bond(attach, idx, order, aromatic_bond, false, pos);
            if (!b) return b.error();
          } else if (pending_order >= 0) {
            return make_error(ParseError::Code::DanglingBond, pending_pos,
                              "bond with no preceding atom");
          }
          pending_order = -1;
          attach = idx;
          break;
        }
        case TokenKind::Bond: {
          if (attach < 0) {
            return make_error(ParseError::Code::DanglingBond, pos,
                              "bond with no preceding atom");
          }
          if (pending_order >= 0) {
            return make_error(ParseError::Code::DanglingBond, pos,
                              "two consecutive bond symbols");
          }
          pending_order = (tok.text == "=") ? 2 : (tok.text == "#") ? 3 : 1;
          pending_pos = pos;
          break;
        }
        case TokenKind::RingDigit: {
          if (attach < 0) {
            return make_error(ParseError::Code::DanglingBond, pos,
                              "ring digit with no preceding atom");
          }
          auto it = open_rings.find(tok.ring_label);
          if (it == open_rings.end()) {
            RingOpening opening;
            opening.atom = attach;
            opening.spec_order = pending_order;
            opening.token_pos = pos;
            open_rings.emplace(tok.ring_label, opening);
            pending_order = -1;
            break;
          }
          const RingOpening opening = it->second;
          open_rings.erase(it);
          if (opening.atom == attach) {
            return make_error(ParseError::Code::BadRingBond, pos,
                              "ring closure onto the same atom");
          }
          if (graph.find_bond(opening.atom, attach) >= 0) {
            return make_error(ParseError::Code::BadRingBond, pos,
                              "duplicate bond via ring closure");
          }
          if (opening.spec_order >= 0 && pending_order >= 0 &&
              opening.spec_order != pending_order) {
            return make_error(ParseError::Code::BadRingBond, pos,
                              "conflicting ring bond orders");
          }
          int order = opening.spec_order >= 0 ? opening.spec_order
                                              : pending_order;
          const bool both_aromatic =
              graph.atoms()[static_cast<size_t>(opening.atom)].aromatic &&
              graph.atoms()[static_cast<size_t>(attach)].aromatic;
          const bool aromatic_bond = order < 0 && both_aromatic;
          if (order < 0) order = 1;
          auto b = bond(opening.atom, attach, order, aromatic_bond, true, pos);
          if (!b) return b.error();
          pending_order = -1;
          break;
        }
        case TokenKind::OpenParen: {
          if (attach < 0) {
            return make_error(ParseError::Code::UnbalancedParen, pos,
                              "branch with no preceding atom");
          }
          if (pending_order >= 0) {
            return make_error(ParseError::Code::DanglingBond, pos,
                              "bond symbol before '('");
          }
          branch_stack.emplace_back(attach, graph.atom_count());
          break;
        }
        case TokenKind::CloseParen: {
          if (branch_stack.empty()) {
            return make_error(ParseError::Code::UnbalancedParen, pos,
                              "')' with no matching '('");
          }
          if (pending_order >= 0) {
            return make_error(ParseError::Code::DanglingBond, pending_pos,
                              "bond symbol before ')'");
          }
          const auto [saved_attach, atoms_at_open] = branch_stack.back();
          branch_stack.pop_back();
          if (graph.atom_count() == atoms_at_open) {
            return make_error(ParseError::Code::EmptyBranch, pos,
                              "empty branch");
          }
          attach = saved_attach;
          break;
        }
      }
    }
    if (pending_order >= 0) {
      return make_error(ParseError::Code::DanglingBond, pending_pos,
                        "trailing bond symbol");
    }
    if (!branch_stack.empty()) {
      return make_error(ParseError::Code::UnbalancedParen,
                        static_cast<int>(tokens.size()),
                        "unclosed '('");
    }
    if (!open_rings.empty()) {
      const auto& [label, opening] = *open_rings.begin();
      ParseError e = make_error(ParseError::Code::UnclosedRing,
                                opening.token_pos,
                                "unclosed ring label " + std::to_string(label));
      e.label = label;
      return e;
    }
    if (graph.empty()) {
      return make_error(ParseError::Code::EmptyInput, 0, "no atoms in input");
    }
    return std::move(graph);
  }
};

}  // namespace

Result<MolGraph> parse(std::span<const Token> tokens) {
  if (tokens.empty()) {
    return make_error(ParseError::Code::EmptyInput, 0, "no tokens");
  }
  Parser p;
  p.tokens = tokens;
  return p.run();
}

Result<MolGraph> parse_smiles(std::string_view smiles) {
  auto tokens = tokenize(smiles);
  if (!tokens) return tokens.error();
  return parse(tokens.value());
}

}  // namespace molmech::smiles
