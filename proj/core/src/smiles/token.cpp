//
// Project molmech - Copyright 2026 molmech developers.
// SPDX-License-Identifier: Apache-2.0
//
#include "molmech/smiles/token.hpp"

#include <cctype>

namespace molmech::smiles {

std::string_view to_string(ParseError::Code code) {
  using Code = ParseError::Code;
  switch (code) {
    case Code::EmptyInput: return "EmptyInput";
    case Code::UnknownCharacter: return "UnknownCharacter";
    case Code::UnterminatedBracket: return "UnterminatedBracket";
    case Code::BadBracketAtom: return "BadBracketAtom";
    case Code::UnsupportedElement: return "UnsupportedElement";
    case Code::UnclosedRing: return "UnclosedRing";
    case Code::UnbalancedParen: return "UnbalancedParen";
    case Code::ValenceExceeded: return "ValenceExceeded";
    case Code::EmptyBranch: return "EmptyBranch";
    case Code::DanglingBond: return "DanglingBond";
    case Code::BadRingBond: return "BadRingBond";
  }
  return "Unknown";
}

namespace {

ParseError err_at(ParseError::Code code, int pos, std::string msg) {
  ParseError e;
  e.code = code;
  e.position = pos;
  e.message = std::move(msg);
  return e;
}

bool is_single_element(char c) {
  switch (c) {
    case 'B': case 'C': case 'N': case 'O': case 'P': case 'S':
    case 'F': case 'I':
    case 'b': case 'c': case 'n': case 'o': case 'p': case 's':
      return true;
    default:
      return false;
  }
}

}  // namespace

Result<std::vector<Token>> tokenize(std::string_view smiles,
                                    bool allow_wildcard) {
  if (smiles.empty()) {
    return err_at(ParseError::Code::EmptyInput, 0, "empty SMILES");
  }
  std::vector<Token> out;
  out.reserve(smiles.size());
  size_t i = 0;
  auto push = [&](TokenKind kind, size_t begin, size_t len, int label = -1) {
    Token t;
    t.kind = kind;
    t.text = std::string(smiles.substr(begin, len));
    t.begin = static_cast<uint32_t>(begin);
    t.end = static_cast<uint32_t>(begin + len);
    t.ring_label = label;
    out.push_back(std::move(t));
  };
  while (i < smiles.size()) {
    const char c = smiles[i];
    const auto pos = static_cast<int>(i);
    if (static_cast<unsigned char>(c) > 0x7f) {
      return err_at(ParseError::Code::UnknownCharacter, pos,
                    "non-ASCII byte in SMILES");
    }
    // Two-character elements first: longest match wins.
    if ((c == 'C' && i + 1 < smiles.size() && smiles[i + 1] == 'l') ||
        (c == 'B' && i + 1 < smiles.size() && smiles[i + 1] == 'r')) {
      push(TokenKind::Atom, i, 2);
      i += 2;
      continue;
    }
    if (is_single_element(c) || (allow_wildcard && c == '*')) {
      push(TokenKind::Atom, i, 1);
      ++i;
      continue;
    }
    if (c == '[') {
      const size_t close = smiles.find(']', i + 1);
      if (close == std::string_view::npos) {
        return err_at(ParseError::Code::UnterminatedBracket, pos,
                      "missing ']' for bracket atom");
      }
      push(TokenKind::BracketAtom, i, close - i + 1);
      i = close + 1;
      continue;
    }
    if (c == '-' || c == '=' || c == '#' || c == '/' || c == '\\') {
      push(TokenKind::Bond, i, 1);
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      push(TokenKind::RingDigit, i, 1, c - '0');
      ++i;
      continue;
    }
    if (c == '%') {
      if (i + 2 >= smiles.size() ||
          !std::isdigit(static_cast<unsigned char>(smiles[i + 1])) ||
          !std::isdigit(static_cast<unsigned char>(smiles[i + 2]))) {
        return err_at(ParseError::Code::UnknownCharacter, pos,
                      "'%' must be followed by two digits");
      }
      const int label = (smiles[i + 1] - '0') * 10 + (smiles[i + 2] - '0');
      push(TokenKind::RingDigit, i, 3, label);
      i += 3;
      continue;
    }
    if (c == '(') {
      push(TokenKind::OpenParen, i, 1);
      ++i;
      continue;
    }
    if (c == ')') {
      push(TokenKind::CloseParen, i, 1);
      ++i;
      continue;
    }
    return err_at(ParseError::Code::UnknownCharacter, pos,
                  std::string("unexpected character '") + c + "'");
  }
  return out;
}

}  // namespace molmech::smiles
