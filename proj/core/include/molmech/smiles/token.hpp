//
// Project molmech - Copyright 2026 molmech developers.
// SPDX-License-Identifier: Apache-2.0
//
#ifndef MOLMECH_SMILES_TOKEN_HPP
#define MOLMECH_SMILES_TOKEN_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace molmech::smiles {

enum class TokenKind : uint8_t {
  Atom,         // organic-subset atom, one or two characters (Cl, Br)
  BracketAtom,  // [...] including the brackets
  Bond,         // - = # / (forward and back slash are annotations, order 1)
  RingDigit,    // 0-9 or %NN
  OpenParen,
  CloseParen,
};

struct Token {
  TokenKind kind;
  std::string text;     // verbatim substring; concatenation rebuilds input
  uint32_t begin = 0;   // byte offsets into the input
  uint32_t end = 0;
  int ring_label = -1;  // 0..99 for RingDigit tokens
};

/// Typed error for the tokenize/parse data path. Bulk corpus work treats
/// invalid lines as data, not exceptions, so these are values rather than
/// throws; `message` is preformatted for logs.
struct ParseError {
  enum class Code {
    EmptyInput,
    UnknownCharacter,
    UnterminatedBracket,
    BadBracketAtom,
    UnsupportedElement,
    UnclosedRing,
    UnbalancedParen,
    ValenceExceeded,
    EmptyBranch,
    DanglingBond,
    BadRingBond,
  };
  Code code;
  int position = -1;  // byte or token position, depending on stage
  int atom = -1;      // for ValenceExceeded
  int label = -1;     // for ring errors
  std::string message;
};

std::string_view to_string(ParseError::Code code);

/// Minimal expected-style carrier for the parse path.
template <class T>
class Result {
 public:
  Result(T value) : v_(std::move(value)) {}                  // NOLINT
  Result(ParseError err) : v_(std::move(err)) {}             // NOLINT

  bool ok() const { return std::holds_alternative<T>(v_); }
  explicit operator bool() const { return ok(); }

  const T& value() const& { return std::get<T>(v_); }
  T& value() & { return std::get<T>(v_); }
  T&& value() && { return std::get<T>(std::move(v_)); }
  const ParseError& error() const { return std::get<ParseError>(v_); }

 private:
  std::variant<T, ParseError> v_;
};

/// Splits a SMILES string into tokens. Exhaustive and non-overlapping: every
/// input byte lands in exactly one token or the call reports a typed error.
/// With `allow_wildcard`, '*' is accepted as an Atom token (pattern language).
Result<std::vector<Token>> tokenize(std::string_view smiles,
                                    bool allow_wildcard = false);

}  // namespace molmech::smiles

#endif
