#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mlts/term.hpp"

namespace mlts {

enum class Tok {
  Int,
  LIdent,
  UIdent,
  Keyword,
  Symbol,
  Hash,
  End,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::int64_t value = 0;
  SrcLoc loc;
};

/// Splits MLTS source into tokens. Comments `(* ... *)` nest. Throws
/// StaticError on unterminated comments or stray characters.
std::vector<Token> tokenize(const std::string& text);

}  // namespace mlts
