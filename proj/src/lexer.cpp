#include "mlts/lexer.hpp"

#include <array>
#include <cctype>
#include <set>
#include <string_view>

#include "mlts/diagnostics.hpp"

namespace mlts {

namespace {

const std::set<std::string, std::less<>> kKeywords = {
    "let", "rec", "in", "fun", "function", "match", "with", "if", "then", "else",
    "new", "nab", "type", "of", "begin", "end", "mod", "true", "false",
};

// Longest symbols first.
constexpr std::array<std::string_view, 27> kSymbols = {
    ";;", "->", "=>", "::", "<>", "<=", ">=", "&&", "||", "(", ")", "[", "]", ",",
    ";", "|", "\\", "@", "+", "-", "*", "/", "=", "<", ">", "_", ":",
};

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

}  // namespace

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  int line = 1;
  int col = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < text.size(); ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    SrcLoc loc{line, col};
    if (text.compare(i, 2, "(*") == 0) {
      int depth = 0;
      do {
        if (text.compare(i, 2, "(*") == 0) {
          ++depth;
          advance(2);
        } else if (text.compare(i, 2, "*)") == 0) {
          --depth;
          advance(2);
        } else {
          advance(1);
        }
      } while (depth > 0 && i < text.size());
      if (depth > 0) throw StaticError(loc, "syntax", "unterminated comment");
      continue;
    }
    Token tok;
    tok.loc = loc;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      tok.kind = Tok::Int;
      tok.text = text.substr(i, j - i);
      try {
        tok.value = std::stoll(tok.text);
      } catch (const std::out_of_range&) {
        throw StaticError(loc, "syntax", "integer literal out of range");
      }
      advance(j - i);
      out.push_back(std::move(tok));
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || (c == '_' && i + 1 < text.size() && ident_char(text[i + 1]))) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      tok.text = text.substr(i, j - i);
      if (kKeywords.count(tok.text)) {
        tok.kind = Tok::Keyword;
      } else if (std::isupper(static_cast<unsigned char>(c))) {
        tok.kind = Tok::UIdent;
      } else {
        tok.kind = Tok::LIdent;
      }
      advance(j - i);
      out.push_back(std::move(tok));
      continue;
    }
    if (c == '#') {
      tok.kind = Tok::Hash;
      tok.text = "#";
      advance(1);
      out.push_back(std::move(tok));
      continue;
    }
    bool found = false;
    for (auto sym : kSymbols) {
      if (text.compare(i, sym.size(), sym) == 0) {
        tok.kind = Tok::Symbol;
        tok.text = std::string(sym);
        advance(sym.size());
        out.push_back(std::move(tok));
        found = true;
        break;
      }
    }
    if (!found) throw StaticError(loc, "syntax", std::string("unexpected character '") + c + "'");
  }
  Token end;
  end.kind = Tok::End;
  end.loc = SrcLoc{line, col};
  out.push_back(end);
  return out;
}

}  // namespace mlts
