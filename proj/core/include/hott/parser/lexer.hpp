#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hott/syntax/source.hpp"

namespace hott::parse {

enum class Tok {
  Ident,
  Number,
  Keyword,
  Assign,     // :=
  Colon,      // :
  Arrow,      // ->
  Backslash,  // \ (lambda)
  Dot,        // .
  DotBrace,   // .{ directly after an identifier
  LParen,
  RParen,
  LBrace,
  RBrace,
  LBracket,
  RBracket,
  Comma,
  Star,   // *
  Equal,  // =
  Plus,   // +
  Underscore,
  At,
  Bar,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t start;
  std::size_t end;
};

const char* token_name(Tok k);
bool is_keyword(std::string_view word);

// Throws DiagnosticError (E-PARSE) on an illegal character or an
// unterminated block comment. The last token is always Tok::End.
std::vector<Token> tokenize(const SourceFile& src);
std::vector<Token> tokenize(std::string_view text);

}  // namespace hott::parse
