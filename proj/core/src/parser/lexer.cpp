#include "hott/parser/lexer.hpp"

#include <array>

#include "hott/diagnostic.hpp"

namespace hott::parse {

namespace {

constexpr std::array kKeywords{
    "def",   "axiom",     "hit",   "where", "point",      "path",     "Type",      "Id",
    "refl",  "J",         "fst",   "snd",   "in",         "Nat",      "zero",      "succ",
    "natrec", "Empty",    "empty-elim", "Unit", "star",   "unit-elim", "Sum",      "inl",
    "inr",   "sum-elim",
};

bool ident_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9') || c == '_' || c == '\''; }
bool digit(char c) { return c >= '0' && c <= '9'; }

class Lexer {
 public:
  Lexer(std::string_view text, const SourceFile* src) : text_(text), src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_trivia();
      if (pos_ >= text_.size()) break;
      out.push_back(next(out));
    }
    out.push_back(Token{Tok::End, "", text_.size(), text_.size()});
    return out;
  }

 private:
  [[noreturn]] void error(std::string msg, std::size_t start, std::size_t end) {
    SourceSpan span;
    if (src_) {
      span = src_->span(start, end);
    } else {
      span.start = start;
      span.end = end;
    }
    fail(code::parse, std::move(msg), span);
  }

  void skip_trivia() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        ++pos_;
      } else if (c == '-' && peek(1) == '-') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (c == '{' && peek(1) == '-') {
        block_comment();
      } else {
        break;
      }
    }
  }

  void block_comment() {
    std::size_t open = pos_;
    int depth = 0;
    while (pos_ < text_.size()) {
      if (text_[pos_] == '{' && peek(1) == '-') {
        ++depth;
        pos_ += 2;
      } else if (text_[pos_] == '-' && peek(1) == '}') {
        --depth;
        pos_ += 2;
        if (depth == 0) return;
      } else {
        ++pos_;
      }
    }
    error("unterminated block comment", open, open + 2);
  }

  char peek(std::size_t k) const { return pos_ + k < text_.size() ? text_[pos_ + k] : '\0'; }

  Token make(Tok k, std::size_t len) {
    Token t{k, std::string(text_.substr(pos_, len)), pos_, pos_ + len};
    pos_ += len;
    return t;
  }

  Token next(const std::vector<Token>& sofar) {
    char c = text_[pos_];
    std::size_t start = pos_;
    if (ident_start(c)) {
      std::size_t e = pos_ + 1;
      while (e < text_.size()) {
        if (ident_char(text_[e])) {
          ++e;
        } else if (text_[e] == '-' && e + 1 < text_.size() &&
                   (ident_start(text_[e + 1]) || digit(text_[e + 1]))) {
          e += 2;
        } else {
          break;
        }
      }
      std::string word(text_.substr(start, e - start));
      pos_ = e;
      return Token{is_keyword(word) ? Tok::Keyword : Tok::Ident, std::move(word), start, e};
    }
    if (digit(c)) {
      std::size_t e = pos_;
      while (e < text_.size() && digit(text_[e])) ++e;
      if (e < text_.size() && ident_start(text_[e])) error("malformed number", start, e + 1);
      return make(Tok::Number, e - start);
    }
    switch (c) {
      case ':':
        return peek(1) == '=' ? make(Tok::Assign, 2) : make(Tok::Colon, 1);
      case '-':
        if (peek(1) == '>') return make(Tok::Arrow, 2);
        error("unexpected '-'", start, start + 1);
      case '\\':
        return make(Tok::Backslash, 1);
      case '.':
        if (peek(1) == '{' && !sofar.empty() && sofar.back().kind == Tok::Ident && sofar.back().end == start)
          return make(Tok::DotBrace, 2);
        return make(Tok::Dot, 1);
      case '(':
        return make(Tok::LParen, 1);
      case ')':
        return make(Tok::RParen, 1);
      case '{':
        return make(Tok::LBrace, 1);
      case '}':
        return make(Tok::RBrace, 1);
      case '[':
        return make(Tok::LBracket, 1);
      case ']':
        return make(Tok::RBracket, 1);
      case ',':
        return make(Tok::Comma, 1);
      case '*':
        return make(Tok::Star, 1);
      case '=':
        return make(Tok::Equal, 1);
      case '+':
        return make(Tok::Plus, 1);
      case '_':
        if (ident_char(peek(1))) error("identifiers may not start with '_'", start, start + 2);
        return make(Tok::Underscore, 1);
      case '@':
        return make(Tok::At, 1);
      case '|':
        return make(Tok::Bar, 1);
      case '!':
        error("'!' is reserved", start, start + 1);
      default:
        break;
    }
    if (static_cast<unsigned char>(c) >= 0x80) {
      std::size_t e = pos_ + 1;
      while (e < text_.size() && (static_cast<unsigned char>(text_[e]) & 0xC0) == 0x80) ++e;
      error("non-ASCII character; the surface syntax is ASCII only", start, e);
    }
    error(std::string("illegal character '") + c + "'", start, start + 1);
  }

  std::string_view text_;
  const SourceFile* src_;
  std::size_t pos_ = 0;
};

}  // namespace

bool is_keyword(std::string_view word) {
  for (auto k : kKeywords)
    if (word == k) return true;
  return false;
}

const char* token_name(Tok k) {
  switch (k) {
    case Tok::Ident: return "identifier";
    case Tok::Number: return "number";
    case Tok::Keyword: return "keyword";
    case Tok::Assign: return "':='";
    case Tok::Colon: return "':'";
    case Tok::Arrow: return "'->'";
    case Tok::Backslash: return "'\\'";
    case Tok::Dot: return "'.'";
    case Tok::DotBrace: return "'.{'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Comma: return "','";
    case Tok::Star: return "'*'";
    case Tok::Equal: return "'='";
    case Tok::Plus: return "'+'";
    case Tok::Underscore: return "'_'";
    case Tok::At: return "'@'";
    case Tok::Bar: return "'|'";
    case Tok::End: return "end of input";
  }
  return "?";
}

std::vector<Token> tokenize(const SourceFile& src) { return Lexer(src.text(), &src).run(); }

std::vector<Token> tokenize(std::string_view text) { return Lexer(text, nullptr).run(); }

}  // namespace hott::parse
