#include "hott/parser/parser.hpp"

#include <charconv>

#include "hott/diagnostic.hpp"
#include "hott/parser/lexer.hpp"

namespace hott::parse {

STerm make(SurfaceNode::Data d, SourceSpan span) {
  return std::make_shared<const SurfaceNode>(SurfaceNode{std::move(d), std::move(span)});
}

namespace {

class Parser {
 public:
  explicit Parser(const SourceFile& src) : src_(src), toks_(tokenize(src)) {}

  std::vector<SurfaceDeclPtr> module() {
    std::vector<SurfaceDeclPtr> out;
    while (cur().kind != Tok::End) out.push_back(decl());
    return out;
  }

  STerm whole_term() {
    STerm t = term();
    if (cur().kind != Tok::End) unexpected("end of input");
    return t;
  }

 private:
  const Token& cur() const { return toks_[i_]; }
  const Token& at(std::size_t k) const { return toks_[std::min(i_ + k, toks_.size() - 1)]; }
  void advance() {
    prev_end_ = cur().end;
    if (cur().kind != Tok::End) ++i_;
  }
  bool kw(const char* word) const { return cur().kind == Tok::Keyword && cur().text == word; }
  bool accept(Tok k) {
    if (cur().kind != k) return false;
    advance();
    return true;
  }
  [[noreturn]] void unexpected(const std::string& wanted) {
    const Token& t = cur();
    std::string got = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    fail(code::parse, "expected " + wanted + ", found " + got, src_.span(t.start, t.end));
  }
  const Token& expect(Tok k, const std::string& what) {
    if (cur().kind != k) unexpected(what);
    advance();
    return toks_[i_ - 1];
  }
  void expect_kw(const char* word) {
    if (!kw(word)) unexpected(std::string("'") + word + "'");
    advance();
  }
  SourceSpan from(std::size_t start) const { return src_.span(start, std::max(start, prev_end_)); }

  std::string ident(const std::string& what, SourceSpan* span = nullptr) {
    const Token& t = expect(Tok::Ident, what);
    if (span) *span = src_.span(t.start, t.end);
    return t.text;
  }

  // --- declarations -------------------------------------------------------

  SurfaceDeclPtr decl() {
    auto d = std::make_shared<SurfaceDecl>();
    std::size_t start = cur().start;
    if (kw("def")) {
      d->kind = DeclKind::Def;
    } else if (kw("axiom")) {
      d->kind = DeclKind::Axiom;
    } else if (kw("hit")) {
      d->kind = DeclKind::Hit;
    } else {
      unexpected("a declaration ('def', 'axiom' or 'hit')");
    }
    advance();
    d->name = ident("a declaration name", &d->name_span);
    if (accept(Tok::DotBrace)) {
      while (cur().kind == Tok::Ident) {
        d->univars.push_back(cur().text);
        advance();
      }
      if (d->univars.empty()) unexpected("a universe variable");
      expect(Tok::RBrace, "'}'");
    }
    while (cur().kind == Tok::LParen || cur().kind == Tok::LBrace) binder_group(false, d->params);
    switch (d->kind) {
      case DeclKind::Def:
        expect(Tok::Colon, "':'");
        d->type = term();
        expect(Tok::Assign, "':='");
        d->body = term();
        break;
      case DeclKind::Axiom:
        expect(Tok::Colon, "':'");
        d->type = term();
        break;
      case DeclKind::Hit:
        if (accept(Tok::Colon)) d->type = term();
        expect_kw("where");
        while (cur().kind == Tok::Bar || kw("point") || kw("path")) d->ctors.push_back(ctor());
        break;
    }
    d->span = from(start);
    return d;
  }

  SurfaceCtor ctor() {
    SurfaceCtor c;
    accept(Tok::Bar);
    std::size_t start = cur().start;
    if (kw("point")) {
      c.is_path = false;
    } else if (kw("path")) {
      c.is_path = true;
    } else {
      unexpected("'point' or 'path'");
    }
    advance();
    c.name = ident("a constructor name", &c.name_span);
    while (cur().kind == Tok::LParen || cur().kind == Tok::LBrace) binder_group(false, c.params);
    expect(Tok::Colon, "':'");
    c.type = term();
    c.span = from(start);
    return c;
  }

  // `(x y : A)` or `{x : A}`; lambdas also allow `{x}`.
  void binder_group(bool lambda, std::vector<Binder>& out) {
    std::size_t start = cur().start;
    bool implicit = cur().kind == Tok::LBrace;
    advance();
    std::vector<std::pair<std::string, SourceSpan>> names;
    while (cur().kind == Tok::Ident || cur().kind == Tok::Underscore) {
      names.emplace_back(cur().kind == Tok::Ident ? cur().text : "_", src_.span(cur().start, cur().end));
      advance();
    }
    if (names.empty()) unexpected("a binder name");
    STerm type;
    if (accept(Tok::Colon)) {
      type = term();
    } else if (!(lambda && implicit)) {
      unexpected("':'");
    }
    expect(implicit ? Tok::RBrace : Tok::RParen, implicit ? "'}'" : "')'");
    (void)start;
    for (auto& [n, sp] : names)
      out.push_back(Binder{n, implicit ? Plicity::Implicit : Plicity::Explicit, type, sp});
  }

  // --- terms --------------------------------------------------------------

  // Looks ahead over `(x : A)` / `{x : A}` groups; returns the token kind that
  // follows them, or End when the input does not start with binder groups.
  Tok scan_binder_groups() const {
    std::size_t p = i_;
    std::size_t groups = 0;
    while (toks_[p].kind == Tok::LParen || toks_[p].kind == Tok::LBrace) {
      std::size_t q = p + 1;
      while (toks_[q].kind == Tok::Ident || toks_[q].kind == Tok::Underscore) ++q;
      if (q == p + 1 || toks_[q].kind != Tok::Colon) break;
      int depth = 0;
      std::size_t r = p;
      for (; toks_[r].kind != Tok::End; ++r) {
        Tok k = toks_[r].kind;
        if (k == Tok::LParen || k == Tok::LBrace || k == Tok::LBracket || k == Tok::DotBrace) ++depth;
        if (k == Tok::RParen || k == Tok::RBrace || k == Tok::RBracket) {
          if (--depth == 0) break;
        }
      }
      if (toks_[r].kind == Tok::End) return Tok::End;
      p = r + 1;
      ++groups;
    }
    if (groups == 0) return Tok::End;
    return toks_[p].kind;
  }

  STerm term() {
    std::size_t start = cur().start;
    if (cur().kind == Tok::Backslash) return lambda();
    if (cur().kind == Tok::LParen || cur().kind == Tok::LBrace) {
      Tok after = scan_binder_groups();
      if (after == Tok::Arrow || after == Tok::Star) {
        std::vector<Binder> bs;
        while (cur().kind == Tok::LParen || cur().kind == Tok::LBrace) binder_group(false, bs);
        if (accept(Tok::Arrow)) {
          STerm cod = term();
          return make(sf::Pi{std::move(bs), cod}, from(start));
        }
        expect(Tok::Star, "'*'");
        for (const auto& b : bs)
          if (b.plicity == Plicity::Implicit)
            fail(code::parse, "a pair type cannot have an implicit component", b.span);
        STerm second = prod();
        return make(sf::Sigma{std::move(bs), second}, from(start));
      }
    }
    STerm lhs = prod();
    if (accept(Tok::Arrow)) {
      STerm rhs = term();
      std::vector<Binder> bs{Binder{"_", Plicity::Explicit, lhs, lhs->span}};
      return make(sf::Pi{std::move(bs), rhs}, from(start));
    }
    return lhs;
  }

  STerm lambda() {
    std::size_t start = cur().start;
    advance();
    std::vector<Binder> bs;
    while (true) {
      if (cur().kind == Tok::Ident || cur().kind == Tok::Underscore) {
        std::string n = cur().kind == Tok::Ident ? cur().text : "_";
        bs.push_back(Binder{n, Plicity::Explicit, nullptr, src_.span(cur().start, cur().end)});
        advance();
      } else if (cur().kind == Tok::LParen || cur().kind == Tok::LBrace) {
        binder_group(true, bs);
      } else {
        break;
      }
    }
    if (bs.empty()) unexpected("a lambda binder");
    expect(Tok::Dot, "'.'");
    STerm body = term();
    return make(sf::Lambda{std::move(bs), body}, from(start));
  }

  STerm prod() {
    std::size_t start = cur().start;
    if (cur().kind == Tok::LParen && scan_binder_groups() == Tok::Star) {
      std::vector<Binder> bs;
      while (cur().kind == Tok::LParen) binder_group(false, bs);
      expect(Tok::Star, "'*'");
      STerm second = prod();
      return make(sf::Sigma{std::move(bs), second}, from(start));
    }
    STerm lhs = eq();
    if (accept(Tok::Star)) {
      STerm rhs = prod();
      std::vector<Binder> bs{Binder{"_", Plicity::Explicit, lhs, lhs->span}};
      return make(sf::Sigma{std::move(bs), rhs}, from(start));
    }
    return lhs;
  }

  STerm eq() {
    std::size_t start = cur().start;
    STerm lhs = app();
    if (!accept(Tok::Equal)) return lhs;
    STerm rhs = app();
    STerm type;
    if (kw("in")) {
      advance();
      type = app();
    }
    return make(sf::PrimApp{Prim::Id, {type, lhs, rhs}, {}}, from(start));
  }

  bool starts_atom() const {
    switch (cur().kind) {
      case Tok::Ident:
      case Tok::LParen:
      case Tok::Underscore:
        return true;
      case Tok::Keyword:
        return !(kw("def") || kw("axiom") || kw("hit") || kw("where") || kw("point") || kw("path") ||
                 kw("in"));
      default:
        return false;
    }
  }

  STerm app() {
    std::size_t start = cur().start;
    STerm fn = head();
    while (true) {
      if (cur().kind == Tok::LBrace) {
        advance();
        STerm a = cur().kind == Tok::Underscore ? atom(true) : term();
        expect(Tok::RBrace, "'}'");
        fn = make(sf::App{fn, a, Plicity::Implicit}, from(start));
      } else if (starts_atom()) {
        STerm a = atom(true);
        fn = make(sf::App{fn, a, Plicity::Explicit}, from(start));
      } else {
        break;
      }
    }
    return fn;
  }

  STerm prim(Prim p, std::vector<STerm> args, std::vector<std::string> names, std::size_t start) {
    return make(sf::PrimApp{p, std::move(args), std::move(names)}, from(start));
  }

  // `[x p. M]`
  STerm motive(std::size_t arity, std::vector<std::string>& names) {
    expect(Tok::LBracket, "'[' opening a motive");
    for (std::size_t k = 0; k < arity; ++k) {
      if (cur().kind == Tok::Underscore) {
        names.emplace_back("_");
        advance();
      } else {
        names.push_back(ident("a motive binder"));
      }
    }
    expect(Tok::Dot, "'.'");
    STerm m = term();
    expect(Tok::RBracket, "']'");
    return m;
  }

  STerm head() {
    std::size_t start = cur().start;
    if (cur().kind == Tok::At) {
      advance();
      std::string n = ident("an identifier after '@'");
      auto levels = universe_args();
      return make(sf::Name{n, levels, true}, from(start));
    }
    if (cur().kind != Tok::Keyword) return atom(false);
    const std::string w = cur().text;
    auto one = [&](Prim p) {
      advance();
      STerm a = atom(true);
      return prim(p, {a}, {}, start);
    };
    if (w == "succ") return one(Prim::Succ);
    if (w == "inl") return one(Prim::Inl);
    if (w == "inr") return one(Prim::Inr);
    if (w == "fst") return one(Prim::Fst);
    if (w == "snd") return one(Prim::Snd);
    if (w == "Sum") {
      advance();
      STerm a = atom(false);
      STerm b = atom(false);
      return prim(Prim::Sum, {a, b}, {}, start);
    }
    if (w == "Id") {
      advance();
      STerm t = atom(true);
      STerm a = atom(true);
      STerm b = atom(true);
      if (as<sf::Hole>(t)) t = nullptr;
      return prim(Prim::Id, {t, a, b}, {}, start);
    }
    if (w == "refl") {
      advance();
      STerm t;
      if (accept(Tok::LBrace)) {
        t = term();
        expect(Tok::RBrace, "'}'");
      }
      STerm a = atom(false);
      return prim(Prim::Refl, {t, a}, {}, start);
    }
    auto elim = [&](Prim p, std::size_t binders, std::size_t nargs) {
      advance();
      std::vector<std::string> names;
      std::vector<STerm> args{motive(binders, names)};
      for (std::size_t k = 0; k < nargs; ++k) args.push_back(atom(true));
      return prim(p, std::move(args), std::move(names), start);
    };
    if (w == "J") return elim(Prim::J, 2, 3);
    if (w == "natrec") return elim(Prim::NatElim, 1, 3);
    if (w == "empty-elim") return elim(Prim::EmptyElim, 1, 1);
    if (w == "unit-elim") return elim(Prim::UnitElim, 1, 2);
    if (w == "sum-elim") return elim(Prim::SumElim, 1, 3);
    return atom(false);
  }

  std::optional<std::vector<LevelExpr>> universe_args() {
    if (!accept(Tok::DotBrace)) return std::nullopt;
    std::vector<LevelExpr> out;
    while (cur().kind != Tok::RBrace) out.push_back(level());
    advance();
    return out;
  }

  LevelExpr level() {
    if (cur().kind == Tok::Number) return LevelExpr{"", number()};
    if (cur().kind == Tok::Ident) {
      LevelExpr e{cur().text, 0};
      advance();
      if (accept(Tok::Plus)) e.offset = number();
      return e;
    }
    if (accept(Tok::LParen)) {
      LevelExpr e = level();
      expect(Tok::RParen, "')'");
      return e;
    }
    unexpected("a universe level");
  }

  Level number() {
    const Token& t = expect(Tok::Number, "a number");
    Level v = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc()) fail(code::parse, "number out of range", src_.span(t.start, t.end));
    return v;
  }

  STerm atom(bool allow_hole) {
    std::size_t start = cur().start;
    switch (cur().kind) {
      case Tok::Ident: {
        std::string n = cur().text;
        advance();
        auto levels = universe_args();
        return make(sf::Name{n, levels, false}, from(start));
      }
      case Tok::Underscore:
        if (!allow_hole) fail(code::parse, "a hole '_' may only appear in argument position", src_.span(cur().start, cur().end));
        advance();
        return make(sf::Hole{}, from(start));
      case Tok::LParen: {
        advance();
        STerm t = term();
        if (accept(Tok::Comma)) {
          STerm b = term();
          expect(Tok::RParen, "')'");
          return make(sf::Pair{t, b}, from(start));
        }
        if (accept(Tok::Colon)) {
          STerm ty = term();
          expect(Tok::RParen, "')'");
          return make(sf::Ann{t, ty}, from(start));
        }
        expect(Tok::RParen, "')'");
        return t;
      }
      case Tok::Keyword: {
        const std::string w = cur().text;
        if (w == "Type") {
          advance();
          LevelExpr l = level();
          return make(sf::Universe{l}, from(start));
        }
        Prim p;
        if (w == "Empty") p = Prim::Empty;
        else if (w == "Unit") p = Prim::Unit;
        else if (w == "Nat") p = Prim::Nat;
        else if (w == "star") p = Prim::Star;
        else if (w == "zero") p = Prim::Zero;
        else if (w == "succ" || w == "inl" || w == "inr" || w == "fst" || w == "snd" || w == "Sum" ||
                 w == "Id" || w == "refl" || w == "J" || w == "natrec" || w == "empty-elim" ||
                 w == "unit-elim" || w == "sum-elim")
          fail(code::parse, "'" + w + "' must be applied to its arguments; wrap it in parentheses",
               src_.span(cur().start, cur().end));
        else
          unexpected("a term");
        advance();
        return prim(p, {}, {}, start);
      }
      default:
        unexpected("a term");
    }
  }

  const SourceFile& src_;
  std::vector<Token> toks_;
  std::size_t i_ = 0;
  std::size_t prev_end_ = 0;
};

}  // namespace

std::vector<SurfaceDeclPtr> parse_module(const SourceFile& src) { return Parser(src).module(); }

STerm parse_term(const SourceFile& src) { return Parser(src).whole_term(); }

}  // namespace hott::parse
