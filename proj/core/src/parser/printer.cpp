#include "hott/parser/printer.hpp"

#include <algorithm>
#include <sstream>

#include "hott/parser/lexer.hpp"

namespace hott::parse {

bool valid_identifier(std::string_view s) {
  if (s.empty() || is_keyword(s)) return false;
  auto letter = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!letter(s[0])) return false;
  for (std::size_t i = 1; i < s.size(); ++i) {
    char c = s[i];
    if (letter(c) || digit(c) || c == '_' || c == '\'') continue;
    if (c == '-' && i + 1 < s.size() && (letter(s[i + 1]) || digit(s[i + 1]))) continue;
    return false;
  }
  return true;
}

namespace {

enum Prec { kTerm = 0, kProd = 1, kEq = 2, kApp = 3, kAtom = 4 };

class Printer {
 public:
  Printer(std::vector<std::string> names, const PrintOptions& opts) : names_(std::move(names)), opts_(opts) {}

  std::string run(const Term& t) {
    print(t, kTerm);
    return out_.str();
  }

 private:
  bool taken(const std::string& n) const {
    if (std::find(names_.begin(), names_.end(), n) != names_.end()) return true;
    return opts_.is_global && opts_.is_global(n);
  }

  std::string fresh(const std::string& hint, bool used) {
    if (!used && (hint == "_" || hint.empty())) return "_";
    std::string base = valid_identifier(hint) ? hint : "x";
    if (!taken(base)) return base;
    for (std::size_t k = 1;; ++k) {
      std::string c = base + std::to_string(k);
      if (!taken(c)) return c;
    }
  }

  void open(bool paren) {
    if (paren) out_ << '(';
  }
  void close(bool paren) {
    if (paren) out_ << ')';
  }

  void bound(const std::string& name, const Term& body, Prec p) {
    names_.push_back(name);
    print(body, p);
    names_.pop_back();
  }

  void motive(const std::vector<std::string>& hints, const Term& m) {
    std::size_t k = hints.size();
    std::vector<std::string> chosen;
    out_ << '[';
    for (std::size_t i = 0; i < k; ++i) {
      std::string n = fresh(hints[i], occurs_free(m, k - 1 - i));
      chosen.push_back(n);
      names_.push_back(n);
      out_ << n << (i + 1 < k ? " " : "");
    }
    out_ << ". ";
    print(m, kTerm);
    out_ << ']';
    for (std::size_t i = 0; i < k; ++i) names_.pop_back();
  }

  void arg(const Term& t) {
    out_ << ' ';
    print(t, kAtom);
  }

  void print(const Term& t, Prec ctx) {
    std::visit([&](const auto& n) { node(n, t, ctx); }, t->data);
  }

  void node(const tm::Var& n, const Term&, Prec) {
    if (n.index < names_.size()) {
      out_ << names_[names_.size() - 1 - n.index];
    } else {
      out_ << '#' << n.index;
    }
  }
  void node(const tm::Universe& n, const Term&, Prec ctx) {
    open(ctx > kApp);
    out_ << "Type " << n.level;
    close(ctx > kApp);
  }
  void node(const tm::Pi& n, const Term&, Prec ctx) {
    open(ctx > kTerm);
    bool used = occurs_free(n.codomain, 0);
    if (n.plicity == Plicity::Explicit && !used) {
      bool wrap = is<tm::Ann>(n.domain);
      open(wrap);
      print(n.domain, kProd);
      close(wrap);
      out_ << " -> ";
      bound("_", n.codomain, kTerm);
    } else {
      std::string x = fresh(n.name, true);
      out_ << (n.plicity == Plicity::Implicit ? '{' : '(') << x << " : ";
      print(n.domain, kTerm);
      out_ << (n.plicity == Plicity::Implicit ? '}' : ')') << " -> ";
      bound(x, n.codomain, kTerm);
    }
    close(ctx > kTerm);
  }
  void node(const tm::Lambda& n, const Term&, Prec ctx) {
    open(ctx > kTerm);
    std::string x = fresh(n.name, occurs_free(n.body, 0));
    out_ << '\\';
    if (n.annotation) {
      out_ << (n.plicity == Plicity::Implicit ? '{' : '(') << x << " : ";
      print(n.annotation, kTerm);
      out_ << (n.plicity == Plicity::Implicit ? '}' : ')');
    } else if (n.plicity == Plicity::Implicit) {
      out_ << '{' << x << '}';
    } else {
      out_ << x;
    }
    out_ << ". ";
    bound(x, n.body, kTerm);
    close(ctx > kTerm);
  }
  void node(const tm::App& n, const Term&, Prec ctx) {
    open(ctx > kApp);
    print(n.fn, kApp);
    if (n.plicity == Plicity::Implicit) {
      out_ << " {";
      print(n.arg, kTerm);
      out_ << '}';
    } else {
      arg(n.arg);
    }
    close(ctx > kApp);
  }
  void node(const tm::Sigma& n, const Term&, Prec ctx) {
    open(ctx > kProd);
    if (occurs_free(n.second, 0)) {
      std::string x = fresh(n.name, true);
      out_ << '(' << x << " : ";
      print(n.first, kTerm);
      out_ << ") * ";
      bound(x, n.second, kProd);
    } else {
      print(n.first, kEq);
      out_ << " * ";
      bound("_", n.second, kProd);
    }
    close(ctx > kProd);
  }
  void node(const tm::Pair& n, const Term&, Prec) {
    out_ << '(';
    print(n.fst, kTerm);
    out_ << ", ";
    print(n.snd, kTerm);
    out_ << ')';
  }
  void prim(const char* kw, std::initializer_list<Term> args, Prec ctx) {
    open(ctx > kApp);
    out_ << kw;
    for (const auto& a : args) arg(a);
    close(ctx > kApp);
  }
  void node(const tm::Fst& n, const Term&, Prec ctx) { prim("fst", {n.pair}, ctx); }
  void node(const tm::Snd& n, const Term&, Prec ctx) { prim("snd", {n.pair}, ctx); }
  void node(const tm::Id& n, const Term&, Prec ctx) { prim("Id", {n.type, n.lhs, n.rhs}, ctx); }
  void node(const tm::Refl& n, const Term&, Prec ctx) {
    open(ctx > kApp);
    out_ << "refl";
    if (!is<tm::Hole>(n.type)) {
      out_ << " {";
      print(n.type, kTerm);
      out_ << '}';
    }
    arg(n.point);
    close(ctx > kApp);
  }
  void node(const tm::J& n, const Term&, Prec ctx) {
    open(ctx > kApp);
    out_ << "J ";
    motive({n.endpoint_name, n.path_name}, n.motive);
    arg(n.base);
    arg(n.endpoint);
    arg(n.path);
    close(ctx > kApp);
  }
  void node(const tm::Const& n, const Term&, Prec) {
    out_ << n.name;
    if (!n.levels.empty()) {
      out_ << ".{";
      for (std::size_t i = 0; i < n.levels.size(); ++i) out_ << (i ? " " : "") << n.levels[i];
      out_ << '}';
    }
  }
  void node(const tm::Empty&, const Term&, Prec) { out_ << "Empty"; }
  void node(const tm::Unit&, const Term&, Prec) { out_ << "Unit"; }
  void node(const tm::Star&, const Term&, Prec) { out_ << "star"; }
  void node(const tm::Nat&, const Term&, Prec) { out_ << "Nat"; }
  void node(const tm::Zero&, const Term&, Prec) { out_ << "zero"; }
  void node(const tm::Succ& n, const Term&, Prec ctx) { prim("succ", {n.pred}, ctx); }
  void node(const tm::Sum& n, const Term&, Prec ctx) { prim("Sum", {n.left, n.right}, ctx); }
  void node(const tm::Inl& n, const Term&, Prec ctx) { prim("inl", {n.value}, ctx); }
  void node(const tm::Inr& n, const Term&, Prec ctx) { prim("inr", {n.value}, ctx); }
  void elim(const char* kw, const std::string& name, const Term& m, std::initializer_list<Term> args, Prec ctx) {
    open(ctx > kApp);
    out_ << kw << ' ';
    motive({name}, m);
    for (const auto& a : args) arg(a);
    close(ctx > kApp);
  }
  void node(const tm::EmptyElim& n, const Term&, Prec ctx) {
    elim("empty-elim", n.name, n.motive, {n.scrutinee}, ctx);
  }
  void node(const tm::UnitElim& n, const Term&, Prec ctx) {
    elim("unit-elim", n.name, n.motive, {n.method, n.scrutinee}, ctx);
  }
  void node(const tm::SumElim& n, const Term&, Prec ctx) {
    elim("sum-elim", n.name, n.motive, {n.on_left, n.on_right, n.scrutinee}, ctx);
  }
  void node(const tm::NatElim& n, const Term&, Prec ctx) {
    elim("natrec", n.name, n.motive, {n.on_zero, n.on_succ, n.scrutinee}, ctx);
  }
  void node(const tm::Ann& n, const Term&, Prec) {
    out_ << '(';
    print(n.term, kTerm);
    out_ << " : ";
    print(n.type, kTerm);
    out_ << ')';
  }
  void node(const tm::Hole&, const Term&, Prec) { out_ << '_'; }
  void node(const tm::Meta& n, const Term&, Prec) { out_ << '?' << n.id; }

  std::vector<std::string> names_;
  const PrintOptions& opts_;
  std::ostringstream out_;
};

}  // namespace

std::string print(const Term& t, const std::vector<std::string>& names, const PrintOptions& opts) {
  return Printer(names, opts).run(t);
}

}  // namespace hott::parse
