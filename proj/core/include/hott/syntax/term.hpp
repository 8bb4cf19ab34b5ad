#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace hott {

using Level = std::uint32_t;

enum class Plicity : std::uint8_t { Explicit, Implicit };

struct TermNode;
using Term = std::shared_ptr<const TermNode>;

// Core syntax. Variables are de Bruijn indices: Var{0} is the innermost
// binder. Binder names are display hints and never affect equality.
namespace tm {

struct Var {
  std::size_t index;
};
struct Universe {
  Level level;
};
struct Pi {
  std::string name;
  Plicity plicity;
  Term domain;
  Term codomain;  // binds 1
};
struct Lambda {
  std::string name;
  Plicity plicity;
  Term annotation;  // may be null
  Term body;        // binds 1
};
struct App {
  Term fn;
  Term arg;
  Plicity plicity;
};
struct Sigma {
  std::string name;
  Term first;
  Term second;  // binds 1
};
struct Pair {
  Term fst;
  Term snd;
};
struct Fst {
  Term pair;
};
struct Snd {
  Term pair;
};
struct Id {
  Term type;
  Term lhs;
  Term rhs;
};
struct Refl {
  Term type;  // may be a Hole before elaboration
  Term point;
};
struct J {
  std::string endpoint_name;
  std::string path_name;
  Term motive;  // binds 2: endpoint (index 1), path (index 0)
  Term base;
  Term endpoint;  // may be a Hole before elaboration
  Term path;
};
// Global constant. Constructors, eliminators and computation axioms of
// higher inductive types are constants too; their declaration kind lives in
// the environment.
struct Const {
  std::string name;
  std::vector<Level> levels;
};

struct Empty {};
struct EmptyElim {
  std::string name;
  Term motive;  // binds 1
  Term scrutinee;
};
struct Unit {};
struct Star {};
struct UnitElim {
  std::string name;
  Term motive;  // binds 1
  Term method;
  Term scrutinee;
};
struct Sum {
  Term left;
  Term right;
};
struct Inl {
  Term value;
};
struct Inr {
  Term value;
};
struct SumElim {
  std::string name;
  Term motive;  // binds 1
  Term on_left;
  Term on_right;
  Term scrutinee;
};
struct Nat {};
struct Zero {};
struct Succ {
  Term pred;
};
struct NatElim {
  std::string name;
  Term motive;  // binds 1
  Term on_zero;
  Term on_succ;
  Term scrutinee;
};

struct Ann {
  Term term;
  Term type;
};
struct Hole {};
// Elaboration-time metavariable; never survives into a checked declaration.
struct Meta {
  std::size_t id;
};

}  // namespace tm

struct TermNode {
  using Data = std::variant<tm::Var, tm::Universe, tm::Pi, tm::Lambda, tm::App, tm::Sigma, tm::Pair,
                            tm::Fst, tm::Snd, tm::Id, tm::Refl, tm::J, tm::Const, tm::Empty,
                            tm::EmptyElim, tm::Unit, tm::Star, tm::UnitElim, tm::Sum, tm::Inl,
                            tm::Inr, tm::SumElim, tm::Nat, tm::Zero, tm::Succ, tm::NatElim,
                            tm::Ann, tm::Hole, tm::Meta>;
  Data data;
};

template <class T>
const T* as(const Term& t) {
  return t ? std::get_if<T>(&t->data) : nullptr;
}

// The result points into the node, so the handle must outlive it.
template <class T>
const T* as(Term&&) = delete;

template <class T>
bool is(const Term& t) {
  return as<T>(t) != nullptr;
}

namespace mk {
Term var(std::size_t index);
Term universe(Level level);
Term pi(std::string name, Term domain, Term codomain, Plicity p = Plicity::Explicit);
Term arrow(Term domain, Term codomain);  // non-dependent; shifts codomain
Term lam(std::string name, Term body, Plicity p = Plicity::Explicit, Term annotation = nullptr);
Term app(Term fn, Term arg, Plicity p = Plicity::Explicit);
Term apps(Term fn, const std::vector<Term>& args);
Term sigma(std::string name, Term first, Term second);
Term pair(Term a, Term b);
Term fst(Term p);
Term snd(Term p);
Term id(Term type, Term lhs, Term rhs);
Term refl(Term type, Term point);
Term j(std::string x, std::string p, Term motive, Term base, Term endpoint, Term path);
Term constant(std::string name, std::vector<Level> levels = {});
Term empty();
Term empty_elim(std::string name, Term motive, Term scrutinee);
Term unit();
Term star();
Term unit_elim(std::string name, Term motive, Term method, Term scrutinee);
Term sum(Term a, Term b);
Term inl(Term v);
Term inr(Term v);
Term sum_elim(std::string name, Term motive, Term l, Term r, Term scrutinee);
Term nat();
Term zero();
Term succ(Term n);
Term nat_lit(std::size_t n);
Term nat_elim(std::string name, Term motive, Term z, Term s, Term scrutinee);
Term ann(Term t, Term type);
Term hole();
Term meta(std::size_t id);
}  // namespace mk

// Rebuilds t with f applied to each direct child. f receives the child and
// the number of binders the child sits under relative to t. Unchanged
// children keep their node identity.
template <class F>
Term map_children(const Term& t, F&& f);

template <class F>
void for_each_child(const Term& t, F&& f);

// Adds `amount` to every free index >= cutoff. Throws InternalError on
// underflow.
Term shift(const Term& t, std::size_t cutoff, std::ptrdiff_t amount);

// Replaces free index `index` by `replacement` (shifted under binders) and
// lowers the free indices above it by one, as in beta reduction.
Term substitute(const Term& t, std::size_t index, const Term& replacement);

// Replaces index 0 by `replacement` without removing the binder: the result
// lives in the same scope as t.
Term replace_var0(const Term& t, const Term& replacement);

bool alpha_equal(const Term& a, const Term& b);

// True iff every Var index is below the binder depth (depth counts the free
// variables available at the root).
bool well_scoped(const Term& t, std::size_t depth = 0);

// True iff index `index` occurs free in t.
bool occurs_free(const Term& t, std::size_t index);

std::size_t term_size(const Term& t);

}  // namespace hott

#include "hott/syntax/term_traverse.hpp"
