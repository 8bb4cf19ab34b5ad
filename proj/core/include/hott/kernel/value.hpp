#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "hott/syntax/term.hpp"

namespace hott::kernel {

struct ValueNode;
using Value = std::shared_ptr<const ValueNode>;

struct Decl;
using DeclPtr = std::shared_ptr<const Decl>;

// Persistent evaluation environment; index 0 is the most recent binding.
struct EnvCell;
using Env = std::shared_ptr<const EnvCell>;
struct EnvCell {
  Value head;
  Env tail;
  std::size_t size;
};

Env extend(const Env& env, Value v);
std::size_t env_size(const Env& env);
const Value& lookup(const Env& env, std::size_t index);

struct Closure {
  Env env;
  Term body;
};

namespace hd {
struct Var {
  std::size_t level;
};
struct Const {
  DeclPtr decl;
};
struct Meta {
  std::size_t id;
};
}  // namespace hd
using Head = std::variant<hd::Var, hd::Const, hd::Meta>;

namespace el {
struct App {
  Value arg;
  Plicity plicity;
};
struct Fst {};
struct Snd {};
struct J {
  std::string endpoint_name;
  std::string path_name;
  Closure motive;  // binds 2
  Value base;
  Value endpoint;
};
struct EmptyElim {
  std::string name;
  Closure motive;
};
struct UnitElim {
  std::string name;
  Closure motive;
  Value method;
};
struct SumElim {
  std::string name;
  Closure motive;
  Value on_left;
  Value on_right;
};
struct NatElim {
  std::string name;
  Closure motive;
  Value on_zero;
  Value on_succ;
};
}  // namespace el
using Elim = std::variant<el::App, el::Fst, el::Snd, el::J, el::EmptyElim, el::UnitElim, el::SumElim,
                          el::NatElim>;

namespace vl {
struct Universe {
  Level level;
};
struct Pi {
  std::string name;
  Plicity plicity;
  Value domain;
  Closure codomain;
};
struct Lambda {
  std::string name;
  Plicity plicity;
  Closure body;
};
struct Sigma {
  std::string name;
  Value first;
  Closure second;
};
struct Pair {
  Value fst;
  Value snd;
};
struct Id {
  Value type;
  Value lhs;
  Value rhs;
};
struct Refl {
  Value type;
  Value point;
};
struct Empty {};
struct Unit {};
struct Star {};
struct Sum {
  Value left;
  Value right;
};
struct Inl {
  Value value;
};
struct Inr {
  Value value;
};
struct Nat {};
struct Zero {};
struct Succ {
  Value pred;
};
// A stuck elimination: a variable, an opaque constant (axiom, HIT type
// former, constructor, eliminator, computation axiom) or a metavariable,
// followed by the eliminations applied to it.
struct Neutral {
  Head head;
  std::vector<Elim> spine;
};
}  // namespace vl

struct ValueNode {
  using Data = std::variant<vl::Universe, vl::Pi, vl::Lambda, vl::Sigma, vl::Pair, vl::Id, vl::Refl,
                            vl::Empty, vl::Unit, vl::Star, vl::Sum, vl::Inl, vl::Inr, vl::Nat,
                            vl::Zero, vl::Succ, vl::Neutral>;
  Data data;
};

template <class T>
const T* as(const Value& v) {
  return v ? std::get_if<T>(&v->data) : nullptr;
}

// The result points into the node, so the handle must outlive it.
template <class T>
const T* as(Value&&) = delete;

Value make_value(ValueNode::Data d);
Value vvar(std::size_t level);
Value vuniverse(Level l);

}  // namespace hott::kernel
