#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hott/syntax/source.hpp"
#include "hott/syntax/term.hpp"

namespace hott::parse {

struct SurfaceNode;
using STerm = std::shared_ptr<const SurfaceNode>;

// `n`, `u` or `u+n`.
struct LevelExpr {
  std::string var;
  Level offset = 0;
};

struct Binder {
  std::string name;  // "_" for anonymous
  Plicity plicity = Plicity::Explicit;
  STerm type;  // null only for unannotated lambda binders
  SourceSpan span;
};

enum class Prim {
  Empty,
  Unit,
  Star,
  Nat,
  Zero,
  Succ,       // n
  Sum,        // A B
  Inl,        // a
  Inr,        // b
  Fst,        // p
  Snd,        // p
  Id,         // A? a b
  Refl,       // A? a
  J,          // motive d e p (binders: x p)
  EmptyElim,  // motive e (binder x)
  UnitElim,   // motive d u
  SumElim,    // motive l r s
  NatElim,    // motive z s n
};

namespace sf {

struct Name {
  std::string name;
  std::optional<std::vector<LevelExpr>> levels;
  bool no_implicit = false;  // written `@f`
};
struct Universe {
  LevelExpr level;
};
struct Pi {
  std::vector<Binder> binders;
  STerm codomain;
};
struct Lambda {
  std::vector<Binder> binders;
  STerm body;
};
struct Sigma {
  std::vector<Binder> binders;
  STerm second;
};
struct App {
  STerm fn;
  STerm arg;
  Plicity plicity;
};
struct Pair {
  STerm fst;
  STerm snd;
};
struct PrimApp {
  Prim prim;
  std::vector<STerm> args;  // null entries are omitted optional slots
  std::vector<std::string> binder_names;
};
struct Ann {
  STerm term;
  STerm type;
};
struct Hole {};

}  // namespace sf

struct SurfaceNode {
  using Data = std::variant<sf::Name, sf::Universe, sf::Pi, sf::Lambda, sf::Sigma, sf::App, sf::Pair,
                            sf::PrimApp, sf::Ann, sf::Hole>;
  Data data;
  SourceSpan span;
};

template <class T>
const T* as(const STerm& t) {
  return t ? std::get_if<T>(&t->data) : nullptr;
}

// The result points into the node, so the handle must outlive it.
template <class T>
const T* as(STerm&&) = delete;

STerm make(SurfaceNode::Data d, SourceSpan span);

enum class DeclKind { Def, Axiom, Hit };

struct SurfaceCtor {
  bool is_path = false;
  std::string name;
  SourceSpan name_span;
  std::vector<Binder> params;
  STerm type;
  SourceSpan span;
};

struct SurfaceDecl {
  DeclKind kind = DeclKind::Def;
  std::string name;
  SourceSpan name_span;
  std::vector<std::string> univars;
  std::vector<Binder> params;
  STerm type;  // for Hit: optional universe annotation
  STerm body;  // Def only
  std::vector<SurfaceCtor> ctors;
  SourceSpan span;
};

using SurfaceDeclPtr = std::shared_ptr<const SurfaceDecl>;

}  // namespace hott::parse
