#pragma once

#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "hott/kernel/value.hpp"
#include "hott/syntax/source.hpp"
#include "hott/syntax/term.hpp"

namespace hott::kernel {

enum class DeclKind {
  Definition,
  Axiom,
  HitType,
  PointCtor,
  PathCtor,
  HitEliminator,
  HitComputation,
};

const char* decl_kind_name(DeclKind k);

// A checked declaration instantiated at concrete universe levels.
struct Decl {
  std::string name;
  std::vector<Level> levels;
  DeclKind kind = DeclKind::Axiom;
  Term type;
  Value type_value;
  Term body;  // Definition only
  Value value;
  std::string hit;             // owning HIT for the HIT kinds
  std::size_t ctor_index = 0;  // constructors: position among the HIT's constructors
  std::size_t arity = 0;       // constructors and eliminators: saturated spine length
  SourceSpan span;
};

enum class ArgKind {
  Plain,
  Recursive,          // x : H params
  RecursiveFunction,  // f : (y : D) -> ... -> H params
};

struct HitArg {
  std::string name;
  Plicity plicity = Plicity::Explicit;
  ArgKind kind = ArgKind::Plain;
  std::size_t function_arity = 0;
};

struct HitCtorInfo {
  std::string name;
  bool is_path = false;
  std::vector<HitArg> args;
};

// Level-independent shape of a validated HIT; drives point beta reduction.
struct HitSignature {
  std::string name;
  std::size_t num_params = 0;
  std::vector<HitCtorInfo> ctors;
  std::string eliminator;
  std::vector<std::string> computation_axioms;  // one per path constructor, in order
};

std::string instance_key(const std::string& name, const std::vector<Level>& levels);

class Environment {
 public:
  DeclPtr find(const std::string& name, const std::vector<Level>& levels) const;
  DeclPtr find_key(const std::string& key) const;
  // Identity of an instance is the returned pointer.
  DeclPtr add(Decl d);
  bool contains(const std::string& name, const std::vector<Level>& levels) const;

  const HitSignature* hit(const std::string& name) const;
  void add_hit(HitSignature sig);

  std::size_t size() const { return decls_.size(); }
  const std::vector<DeclPtr>& in_order() const { return order_; }

  // Copies every instance and HIT of `other` that is not yet present.
  void merge(const Environment& other);

 private:
  std::unordered_map<std::string, DeclPtr> decls_;
  std::vector<DeclPtr> order_;
  std::map<std::string, std::shared_ptr<const HitSignature>> hits_;
};

}  // namespace hott::kernel
