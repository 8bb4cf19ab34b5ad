#pragma once

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hott/kernel/environment.hpp"
#include "hott/kernel/value.hpp"
#include "hott/syntax/source.hpp"

namespace hott::kernel {

struct MetaEntry {
  Value solution;  // null while unsolved
  Value type;
  std::size_t depth = 0;  // context length at creation
  SourceSpan span;
  std::string what;
};

class MetaStore {
 public:
  std::size_t fresh(Value type, std::size_t depth, SourceSpan span, std::string what);
  const MetaEntry& at(std::size_t id) const { return entries_.at(id); }
  void solve(std::size_t id, Value v) { entries_.at(id).solution = std::move(v); }
  std::size_t size() const { return entries_.size(); }

 private:
  std::vector<MetaEntry> entries_;
};

// Normalization by evaluation over a global environment. Definitions unfold
// eagerly; axioms, HIT formers and constructors stay rigid. Eliminators of
// HITs reduce when applied to a saturated point constructor.
class Evaluator {
 public:
  explicit Evaluator(const Environment& env, MetaStore* metas = nullptr);

  // Declarations for which this predicate holds are treated as opaque
  // constants instead of being unfolded.
  void set_opaque(std::function<bool(const Decl&)> pred);

  Value eval(const Env& env, const Term& t) const;
  Value apply(const Value& f, const Value& arg, Plicity p = Plicity::Explicit) const;
  Value inst(const Closure& c, const Value& v) const;
  Value inst2(const Closure& c, const Value& v1, const Value& v2) const;
  Value fst(const Value& v) const;
  Value snd(const Value& v) const;
  Value j(const el::J& e, const Value& path) const;
  Value const_value(const std::string& name, const std::vector<Level>& levels) const;

  // Resolves solved metavariables at the head.
  Value force(const Value& v) const;

  Term quote(std::size_t depth, const Value& v) const;
  Term normalize(const Term& t) const { return quote(0, eval(nullptr, t)); }

  // Definitional equality with eta for functions and pairs. When a meta store
  // is attached, unsolved metavariables in either side are solved by
  // first-order (pattern) matching.
  bool conv(std::size_t depth, const Value& a, const Value& b) const;

  // Identity environment binding levels 0..depth-1 to themselves.
  static Env identity_env(std::size_t depth);

  const Environment& environment() const { return env_; }
  MetaStore* metas() const { return metas_; }

 private:
  Value apply_elim(const Value& head, const Elim& e) const;
  Value reduce_hit_elim(const hd::Const& head, const std::vector<Elim>& spine) const;
  Value elim_value(const Value& v, const Elim& e) const;
  Value nat_elim(const el::NatElim& e, const Value& n) const;
  bool conv_spine(std::size_t depth, const std::vector<Elim>& a, const std::vector<Elim>& b) const;
  bool conv_closure(std::size_t depth, const Closure& a, const Closure& b) const;
  bool solve(std::size_t depth, const vl::Neutral& meta, const Value& rhs) const;
  bool solve_first(std::size_t depth, const vl::Neutral& meta, const Value& rhs) const;
  Term quote_neutral(std::size_t depth, const vl::Neutral& n) const;

  const Environment& env_;
  MetaStore* metas_;
  std::function<bool(const Decl&)> opaque_;
  mutable std::unordered_map<const Decl*, Value> opaque_cache_;
};

bool is_unsolved_meta(const Evaluator& ev, const Value& v);
bool has_unsolved_metas(const Evaluator& ev, std::size_t depth, const Value& v);
bool term_has_metas(const Term& t);

}  // namespace hott::kernel
