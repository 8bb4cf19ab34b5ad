#include "hott/kernel/environment.hpp"

#include "hott/diagnostic.hpp"

namespace hott::kernel {

Env extend(const Env& env, Value v) {
  return std::make_shared<const EnvCell>(EnvCell{std::move(v), env, env_size(env) + 1});
}

std::size_t env_size(const Env& env) { return env ? env->size : 0; }

const Value& lookup(const Env& env, std::size_t index) {
  const EnvCell* c = env.get();
  for (std::size_t i = 0; i < index && c; ++i) c = c->tail.get();
  if (!c) throw InternalError("variable index out of range during evaluation");
  return c->head;
}

Value make_value(ValueNode::Data d) { return std::make_shared<const ValueNode>(ValueNode{std::move(d)}); }

Value vvar(std::size_t level) { return make_value(vl::Neutral{hd::Var{level}, {}}); }

Value vuniverse(Level l) { return make_value(vl::Universe{l}); }

const char* decl_kind_name(DeclKind k) {
  switch (k) {
    case DeclKind::Definition: return "definition";
    case DeclKind::Axiom: return "axiom";
    case DeclKind::HitType: return "higher inductive type";
    case DeclKind::PointCtor: return "point constructor";
    case DeclKind::PathCtor: return "path constructor";
    case DeclKind::HitEliminator: return "eliminator";
    case DeclKind::HitComputation: return "computation axiom";
  }
  return "?";
}

std::string instance_key(const std::string& name, const std::vector<Level>& levels) {
  if (levels.empty()) return name;
  std::string k = name + ".{";
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (i) k += ' ';
    k += std::to_string(levels[i]);
  }
  return k + "}";
}

DeclPtr Environment::find(const std::string& name, const std::vector<Level>& levels) const {
  return find_key(instance_key(name, levels));
}

DeclPtr Environment::find_key(const std::string& key) const {
  auto it = decls_.find(key);
  return it == decls_.end() ? nullptr : it->second;
}

bool Environment::contains(const std::string& name, const std::vector<Level>& levels) const {
  return decls_.count(instance_key(name, levels)) != 0;
}

DeclPtr Environment::add(Decl d) {
  std::string key = instance_key(d.name, d.levels);
  if (decls_.count(key)) throw InternalError("duplicate instance " + key);
  auto p = std::make_shared<const Decl>(std::move(d));
  decls_.emplace(std::move(key), p);
  order_.push_back(p);
  return p;
}

const HitSignature* Environment::hit(const std::string& name) const {
  auto it = hits_.find(name);
  return it == hits_.end() ? nullptr : it->second.get();
}

void Environment::add_hit(HitSignature sig) {
  std::string n = sig.name;
  hits_[n] = std::make_shared<const HitSignature>(std::move(sig));
}

void Environment::merge(const Environment& other) {
  for (const auto& d : other.order_) {
    std::string key = instance_key(d->name, d->levels);
    if (decls_.emplace(key, d).second) order_.push_back(d);
  }
  for (const auto& [n, h] : other.hits_) hits_.emplace(n, h);
}

}  // namespace hott::kernel
