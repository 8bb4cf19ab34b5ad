#include "hott/stdlib/session.hpp"

#include <algorithm>
#include <chrono>
#include <deque>

#include "hott/kernel/elaborate.hpp"
#include "hott/parser/parser.hpp"

namespace hott {

const char* template_kind_name(TemplateKind k) {
  switch (k) {
    case TemplateKind::Definition: return "definition";
    case TemplateKind::Axiom: return "axiom";
    case TemplateKind::Hit: return "hit";
    case TemplateKind::PointCtor: return "point constructor";
    case TemplateKind::PathCtor: return "path constructor";
    case TemplateKind::Eliminator: return "eliminator";
    case TemplateKind::Computation: return "computation rule";
  }
  return "?";
}

namespace {

struct Recording {
  std::vector<std::string>& stack;
  Recording(std::vector<std::string>& s, std::string name) : stack(s) { stack.push_back(std::move(name)); }
  ~Recording() { stack.pop_back(); }
  Recording(const Recording&) = delete;
  Recording& operator=(const Recording&) = delete;
};

std::string level_list(const std::vector<Level>& levels) {
  std::string s;
  for (std::size_t i = 0; i < levels.size(); ++i) s += (i ? " " : "") + std::to_string(levels[i]);
  return s;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

const Template* Session::find(const std::string& name) const {
  auto it = templates_.find(name);
  return it == templates_.end() ? nullptr : &it->second;
}

const std::set<std::string>& Session::direct_dependencies(const std::string& name) const {
  static const std::set<std::string> none;
  auto it = deps_.find(name);
  return it == deps_.end() ? none : it->second;
}

std::set<std::string> Session::dependency_cone(const std::string& name) const {
  std::set<std::string> seen;
  std::deque<std::string> work{name};
  while (!work.empty()) {
    std::string n = work.front();
    work.pop_front();
    for (const auto& d : direct_dependencies(n))
      if (d != name && seen.insert(d).second) work.push_back(d);
  }
  return seen;
}

const hit::CoreHit* Session::core_hit(const std::string& name, const std::vector<Level>& levels) const {
  auto it = hits_.find(kernel::instance_key(name, levels));
  return it == hits_.end() ? nullptr : &it->second;
}

std::optional<std::size_t> Session::universe_arity(const std::string& name) const {
  const Template* t = find(name);
  if (!t) return std::nullopt;
  return t->universe_arity;
}

void Session::use(const std::string& name, const std::vector<Level>& levels, const SourceSpan& at) {
  if (!resolving_.empty() && resolving_.back() != name) deps_[resolving_.back()].insert(name);
  if (env_.contains(name, levels)) return;
  const Template* t = find(name);
  if (!t) fail(code::scope, "unknown identifier '" + name + "'", at);
  if (pending_.count(name)) fail(code::scope, "'" + name + "' is used before its declaration is complete", at);
  try {
    instantiate(*t, levels);
  } catch (const DiagnosticError& e) {
    Diagnostic d = e.diagnostic();
    d.message = "while instantiating " + name + ".{" + level_list(levels) + "}: " + d.message;
    d.related.push_back(at);
    throw DiagnosticError(std::move(d));
  }
}

kernel::DeclPtr Session::instance(const std::string& name, const std::vector<Level>& levels) {
  const Template* t = find(name);
  if (!t) return nullptr;
  if (!env_.contains(name, levels)) instantiate(*t, levels);
  return env_.find(name, levels);
}

void Session::instantiate(const Template& t, const std::vector<Level>& levels) {
  if (levels.size() != t.universe_arity) throw InternalError("instance of " + t.name + " at the wrong arity");
  switch (t.kind) {
    case TemplateKind::Definition:
    case TemplateKind::Axiom:
      instantiate_decl(t, levels);
      return;
    case TemplateKind::Hit:
    case TemplateKind::PointCtor:
    case TemplateKind::PathCtor:
      ensure_hit(templates_.at(t.hit), levels);
      return;
    case TemplateKind::Eliminator:
    case TemplateKind::Computation:
      ensure_eliminator(templates_.at(t.hit), levels);
      return;
  }
}

void Session::instantiate_decl(const Template& t, const std::vector<Level>& levels) {
  Recording rec(resolving_, t.name);
  parse::LevelAssignment la;
  for (std::size_t i = 0; i < levels.size(); ++i) la.emplace_back(t.decl->univars[i], levels[i]);
  SpanTable spans;
  parse::ResolveContext rc{*this, la, &spans};
  parse::ResolvedDecl r = parse::resolve_decl(*t.decl, rc);
  kernel::CoreDecl cd{t.name,
                      levels,
                      t.kind == TemplateKind::Definition ? kernel::DeclKind::Definition : kernel::DeclKind::Axiom,
                      r.type,
                      r.body,
                      t.decl->span,
                      &spans};
  env_.add(kernel::check_declaration(env_, cd));
}

const hit::CoreHit& Session::ensure_hit(const Template& h, const std::vector<Level>& levels) {
  std::string key = kernel::instance_key(h.name, levels);
  auto it = hits_.find(key);
  if (it != hits_.end()) return it->second;
  Recording rec(resolving_, h.name);
  hit::CoreHit core = hit::validate_signature(*h.decl, levels, *this, env_);
  return hits_.emplace(key, std::move(core)).first->second;
}

void Session::ensure_eliminator(const Template& h, const std::vector<Level>& levels) {
  std::string elim = hit::eliminator_name(h.name);
  if (env_.contains(elim, levels)) return;
  std::vector<Level> hit_levels(levels.begin(), levels.end() - 1);
  Level v = levels.back();
  const hit::CoreHit& core = ensure_hit(h, hit_levels);
  {
    Recording rec(resolving_, elim);
    use("transport", {core.level, v}, h.span);
    use("apd", {core.level, v}, h.span);
  }
  hit::EliminatorSpec spec = hit::synthesize_eliminator(core, v);
  auto check = [&](const std::string& name, const Term& type) {
    kernel::CoreDecl cd{name, levels, kernel::DeclKind::Axiom, type, nullptr, h.span, nullptr};
    try {
      return kernel::check_declaration(env_, cd);
    } catch (const DiagnosticError& e) {
      Diagnostic d = e.diagnostic();
      d.code = std::string(code::hit_schema);
      d.message = "the synthesized type of '" + name + "' does not check: " + d.message;
      d.span = h.span;
      throw DiagnosticError(std::move(d));
    }
  };
  kernel::Decl e = check(elim, spec.induction_type);
  e.kind = kernel::DeclKind::HitEliminator;
  e.hit = h.name;
  e.arity = core.params.size() + core.ctors.size() + 2;
  env_.add(std::move(e));
  for (const auto& [name, type] : spec.computation_axioms) {
    kernel::Decl c = check(name, type);
    c.kind = kernel::DeclKind::HitComputation;
    c.hit = h.name;
    env_.add(std::move(c));
  }
}

void Session::check_fresh(const std::string& name, const SourceSpan& at) const {
  if (templates_.count(name)) fail(code::scope, "duplicate declaration of '" + name + "'", at);
}

void Session::add_template(Template t, std::set<std::string> deps) {
  std::string name = t.name;
  deps.erase(name);
  deps_[name].insert(deps.begin(), deps.end());
  order_.push_back(name);
  templates_.emplace(name, std::move(t));
}

void Session::declare(const parse::SurfaceDeclPtr& d, const std::string& file) {
  auto saved_templates = templates_;
  auto saved_order = order_;
  auto saved_deps = deps_;
  auto saved_hits = hits_;
  auto saved_env = env_;
  try {
    if (d->kind == parse::DeclKind::Hit) {
      declare_hit(d, file);
      return;
    }
    check_fresh(d->name, d->name_span);
    Template t;
    t.name = d->name;
    t.kind = d->kind == parse::DeclKind::Def ? TemplateKind::Definition : TemplateKind::Axiom;
    t.universe_arity = d->univars.size();
    t.decl = d;
    t.file = file;
    t.span = d->span;
    deps_.erase(t.name);
    instantiate_decl(t, std::vector<Level>(t.universe_arity, 0));
    add_template(std::move(t), {});
  } catch (...) {
    templates_ = std::move(saved_templates);
    order_ = std::move(saved_order);
    deps_ = std::move(saved_deps);
    hits_ = std::move(saved_hits);
    env_ = std::move(saved_env);
    pending_.clear();
    throw;
  }
}

void Session::declare_hit(const parse::SurfaceDeclPtr& d, const std::string& file) {
  check_fresh(d->name, d->name_span);
  std::string elim = hit::eliminator_name(d->name);
  check_fresh(elim, d->name_span);
  for (const auto& c : d->ctors) {
    check_fresh(c.name, c.name_span);
    if (c.is_path) check_fresh(hit::computation_name(d->name, c.name), c.name_span);
  }
  if (!find("transport") || !find("apd"))
    fail(code::scope, "higher inductive types need the prelude's 'transport' and 'apd'", d->name_span);

  std::size_t arity = d->univars.size();
  auto make = [&](std::string name, TemplateKind kind, std::size_t a, SourceSpan span) {
    Template t;
    t.name = std::move(name);
    t.kind = kind;
    t.universe_arity = a;
    t.decl = d;
    t.hit = d->name;
    t.file = file;
    t.span = std::move(span);
    return t;
  };
  std::vector<Template> ts;
  ts.push_back(make(d->name, TemplateKind::Hit, arity, d->span));
  std::set<std::string> ctor_names;
  for (const auto& c : d->ctors) {
    ts.push_back(make(c.name, c.is_path ? TemplateKind::PathCtor : TemplateKind::PointCtor, arity, c.span));
    ctor_names.insert(c.name);
  }
  ts.push_back(make(elim, TemplateKind::Eliminator, arity + 1, d->span));
  for (const auto& c : d->ctors)
    if (c.is_path) ts.push_back(make(hit::computation_name(d->name, c.name), TemplateKind::Computation, arity + 1, c.span));

  for (const auto& t : ts) {
    deps_.erase(t.name);
    pending_.insert(t.name);
    templates_.emplace(t.name, t);
  }
  std::vector<Level> zeros(arity, 0);
  ensure_hit(templates_.at(d->name), zeros);
  std::vector<Level> elim_levels = zeros;
  elim_levels.push_back(0);
  ensure_eliminator(templates_.at(d->name), elim_levels);
  pending_.clear();

  for (auto& t : ts) {
    std::set<std::string> deps;
    switch (t.kind) {
      case TemplateKind::Hit:
        deps = deps_[t.name];
        for (const auto& c : ctor_names) deps.erase(c);
        break;
      case TemplateKind::PointCtor:
      case TemplateKind::PathCtor:
        deps = {d->name};
        break;
      case TemplateKind::Eliminator:
        deps = ctor_names;
        deps.insert(d->name);
        deps.insert("transport");
        deps.insert("apd");
        break;
      default:
        deps = {elim, "apd"};
        break;
    }
    templates_.erase(t.name);
    deps_.erase(t.name);
    add_template(std::move(t), std::move(deps));
  }
}

FileResult Session::check_source(const SourceFilePtr& src) {
  FileResult r;
  r.path = src->path();
  r.source = src;
  auto t0 = std::chrono::steady_clock::now();
  std::vector<parse::SurfaceDeclPtr> decls;
  try {
    decls = parse::parse_module(*src);
  } catch (const DiagnosticError& e) {
    r.diagnostics.push_back(e.diagnostic());
    r.seconds = seconds_since(t0);
    return r;
  }
  for (const auto& d : decls) {
    auto t1 = std::chrono::steady_clock::now();
    try {
      declare(d, src->path());
    } catch (const DiagnosticError& e) {
      r.diagnostics.push_back(e.diagnostic());
      break;
    }
    timings_.push_back({d->name, src->path(), seconds_since(t1)});
    r.declared.push_back(d->name);
  }
  r.seconds = seconds_since(t0);
  return r;
}

FileResult Session::check_text(const std::string& path, const std::string& text) {
  return check_source(std::make_shared<const SourceFile>(path, text));
}

void Session::merge(const Session& other) {
  std::set<std::string> added;
  for (const auto& name : other.order_) {
    if (templates_.count(name)) continue;
    templates_.emplace(name, other.templates_.at(name));
    order_.push_back(name);
    auto it = other.deps_.find(name);
    if (it != other.deps_.end()) deps_[name] = it->second;
    added.insert(name);
  }
  for (const auto& [key, h] : other.hits_) hits_.emplace(key, h);
  env_.merge(other.env_);
  for (const auto& t : other.timings_)
    if (added.count(t.name)) timings_.push_back(t);
}

void Session::order_by_file(const std::vector<std::string>& files) {
  std::map<std::string, std::size_t> rank;
  for (std::size_t i = 0; i < files.size(); ++i) rank.emplace(files[i], i + 1);
  auto key = [&](const std::string& file) {
    auto it = rank.find(file);
    return it == rank.end() ? 0 : it->second;
  };
  std::stable_sort(order_.begin(), order_.end(), [&](const std::string& a, const std::string& b) {
    return key(templates_.at(a).file) < key(templates_.at(b).file);
  });
  std::stable_sort(timings_.begin(), timings_.end(),
                   [&](const DeclTiming& a, const DeclTiming& b) { return key(a.file) < key(b.file); });
}

namespace {

void collect(const parse::STerm& t, std::set<std::string>& out);

void collect_binders(const std::vector<parse::Binder>& bs, std::set<std::string>& out) {
  for (const auto& b : bs) collect(b.type, out);
}

void collect(const parse::STerm& t, std::set<std::string>& out) {
  if (!t) return;
  std::visit(
      [&](const auto& n) {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, parse::sf::Name>) {
          out.insert(n.name);
        } else if constexpr (std::is_same_v<N, parse::sf::Pi>) {
          collect_binders(n.binders, out);
          collect(n.codomain, out);
        } else if constexpr (std::is_same_v<N, parse::sf::Lambda>) {
          collect_binders(n.binders, out);
          collect(n.body, out);
        } else if constexpr (std::is_same_v<N, parse::sf::Sigma>) {
          collect_binders(n.binders, out);
          collect(n.second, out);
        } else if constexpr (std::is_same_v<N, parse::sf::App>) {
          collect(n.fn, out);
          collect(n.arg, out);
        } else if constexpr (std::is_same_v<N, parse::sf::Pair>) {
          collect(n.fst, out);
          collect(n.snd, out);
        } else if constexpr (std::is_same_v<N, parse::sf::PrimApp>) {
          for (const auto& a : n.args) collect(a, out);
        } else if constexpr (std::is_same_v<N, parse::sf::Ann>) {
          collect(n.term, out);
          collect(n.type, out);
        }
      },
      t->data);
}

}  // namespace

std::set<std::string> referenced_names(const std::vector<parse::SurfaceDeclPtr>& decls) {
  std::set<std::string> out;
  for (const auto& d : decls) {
    collect_binders(d->params, out);
    collect(d->type, out);
    collect(d->body, out);
    for (const auto& c : d->ctors) {
      collect_binders(c.params, out);
      collect(c.type, out);
    }
  }
  return out;
}

}  // namespace hott
