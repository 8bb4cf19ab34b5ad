#include "hott/hit/hit.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "hott/diagnostic.hpp"
#include "hott/parser/printer.hpp"

namespace hott::hit {

using kernel::ArgKind;

std::string eliminator_name(const std::string& hit) { return hit + "-ind"; }

std::string computation_name(const std::string& hit, const std::string& ctor) {
  return hit + "-ind-" + ctor;
}

kernel::HitSignature CoreHit::signature() const {
  kernel::HitSignature sig;
  sig.name = name;
  sig.num_params = params.size();
  sig.eliminator = eliminator_name(name);
  for (const auto& c : ctors) {
    kernel::HitCtorInfo info{c.name, c.is_path, {}};
    for (const auto& a : c.args) info.args.push_back({a.name, a.plicity, a.kind, a.function_arity});
    sig.ctors.push_back(std::move(info));
    if (c.is_path) sig.computation_axioms.push_back(computation_name(name, c.name));
  }
  return sig;
}

namespace {

Term var_at(std::size_t level, std::size_t depth) {
  if (level >= depth) throw InternalError("variable level out of scope");
  return mk::var(depth - 1 - level);
}

struct Reloc {
  std::size_t old_depth;
  std::size_t new_depth;
  std::function<std::size_t(std::size_t)> map;
};

// Moves a term between contexts given a map on de Bruijn levels.
Term relocate(const Term& t, const Reloc& r, std::size_t bound = 0) {
  if (const auto* v = as<tm::Var>(t)) {
    if (v->index < bound) return t;
    std::size_t free = v->index - bound;
    if (free >= r.old_depth) throw InternalError("relocated variable out of scope");
    std::size_t level = r.map(r.old_depth - 1 - free);
    if (level >= r.new_depth) throw InternalError("relocated level out of scope");
    return mk::var(r.new_depth - 1 - level + bound);
  }
  return map_children(t, [&](const Term& c, std::size_t b) { return relocate(c, r, bound + b); });
}

struct Spine {
  Term head;
  std::vector<std::pair<Term, Plicity>> args;
};

Spine decompose(const Term& t) {
  Spine s;
  Term cur = t;
  while (const auto* a = as<tm::App>(cur)) {
    s.args.emplace_back(a->arg, a->plicity);
    cur = a->fn;
  }
  s.head = cur;
  std::reverse(s.args.begin(), s.args.end());
  return s;
}

bool mentions(const Term& t, const std::string& name) {
  if (const auto* c = as<tm::Const>(t)) return c->name == name;
  bool found = false;
  for_each_child(t, [&](const Term& c, std::size_t) {
    if (!found && c) found = mentions(c, name);
  });
  return found;
}

Term pis(const std::vector<std::string>& names, const std::vector<Term>& types,
         const std::vector<Plicity>& plicities, Term body) {
  for (std::size_t i = names.size(); i-- > 0;) body = mk::pi(names[i], types[i], body, plicities[i]);
  return body;
}

class Validator {
 public:
  Validator(const parse::SurfaceDecl& d, const std::vector<Level>& levels, parse::GlobalScope& scope,
            kernel::Environment& env)
      : d_(d), env_(env), scope_(scope), plain_(env) {
    if (levels.size() != d.univars.size()) throw InternalError("HIT instantiated at the wrong arity");
    for (std::size_t i = 0; i < levels.size(); ++i) assignment_.emplace_back(d.univars[i], levels[i]);
    hit_.name = d.name;
    hit_.levels = levels;
    hit_.span = d.span;
  }

  CoreHit run() {
    parse::ResolveContext rc{scope_, assignment_, &spans_};
    if (d_.type) {
      const auto* u = parse::as<parse::sf::Universe>(d_.type);
      if (!u) fail(code::hit_schema, "the type of HIT '" + d_.name + "' must be a universe", d_.type->span);
      hit_.level = parse::eval_level(u->level, assignment_, d_.type->span);
    }
    std::vector<std::string> locals;
    for (const auto& b : d_.params) {
      Term ty = parse::resolve_term(b.type, rc, locals);
      kernel::Elaborator el(env_, &spans_, b.span);
      Term e = el.finish(el.check_type(ctx_, ty), ctx_.depth());
      hit_.params.push_back({b.name, b.plicity, e});
      ctx_.push(b.name, plain_.eval(ctx_.env, e));
      locals.push_back(b.name);
    }
    np_ = hit_.params.size();
    declare_former();
    for (std::size_t j = 0; j < d_.ctors.size(); ++j) declare_ctor(j, rc, locals);
    env_.add_hit(hit_.signature());
    return std::move(hit_);
  }

 private:
  void declare_former() {
    if (env_.contains(d_.name, hit_.levels))
      fail(code::scope, "duplicate declaration of '" + d_.name + "'", d_.name_span);
    std::vector<std::string> names;
    std::vector<Term> types;
    std::vector<Plicity> pl;
    for (const auto& p : hit_.params) {
      names.push_back(p.name);
      types.push_back(p.type);
      pl.push_back(p.plicity);
    }
    kernel::CoreDecl cd{d_.name, hit_.levels, kernel::DeclKind::Axiom,
                        pis(names, types, pl, mk::universe(hit_.level)), nullptr, d_.span, nullptr};
    kernel::Decl decl = kernel::check_declaration(env_, cd);
    decl.kind = kernel::DeclKind::HitType;
    decl.hit = d_.name;
    decl.arity = np_;
    env_.add(std::move(decl));
  }

  // H applied to the parameters, at the given context depth.
  bool is_happ(const Term& t, std::size_t depth) const {
    Spine s = decompose(t);
    const auto* c = as<tm::Const>(s.head);
    if (!c || c->name != hit_.name || c->levels != hit_.levels || s.args.size() != np_) return false;
    for (std::size_t i = 0; i < np_; ++i) {
      const auto* v = as<tm::Var>(s.args[i].first);
      if (!v || v->index != depth - 1 - i) return false;
    }
    return true;
  }

  std::string show(const Term& t, std::size_t depth, const std::vector<std::string>& arg_names) const {
    std::vector<std::string> names;
    for (const auto& p : hit_.params) names.push_back(p.name);
    for (std::size_t i = 0; names.size() < depth && i < arg_names.size(); ++i) names.push_back(arg_names[i]);
    while (names.size() < depth) names.push_back("x" + std::to_string(names.size()));
    return parse::print(t, names);
  }

  void classify(CoreArg& a, const std::string& ctor, std::size_t depth, const SourceSpan& at,
                const std::vector<std::string>& arg_names) {
    if (!mentions(a.type, hit_.name)) return;
    if (is_happ(a.type, depth)) {
      a.kind = ArgKind::Recursive;
      return;
    }
    Term cur = a.type;
    std::size_t q = 0;
    while (const auto* p = as<tm::Pi>(cur)) {
      if (p->plicity != Plicity::Explicit || mentions(p->domain, hit_.name)) break;
      cur = p->codomain;
      ++q;
    }
    if (q > 0 && is_happ(cur, depth + q)) {
      a.kind = ArgKind::RecursiveFunction;
      a.function_arity = q;
      return;
    }
    fail(code::hit_schema,
         "constructor '" + ctor + "' is not strictly positive: argument '" + a.name + "' has type " +
             show(a.type, depth, arg_names),
         at);
  }

  const CoreCtor* point_ctor(const std::string& name) const {
    for (const auto& c : hit_.ctors)
      if (c.name == name && !c.is_path) return &c;
    return nullptr;
  }

  [[noreturn]] void bad_boundary(const CoreCtor& c, const SourceSpan& at) const {
    fail(code::hit_schema,
         "boundary of path constructor '" + c.name +
             "' must be built from point constructors and recursive arguments",
         at);
  }

  void check_boundary(const Term& b, const CoreCtor& c, std::size_t depth, const SourceSpan& at) const {
    Spine s = decompose(b);
    if (const auto* v = as<tm::Var>(s.head)) {
      std::size_t level = depth - 1 - v->index;
      if (level < np_) bad_boundary(c, at);
      const CoreArg& a = c.args.at(level - np_);
      if (a.kind == ArgKind::Recursive && s.args.empty()) return;
      if (a.kind == ArgKind::RecursiveFunction && s.args.size() == a.function_arity) {
        for (const auto& [x, p] : s.args)
          if (mentions(x, hit_.name) || p != Plicity::Explicit) bad_boundary(c, at);
        return;
      }
      bad_boundary(c, at);
    }
    const auto* k = as<tm::Const>(s.head);
    const CoreCtor* pc = k && k->levels == hit_.levels ? point_ctor(k->name) : nullptr;
    if (!pc || s.args.size() != np_ + pc->args.size()) bad_boundary(c, at);
    for (std::size_t i = 0; i < np_; ++i) {
      const auto* v = as<tm::Var>(s.args[i].first);
      if (!v || v->index != depth - 1 - i) bad_boundary(c, at);
    }
    for (std::size_t i = 0; i < pc->args.size(); ++i) {
      const Term& x = s.args[np_ + i].first;
      switch (pc->args[i].kind) {
        case ArgKind::Plain:
          if (mentions(x, hit_.name)) bad_boundary(c, at);
          break;
        case ArgKind::Recursive:
          check_boundary(x, c, depth, at);
          break;
        case ArgKind::RecursiveFunction: {
          const auto* v = as<tm::Var>(x);
          if (!v) bad_boundary(c, at);
          std::size_t level = depth - 1 - v->index;
          if (level < np_ || c.args.at(level - np_).kind != ArgKind::RecursiveFunction) bad_boundary(c, at);
          break;
        }
      }
    }
  }

  void declare_ctor(std::size_t j, parse::ResolveContext& rc, std::vector<std::string>& locals) {
    const parse::SurfaceCtor& sc = d_.ctors[j];
    if (sc.name == d_.name || point_ctor(sc.name) ||
        std::any_of(hit_.ctors.begin(), hit_.ctors.end(), [&](const CoreCtor& c) { return c.name == sc.name; }) ||
        env_.contains(sc.name, hit_.levels))
      fail(code::scope, "duplicate declaration of '" + sc.name + "'", sc.name_span);

    Term ty = parse::resolve_telescope(sc.params, sc.type, rc, locals);
    kernel::Elaborator el(env_, &spans_, sc.span);
    Term full = el.finish(el.check_type(ctx_, ty), np_);

    CoreCtor c;
    c.name = sc.name;
    c.is_path = sc.is_path;
    c.span = sc.span;
    std::vector<std::string> arg_names;
    Term cur = full;
    kernel::Context actx = ctx_;
    while (const auto* p = as<tm::Pi>(cur)) {
      CoreArg a{p->name, p->plicity, p->domain, ArgKind::Plain, 0};
      std::size_t depth = np_ + c.args.size();
      classify(a, c.name, depth, sc.span, arg_names);
      Level l = 0;
      kernel::Elaborator lev(env_, nullptr, sc.span);
      lev.check_type(actx, a.type, &l);
      if (l > hit_.level)
        fail(code::univ,
             "argument '" + a.name + "' of constructor '" + c.name + "' lives in Type " + std::to_string(l) +
                 " but '" + hit_.name + "' is in Type " + std::to_string(hit_.level),
             sc.span);
      actx.push(a.name, plain_.eval(actx.env, a.type));
      arg_names.push_back(a.name);
      c.args.push_back(std::move(a));
      cur = p->codomain;
    }
    std::size_t depth = np_ + c.args.size();
    if (!c.is_path) {
      if (!is_happ(cur, depth))
        fail(code::hit_schema,
             "point constructor '" + c.name + "' must construct an element of '" + hit_.name + "', found " +
                 show(cur, depth, arg_names),
             sc.span);
    } else {
      const auto* id = as<tm::Id>(cur);
      if (!id)
        fail(code::hit_schema,
             "path constructor '" + c.name + "' must have an identity type, found " + show(cur, depth, arg_names),
             sc.span);
      if (is<tm::Id>(id->type))
        fail(code::hit_schema,
             "path constructor '" + c.name +
                 "' has dimension 2; only point and 1-dimensional path constructors are supported",
             sc.span);
      if (!is_happ(id->type, depth))
        fail(code::hit_schema, "path constructor '" + c.name + "' must be a path in '" + hit_.name + "'",
             sc.span);
      check_boundary(id->lhs, c, depth, sc.span);
      check_boundary(id->rhs, c, depth, sc.span);
      c.lhs = id->lhs;
      c.rhs = id->rhs;
    }

    std::vector<std::string> names;
    std::vector<Term> types;
    std::vector<Plicity> pl;
    for (const auto& p : hit_.params) {
      names.push_back(p.name);
      types.push_back(p.type);
      pl.push_back(Plicity::Implicit);
    }
    kernel::CoreDecl cd{c.name, hit_.levels, kernel::DeclKind::Axiom, pis(names, types, pl, full), nullptr,
                        sc.span, nullptr};
    kernel::Decl decl = kernel::check_declaration(env_, cd);
    decl.kind = c.is_path ? kernel::DeclKind::PathCtor : kernel::DeclKind::PointCtor;
    decl.hit = hit_.name;
    decl.ctor_index = j;
    decl.arity = np_ + c.args.size();
    env_.add(std::move(decl));
    hit_.ctors.push_back(std::move(c));
  }

  const parse::SurfaceDecl& d_;
  kernel::Environment& env_;
  parse::GlobalScope& scope_;
  kernel::Evaluator plain_;
  parse::LevelAssignment assignment_;
  SpanTable spans_;
  kernel::Context ctx_;
  CoreHit hit_;
  std::size_t np_ = 0;
};

// Term construction for the eliminator. Context layout (by level):
//   params 0..np-1, motive np, methods np+1..np+nc, then whatever follows.
class Synth {
 public:
  Synth(const CoreHit& h, Level v) : h_(h), v_(v), np_(h.params.size()), nc_(h.ctors.size()) {}

  std::size_t motive() const { return np_; }
  std::size_t method(std::size_t j) const { return np_ + 1 + j; }
  std::size_t after_methods() const { return np_ + 1 + nc_; }

  Term happ(std::size_t depth) const {
    Term t = mk::constant(h_.name, h_.levels);
    for (std::size_t i = 0; i < np_; ++i) t = mk::app(t, var_at(i, depth), h_.params[i].plicity);
    return t;
  }

  // Constructor applied to the parameters and to its arguments, which sit at
  // levels base..base+n-1.
  Term ctor_app(const CoreCtor& c, std::size_t base, std::size_t depth) const {
    Term t = mk::constant(c.name, h_.levels);
    for (std::size_t i = 0; i < np_; ++i) t = mk::app(t, var_at(i, depth), Plicity::Implicit);
    for (std::size_t i = 0; i < c.args.size(); ++i) t = mk::app(t, var_at(base + i, depth), c.args[i].plicity);
    return t;
  }

  Reloc args_to(std::size_t base, std::size_t old_depth, std::size_t new_depth) const {
    std::size_t np = np_;
    return Reloc{old_depth, new_depth, [np, base](std::size_t l) { return l < np ? l : base + (l - np); }};
  }

  std::vector<std::size_t> recursive_args(const CoreCtor& c) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < c.args.size(); ++i)
      if (c.args[i].kind != ArgKind::Plain) out.push_back(i);
    return out;
  }

  // Argument telescope of constructor c placed at levels base.., as
  // (names, types, plicities).
  void arg_telescope(const CoreCtor& c, std::size_t base, std::vector<std::string>& names,
                     std::vector<Term>& types, std::vector<Plicity>& pl) const {
    for (std::size_t i = 0; i < c.args.size(); ++i) {
      names.push_back(c.args[i].name);
      types.push_back(relocate(c.args[i].type, args_to(base, np_ + i, base + i)));
      pl.push_back(c.args[i].plicity);
    }
  }

  // Type of the method for constructor j, in a context of depth method(j).
  Term method_type(std::size_t j) const {
    const CoreCtor& c = h_.ctors[j];
    std::size_t D = method(j);
    std::size_t n = c.args.size();
    std::vector<std::string> names;
    std::vector<Term> types;
    std::vector<Plicity> pl;
    arg_telescope(c, D, names, types, pl);
    std::vector<std::size_t> recs = recursive_args(c);
    for (std::size_t r = 0; r < recs.size(); ++r) {
      std::size_t i = recs[r];
      std::size_t depth = D + n + r;
      const CoreArg& a = c.args[i];
      names.push_back(a.name + "'");
      pl.push_back(Plicity::Explicit);
      if (a.kind == ArgKind::Recursive) {
        types.push_back(mk::app(var_at(motive(), depth), var_at(D + i, depth)));
        continue;
      }
      Term ti = relocate(a.type, args_to(D, np_ + i, depth));
      std::vector<std::string> ys;
      std::vector<Term> doms;
      for (std::size_t k = 0; k < a.function_arity; ++k) {
        const auto* p = as<tm::Pi>(ti);
        ys.push_back(p->name);
        doms.push_back(p->domain);
        ti = p->codomain;
      }
      std::size_t dq = depth + a.function_arity;
      Term inner = var_at(D + i, dq);
      for (std::size_t k = 0; k < a.function_arity; ++k) inner = mk::app(inner, var_at(depth + k, dq));
      types.push_back(pis(ys, doms, std::vector<Plicity>(ys.size(), Plicity::Explicit),
                          mk::app(var_at(motive(), dq), inner)));
    }
    std::size_t E = D + n + recs.size();
    Term result;
    if (!c.is_path) {
      result = mk::app(var_at(motive(), E), ctor_app(c, D, E));
    } else {
      Reloc r = args_to(D, np_ + n, E);
      Term lhs = relocate(c.lhs, r);
      Term rhs = relocate(c.rhs, r);
      Term tr = mk::constant("transport", {h_.level, v_});
      tr = mk::app(tr, happ(E), Plicity::Implicit);
      tr = mk::app(tr, var_at(motive(), E));
      tr = mk::app(tr, lhs, Plicity::Implicit);
      tr = mk::app(tr, rhs, Plicity::Implicit);
      tr = mk::app(tr, ctor_app(c, D, E));
      tr = mk::app(tr, image(c.lhs, c, D, E));
      result = mk::id(mk::app(var_at(motive(), E), rhs), tr, image(c.rhs, c, D, E));
    }
    return pis(names, types, pl, result);
  }

  // Image of a boundary under the eliminator, expressed with the methods and
  // the recursive results of constructor c (arguments at D.., results after).
  Term image(const Term& b, const CoreCtor& c, std::size_t D, std::size_t E) const {
    std::size_t n = c.args.size();
    std::vector<std::size_t> recs = recursive_args(c);
    auto result_level = [&](std::size_t i) {
      for (std::size_t r = 0; r < recs.size(); ++r)
        if (recs[r] == i) return D + n + r;
      throw InternalError("boundary refers to a non-recursive argument");
    };
    Reloc rel = args_to(D, np_ + n, E);
    Spine s = decompose(b);
    std::size_t old_depth = np_ + n;
    if (const auto* v = as<tm::Var>(s.head)) {
      std::size_t level = old_depth - 1 - v->index;
      Term t = var_at(result_level(level - np_), E);
      for (const auto& [x, p] : s.args) t = mk::app(t, relocate(x, rel), p);
      return t;
    }
    const auto* k = as<tm::Const>(s.head);
    if (!k) throw InternalError("malformed boundary");
    std::size_t j = index_of(k->name);
    const CoreCtor& pc = h_.ctors[j];
    Term t = var_at(method(j), E);
    for (std::size_t i = 0; i < pc.args.size(); ++i) {
      const auto& [x, p] = s.args[np_ + i];
      t = mk::app(t, relocate(x, rel), p);
    }
    for (std::size_t i = 0; i < pc.args.size(); ++i) {
      const Term& x = s.args[np_ + i].first;
      if (pc.args[i].kind == ArgKind::Recursive) {
        t = mk::app(t, image(x, c, D, E));
      } else if (pc.args[i].kind == ArgKind::RecursiveFunction) {
        const auto* v = as<tm::Var>(x);
        t = mk::app(t, var_at(result_level(old_depth - 1 - v->index - np_), E));
      }
    }
    return t;
  }

  std::size_t index_of(const std::string& ctor) const {
    for (std::size_t j = 0; j < nc_; ++j)
      if (h_.ctors[j].name == ctor) return j;
    throw InternalError("unknown constructor " + ctor);
  }

  // {params} -> (P : H params -> Type v) -> methods, followed by `rest`.
  Term prefix(Plicity motive_plicity, Term rest) const {
    std::vector<std::string> names;
    std::vector<Term> types;
    std::vector<Plicity> pl;
    for (const auto& p : h_.params) {
      names.push_back(p.name);
      types.push_back(p.type);
      pl.push_back(Plicity::Implicit);
    }
    names.push_back("P");
    types.push_back(mk::pi("x", happ(np_), mk::universe(v_)));
    pl.push_back(motive_plicity);
    for (std::size_t j = 0; j < nc_; ++j) {
      names.push_back("m-" + h_.ctors[j].name);
      types.push_back(method_type(j));
      pl.push_back(Plicity::Explicit);
    }
    return pis(names, types, pl, rest);
  }

  // The eliminator applied to the parameters, motive and methods.
  Term elim_fn(std::size_t depth) const {
    std::vector<Level> levels = h_.levels;
    levels.push_back(v_);
    Term t = mk::constant(eliminator_name(h_.name), levels);
    for (std::size_t i = 0; i < np_; ++i) t = mk::app(t, var_at(i, depth), Plicity::Implicit);
    t = mk::app(t, var_at(motive(), depth));
    for (std::size_t j = 0; j < nc_; ++j) t = mk::app(t, var_at(method(j), depth));
    return t;
  }

  // Method j applied to constructor arguments at base.. and to the
  // recursive results computed by the eliminator.
  Term method_app(std::size_t j, std::size_t base, std::size_t depth) const {
    const CoreCtor& c = h_.ctors[j];
    Term t = var_at(method(j), depth);
    for (std::size_t i = 0; i < c.args.size(); ++i) t = mk::app(t, var_at(base + i, depth), c.args[i].plicity);
    for (std::size_t i : recursive_args(c)) {
      const CoreArg& a = c.args[i];
      if (a.kind == ArgKind::Recursive) {
        t = mk::app(t, mk::app(elim_fn(depth), var_at(base + i, depth)));
        continue;
      }
      std::size_t q = a.function_arity;
      Term inner = var_at(base + i, depth + q);
      for (std::size_t k = 0; k < q; ++k) inner = mk::app(inner, var_at(depth + k, depth + q));
      Term body = mk::app(elim_fn(depth + q), inner);
      for (std::size_t k = 0; k < q; ++k) body = mk::lam("y", body);
      t = mk::app(t, body);
    }
    return t;
  }

  EliminatorSpec build() const {
    EliminatorSpec out;
    out.name = eliminator_name(h_.name);
    std::size_t M = after_methods();
    Term goal = mk::pi("x", happ(M), mk::app(var_at(motive(), M + 1), var_at(M, M + 1)));
    out.induction_type = prefix(Plicity::Explicit, goal);

    for (std::size_t j = 0; j < nc_; ++j) {
      const CoreCtor& c = h_.ctors[j];
      std::size_t F = M + c.args.size();
      if (!c.is_path) {
        PointRule rule;
        rule.ctor = c.name;
        rule.depth = F;
        rule.lhs = mk::app(elim_fn(F), ctor_app(c, M, F));
        rule.rhs = method_app(j, M, F);
        out.point_rules.push_back(std::move(rule));
        continue;
      }
      std::vector<std::string> names;
      std::vector<Term> types;
      std::vector<Plicity> pl;
      arg_telescope(c, M, names, types, pl);
      Reloc r = args_to(M, np_ + c.args.size(), F);
      Term lhs = relocate(c.lhs, r);
      Term rhs = relocate(c.rhs, r);
      Term apd = mk::constant("apd", {h_.level, v_});
      apd = mk::app(apd, happ(F), Plicity::Implicit);
      apd = mk::app(apd, var_at(motive(), F), Plicity::Implicit);
      apd = mk::app(apd, mk::lam("x", mk::app(elim_fn(F + 1), mk::var(0))));
      apd = mk::app(apd, lhs, Plicity::Implicit);
      apd = mk::app(apd, rhs, Plicity::Implicit);
      apd = mk::app(apd, ctor_app(c, M, F));
      Term tr = mk::constant("transport", {h_.level, v_});
      tr = mk::app(tr, happ(F), Plicity::Implicit);
      tr = mk::app(tr, var_at(motive(), F));
      tr = mk::app(tr, lhs, Plicity::Implicit);
      tr = mk::app(tr, rhs, Plicity::Implicit);
      tr = mk::app(tr, ctor_app(c, M, F));
      tr = mk::app(tr, mk::app(elim_fn(F), lhs));
      Term path_type = mk::id(mk::app(var_at(motive(), F), rhs), tr, mk::app(elim_fn(F), rhs));
      Term eq = mk::id(path_type, apd, method_app(j, M, F));
      out.computation_axioms.emplace_back(computation_name(h_.name, c.name),
                                          prefix(Plicity::Explicit, pis(names, types, pl, eq)));
    }
    return out;
  }

 private:
  const CoreHit& h_;
  Level v_;
  std::size_t np_;
  std::size_t nc_;
};

}  // namespace

CoreHit validate_signature(const parse::SurfaceDecl& decl, const std::vector<Level>& levels,
                           parse::GlobalScope& scope, kernel::Environment& env) {
  return Validator(decl, levels, scope, env).run();
}

EliminatorSpec synthesize_eliminator(const CoreHit& hit, Level motive_level) {
  return Synth(hit, motive_level).build();
}

kernel::Value apply_point_beta(const kernel::Evaluator& ev, const kernel::Value& elim_application) {
  const auto* n = as<kernel::vl::Neutral>(elim_application);
  if (!n) return elim_application;
  kernel::Value out = kernel::make_value(kernel::vl::Neutral{n->head, {}});
  for (const auto& e : n->spine) {
    const auto* a = std::get_if<kernel::el::App>(&e);
    if (!a) return elim_application;
    out = ev.apply(out, a->arg, a->plicity);
  }
  return out;
}

}  // namespace hott::hit
