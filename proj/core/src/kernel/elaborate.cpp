#include "hott/kernel/elaborate.hpp"

#include <algorithm>

#include "hott/diagnostic.hpp"
#include "hott/parser/printer.hpp"

namespace hott::kernel {

void Context::push(std::string name, Value type) {
  env = extend(env, vvar(names.size()));
  names.push_back(std::move(name));
  types.push_back(std::move(type));
}

void Context::pop() {
  names.pop_back();
  types.pop_back();
  env = env->tail;
}

namespace {

struct Bind {
  Context& ctx;
  Bind(Context& c, std::string name, Value type) : ctx(c) { ctx.push(std::move(name), std::move(type)); }
  ~Bind() { ctx.pop(); }
  Bind(const Bind&) = delete;
  Bind& operator=(const Bind&) = delete;
};

struct SpanScope {
  SourceSpan& slot;
  SourceSpan saved;
  SpanScope(SourceSpan& s, const SpanTable* table, const Term& t) : slot(s), saved(s) {
    if (!table) return;
    auto it = table->find(t.get());
    if (it != table->end()) slot = it->second;
  }
  ~SpanScope() { slot = saved; }
};

bool inferable(const Term& t) {
  return !(is<tm::Lambda>(t) || is<tm::Pair>(t) || is<tm::Inl>(t) || is<tm::Inr>(t) || is<tm::Hole>(t));
}

std::string display(const std::string& n) { return n.empty() ? "_" : n; }

}  // namespace

Elaborator::Elaborator(const Environment& env, const SpanTable* spans, SourceSpan fallback)
    : env_(env), ev_(env, &metas_), spans_(spans), current_(std::move(fallback)) {}

void Elaborator::error(std::string_view c, std::string msg) const { fail(c, std::move(msg), current_); }

std::string Elaborator::show_term(const Context& ctx, const Term& t) const {
  std::vector<std::string> names;
  for (const auto& n : ctx.names) names.push_back(display(n));
  return parse::print(t, names);
}

std::string Elaborator::show(const Context& ctx, const Value& v) const {
  return show_term(ctx, ev_.quote(ctx.depth(), v));
}

Term Elaborator::meta_term(const Context& ctx, std::size_t id) const {
  Term t = mk::meta(id);
  for (std::size_t l = 0; l < ctx.depth(); ++l) t = mk::app(t, mk::var(ctx.depth() - 1 - l));
  return t;
}

std::size_t Elaborator::fresh_meta(const Context& ctx, Value type, std::string what) {
  return metas_.fresh(std::move(type), ctx.depth(), current_, std::move(what));
}

Value Elaborator::motive_at(const Context& ctx, const Term& motive, const Value& v) const {
  return ev_.eval(extend(ctx.env, v), motive);
}

void Elaborator::expect_conv(Context& ctx, const Value& actual, const Value& expected, const char* what) {
  if (ev_.conv(ctx.depth(), actual, expected)) return;
  Value a = ev_.force(actual);
  Value e = ev_.force(expected);
  if (as<vl::Universe>(a) && as<vl::Universe>(e))
    error(code::univ, std::string("universe mismatch") + what + ": expected " + show(ctx, e) + ", found " +
                          show(ctx, a) + " (universes are not cumulative)");
  error(code::type, std::string("type mismatch") + what + ": expected " + show(ctx, e) + ", found " + show(ctx, a));
}

Level Elaborator::level_of(Context& ctx, const Value& type) {
  Term q = ev_.quote(ctx.depth(), type);
  Typed r = infer(ctx, q);
  Value u_forced = ev_.force(r.type);
  const auto* u = as<vl::Universe>(u_forced);
  if (!u) throw InternalError("type of a type is not a universe");
  return u->level;
}

Term Elaborator::check_type(Context& ctx, const Term& t, Level* level) {
  SpanScope s(current_, spans_, t);
  Typed r = infer(ctx, t);
  Value u_forced = ev_.force(r.type);
  const auto* u = as<vl::Universe>(u_forced);
  if (!u) error(code::type, "expected a type, but '" + show_term(ctx, r.term) + "' has type " + show(ctx, r.type));
  if (level) *level = u->level;
  return r.term;
}

Elaborator::Typed Elaborator::infer(Context& ctx, const Term& t) {
  SpanScope s(current_, spans_, t);
  return infer_node(ctx, t);
}

Term Elaborator::check(Context& ctx, const Term& t, const Value& type) {
  SpanScope s(current_, spans_, t);
  return check_node(ctx, t, type);
}

Elaborator::Typed Elaborator::infer_node(Context& ctx, const Term& t) {
  const std::size_t depth = ctx.depth();
  if (const auto* v = as<tm::Var>(t)) {
    if (v->index >= depth) throw InternalError("ill-scoped variable");
    return {t, ctx.types[depth - 1 - v->index]};
  }
  if (const auto* u = as<tm::Universe>(t)) return {t, vuniverse(u->level + 1)};
  if (const auto* c = as<tm::Const>(t)) {
    DeclPtr d = env_.find(c->name, c->levels);
    if (!d) throw InternalError("constant " + instance_key(c->name, c->levels) + " is not instantiated");
    return {t, d->type_value};
  }
  if (is<tm::App>(t)) return spine(ctx, t, nullptr);
  if (const auto* p = as<tm::Pi>(t)) {
    Level i = 0, j = 0;
    Term dom = check_type(ctx, p->domain, &i);
    Term cod;
    {
      Bind b(ctx, p->name, eval(ctx, dom));
      cod = check_type(ctx, p->codomain, &j);
    }
    return {mk::pi(p->name, dom, cod, p->plicity), vuniverse(std::max(i, j))};
  }
  if (const auto* p = as<tm::Sigma>(t)) {
    Level i = 0, j = 0;
    Term a = check_type(ctx, p->first, &i);
    Term b;
    {
      Bind bind(ctx, p->name, eval(ctx, a));
      b = check_type(ctx, p->second, &j);
    }
    return {mk::sigma(p->name, a, b), vuniverse(std::max(i, j))};
  }
  if (const auto* p = as<tm::Fst>(t)) {
    Typed r = infer(ctx, p->pair);
    Value sg_forced = ev_.force(r.type);
    const auto* sg = as<vl::Sigma>(sg_forced);
    if (!sg) error(code::type, "fst expects a pair, but its argument has type " + show(ctx, r.type));
    return {mk::fst(r.term), sg->first};
  }
  if (const auto* p = as<tm::Snd>(t)) {
    Typed r = infer(ctx, p->pair);
    Value sg_forced = ev_.force(r.type);
    const auto* sg = as<vl::Sigma>(sg_forced);
    if (!sg) error(code::type, "snd expects a pair, but its argument has type " + show(ctx, r.type));
    return {mk::snd(r.term), ev_.inst(sg->second, ev_.fst(eval(ctx, r.term)))};
  }
  if (const auto* p = as<tm::Id>(t)) {
    if (is<tm::Hole>(p->type)) {
      Typed a = infer(ctx, p->lhs);
      Term b = check(ctx, p->rhs, a.type);
      Level l = level_of(ctx, a.type);
      return {mk::id(ev_.quote(depth, a.type), a.term, b), vuniverse(l)};
    }
    Level l = 0;
    Term ty = check_type(ctx, p->type, &l);
    Value tv = eval(ctx, ty);
    Term a = check(ctx, p->lhs, tv);
    Term b = check(ctx, p->rhs, tv);
    return {mk::id(ty, a, b), vuniverse(l)};
  }
  if (const auto* p = as<tm::Refl>(t)) {
    if (is<tm::Hole>(p->type)) {
      Typed a = infer(ctx, p->point);
      Value av = eval(ctx, a.term);
      return {mk::refl(ev_.quote(depth, a.type), a.term), make_value(vl::Id{a.type, av, av})};
    }
    Term ty = check_type(ctx, p->type);
    Value tv = eval(ctx, ty);
    Term a = check(ctx, p->point, tv);
    Value av = eval(ctx, a);
    return {mk::refl(ty, a), make_value(vl::Id{tv, av, av})};
  }
  if (const auto* p = as<tm::J>(t)) {
    Typed path = infer(ctx, p->path);
    Value id_forced = ev_.force(path.type);
    const auto* id = as<vl::Id>(id_forced);
    if (!id) error(code::type, "J eliminates a path, but its last argument has type " + show(ctx, path.type));
    Term endpoint;
    Value endpoint_v;
    if (is<tm::Hole>(p->endpoint)) {
      endpoint_v = id->rhs;
      endpoint = ev_.quote(depth, endpoint_v);
    } else {
      endpoint = check(ctx, p->endpoint, id->type);
      endpoint_v = eval(ctx, endpoint);
      if (!ev_.conv(depth, endpoint_v, id->rhs))
        error(code::type, "J endpoint " + show(ctx, endpoint_v) + " is not the right endpoint " + show(ctx, id->rhs) +
                              " of the eliminated path");
    }
    Term motive;
    {
      Bind bx(ctx, p->endpoint_name, id->type);
      Value x = vvar(depth);
      Bind bp(ctx, p->path_name, make_value(vl::Id{id->type, id->lhs, x}));
      motive = check_type(ctx, p->motive);
    }
    auto motive_at2 = [&](const Value& e, const Value& q) { return ev_.eval(extend(extend(ctx.env, e), q), motive); };
    Term base = check(ctx, p->base, motive_at2(id->lhs, make_value(vl::Refl{id->type, id->lhs})));
    Value result = motive_at2(endpoint_v, eval(ctx, path.term));
    return {mk::j(p->endpoint_name, p->path_name, motive, base, endpoint, path.term), result};
  }
  if (is<tm::Empty>(t) || is<tm::Unit>(t) || is<tm::Nat>(t)) return {t, vuniverse(0)};
  if (is<tm::Star>(t)) return {t, make_value(vl::Unit{})};
  if (is<tm::Zero>(t)) return {t, make_value(vl::Nat{})};
  if (const auto* p = as<tm::Succ>(t)) {
    Value nat = make_value(vl::Nat{});
    return {mk::succ(check(ctx, p->pred, nat)), nat};
  }
  if (const auto* p = as<tm::Sum>(t)) {
    Level i = 0, j = 0;
    Term a = check_type(ctx, p->left, &i);
    Term b = check_type(ctx, p->right, &j);
    return {mk::sum(a, b), vuniverse(std::max(i, j))};
  }
  if (const auto* p = as<tm::EmptyElim>(t)) {
    Term e = check(ctx, p->scrutinee, make_value(vl::Empty{}));
    Term motive;
    {
      Bind b(ctx, p->name, make_value(vl::Empty{}));
      motive = check_type(ctx, p->motive);
    }
    return {mk::empty_elim(p->name, motive, e), motive_at(ctx, motive, eval(ctx, e))};
  }
  if (const auto* p = as<tm::UnitElim>(t)) {
    Value unit = make_value(vl::Unit{});
    Term u = check(ctx, p->scrutinee, unit);
    Term motive;
    {
      Bind b(ctx, p->name, unit);
      motive = check_type(ctx, p->motive);
    }
    Term d = check(ctx, p->method, motive_at(ctx, motive, make_value(vl::Star{})));
    return {mk::unit_elim(p->name, motive, d, u), motive_at(ctx, motive, eval(ctx, u))};
  }
  if (const auto* p = as<tm::SumElim>(t)) {
    Typed s = infer(ctx, p->scrutinee);
    Value st = ev_.force(s.type);
    const auto* sum = as<vl::Sum>(st);
    if (!sum) error(code::type, "sum-elim expects a value of a sum type, found type " + show(ctx, s.type));
    Term motive;
    {
      Bind b(ctx, p->name, st);
      motive = check_type(ctx, p->motive);
    }
    Value lt = make_value(vl::Pi{"a", Plicity::Explicit, sum->left, Closure{ctx.env, replace_var0(motive, mk::inl(mk::var(0)))}});
    Value rt = make_value(vl::Pi{"b", Plicity::Explicit, sum->right, Closure{ctx.env, replace_var0(motive, mk::inr(mk::var(0)))}});
    Term l = check(ctx, p->on_left, lt);
    Term r = check(ctx, p->on_right, rt);
    return {mk::sum_elim(p->name, motive, l, r, s.term), motive_at(ctx, motive, eval(ctx, s.term))};
  }
  if (const auto* p = as<tm::NatElim>(t)) {
    Value nat = make_value(vl::Nat{});
    Term n = check(ctx, p->scrutinee, nat);
    Term motive;
    {
      Bind b(ctx, p->name, nat);
      motive = check_type(ctx, p->motive);
    }
    Term z = check(ctx, p->on_zero, motive_at(ctx, motive, make_value(vl::Zero{})));
    Term step = mk::pi("ih", motive, shift(replace_var0(motive, mk::succ(mk::var(0))), 0, 1));
    Value st = make_value(vl::Pi{"k", Plicity::Explicit, nat, Closure{ctx.env, step}});
    Term s = check(ctx, p->on_succ, st);
    return {mk::nat_elim(p->name, motive, z, s, n), motive_at(ctx, motive, eval(ctx, n))};
  }
  if (const auto* p = as<tm::Ann>(t)) {
    Term ty = check_type(ctx, p->type);
    Value tv = eval(ctx, ty);
    return {check(ctx, p->term, tv), tv};
  }
  if (const auto* m = as<tm::Meta>(t)) return {t, metas_.at(m->id).type};
  if (is<tm::Lambda>(t))
    error(code::type, "cannot infer the type of a lambda; add a type annotation or use it where a function type is expected");
  if (is<tm::Pair>(t)) error(code::type, "cannot infer the type of a pair; add a type annotation");
  if (is<tm::Inl>(t) || is<tm::Inr>(t))
    error(code::type, "cannot infer the type of an injection into a sum; add a type annotation");
  if (is<tm::Hole>(t)) error(code::type, "cannot infer the value of '_' here");
  throw InternalError("infer: unhandled term");
}

Elaborator::Typed Elaborator::spine(Context& ctx, const Term& t, const Value* expected) {
  const std::size_t depth = ctx.depth();
  std::vector<const tm::App*> apps;
  Term head = t;
  while (const auto* a = as<tm::App>(head)) {
    apps.push_back(a);
    head = a->fn;
  }
  std::reverse(apps.begin(), apps.end());

  Typed h = infer(ctx, head);
  Value ty = h.type;
  struct Pending {
    std::size_t meta;
    Term arg;
    Value domain;
    std::size_t slot;
    SourceSpan span;
  };
  std::vector<std::pair<Term, Plicity>> args;
  std::vector<Pending> pending;

  auto insert_implicit = [&](const vl::Pi& pi) {
    std::size_t m = fresh_meta(ctx, pi.domain, "implicit argument '" + display(pi.name) + "'");
    Term mt = meta_term(ctx, m);
    args.emplace_back(mt, Plicity::Implicit);
    ty = ev_.inst(pi.codomain, eval(ctx, mt));
  };

  // A lambda can be checked once its binder types are known; an inferable
  // body then determines the rest.
  auto ready = [&](const Term& arg, const Value& domain) {
    Term t = arg;
    Value ty = domain;
    std::size_t d = depth;
    while (true) {
      if (!has_unsolved_metas(ev_, d, ty)) return true;
      const auto* lam = as<tm::Lambda>(t);
      if (!lam) return d > depth && inferable(t);
      Value pi_forced = ev_.force(ty);
      const auto* pi = as<vl::Pi>(pi_forced);
      if (!pi || pi->plicity != lam->plicity || has_unsolved_metas(ev_, d, pi->domain)) return false;
      ty = ev_.inst(pi->codomain, vvar(d));
      t = lam->body;
      ++d;
    }
  };

  // Postponed arguments are checked as soon as their expected type is known.
  auto flush = [&](bool all) {
    for (std::size_t i = 0; i < pending.size();) {
      const Pending& p = pending[i];
      if (!all && !ready(p.arg, p.domain)) {
        ++i;
        continue;
      }
      Pending q = p;
      pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(i));
      SourceSpan saved = current_;
      current_ = q.span;
      Term a = check(ctx, q.arg, q.domain);
      expect_conv(ctx, eval(ctx, a), eval(ctx, meta_term(ctx, q.meta)), " of argument");
      args[q.slot].first = a;
      current_ = saved;
      i = 0;
    }
  };

  for (const tm::App* app : apps) {
    flush(false);
    SpanScope s(current_, spans_, app->arg);
    while (true) {
      Value pi_forced = ev_.force(ty);
      const auto* pi = as<vl::Pi>(pi_forced);
      if (pi && pi->plicity == Plicity::Implicit && app->plicity == Plicity::Explicit) {
        insert_implicit(*pi);
        continue;
      }
      break;
    }
    Value fty = ev_.force(ty);
    const auto* pi = as<vl::Pi>(fty);
    if (!pi)
      error(code::type, "'" + show_term(ctx, mk::apps(h.term, {})) + "' is applied to too many arguments; its type here is " +
                            show(ctx, fty));
    if (pi->plicity != app->plicity)
      error(code::type, "unexpected implicit argument {" + show_term(ctx, app->arg) + "}; the function expects an explicit argument");
    if (is<tm::Hole>(app->arg)) {
      std::size_t m = fresh_meta(ctx, pi->domain, "argument '_'");
      Term mt = meta_term(ctx, m);
      args.emplace_back(mt, app->plicity);
      ty = ev_.inst(pi->codomain, eval(ctx, mt));
      continue;
    }
    if (!has_unsolved_metas(ev_, depth, pi->domain)) {
      Term a = check(ctx, app->arg, pi->domain);
      args.emplace_back(a, app->plicity);
      ty = ev_.inst(pi->codomain, eval(ctx, a));
    } else if (inferable(app->arg)) {
      Term a = check(ctx, app->arg, pi->domain);
      args.emplace_back(a, app->plicity);
      ty = ev_.inst(pi->codomain, eval(ctx, a));
    } else {
      std::size_t m = fresh_meta(ctx, pi->domain, "argument");
      Term mt = meta_term(ctx, m);
      pending.push_back(Pending{m, app->arg, pi->domain, args.size(), current_});
      args.emplace_back(mt, app->plicity);
      ty = ev_.inst(pi->codomain, eval(ctx, mt));
    }
  }

  flush(false);

  if (expected) {
    Value epi_forced = ev_.force(*expected);
    const auto* epi = as<vl::Pi>(epi_forced);
    if (!(epi && epi->plicity == Plicity::Implicit)) {
      while (true) {
        Value forced = ev_.force(ty);
        const auto* pi = as<vl::Pi>(forced);
        if (!pi || pi->plicity != Plicity::Implicit) break;
        insert_implicit(*pi);
      }
    }
    expect_conv(ctx, ty, *expected, "");
  }

  flush(true);

  Term out = h.term;
  for (const auto& [a, pl] : args) out = mk::app(out, a, pl);
  return {out, ty};
}

Term Elaborator::check_node(Context& ctx, const Term& t, const Value& type) {
  const std::size_t depth = ctx.depth();
  Value e = ev_.force(type);
  const auto* epi = as<vl::Pi>(e);
  if (epi && epi->plicity == Plicity::Implicit) {
    const auto* lam = as<tm::Lambda>(t);
    if (!(lam && lam->plicity == Plicity::Implicit)) {
      Term body;
      {
        Bind b(ctx, epi->name, epi->domain);
        body = check(ctx, shift(t, 0, 1), ev_.inst(epi->codomain, vvar(depth)));
      }
      return mk::lam(epi->name, body, Plicity::Implicit);
    }
  }
  if (const auto* lam = as<tm::Lambda>(t)) {
    if (!epi) error(code::type, "a lambda cannot have type " + show(ctx, e));
    if (lam->plicity != epi->plicity)
      error(code::type, std::string("expected an ") + (epi->plicity == Plicity::Implicit ? "implicit" : "explicit") +
                            " lambda for type " + show(ctx, e));
    if (lam->annotation) {
      Term a = check_type(ctx, lam->annotation);
      expect_conv(ctx, eval(ctx, a), epi->domain, " in lambda annotation");
    }
    Term body;
    {
      Bind b(ctx, lam->name, epi->domain);
      body = check(ctx, lam->body, ev_.inst(epi->codomain, vvar(depth)));
    }
    return mk::lam(lam->name, body, lam->plicity);
  }
  if (const auto* p = as<tm::Pair>(t)) {
    const auto* sg = as<vl::Sigma>(e);
    if (!sg) error(code::type, "a pair cannot have type " + show(ctx, e));
    Term a = check(ctx, p->fst, sg->first);
    Term b = check(ctx, p->snd, ev_.inst(sg->second, eval(ctx, a)));
    return mk::pair(a, b);
  }
  if (const auto* p = as<tm::Inl>(t)) {
    const auto* sum = as<vl::Sum>(e);
    if (!sum) error(code::type, "inl cannot have type " + show(ctx, e));
    return mk::inl(check(ctx, p->value, sum->left));
  }
  if (const auto* p = as<tm::Inr>(t)) {
    const auto* sum = as<vl::Sum>(e);
    if (!sum) error(code::type, "inr cannot have type " + show(ctx, e));
    return mk::inr(check(ctx, p->value, sum->right));
  }
  if (const auto* p = as<tm::Refl>(t); p && is<tm::Hole>(p->type)) {
    if (const auto* id = as<vl::Id>(e)) {
      Term a = check(ctx, p->point, id->type);
      Value av = eval(ctx, a);
      if (!ev_.conv(depth, av, id->lhs) || !ev_.conv(depth, av, id->rhs))
        error(code::type, "refl " + show(ctx, av) + " does not have type " + show(ctx, e) +
                              "; the endpoints are not definitionally equal");
      return mk::refl(ev_.quote(depth, id->type), a);
    }
  }
  if (is<tm::App>(t) || is<tm::Const>(t) || is<tm::Var>(t)) return spine(ctx, t, &type).term;
  if (is<tm::Hole>(t)) error(code::type, "cannot infer the value of '_' here");
  Typed r = infer(ctx, t);
  if (const auto* rf = as<tm::Refl>(r.term); rf && as<vl::Id>(e)) {
    if (!ev_.conv(depth, r.type, type))
      error(code::type, "refl " + show_term(ctx, rf->point) + " does not have type " + show(ctx, e) +
                            "; the endpoints are not definitionally equal");
  }
  expect_conv(ctx, r.type, type, "");
  return r.term;
}

Term Elaborator::finish(const Term& t, std::size_t depth) {
  std::vector<const tm::App*> spine;
  Term head = t;
  while (const auto* a = as<tm::App>(head)) {
    spine.push_back(a);
    head = a->fn;
  }
  if (const auto* m = as<tm::Meta>(head)) {
    const MetaEntry& entry = metas_.at(m->id);
    if (!entry.solution) fail(code::type, "could not infer " + entry.what + "; supply it explicitly with {..}", entry.span);
    Env env = Evaluator::identity_env(depth);
    Value v = entry.solution;
    for (std::size_t i = spine.size(); i-- > 0;)
      v = ev_.apply(v, ev_.eval(env, finish(spine[i]->arg, depth)), spine[i]->plicity);
    return finish(ev_.quote(depth, v), depth);
  }
  return map_children(t, [&](const Term& c, std::size_t bound) { return finish(c, depth + bound); });
}

Decl check_declaration(const Environment& env, const CoreDecl& d) {
  Elaborator el(env, d.spans, d.span);
  Context ctx;
  Term type = el.finish(el.check_type(ctx, d.type), 0);
  Evaluator plain(env);
  Decl out;
  out.name = d.name;
  out.levels = d.levels;
  out.kind = d.kind;
  out.type = type;
  out.type_value = plain.eval(nullptr, type);
  out.span = d.span;
  if (d.kind == DeclKind::Definition) {
    if (!d.body) throw InternalError("definition without a body");
    Term body = el.finish(el.check(ctx, d.body, out.type_value), 0);
    out.body = body;
    out.value = plain.eval(nullptr, body);
  }
  return out;
}

Environment declare(Environment env, const CoreDecl& d) {
  if (env.contains(d.name, d.levels)) fail(code::scope, "duplicate declaration of '" + d.name + "'", d.span);
  env.add(check_declaration(env, d));
  return env;
}

}  // namespace hott::kernel
