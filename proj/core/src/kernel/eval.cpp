#include "hott/kernel/eval.hpp"

#include <algorithm>

#include "hott/diagnostic.hpp"

namespace hott::kernel {

std::size_t MetaStore::fresh(Value type, std::size_t depth, SourceSpan span, std::string what) {
  entries_.push_back(MetaEntry{nullptr, std::move(type), depth, std::move(span), std::move(what)});
  return entries_.size() - 1;
}

Evaluator::Evaluator(const Environment& env, MetaStore* metas) : env_(env), metas_(metas) {}

void Evaluator::set_opaque(std::function<bool(const Decl&)> pred) {
  opaque_ = std::move(pred);
  opaque_cache_.clear();
}

Env Evaluator::identity_env(std::size_t depth) {
  Env e;
  for (std::size_t l = 0; l < depth; ++l) e = extend(e, vvar(l));
  return e;
}

Value Evaluator::const_value(const std::string& name, const std::vector<Level>& levels) const {
  DeclPtr d = env_.find(name, levels);
  if (!d) throw InternalError("evaluation reached unknown constant " + instance_key(name, levels));
  if (d->kind == DeclKind::Definition) {
    if (!opaque_) return d->value;
    if (!opaque_(*d)) {
      auto it = opaque_cache_.find(d.get());
      if (it != opaque_cache_.end()) return it->second;
      Value v = eval(nullptr, d->body);
      opaque_cache_.emplace(d.get(), v);
      return v;
    }
  }
  return make_value(vl::Neutral{hd::Const{d}, {}});
}

Value Evaluator::eval(const Env& env, const Term& t) const {
  return std::visit(
      [&](const auto& n) -> Value {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, tm::Var>) {
          return lookup(env, n.index);
        } else if constexpr (std::is_same_v<N, tm::Universe>) {
          return vuniverse(n.level);
        } else if constexpr (std::is_same_v<N, tm::Pi>) {
          return make_value(vl::Pi{n.name, n.plicity, eval(env, n.domain), Closure{env, n.codomain}});
        } else if constexpr (std::is_same_v<N, tm::Lambda>) {
          return make_value(vl::Lambda{n.name, n.plicity, Closure{env, n.body}});
        } else if constexpr (std::is_same_v<N, tm::App>) {
          return apply(eval(env, n.fn), eval(env, n.arg), n.plicity);
        } else if constexpr (std::is_same_v<N, tm::Sigma>) {
          return make_value(vl::Sigma{n.name, eval(env, n.first), Closure{env, n.second}});
        } else if constexpr (std::is_same_v<N, tm::Pair>) {
          return make_value(vl::Pair{eval(env, n.fst), eval(env, n.snd)});
        } else if constexpr (std::is_same_v<N, tm::Fst>) {
          return fst(eval(env, n.pair));
        } else if constexpr (std::is_same_v<N, tm::Snd>) {
          return snd(eval(env, n.pair));
        } else if constexpr (std::is_same_v<N, tm::Id>) {
          return make_value(vl::Id{eval(env, n.type), eval(env, n.lhs), eval(env, n.rhs)});
        } else if constexpr (std::is_same_v<N, tm::Refl>) {
          return make_value(vl::Refl{eval(env, n.type), eval(env, n.point)});
        } else if constexpr (std::is_same_v<N, tm::J>) {
          el::J e{n.endpoint_name, n.path_name, Closure{env, n.motive}, eval(env, n.base),
                  eval(env, n.endpoint)};
          return j(e, eval(env, n.path));
        } else if constexpr (std::is_same_v<N, tm::Const>) {
          return const_value(n.name, n.levels);
        } else if constexpr (std::is_same_v<N, tm::Empty>) {
          return make_value(vl::Empty{});
        } else if constexpr (std::is_same_v<N, tm::EmptyElim>) {
          Value s = force(eval(env, n.scrutinee));
          if (!as<vl::Neutral>(s)) throw InternalError("empty-elim on a non-neutral value");
          return apply_elim(s, el::EmptyElim{n.name, Closure{env, n.motive}});
        } else if constexpr (std::is_same_v<N, tm::Unit>) {
          return make_value(vl::Unit{});
        } else if constexpr (std::is_same_v<N, tm::Star>) {
          return make_value(vl::Star{});
        } else if constexpr (std::is_same_v<N, tm::UnitElim>) {
          Value s = force(eval(env, n.scrutinee));
          Value m = eval(env, n.method);
          if (as<vl::Star>(s)) return m;
          return apply_elim(s, el::UnitElim{n.name, Closure{env, n.motive}, m});
        } else if constexpr (std::is_same_v<N, tm::Sum>) {
          return make_value(vl::Sum{eval(env, n.left), eval(env, n.right)});
        } else if constexpr (std::is_same_v<N, tm::Inl>) {
          return make_value(vl::Inl{eval(env, n.value)});
        } else if constexpr (std::is_same_v<N, tm::Inr>) {
          return make_value(vl::Inr{eval(env, n.value)});
        } else if constexpr (std::is_same_v<N, tm::SumElim>) {
          Value s = force(eval(env, n.scrutinee));
          Value l = eval(env, n.on_left);
          Value r = eval(env, n.on_right);
          if (const auto* a = as<vl::Inl>(s)) return apply(l, a->value);
          if (const auto* b = as<vl::Inr>(s)) return apply(r, b->value);
          return apply_elim(s, el::SumElim{n.name, Closure{env, n.motive}, l, r});
        } else if constexpr (std::is_same_v<N, tm::Nat>) {
          return make_value(vl::Nat{});
        } else if constexpr (std::is_same_v<N, tm::Zero>) {
          return make_value(vl::Zero{});
        } else if constexpr (std::is_same_v<N, tm::Succ>) {
          return make_value(vl::Succ{eval(env, n.pred)});
        } else if constexpr (std::is_same_v<N, tm::NatElim>) {
          el::NatElim e{n.name, Closure{env, n.motive}, eval(env, n.on_zero), eval(env, n.on_succ)};
          return nat_elim(e, eval(env, n.scrutinee));
        } else if constexpr (std::is_same_v<N, tm::Ann>) {
          return eval(env, n.term);
        } else if constexpr (std::is_same_v<N, tm::Meta>) {
          return force(make_value(vl::Neutral{hd::Meta{n.id}, {}}));
        } else {
          throw InternalError("evaluation reached a hole");
        }
      },
      t->data);
}

Value Evaluator::inst(const Closure& c, const Value& v) const { return eval(extend(c.env, v), c.body); }

Value Evaluator::inst2(const Closure& c, const Value& v1, const Value& v2) const {
  return eval(extend(extend(c.env, v1), v2), c.body);
}

Value Evaluator::apply(const Value& f, const Value& arg, Plicity p) const {
  Value fv = force(f);
  if (const auto* l = as<vl::Lambda>(fv)) return inst(l->body, arg);
  if (as<vl::Neutral>(fv)) return apply_elim(fv, el::App{arg, p});
  throw InternalError("application of a non-function value");
}

Value Evaluator::fst(const Value& v) const {
  Value f = force(v);
  if (const auto* p = as<vl::Pair>(f)) return p->fst;
  if (as<vl::Neutral>(f)) return apply_elim(f, el::Fst{});
  throw InternalError("first projection of a non-pair value");
}

Value Evaluator::snd(const Value& v) const {
  Value f = force(v);
  if (const auto* p = as<vl::Pair>(f)) return p->snd;
  if (as<vl::Neutral>(f)) return apply_elim(f, el::Snd{});
  throw InternalError("second projection of a non-pair value");
}

Value Evaluator::j(const el::J& e, const Value& path) const {
  Value p = force(path);
  if (as<vl::Refl>(p)) return e.base;
  if (as<vl::Neutral>(p)) return apply_elim(p, e);
  throw InternalError("J applied to a non-path value");
}

Value Evaluator::nat_elim(const el::NatElim& e, const Value& n) const {
  Value v = force(n);
  if (as<vl::Zero>(v)) return e.on_zero;
  if (const auto* s = as<vl::Succ>(v)) return apply(apply(e.on_succ, s->pred), nat_elim(e, s->pred));
  if (as<vl::Neutral>(v)) return apply_elim(v, e);
  throw InternalError("natrec on a non-natural value");
}

Value Evaluator::apply_elim(const Value& head, const Elim& e) const {
  const auto* n = as<vl::Neutral>(head);
  if (!n) throw InternalError("elimination of a non-neutral value");
  vl::Neutral out{n->head, n->spine};
  out.spine.push_back(e);
  if (const auto* c = std::get_if<hd::Const>(&out.head)) {
    const Decl& d = *c->decl;
    if (d.kind == DeclKind::HitEliminator && out.spine.size() == d.arity) {
      if (Value r = reduce_hit_elim(*c, out.spine)) return r;
    }
  }
  return make_value(std::move(out));
}

Value Evaluator::reduce_hit_elim(const hd::Const& head, const std::vector<Elim>& spine) const {
  const Decl& elim = *head.decl;
  const auto* last = std::get_if<el::App>(&spine.back());
  if (!last) return nullptr;
  Value scrut = force(last->arg);
  const auto* sn = as<vl::Neutral>(scrut);
  if (!sn) return nullptr;
  const auto* sc = std::get_if<hd::Const>(&sn->head);
  if (!sc || sc->decl->kind != DeclKind::PointCtor || sc->decl->hit != elim.hit) return nullptr;
  const Decl& ctor = *sc->decl;
  if (sn->spine.size() != ctor.arity) return nullptr;
  const HitSignature* sig = env_.hit(elim.hit);
  if (!sig) throw InternalError("eliminator of unknown HIT " + elim.hit);
  std::size_t np = sig->num_params;
  const HitCtorInfo& info = sig->ctors.at(ctor.ctor_index);
  const auto* method = std::get_if<el::App>(&spine.at(np + 1 + ctor.ctor_index));
  if (!method) throw InternalError("malformed eliminator spine");

  Value partial = make_value(vl::Neutral{head, std::vector<Elim>(spine.begin(), spine.end() - 1)});
  Value result = method->arg;
  std::vector<Value> recursive;
  for (std::size_t k = np; k < sn->spine.size(); ++k) {
    const auto* a = std::get_if<el::App>(&sn->spine[k]);
    if (!a) return nullptr;
    result = apply(result, a->arg, a->plicity);
    const HitArg& arg = info.args.at(k - np);
    if (arg.kind == ArgKind::Recursive) {
      recursive.push_back(apply(partial, a->arg));
    } else if (arg.kind == ArgKind::RecursiveFunction) {
      // \y1 .. yq. partial (a y1 .. yq), evaluated with a at index q and the
      // partial eliminator at index q + 1 under the q binders.
      std::size_t q = arg.function_arity;
      Term inner = mk::var(q);
      for (std::size_t i = 0; i < q; ++i) inner = mk::app(inner, mk::var(q - 1 - i));
      Term body = mk::app(mk::var(q + 1), inner);
      for (std::size_t i = 0; i < q; ++i) body = mk::lam("y", body);
      recursive.push_back(eval(extend(extend(nullptr, partial), a->arg), body));
    }
  }
  for (const auto& r : recursive) result = apply(result, r);
  return result;
}

Value Evaluator::elim_value(const Value& v, const Elim& e) const {
  return std::visit(
      [&](const auto& x) -> Value {
        using E = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<E, el::App>) {
          return apply(v, x.arg, x.plicity);
        } else if constexpr (std::is_same_v<E, el::Fst>) {
          return fst(v);
        } else if constexpr (std::is_same_v<E, el::Snd>) {
          return snd(v);
        } else if constexpr (std::is_same_v<E, el::J>) {
          return j(x, v);
        } else if constexpr (std::is_same_v<E, el::NatElim>) {
          return nat_elim(x, v);
        } else if constexpr (std::is_same_v<E, el::UnitElim>) {
          Value s = force(v);
          if (as<vl::Star>(s)) return x.method;
          return apply_elim(s, x);
        } else if constexpr (std::is_same_v<E, el::SumElim>) {
          Value s = force(v);
          if (const auto* a = as<vl::Inl>(s)) return apply(x.on_left, a->value);
          if (const auto* b = as<vl::Inr>(s)) return apply(x.on_right, b->value);
          return apply_elim(s, x);
        } else {
          return apply_elim(force(v), x);
        }
      },
      e);
}

Value Evaluator::force(const Value& v) const {
  const auto* n = as<vl::Neutral>(v);
  if (!n || !metas_) return v;
  const auto* m = std::get_if<hd::Meta>(&n->head);
  if (!m) return v;
  const Value& sol = metas_->at(m->id).solution;
  if (!sol) return v;
  Value r = sol;
  for (const auto& e : n->spine) r = elim_value(r, e);
  return force(r);
}

// --- read-back ---------------------------------------------------------------

Term Evaluator::quote(std::size_t depth, const Value& v) const {
  Value f = force(v);
  return std::visit(
      [&](const auto& n) -> Term {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, vl::Universe>) {
          return mk::universe(n.level);
        } else if constexpr (std::is_same_v<N, vl::Pi>) {
          return mk::pi(n.name, quote(depth, n.domain), quote(depth + 1, inst(n.codomain, vvar(depth))),
                        n.plicity);
        } else if constexpr (std::is_same_v<N, vl::Lambda>) {
          return mk::lam(n.name, quote(depth + 1, inst(n.body, vvar(depth))), n.plicity);
        } else if constexpr (std::is_same_v<N, vl::Sigma>) {
          return mk::sigma(n.name, quote(depth, n.first), quote(depth + 1, inst(n.second, vvar(depth))));
        } else if constexpr (std::is_same_v<N, vl::Pair>) {
          return mk::pair(quote(depth, n.fst), quote(depth, n.snd));
        } else if constexpr (std::is_same_v<N, vl::Id>) {
          return mk::id(quote(depth, n.type), quote(depth, n.lhs), quote(depth, n.rhs));
        } else if constexpr (std::is_same_v<N, vl::Refl>) {
          return mk::refl(quote(depth, n.type), quote(depth, n.point));
        } else if constexpr (std::is_same_v<N, vl::Empty>) {
          return mk::empty();
        } else if constexpr (std::is_same_v<N, vl::Unit>) {
          return mk::unit();
        } else if constexpr (std::is_same_v<N, vl::Star>) {
          return mk::star();
        } else if constexpr (std::is_same_v<N, vl::Sum>) {
          return mk::sum(quote(depth, n.left), quote(depth, n.right));
        } else if constexpr (std::is_same_v<N, vl::Inl>) {
          return mk::inl(quote(depth, n.value));
        } else if constexpr (std::is_same_v<N, vl::Inr>) {
          return mk::inr(quote(depth, n.value));
        } else if constexpr (std::is_same_v<N, vl::Nat>) {
          return mk::nat();
        } else if constexpr (std::is_same_v<N, vl::Zero>) {
          return mk::zero();
        } else if constexpr (std::is_same_v<N, vl::Succ>) {
          return mk::succ(quote(depth, n.pred));
        } else {
          return quote_neutral(depth, n);
        }
      },
      f->data);
}

Term Evaluator::quote_neutral(std::size_t depth, const vl::Neutral& n) const {
  Term acc = std::visit(
      [&](const auto& h) -> Term {
        using H = std::decay_t<decltype(h)>;
        if constexpr (std::is_same_v<H, hd::Var>) {
          if (h.level >= depth) throw InternalError("read-back of a variable outside its scope");
          return mk::var(depth - 1 - h.level);
        } else if constexpr (std::is_same_v<H, hd::Const>) {
          return mk::constant(h.decl->name, h.decl->levels);
        } else {
          return mk::meta(h.id);
        }
      },
      n.head);
  auto motive1 = [&](const Closure& c) { return quote(depth + 1, inst(c, vvar(depth))); };
  for (const auto& e : n.spine) {
    acc = std::visit(
        [&](const auto& x) -> Term {
          using E = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<E, el::App>) {
            return mk::app(acc, quote(depth, x.arg), x.plicity);
          } else if constexpr (std::is_same_v<E, el::Fst>) {
            return mk::fst(acc);
          } else if constexpr (std::is_same_v<E, el::Snd>) {
            return mk::snd(acc);
          } else if constexpr (std::is_same_v<E, el::J>) {
            Term m = quote(depth + 2, inst2(x.motive, vvar(depth), vvar(depth + 1)));
            return mk::j(x.endpoint_name, x.path_name, m, quote(depth, x.base), quote(depth, x.endpoint),
                         acc);
          } else if constexpr (std::is_same_v<E, el::EmptyElim>) {
            return mk::empty_elim(x.name, motive1(x.motive), acc);
          } else if constexpr (std::is_same_v<E, el::UnitElim>) {
            return mk::unit_elim(x.name, motive1(x.motive), quote(depth, x.method), acc);
          } else if constexpr (std::is_same_v<E, el::SumElim>) {
            return mk::sum_elim(x.name, motive1(x.motive), quote(depth, x.on_left),
                                quote(depth, x.on_right), acc);
          } else {
            return mk::nat_elim(x.name, motive1(x.motive), quote(depth, x.on_zero),
                                quote(depth, x.on_succ), acc);
          }
        },
        e);
  }
  return acc;
}

// --- conversion ----------------------------------------------------------------

namespace {

bool same_head(const Head& a, const Head& b) {
  if (a.index() != b.index()) return false;
  if (const auto* x = std::get_if<hd::Var>(&a)) return x->level == std::get<hd::Var>(b).level;
  if (const auto* x = std::get_if<hd::Meta>(&a)) return x->id == std::get<hd::Meta>(b).id;
  const Decl& da = *std::get<hd::Const>(a).decl;
  const Decl& db = *std::get<hd::Const>(b).decl;
  return &da == &db || (da.name == db.name && da.levels == db.levels);
}

const vl::Neutral* unsolved_meta(const Value& v) {
  const auto* n = as<vl::Neutral>(v);
  if (n && std::holds_alternative<hd::Meta>(n->head)) return n;
  return nullptr;
}

}  // namespace

bool Evaluator::conv_closure(std::size_t depth, const Closure& a, const Closure& b) const {
  return conv(depth + 1, inst(a, vvar(depth)), inst(b, vvar(depth)));
}

bool Evaluator::conv(std::size_t depth, const Value& av, const Value& bv) const {
  Value a = force(av);
  Value b = force(bv);
  if (a == b) return true;
  if (metas_) {
    const auto* ma = unsolved_meta(a);
    const auto* mb = unsolved_meta(b);
    if (ma && mb && same_head(ma->head, mb->head)) return conv_spine(depth, ma->spine, mb->spine);
    if (ma && solve(depth, *ma, b)) return true;
    if (mb && solve(depth, *mb, a)) return true;
    if (ma && solve_first(depth, *ma, b)) return true;
    if (mb && solve_first(depth, *mb, a)) return true;
    if (ma || mb) return false;
  }
  if (const auto* la = as<vl::Lambda>(a)) {
    Value x = vvar(depth);
    return conv(depth + 1, inst(la->body, x), apply(b, x, la->plicity));
  }
  if (const auto* lb = as<vl::Lambda>(b)) {
    Value x = vvar(depth);
    return conv(depth + 1, apply(a, x, lb->plicity), inst(lb->body, x));
  }
  if (as<vl::Pair>(a) || as<vl::Pair>(b)) {
    bool ok_a = as<vl::Pair>(a) || as<vl::Neutral>(a);
    bool ok_b = as<vl::Pair>(b) || as<vl::Neutral>(b);
    if (!ok_a || !ok_b) return false;
    return conv(depth, fst(a), fst(b)) && conv(depth, snd(a), snd(b));
  }
  if (a->data.index() != b->data.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using N = std::decay_t<decltype(x)>;
        const auto& y = std::get<N>(b->data);
        if constexpr (std::is_same_v<N, vl::Universe>) {
          return x.level == y.level;
        } else if constexpr (std::is_same_v<N, vl::Pi>) {
          return x.plicity == y.plicity && conv(depth, x.domain, y.domain) &&
                 conv_closure(depth, x.codomain, y.codomain);
        } else if constexpr (std::is_same_v<N, vl::Sigma>) {
          return conv(depth, x.first, y.first) && conv_closure(depth, x.second, y.second);
        } else if constexpr (std::is_same_v<N, vl::Id>) {
          return conv(depth, x.type, y.type) && conv(depth, x.lhs, y.lhs) && conv(depth, x.rhs, y.rhs);
        } else if constexpr (std::is_same_v<N, vl::Refl>) {
          return conv(depth, x.point, y.point);
        } else if constexpr (std::is_same_v<N, vl::Sum>) {
          return conv(depth, x.left, y.left) && conv(depth, x.right, y.right);
        } else if constexpr (std::is_same_v<N, vl::Inl> || std::is_same_v<N, vl::Inr>) {
          return conv(depth, x.value, y.value);
        } else if constexpr (std::is_same_v<N, vl::Succ>) {
          return conv(depth, x.pred, y.pred);
        } else if constexpr (std::is_same_v<N, vl::Neutral>) {
          return same_head(x.head, y.head) && conv_spine(depth, x.spine, y.spine);
        } else if constexpr (std::is_same_v<N, vl::Lambda> || std::is_same_v<N, vl::Pair>) {
          return false;  // handled above
        } else {
          return true;  // nullary formers and constructors
        }
      },
      a->data);
}

bool Evaluator::conv_spine(std::size_t depth, const std::vector<Elim>& as_, const std::vector<Elim>& bs) const {
  if (as_.size() != bs.size()) return false;
  for (std::size_t i = 0; i < as_.size(); ++i) {
    const Elim& ea = as_[i];
    const Elim& eb = bs[i];
    if (ea.index() != eb.index()) return false;
    bool ok = std::visit(
        [&](const auto& x) -> bool {
          using E = std::decay_t<decltype(x)>;
          const auto& y = std::get<E>(eb);
          if constexpr (std::is_same_v<E, el::App>) {
            return conv(depth, x.arg, y.arg);
          } else if constexpr (std::is_same_v<E, el::J>) {
            return conv(depth + 2, inst2(x.motive, vvar(depth), vvar(depth + 1)),
                        inst2(y.motive, vvar(depth), vvar(depth + 1))) &&
                   conv(depth, x.base, y.base) && conv(depth, x.endpoint, y.endpoint);
          } else if constexpr (std::is_same_v<E, el::EmptyElim>) {
            return conv_closure(depth, x.motive, y.motive);
          } else if constexpr (std::is_same_v<E, el::UnitElim>) {
            return conv_closure(depth, x.motive, y.motive) && conv(depth, x.method, y.method);
          } else if constexpr (std::is_same_v<E, el::SumElim>) {
            return conv_closure(depth, x.motive, y.motive) && conv(depth, x.on_left, y.on_left) &&
                   conv(depth, x.on_right, y.on_right);
          } else if constexpr (std::is_same_v<E, el::NatElim>) {
            return conv_closure(depth, x.motive, y.motive) && conv(depth, x.on_zero, y.on_zero) &&
                   conv(depth, x.on_succ, y.on_succ);
          } else {
            return true;
          }
        },
        ea);
    if (!ok) return false;
  }
  return true;
}

// Solves `?m x1 .. xn == rhs` when the xi are distinct variables bound after
// the metavariable was created (the pattern fragment; n = 0 is plain
// first-order matching).
bool Evaluator::solve(std::size_t depth, const vl::Neutral& meta, const Value& rhs) const {
  std::size_t id = std::get<hd::Meta>(meta.head).id;
  std::vector<std::size_t> arg_levels;
  std::vector<Plicity> plicities;
  for (const auto& e : meta.spine) {
    const auto* a = std::get_if<el::App>(&e);
    if (!a) return false;
    Value arg = force(a->arg);
    const auto* n = as<vl::Neutral>(arg);
    if (!n || !n->spine.empty()) return false;
    const auto* v = std::get_if<hd::Var>(&n->head);
    if (!v) return false;
    if (std::find(arg_levels.begin(), arg_levels.end(), v->level) != arg_levels.end()) return false;
    arg_levels.push_back(v->level);
    plicities.push_back(a->plicity);
  }
  Term r;
  try {
    r = quote(depth, rhs);
  } catch (const InternalError&) {
    return false;
  }
  std::size_t n = arg_levels.size();
  std::size_t target = n;
  bool ok = true;
  std::function<Term(const Term&, std::size_t)> rename = [&](const Term& t, std::size_t bound) -> Term {
    if (!ok) return t;
    if (const auto* mv = as<tm::Meta>(t)) {
      if (mv->id == id) ok = false;
      return t;
    }
    if (const auto* v = as<tm::Var>(t)) {
      if (v->index < bound) return t;
      std::size_t level = depth - 1 - (v->index - bound);
      auto it = std::find(arg_levels.begin(), arg_levels.end(), level);
      if (it == arg_levels.end()) {
        ok = false;
        return t;
      }
      std::size_t new_level = static_cast<std::size_t>(it - arg_levels.begin());
      return mk::var(target - 1 - new_level + bound);
    }
    return map_children(t, [&](const Term& c, std::size_t b) { return rename(c, bound + b); });
  };
  Term body = rename(r, 0);
  if (!ok) return false;
  for (std::size_t i = n; i-- > 0;) body = mk::lam("x", body, plicities[i]);
  metas_->solve(id, eval(nullptr, body));
  return true;
}

// Solves `fst (?m x0 .. xk) == rhs`, where ?m ranges over a Sigma type and is
// applied to its whole creation context, by ?m := (rhs, ?n x0 .. xk).
bool Evaluator::solve_first(std::size_t depth, const vl::Neutral& meta, const Value& rhs) const {
  if (meta.spine.empty() || !std::holds_alternative<el::Fst>(meta.spine.back())) return false;
  std::size_t id = std::get<hd::Meta>(meta.head).id;
  const MetaEntry& entry = metas_->at(id);
  std::size_t k = meta.spine.size() - 1;
  if (k != entry.depth) return false;
  std::vector<Elim> args(meta.spine.begin(), meta.spine.end() - 1);
  for (std::size_t i = 0; i < k; ++i) {
    const auto* a = std::get_if<el::App>(&args[i]);
    if (!a) return false;
    Value arg = force(a->arg);
    const auto* n = as<vl::Neutral>(arg);
    if (!n || !n->spine.empty()) return false;
    const auto* v = std::get_if<hd::Var>(&n->head);
    if (!v || v->level != i) return false;
  }
  Value type = force(entry.type);
  const auto* sg = as<vl::Sigma>(type);
  if (!sg) return false;
  if (has_unsolved_metas(*this, depth, rhs)) return false;
  std::size_t second = metas_->fresh(inst(sg->second, rhs), k, entry.span, entry.what);
  Value rest = make_value(vl::Neutral{hd::Meta{second}, args});
  vl::Neutral head{meta.head, args};
  return solve(depth, head, make_value(vl::Pair{rhs, rest}));
}

bool is_unsolved_meta(const Evaluator& ev, const Value& v) { return unsolved_meta(ev.force(v)) != nullptr; }

bool term_has_metas(const Term& t) {
  if (as<tm::Meta>(t)) return true;
  bool found = false;
  for_each_child(t, [&](const Term& c, std::size_t) {
    if (!found && term_has_metas(c)) found = true;
  });
  return found;
}

bool has_unsolved_metas(const Evaluator& ev, std::size_t depth, const Value& v) {
  if (!ev.metas()) return false;
  return term_has_metas(ev.quote(depth, v));
}

}  // namespace hott::kernel
