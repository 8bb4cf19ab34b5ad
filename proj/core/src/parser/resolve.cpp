#include "hott/parser/resolve.hpp"

#include <algorithm>

#include "hott/diagnostic.hpp"

namespace hott::parse {

Level eval_level(const LevelExpr& e, const LevelAssignment& levels, const SourceSpan& at) {
  if (e.var.empty()) return e.offset;
  for (const auto& [name, value] : levels)
    if (name == e.var) return value + e.offset;
  fail(code::scope, "unknown universe variable '" + e.var + "'", at);
}

namespace {

class Resolver {
 public:
  Resolver(ResolveContext& ctx, std::vector<std::string>& locals) : ctx_(ctx), locals_(locals) {}

  Term term(const STerm& s) {
    Term t = std::visit([&](const auto& n) { return node(n, *s); }, s->data);
    if (ctx_.spans) ctx_.spans->emplace(t.get(), s->span);
    return t;
  }

  Term under(const std::vector<std::string>& names, const STerm& s) {
    for (const auto& n : names) locals_.push_back(n);
    Term t = term(s);
    locals_.resize(locals_.size() - names.size());
    return t;
  }

  Term telescope(const std::vector<Binder>& bs, std::size_t i, const STerm& cod, bool pi) {
    if (i == bs.size()) return pi ? term(cod) : under({}, cod);
    const Binder& b = bs[i];
    Term dom = term(b.type);
    locals_.push_back(b.name);
    Term rest = telescope(bs, i + 1, cod, pi);
    locals_.pop_back();
    return pi ? mk::pi(b.name, dom, rest, b.plicity) : mk::sigma(b.name, dom, rest);
  }

  Term lambdas(const std::vector<Binder>& bs, std::size_t i, const STerm& body) {
    if (i == bs.size()) return term(body);
    const Binder& b = bs[i];
    Term ann = b.type ? term(b.type) : nullptr;
    locals_.push_back(b.name);
    Term rest = lambdas(bs, i + 1, body);
    locals_.pop_back();
    return mk::lam(b.name, rest, b.plicity, ann);
  }

 private:
  std::optional<std::size_t> local(const std::string& name) const {
    for (std::size_t k = locals_.size(); k-- > 0;)
      if (locals_[k] == name) return locals_.size() - 1 - k;
    return std::nullopt;
  }

  Term node(const sf::Name& n, const SurfaceNode& s) {
    if (auto idx = local(n.name)) {
      if (n.levels) fail(code::scope, "local variable '" + n.name + "' cannot take universe arguments", s.span);
      return mk::var(*idx);
    }
    auto arity = ctx_.globals.universe_arity(n.name);
    if (!arity) fail(code::scope, "unknown identifier '" + n.name + "'", s.span);
    std::vector<Level> levels(*arity, 0);
    if (n.levels) {
      if (n.levels->size() != *arity)
        fail(code::univ,
             "'" + n.name + "' takes " + std::to_string(*arity) + " universe argument(s), " +
                 std::to_string(n.levels->size()) + " given",
             s.span);
      for (std::size_t i = 0; i < *arity; ++i) levels[i] = eval_level((*n.levels)[i], ctx_.levels, s.span);
    }
    ctx_.globals.use(n.name, levels, s.span);
    return mk::constant(n.name, std::move(levels));
  }
  Term node(const sf::Universe& n, const SurfaceNode& s) {
    return mk::universe(eval_level(n.level, ctx_.levels, s.span));
  }
  Term node(const sf::Pi& n, const SurfaceNode&) { return telescope(n.binders, 0, n.codomain, true); }
  Term node(const sf::Sigma& n, const SurfaceNode&) { return telescope(n.binders, 0, n.second, false); }
  Term node(const sf::Lambda& n, const SurfaceNode&) { return lambdas(n.binders, 0, n.body); }
  Term node(const sf::App& n, const SurfaceNode&) {
    Term f = term(n.fn);
    return mk::app(f, term(n.arg), n.plicity);
  }
  Term node(const sf::Pair& n, const SurfaceNode&) {
    Term a = term(n.fst);
    return mk::pair(a, term(n.snd));
  }
  Term node(const sf::Ann& n, const SurfaceNode&) {
    Term a = term(n.term);
    return mk::ann(a, term(n.type));
  }
  Term node(const sf::Hole&, const SurfaceNode&) { return mk::hole(); }

  Term opt(const STerm& s) { return s ? term(s) : mk::hole(); }

  Term node(const sf::PrimApp& n, const SurfaceNode&) {
    const auto& a = n.args;
    switch (n.prim) {
      case Prim::Empty: return mk::empty();
      case Prim::Unit: return mk::unit();
      case Prim::Star: return mk::star();
      case Prim::Nat: return mk::nat();
      case Prim::Zero: return mk::zero();
      case Prim::Succ: return mk::succ(term(a[0]));
      case Prim::Sum: {
        Term l = term(a[0]);
        return mk::sum(l, term(a[1]));
      }
      case Prim::Inl: return mk::inl(term(a[0]));
      case Prim::Inr: return mk::inr(term(a[0]));
      case Prim::Fst: return mk::fst(term(a[0]));
      case Prim::Snd: return mk::snd(term(a[0]));
      case Prim::Id: {
        Term ty = opt(a[0]);
        Term l = term(a[1]);
        return mk::id(ty, l, term(a[2]));
      }
      case Prim::Refl: {
        Term ty = opt(a[0]);
        return mk::refl(ty, term(a[1]));
      }
      case Prim::J: {
        Term m = under(n.binder_names, a[0]);
        Term d = term(a[1]);
        Term e = term(a[2]);
        return mk::j(n.binder_names[0], n.binder_names[1], m, d, e, term(a[3]));
      }
      case Prim::EmptyElim: {
        Term m = under(n.binder_names, a[0]);
        return mk::empty_elim(n.binder_names[0], m, term(a[1]));
      }
      case Prim::UnitElim: {
        Term m = under(n.binder_names, a[0]);
        Term d = term(a[1]);
        return mk::unit_elim(n.binder_names[0], m, d, term(a[2]));
      }
      case Prim::SumElim: {
        Term m = under(n.binder_names, a[0]);
        Term l = term(a[1]);
        Term r = term(a[2]);
        return mk::sum_elim(n.binder_names[0], m, l, r, term(a[3]));
      }
      case Prim::NatElim: {
        Term m = under(n.binder_names, a[0]);
        Term z = term(a[1]);
        Term s = term(a[2]);
        return mk::nat_elim(n.binder_names[0], m, z, s, term(a[3]));
      }
    }
    throw InternalError("unknown primitive");
  }

  ResolveContext& ctx_;
  std::vector<std::string>& locals_;
};

}  // namespace

Term resolve_term(const STerm& t, ResolveContext& ctx, std::vector<std::string>& locals) {
  return Resolver(ctx, locals).term(t);
}

Term resolve_telescope(const std::vector<Binder>& params, const STerm& t, ResolveContext& ctx,
                       std::vector<std::string>& locals) {
  return Resolver(ctx, locals).telescope(params, 0, t, true);
}

ResolvedDecl resolve_decl(const SurfaceDecl& d, ResolveContext& ctx) {
  std::vector<std::string> locals;
  ResolvedDecl out;
  out.type = resolve_telescope(d.params, d.type, ctx, locals);
  if (d.body) {
    std::vector<std::string> names;
    for (const auto& b : d.params) locals.push_back(b.name);
    Term body = resolve_term(d.body, ctx, locals);
    for (std::size_t i = d.params.size(); i-- > 0;) body = mk::lam(d.params[i].name, body, d.params[i].plicity);
    out.body = body;
  }
  return out;
}

}  // namespace hott::parse
