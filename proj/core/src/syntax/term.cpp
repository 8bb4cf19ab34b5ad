#include "hott/syntax/term.hpp"

#include "hott/diagnostic.hpp"

namespace hott {

namespace {

Term node(TermNode::Data d) { return std::make_shared<const TermNode>(TermNode{std::move(d)}); }

}  // namespace

namespace mk {

Term var(std::size_t index) { return node(tm::Var{index}); }
Term universe(Level level) { return node(tm::Universe{level}); }
Term pi(std::string name, Term domain, Term codomain, Plicity p) {
  return node(tm::Pi{std::move(name), p, std::move(domain), std::move(codomain)});
}
Term arrow(Term domain, Term codomain) {
  return pi("_", std::move(domain), shift(codomain, 0, 1));
}
Term lam(std::string name, Term body, Plicity p, Term annotation) {
  return node(tm::Lambda{std::move(name), p, std::move(annotation), std::move(body)});
}
Term app(Term fn, Term arg, Plicity p) { return node(tm::App{std::move(fn), std::move(arg), p}); }
Term apps(Term fn, const std::vector<Term>& args) {
  for (const auto& a : args) fn = app(fn, a);
  return fn;
}
Term sigma(std::string name, Term first, Term second) {
  return node(tm::Sigma{std::move(name), std::move(first), std::move(second)});
}
Term pair(Term a, Term b) { return node(tm::Pair{std::move(a), std::move(b)}); }
Term fst(Term p) { return node(tm::Fst{std::move(p)}); }
Term snd(Term p) { return node(tm::Snd{std::move(p)}); }
Term id(Term type, Term lhs, Term rhs) {
  return node(tm::Id{std::move(type), std::move(lhs), std::move(rhs)});
}
Term refl(Term type, Term point) { return node(tm::Refl{std::move(type), std::move(point)}); }
Term j(std::string x, std::string p, Term motive, Term base, Term endpoint, Term path) {
  return node(tm::J{std::move(x), std::move(p), std::move(motive), std::move(base),
                    std::move(endpoint), std::move(path)});
}
Term constant(std::string name, std::vector<Level> levels) {
  return node(tm::Const{std::move(name), std::move(levels)});
}
Term empty() { return node(tm::Empty{}); }
Term empty_elim(std::string name, Term motive, Term scrutinee) {
  return node(tm::EmptyElim{std::move(name), std::move(motive), std::move(scrutinee)});
}
Term unit() { return node(tm::Unit{}); }
Term star() { return node(tm::Star{}); }
Term unit_elim(std::string name, Term motive, Term method, Term scrutinee) {
  return node(
      tm::UnitElim{std::move(name), std::move(motive), std::move(method), std::move(scrutinee)});
}
Term sum(Term a, Term b) { return node(tm::Sum{std::move(a), std::move(b)}); }
Term inl(Term v) { return node(tm::Inl{std::move(v)}); }
Term inr(Term v) { return node(tm::Inr{std::move(v)}); }
Term sum_elim(std::string name, Term motive, Term l, Term r, Term scrutinee) {
  return node(tm::SumElim{std::move(name), std::move(motive), std::move(l), std::move(r),
                          std::move(scrutinee)});
}
Term nat() { return node(tm::Nat{}); }
Term zero() { return node(tm::Zero{}); }
Term succ(Term n) { return node(tm::Succ{std::move(n)}); }
Term nat_lit(std::size_t n) {
  Term t = zero();
  for (std::size_t i = 0; i < n; ++i) t = succ(t);
  return t;
}
Term nat_elim(std::string name, Term motive, Term z, Term s, Term scrutinee) {
  return node(tm::NatElim{std::move(name), std::move(motive), std::move(z), std::move(s),
                          std::move(scrutinee)});
}
Term ann(Term t, Term type) { return node(tm::Ann{std::move(t), std::move(type)}); }
Term hole() { return node(tm::Hole{}); }
Term meta(std::size_t id) { return node(tm::Meta{id}); }

}  // namespace mk

namespace {

Term shift_at(const Term& t, std::size_t depth, std::size_t cutoff, std::ptrdiff_t amount) {
  if (const auto* v = as<tm::Var>(t)) {
    if (v->index < depth + cutoff) return t;
    auto moved = static_cast<std::ptrdiff_t>(v->index) + amount;
    if (moved < static_cast<std::ptrdiff_t>(depth + cutoff))
      throw InternalError("shift: free index underflow");
    return mk::var(static_cast<std::size_t>(moved));
  }
  return map_children(t, [&](const Term& c, std::size_t bound) {
    return shift_at(c, depth + bound, cutoff, amount);
  });
}

Term subst_at(const Term& t, std::size_t depth, std::size_t index, const Term& replacement) {
  if (const auto* v = as<tm::Var>(t)) {
    if (v->index < depth) return t;
    std::size_t free = v->index - depth;
    if (free == index) return shift(replacement, 0, static_cast<std::ptrdiff_t>(depth));
    if (free > index) return mk::var(v->index - 1);
    return t;
  }
  return map_children(t, [&](const Term& c, std::size_t bound) {
    return subst_at(c, depth + bound, index, replacement);
  });
}

Term replace0_at(const Term& t, std::size_t depth, const Term& replacement) {
  if (const auto* v = as<tm::Var>(t)) {
    if (v->index == depth) return shift(replacement, 0, static_cast<std::ptrdiff_t>(depth));
    return t;
  }
  return map_children(
      t, [&](const Term& c, std::size_t bound) { return replace0_at(c, depth + bound, replacement); });
}

bool same_levels(const std::vector<Level>& a, const std::vector<Level>& b) { return a == b; }

}  // namespace

Term shift(const Term& t, std::size_t cutoff, std::ptrdiff_t amount) {
  if (amount == 0) return t;
  return shift_at(t, 0, cutoff, amount);
}

Term substitute(const Term& t, std::size_t index, const Term& replacement) {
  return subst_at(t, 0, index, replacement);
}

Term replace_var0(const Term& t, const Term& replacement) { return replace0_at(t, 0, replacement); }

bool alpha_equal(const Term& a, const Term& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->data.index() != b->data.index()) return false;
  bool leaf_equal = std::visit(
      [&](const auto& x) -> bool {
        using N = std::decay_t<decltype(x)>;
        const auto& y = std::get<N>(b->data);
        if constexpr (std::is_same_v<N, tm::Var>) {
          return x.index == y.index;
        } else if constexpr (std::is_same_v<N, tm::Universe>) {
          return x.level == y.level;
        } else if constexpr (std::is_same_v<N, tm::Const>) {
          return x.name == y.name && same_levels(x.levels, y.levels);
        } else if constexpr (std::is_same_v<N, tm::Meta>) {
          return x.id == y.id;
        } else if constexpr (std::is_same_v<N, tm::Pi> || std::is_same_v<N, tm::Lambda> ||
                             std::is_same_v<N, tm::App>) {
          return x.plicity == y.plicity;
        } else {
          return true;
        }
      },
      a->data);
  if (!leaf_equal) return false;
  std::vector<Term> ca, cb;
  for_each_child(a, [&](const Term& c, std::size_t) { ca.push_back(c); });
  for_each_child(b, [&](const Term& c, std::size_t) { cb.push_back(c); });
  if (ca.size() != cb.size()) return false;
  for (std::size_t i = 0; i < ca.size(); ++i)
    if (!alpha_equal(ca[i], cb[i])) return false;
  return true;
}

bool well_scoped(const Term& t, std::size_t depth) {
  if (!t) return false;
  if (const auto* v = as<tm::Var>(t)) return v->index < depth;
  bool ok = true;
  for_each_child(t, [&](const Term& c, std::size_t bound) {
    if (ok && !well_scoped(c, depth + bound)) ok = false;
  });
  return ok;
}

namespace {

bool occurs_at(const Term& t, std::size_t index) {
  if (const auto* v = as<tm::Var>(t)) return v->index == index;
  bool found = false;
  for_each_child(t, [&](const Term& c, std::size_t bound) {
    if (!found && occurs_at(c, index + bound)) found = true;
  });
  return found;
}

}  // namespace

bool occurs_free(const Term& t, std::size_t index) { return occurs_at(t, index); }

std::size_t term_size(const Term& t) {
  std::size_t n = 1;
  for_each_child(t, [&](const Term& c, std::size_t) { n += term_size(c); });
  return n;
}

}  // namespace hott
