#pragma once

#include <type_traits>

namespace hott {

namespace detail {

template <class F>
struct ChildMapper {
  F& f;
  bool changed = false;

  Term operator()(const Term& child, std::size_t bound) {
    if (!child) return child;
    Term out = f(child, bound);
    if (out != child) changed = true;
    return out;
  }
};

}  // namespace detail

template <class F>
Term map_children(const Term& t, F&& f) {
  detail::ChildMapper<std::remove_reference_t<F>> m{f};
  TermNode::Data out = std::visit(
      [&](const auto& n) -> TermNode::Data {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, tm::Pi>) {
          return tm::Pi{n.name, n.plicity, m(n.domain, 0), m(n.codomain, 1)};
        } else if constexpr (std::is_same_v<N, tm::Lambda>) {
          return tm::Lambda{n.name, n.plicity, m(n.annotation, 0), m(n.body, 1)};
        } else if constexpr (std::is_same_v<N, tm::App>) {
          return tm::App{m(n.fn, 0), m(n.arg, 0), n.plicity};
        } else if constexpr (std::is_same_v<N, tm::Sigma>) {
          return tm::Sigma{n.name, m(n.first, 0), m(n.second, 1)};
        } else if constexpr (std::is_same_v<N, tm::Pair>) {
          return tm::Pair{m(n.fst, 0), m(n.snd, 0)};
        } else if constexpr (std::is_same_v<N, tm::Fst>) {
          return tm::Fst{m(n.pair, 0)};
        } else if constexpr (std::is_same_v<N, tm::Snd>) {
          return tm::Snd{m(n.pair, 0)};
        } else if constexpr (std::is_same_v<N, tm::Id>) {
          return tm::Id{m(n.type, 0), m(n.lhs, 0), m(n.rhs, 0)};
        } else if constexpr (std::is_same_v<N, tm::Refl>) {
          return tm::Refl{m(n.type, 0), m(n.point, 0)};
        } else if constexpr (std::is_same_v<N, tm::J>) {
          return tm::J{n.endpoint_name, n.path_name, m(n.motive, 2), m(n.base, 0), m(n.endpoint, 0),
                       m(n.path, 0)};
        } else if constexpr (std::is_same_v<N, tm::EmptyElim>) {
          return tm::EmptyElim{n.name, m(n.motive, 1), m(n.scrutinee, 0)};
        } else if constexpr (std::is_same_v<N, tm::UnitElim>) {
          return tm::UnitElim{n.name, m(n.motive, 1), m(n.method, 0), m(n.scrutinee, 0)};
        } else if constexpr (std::is_same_v<N, tm::Sum>) {
          return tm::Sum{m(n.left, 0), m(n.right, 0)};
        } else if constexpr (std::is_same_v<N, tm::Inl>) {
          return tm::Inl{m(n.value, 0)};
        } else if constexpr (std::is_same_v<N, tm::Inr>) {
          return tm::Inr{m(n.value, 0)};
        } else if constexpr (std::is_same_v<N, tm::SumElim>) {
          return tm::SumElim{n.name, m(n.motive, 1), m(n.on_left, 0), m(n.on_right, 0),
                             m(n.scrutinee, 0)};
        } else if constexpr (std::is_same_v<N, tm::Succ>) {
          return tm::Succ{m(n.pred, 0)};
        } else if constexpr (std::is_same_v<N, tm::NatElim>) {
          return tm::NatElim{n.name, m(n.motive, 1), m(n.on_zero, 0), m(n.on_succ, 0),
                             m(n.scrutinee, 0)};
        } else if constexpr (std::is_same_v<N, tm::Ann>) {
          return tm::Ann{m(n.term, 0), m(n.type, 0)};
        } else {
          return n;
        }
      },
      t->data);
  if (!m.changed) return t;
  return std::make_shared<const TermNode>(TermNode{std::move(out)});
}

template <class F>
void for_each_child(const Term& t, F&& f) {
  auto c = [&](const Term& child, std::size_t bound) {
    if (child) f(child, bound);
  };
  std::visit(
      [&](const auto& n) {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, tm::Pi>) {
          c(n.domain, 0);
          c(n.codomain, 1);
        } else if constexpr (std::is_same_v<N, tm::Lambda>) {
          c(n.annotation, 0);
          c(n.body, 1);
        } else if constexpr (std::is_same_v<N, tm::App>) {
          c(n.fn, 0);
          c(n.arg, 0);
        } else if constexpr (std::is_same_v<N, tm::Sigma>) {
          c(n.first, 0);
          c(n.second, 1);
        } else if constexpr (std::is_same_v<N, tm::Pair>) {
          c(n.fst, 0);
          c(n.snd, 0);
        } else if constexpr (std::is_same_v<N, tm::Fst>) {
          c(n.pair, 0);
        } else if constexpr (std::is_same_v<N, tm::Snd>) {
          c(n.pair, 0);
        } else if constexpr (std::is_same_v<N, tm::Id>) {
          c(n.type, 0);
          c(n.lhs, 0);
          c(n.rhs, 0);
        } else if constexpr (std::is_same_v<N, tm::Refl>) {
          c(n.type, 0);
          c(n.point, 0);
        } else if constexpr (std::is_same_v<N, tm::J>) {
          c(n.motive, 2);
          c(n.base, 0);
          c(n.endpoint, 0);
          c(n.path, 0);
        } else if constexpr (std::is_same_v<N, tm::EmptyElim>) {
          c(n.motive, 1);
          c(n.scrutinee, 0);
        } else if constexpr (std::is_same_v<N, tm::UnitElim>) {
          c(n.motive, 1);
          c(n.method, 0);
          c(n.scrutinee, 0);
        } else if constexpr (std::is_same_v<N, tm::Sum>) {
          c(n.left, 0);
          c(n.right, 0);
        } else if constexpr (std::is_same_v<N, tm::Inl>) {
          c(n.value, 0);
        } else if constexpr (std::is_same_v<N, tm::Inr>) {
          c(n.value, 0);
        } else if constexpr (std::is_same_v<N, tm::SumElim>) {
          c(n.motive, 1);
          c(n.on_left, 0);
          c(n.on_right, 0);
          c(n.scrutinee, 0);
        } else if constexpr (std::is_same_v<N, tm::Succ>) {
          c(n.pred, 0);
        } else if constexpr (std::is_same_v<N, tm::NatElim>) {
          c(n.motive, 1);
          c(n.on_zero, 0);
          c(n.on_succ, 0);
          c(n.scrutinee, 0);
        } else if constexpr (std::is_same_v<N, tm::Ann>) {
          c(n.term, 0);
          c(n.type, 0);
        }
      },
      t->data);
}

}  // namespace hott
