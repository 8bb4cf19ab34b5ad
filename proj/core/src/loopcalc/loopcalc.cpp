#include "hott/loopcalc/loopcalc.hpp"

#include <algorithm>
#include <vector>

#include "hott/diagnostic.hpp"
#include "hott/kernel/elaborate.hpp"
#include "hott/kernel/eval.hpp"

namespace hott::loopcalc {

namespace word {
LoopWord refl() { return std::make_shared<const LoopWordNode>(LoopWordNode{lw::Refl{}}); }
LoopWord loop() { return std::make_shared<const LoopWordNode>(LoopWordNode{lw::Loop{}}); }
LoopWord inverse(LoopWord w) { return std::make_shared<const LoopWordNode>(LoopWordNode{lw::Inverse{std::move(w)}}); }
LoopWord concat(LoopWord a, LoopWord b) {
  return std::make_shared<const LoopWordNode>(LoopWordNode{lw::Concat{std::move(a), std::move(b)}});
}
}  // namespace word

namespace {

const std::string kCircle = "S1";
const std::string kBase = "base";
const std::string kLoop = "loop";
const std::string kConcat = "concat";
const std::string kInv = "inv";

struct Spine {
  Term head;
  std::vector<Term> args;
};

Spine decompose(const Term& t) {
  Spine s;
  Term cur = t;
  while (const auto* a = as<tm::App>(cur)) {
    s.args.push_back(a->arg);
    cur = a->fn;
  }
  s.head = cur;
  std::reverse(s.args.begin(), s.args.end());
  return s;
}

class Recognizer {
 public:
  Recognizer(const kernel::Environment& env, SourceSpan at) : env_(env), at_(std::move(at)) {}

  LoopWord word(const Term& t) {
    if (const auto* r = as<tm::Refl>(t)) {
      if (is_const(r->point, kBase, kernel::DeclKind::PointCtor)) return word::refl();
      reject("refl of a point other than base");
    }
    Spine s = decompose(t);
    const auto* c = as<tm::Const>(s.head);
    if (!c) reject(describe(s.head));
    if (is_global(*c, kLoop, kernel::DeclKind::PathCtor) && s.args.empty()) return word::loop();
    if (is_global(*c, kConcat, kernel::DeclKind::Definition) && s.args.size() == 6)
      return word::concat(word(s.args[4]), word(s.args[5]));
    if (is_global(*c, kInv, kernel::DeclKind::Definition) && s.args.size() == 4) return word::inverse(word(s.args[3]));
    reject("'" + c->name + "'");
  }

 private:
  bool is_global(const tm::Const& c, const std::string& name, kernel::DeclKind kind) const {
    if (c.name != name) return false;
    kernel::DeclPtr d = env_.find(c.name, c.levels);
    if (!d || d->kind != kind) return false;
    if (kind == kernel::DeclKind::PathCtor || kind == kernel::DeclKind::PointCtor) return d->hit == kCircle;
    return c.levels == std::vector<Level>{0};
  }

  bool is_const(const Term& t, const std::string& name, kernel::DeclKind kind) const {
    const auto* c = as<tm::Const>(t);
    return c && is_global(*c, name, kind);
  }

  static std::string describe(const Term& t) {
    if (is<tm::J>(t)) return "J";
    if (is<tm::Var>(t)) return "a variable";
    if (is<tm::Lambda>(t)) return "a lambda";
    if (is<tm::Meta>(t)) return "a metavariable";
    return "a non-path term";
  }

  [[noreturn]] void reject(const std::string& what) const {
    fail(code::loopform, "loop term is not built from loop, inv, concat and refl: found " + what, at_);
  }

  const kernel::Environment& env_;
  SourceSpan at_;
};

}  // namespace

LoopWord recognize(const Term& t, const kernel::Environment& env, const SourceSpan& at) {
  kernel::DeclPtr circle = env.find(kCircle, {});
  kernel::DeclPtr base = env.find(kBase, {});
  if (!circle || circle->kind != kernel::DeclKind::HitType || !base || base->hit != kCircle)
    fail(code::type, "the circle S1 with point base is not declared", at);

  kernel::Elaborator el(env, nullptr, at);
  kernel::Context ctx;
  kernel::Elaborator::Typed typed = el.infer(ctx, t);
  Term checked = el.finish(typed.term, 0);
  const kernel::Evaluator& tev = el.evaluator();
  kernel::Value expected = kernel::make_value(kernel::vl::Id{tev.eval(nullptr, mk::constant(kCircle)),
                                                             tev.eval(nullptr, mk::constant(kBase)),
                                                             tev.eval(nullptr, mk::constant(kBase))});
  if (!tev.conv(0, typed.type, expected))
    fail(code::type, "expected a loop of type Id S1 base base, found a term of type " + el.show(ctx, typed.type), at);

  kernel::Evaluator ev(env);
  ev.set_opaque([](const kernel::Decl& d) {
    return (d.name == kConcat || d.name == kInv) && d.levels == std::vector<Level>{0};
  });
  Term normal = ev.normalize(checked);
  return Recognizer(env, at).word(normal);
}

std::int64_t winding(const LoopWord& w) {
  return std::visit(
      [](const auto& n) -> std::int64_t {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, lw::Refl>) {
          return 0;
        } else if constexpr (std::is_same_v<N, lw::Loop>) {
          return 1;
        } else if constexpr (std::is_same_v<N, lw::Inverse>) {
          return -winding(n.inner);
        } else {
          return winding(n.left) + winding(n.right);
        }
      },
      w->data);
}

std::int64_t oracle_exponent_sum(const LoopWord& w) {
  std::vector<int> letters;
  std::vector<std::pair<const LoopWordNode*, int>> stack{{w.get(), 1}};
  while (!stack.empty()) {
    auto [node, sign] = stack.back();
    stack.pop_back();
    if (std::holds_alternative<lw::Loop>(node->data)) {
      letters.push_back(sign);
    } else if (const auto* i = std::get_if<lw::Inverse>(&node->data)) {
      stack.emplace_back(i->inner.get(), -sign);
    } else if (const auto* c = std::get_if<lw::Concat>(&node->data)) {
      stack.emplace_back(c->right.get(), sign);
      stack.emplace_back(c->left.get(), sign);
    }
  }
  std::int64_t sum = 0;
  for (int l : letters) sum += l;
  return sum;
}

Term to_term(const LoopWord& w) {
  Term s1 = mk::constant(kCircle);
  Term base = mk::constant(kBase);
  return std::visit(
      [&](const auto& n) -> Term {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, lw::Refl>) {
          return mk::refl(s1, base);
        } else if constexpr (std::is_same_v<N, lw::Loop>) {
          return mk::constant(kLoop);
        } else if constexpr (std::is_same_v<N, lw::Inverse>) {
          Term t = mk::constant(kInv, {0});
          for (int i = 0; i < 3; ++i) t = mk::app(t, i == 0 ? s1 : base, Plicity::Implicit);
          return mk::app(t, to_term(n.inner));
        } else {
          Term t = mk::constant(kConcat, {0});
          for (int i = 0; i < 4; ++i) t = mk::app(t, i == 0 ? s1 : base, Plicity::Implicit);
          return mk::app(mk::app(t, to_term(n.left)), to_term(n.right));
        }
      },
      w->data);
}

LoopWord power(std::int64_t c) {
  if (c == 0) return word::refl();
  LoopWord letter = c > 0 ? word::loop() : word::inverse(word::loop());
  std::int64_t n = c > 0 ? c : -c;
  LoopWord w = letter;
  for (std::int64_t i = 1; i < n; ++i) w = word::concat(letter, w);
  return w;
}

Term loop_power_term(std::int64_t c) { return to_term(power(c)); }

LoopWord random_word(std::mt19937_64& rng, unsigned max_depth) {
  std::uniform_int_distribution<int> pick(0, max_depth == 0 ? 1 : 3);
  switch (pick(rng)) {
    case 0: return word::refl();
    case 1: return word::loop();
    case 2: return word::inverse(random_word(rng, max_depth - 1));
    default: return word::concat(random_word(rng, max_depth - 1), random_word(rng, max_depth - 1));
  }
}

std::size_t depth(const LoopWord& w) {
  return std::visit(
      [](const auto& n) -> std::size_t {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, lw::Inverse>) {
          return 1 + depth(n.inner);
        } else if constexpr (std::is_same_v<N, lw::Concat>) {
          return 1 + std::max(depth(n.left), depth(n.right));
        } else {
          return 0;
        }
      },
      w->data);
}

}  // namespace hott::loopcalc
