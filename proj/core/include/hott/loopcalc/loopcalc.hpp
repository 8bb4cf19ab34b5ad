#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <variant>

#include "hott/kernel/environment.hpp"
#include "hott/syntax/term.hpp"

namespace hott::loopcalc {

struct LoopWordNode;
using LoopWord = std::shared_ptr<const LoopWordNode>;

namespace lw {
struct Refl {};
struct Loop {};
struct Inverse {
  LoopWord inner;
};
struct Concat {
  LoopWord left;
  LoopWord right;
};
}  // namespace lw

struct LoopWordNode {
  std::variant<lw::Refl, lw::Loop, lw::Inverse, lw::Concat> data;
};

namespace word {
LoopWord refl();
LoopWord loop();
LoopWord inverse(LoopWord w);
LoopWord concat(LoopWord a, LoopWord b);
}  // namespace word

// Reads a closed term of type `Id S1 base base` as a word in loop, inv,
// concat and refl. Definitions other than concat and inv are unfolded.
// Throws DiagnosticError: E-TYPE when the term is not a based loop of the
// circle, E-LOOPFORM when another head occurs.
LoopWord recognize(const Term& t, const kernel::Environment& env, const SourceSpan& at = {});

// Exponent sum by structural recursion.
std::int64_t winding(const LoopWord& w);

// Exponent sum by flattening the word into a sequence of +1/-1 letters.
std::int64_t oracle_exponent_sum(const LoopWord& w);

// Core term for a word: concat/inv of the prelude at level 0 with the
// circle's base and loop.
Term to_term(const LoopWord& w);

// loop^c: refl for 0, otherwise |c| copies of loop (or its inverse)
// concatenated to the right.
LoopWord power(std::int64_t c);
Term loop_power_term(std::int64_t c);

// A random word of at most the given depth.
LoopWord random_word(std::mt19937_64& rng, unsigned max_depth);

std::size_t depth(const LoopWord& w);

}  // namespace hott::loopcalc
