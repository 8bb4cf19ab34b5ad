#include <chrono>
#include <filesystem>
#include <iostream>
#include <random>
#include <regex>
#include <sstream>

#include "hott/cli.hpp"
#include "hott/loopcalc/loopcalc.hpp"
#include "properties.hpp"

namespace {

using namespace hott;
namespace fs = std::filesystem;

constexpr double kCorpusSeconds = 30.0;
constexpr double kWindingSeconds = 5.0;
constexpr std::size_t kMinDeclarations = 60;
constexpr std::size_t kMinNegatives = 10;
constexpr int kRandomWords = 500;
constexpr unsigned kMaxDepth = 12;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome corpus_checks(const testing::Corpus& c) {
  Outcome o;
  for (const auto& f : c.report.files)
    if (!f.ok()) o.fail(f.path + ": " + f.diagnostics.front().message);
  if (c.report.declarations < kMinDeclarations)
    o.fail("only " + std::to_string(c.report.declarations) + " declarations");
  if (c.report.seconds >= kCorpusSeconds) o.fail("took " + std::to_string(c.report.seconds) + " s");
  std::vector<std::string> required = {"inv",
                                       "concat",
                                       "assoc",
                                       "ap",
                                       "transport",
                                       "apd",
                                       "tr-const",
                                       "transport-concat",
                                       "transport-path-right",
                                       "transport-path-left",
                                       "transport-path-loop",
                                       "transport-fun",
                                       "pair-eq",
                                       "transport-isequiv",
                                       "loop-neq-refl"};
  for (const auto* e : c.manifest.in_file("contractible.hott")) required.push_back(e->name);
  for (const auto& name : required) {
    const auto* e = c.manifest.find(name);
    const Template* t = c.session.find(name);
    if (!e || !t) {
      o.fail("'" + name + "' is not declared");
      continue;
    }
    if (e->status == stdlib::Status::Postulated || t->kind == TemplateKind::Axiom) o.fail("'" + name + "' is postulated");
    for (const auto& dep : c.session.dependency_cone(name)) {
      const Template* d = c.session.find(dep);
      if (d->kind == TemplateKind::Axiom && !stdlib::prelude_axioms().count(dep) &&
          !testing::corpus_sanctioned().count(dep))
        o.fail("'" + name + "' rests on '" + dep + "'");
    }
  }
  if (o.pass)
    o.detail = std::to_string(c.report.declarations) + " declarations in " + std::to_string(c.report.seconds) + " s";
  return o;
}

Outcome exact_conversions() {
  Outcome o;
  const char* source =
      "hit S1 where\n  | point base : S1\n  | path loop : Id S1 base base\n"
      "def c1 (A : Type 0) (a : A) : Id (Id A a a) (concat (refl a) (refl a)) (refl a) := refl (refl a)\n"
      "def c2 (A : Type 0) (P : A -> Type 0) (a : A) (u : P a) : Id (P a) (transport P (refl a) u) u := refl u\n"
      "def c3 (A : Type 0) (a : A) (C : (z : A) -> Id A a z -> Type 0) (d : C a (refl a)) :"
      " Id (C a (refl a)) (J [z q. C z q] d a (refl a)) d := refl d\n"
      "def c4 (P : S1 -> Type 0) (b : P base) (l : Id (P base) (transport P loop b) b) :"
      " Id (P base) (S1-ind P b l base) b := refl b\n";
  Session s;
  FileResult r = testing::check_with_prelude(s, source, "conversions.hott");
  if (!r.ok()) o.fail(r.diagnostics.front().message);
  Term refl0 = mk::refl(mk::nat(), mk::zero());
  Term cc = mk::constant("concat", {0});
  for (const Term& a : {mk::nat(), mk::zero(), mk::zero(), mk::zero()}) cc = mk::app(cc, a, Plicity::Implicit);
  cc = mk::app(mk::app(cc, refl0), refl0);
  if (!alpha_equal(testing::normalize(s, cc), refl0)) o.fail("concat refl refl does not normalize to refl");
  if (o.pass) o.detail = "concat, transport, J and S1-ind reduce definitionally";
  return o;
}

Outcome winding_numbers(const testing::Corpus& c) {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  const auto& env = c.session.environment();
  Term type = mk::id(mk::constant("S1"), mk::constant("base"), mk::constant("base"));
  for (std::int64_t n = -50; n <= 50; ++n) {
    Term t = loopcalc::loop_power_term(n);
    try {
      testing::check_closed(c.session, t, type);
      std::int64_t w = loopcalc::winding(loopcalc::recognize(t, env));
      if (w != n) o.fail("loop^" + std::to_string(n) + " has winding " + std::to_string(w));
    } catch (const DiagnosticError& e) {
      o.fail("loop^" + std::to_string(n) + ": " + e.diagnostic().message);
    }
  }
  std::mt19937_64 rng(20261018);
  for (int i = 0; i < kRandomWords; ++i) {
    loopcalc::LoopWord w = loopcalc::random_word(rng, kMaxDepth);
    if (loopcalc::depth(w) > kMaxDepth) o.fail("random word deeper than the bound");
    Term t = loopcalc::to_term(w);
    try {
      std::int64_t got = loopcalc::winding(loopcalc::recognize(t, env));
      if (got != loopcalc::oracle_exponent_sum(w)) o.fail("random word " + std::to_string(i) + " disagrees with oracle");
    } catch (const DiagnosticError& e) {
      o.fail("random word " + std::to_string(i) + ": " + e.diagnostic().message);
    }
  }
  double secs = seconds_since(t0);
  if (secs >= kWindingSeconds) o.fail("took " + std::to_string(secs) + " s");
  if (o.pass) o.detail = "101 powers and " + std::to_string(kRandomWords) + " random words in " + std::to_string(secs) + " s";
  return o;
}

Outcome negatives() {
  Outcome o;
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(testing::data_dir() + "/bad"))
    if (e.path().extension() == ".hott") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  if (files.size() < kMinNegatives) o.fail("only " + std::to_string(files.size()) + " negative files");
  static const std::regex header(R"(^-- expect: (E-[A-Z-]+))");
  for (const auto& f : files) {
    std::string text = stdlib::read_file(f.string());
    std::smatch m;
    if (!std::regex_search(text, m, header)) {
      o.fail(f.filename().string() + " has no expect header");
      continue;
    }
    std::ostringstream out, err;
    int status = cli::run({"check", "--diag-format", "machine", f.string()}, out, err);
    std::string got = out.str().substr(0, out.str().find('\t'));
    if (status != cli::kDiagnostics) o.fail(f.filename().string() + " exited " + std::to_string(status));
    if (got != m[1].str()) o.fail(f.filename().string() + " reported " + got + ", expected " + m[1].str());
  }
  if (o.pass) o.detail = std::to_string(files.size()) + " files";
  return o;
}

Outcome term_properties(testing::Corpus& c) {
  Outcome o;
  auto norm = testing::normalization_properties(c.session);
  auto rt = testing::round_trip_property(c.session);
  for (const auto& f : norm.failures) o.fail(f);
  for (const auto& f : rt.failures) o.fail(f);
  if (o.pass) o.detail = std::to_string(norm.checked) + " bodies, " + std::to_string(rt.checked) + " terms";
  return o;
}

Outcome advanced_statements(const testing::Corpus& c) {
  Outcome o;
  for (const char* name : {"les", "hopf-fibration", "blakers-massey", "freudenthal", "stability"}) {
    const Template* t = c.session.find(name);
    if (!t) {
      o.fail(std::string("'") + name + "' did not type-check");
      continue;
    }
    if (t->universe_arity == 0 && !c.session.environment().find(name, {})) o.fail(std::string("'") + name + "' has no instance");
  }
  if (o.pass) o.detail = "les, hopf-fibration, blakers-massey, freudenthal, stability";
  return o;
}

Outcome dependency_audit(const testing::Corpus& c) {
  Outcome o;
  for (const auto& d : c.report.audit) o.fail(d.message);
  if (!stdlib::depends_on(c.session, "loop-neq-refl", "ua")) o.fail("loop-neq-refl does not depend on ua");
  if (o.pass) o.detail = std::to_string(c.manifest.entries.size()) + " manifest entries";
  return o;
}

}  // namespace

int main() {
  auto& c = testing::corpus();
  std::vector<std::pair<const char*, Outcome>> results;
  results.emplace_back("corpus check", corpus_checks(c));
  results.emplace_back("exact conversions", exact_conversions());
  results.emplace_back("winding numbers", winding_numbers(c));
  results.emplace_back("negative files", negatives());
  results.emplace_back("normalization and round trip", term_properties(c));
  results.emplace_back("homotopy statements", advanced_statements(c));
  results.emplace_back("dependency audit", dependency_audit(c));
  int failed = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& [name, r] = results[i];
    std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " " << name << ": " << r.detail << "\n";
    failed += !r.pass;
  }
  return failed ? 1 : 0;
}
