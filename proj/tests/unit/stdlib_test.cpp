#include <gtest/gtest.h>

#include <algorithm>

#include "test_support.hpp"

namespace hott::stdlib {
namespace {

using testing::corpus;

TEST(Prelude, HasAtLeastFifteenDeclarations) {
  Session s;
  FileResult r = load_prelude(s);
  ASSERT_TRUE(r.ok());
  EXPECT_GE(r.declared.size(), 15u);
  for (auto n : {"inv", "concat", "ap", "transport", "apd", "Equiv", "idtoeqv", "ua", "funext", "happly"})
    EXPECT_NE(s.find(n), nullptr) << n;
}

TEST(Prelude, AxiomsAreUnivalenceAndFunext) {
  EXPECT_EQ(prelude_axioms(), (std::set<std::string>{"funext", "ua", "ua-comp"}));
  Session s;
  load_prelude(s);
  for (const auto& n : s.order())
    EXPECT_EQ(s.find(n)->kind == TemplateKind::Axiom, prelude_axioms().count(n) > 0) << n;
}

TEST(Manifest, Parse) {
  Manifest m = parse_manifest(
      "# header\n\na.hott\tx\tproved\tsome lemma\na.hott\ty\tpostulated\t\nb.hott\tz\tdefinition\tz\n", "M");
  ASSERT_EQ(m.entries.size(), 3u);
  EXPECT_EQ(m.files, (std::vector<std::string>{"a.hott", "b.hott"}));
  EXPECT_EQ(m.find("y")->status, Status::Postulated);
  EXPECT_EQ(m.find("x")->line, 3u);
  EXPECT_EQ(m.find("x")->reference, "some lemma");
  EXPECT_EQ(m.in_file("a.hott").size(), 2u);
  EXPECT_EQ(m.find("w"), nullptr);
}

TEST(Manifest, Errors) {
  auto code_of = [](const std::string& text) -> std::string {
    try {
      parse_manifest(text, "M");
    } catch (const DiagnosticError& e) {
      return e.diagnostic().code;
    }
    return "";
  };
  EXPECT_EQ(code_of("a.hott\tx\tlemma\tr\n"), "E-MANIFEST");
  EXPECT_EQ(code_of("a.hott x proved\n"), "E-MANIFEST");
  EXPECT_EQ(code_of("a.hott\tx\tproved\tr\na.hott\tx\tproved\tr\n"), "E-MANIFEST");
}

TEST(Manifest, NameList) {
  EXPECT_EQ(parse_name_list("# c\na\n  b  # trailing\n\n"), (std::set<std::string>{"a", "b"}));
}

struct AuditCase {
  Session session;
  std::vector<Diagnostic> run(const std::string& source, const std::string& manifest,
                              const std::set<std::string>& sanctioned = {}) {
    load_prelude(session);
    EXPECT_TRUE(session.check_text("a.hott", source).ok());
    return audit(session, parse_manifest(manifest, "M"), sanctioned, {"a.hott"});
  }
};

const char* kSource = "axiom k : Nat\ndef a : Id Nat k k := refl k\ndef b : Nat := zero\n";

TEST(Audit, CleanManifest) {
  AuditCase c;
  auto d = c.run(kSource, "a.hott\tk\tpostulated\t-\na.hott\ta\tproved\t-\na.hott\tb\tdefinition\t-\n", {"k"});
  EXPECT_TRUE(d.empty()) << d.front().message;
}

TEST(Audit, UnsanctionedAxiomInCone) {
  AuditCase c;
  auto d = c.run(kSource, "a.hott\tk\tpostulated\t-\na.hott\ta\tproved\t-\na.hott\tb\tdefinition\t-\n");
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[0].code, "E-MANIFEST");
  EXPECT_NE(d[1].message.find("depends on unsanctioned axiom 'k'"), std::string::npos);
}

TEST(Audit, MissingAndExtraEntries) {
  AuditCase c;
  auto d = c.run(kSource, "a.hott\tk\tpostulated\t-\na.hott\ta\tproved\t-\na.hott\tghost\tproved\t-\n", {"k"});
  ASSERT_EQ(d.size(), 2u);
  EXPECT_NE(d[0].message.find("'b'"), std::string::npos);
  EXPECT_NE(d[1].message.find("'ghost'"), std::string::npos);
}

TEST(Audit, DishonestStatus) {
  AuditCase c;
  auto d = c.run(kSource, "a.hott\tk\tproved\t-\na.hott\ta\tpostulated\t-\na.hott\tb\tdefinition\t-\n", {"k"});
  EXPECT_EQ(d.size(), 2u);
}

TEST(Corpus, ChecksCleanly) {
  auto& c = corpus();
  for (const auto& f : c.report.files)
    EXPECT_TRUE(f.ok()) << f.path << ": " << (f.ok() ? "" : f.diagnostics.front().message);
  EXPECT_TRUE(c.report.audit.empty()) << c.report.audit.front().message;
  EXPECT_GE(c.report.declarations, 60u);
  EXPECT_EQ(c.report.declarations, c.manifest.entries.size());
}

TEST(Corpus, LoopNeqReflUsesUnivalence) {
  auto& c = corpus();
  EXPECT_TRUE(depends_on(c.session, "loop-neq-refl", "ua"));
  EXPECT_TRUE(depends_on(c.session, "loop-neq-refl", "S1"));
  EXPECT_FALSE(depends_on(c.session, "assoc", "ua"));
  EXPECT_FALSE(depends_on(c.session, "assoc", "funext"));
}

TEST(Corpus, SanctionedPostulatesAreExactlyTheAxioms) {
  auto& c = corpus();
  std::set<std::string> axioms;
  for (const auto& e : c.manifest.entries)
    if (e.status == Status::Postulated && !prelude_axioms().count(e.name)) axioms.insert(e.name);
  EXPECT_EQ(axioms, testing::corpus_sanctioned());
}

TEST(Corpus, ParallelCheckMatchesSequential) {
  Session s;
  auto m = testing::corpus_manifest();
  auto r = check_corpus(s, m, testing::stdlib_dir(), testing::corpus_sanctioned(), 4);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(s.order(), corpus().session.order());
}

}  // namespace
}  // namespace hott::stdlib
