#include "hott/stdlib/corpus.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <future>
#include <map>

#include "hott/parser/parser.hpp"
#include "hott/stdlib/prelude.hpp"

namespace hott::stdlib {

namespace {

std::set<std::string> declared_names(const std::vector<parse::SurfaceDeclPtr>& decls) {
  std::set<std::string> out;
  for (const auto& d : decls) {
    out.insert(d->name);
    if (d->kind != parse::DeclKind::Hit) continue;
    out.insert(hit::eliminator_name(d->name));
    for (const auto& c : d->ctors) {
      out.insert(c.name);
      if (c.is_path) out.insert(hit::computation_name(d->name, c.name));
    }
  }
  return out;
}

bool intersects(const std::set<std::string>& a, const std::set<std::string>& b) {
  for (const auto& x : a)
    if (b.count(x)) return true;
  return false;
}

std::string base_name(const std::string& path) { return std::filesystem::path(path).filename().string(); }

}  // namespace

std::vector<FileResult> check_files(Session& s, const std::vector<SourceFilePtr>& files, unsigned jobs) {
  std::vector<FileResult> results(files.size());
  if (jobs <= 1 || files.size() <= 1) {
    for (std::size_t i = 0; i < files.size(); ++i) results[i] = s.check_source(files[i]);
    return results;
  }

  // A file joins the wave after the latest earlier file whose names it uses.
  std::vector<std::set<std::string>> declares(files.size());
  std::vector<std::size_t> wave(files.size(), 0);
  for (std::size_t i = 0; i < files.size(); ++i) {
    std::set<std::string> refs;
    try {
      auto decls = parse::parse_module(*files[i]);
      declares[i] = declared_names(decls);
      refs = referenced_names(decls);
    } catch (const DiagnosticError&) {
    }
    for (std::size_t k = 0; k < i; ++k)
      if (intersects(refs, declares[k])) wave[i] = std::max(wave[i], wave[k] + 1);
  }
  std::size_t waves = files.empty() ? 0 : *std::max_element(wave.begin(), wave.end()) + 1;
  for (std::size_t w = 0; w < waves; ++w) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < files.size(); ++i)
      if (wave[i] == w) members.push_back(i);
    std::vector<Session> copies(members.size(), s);
    for (std::size_t start = 0; start < members.size(); start += jobs) {
      std::vector<std::future<FileResult>> running;
      for (std::size_t k = start; k < std::min<std::size_t>(members.size(), start + jobs); ++k)
        running.push_back(std::async(std::launch::async,
                                     [&copies, &files, &members, k] { return copies[k].check_source(files[members[k]]); }));
      for (std::size_t k = 0; k < running.size(); ++k) results[members[start + k]] = running[k].get();
    }
    for (std::size_t k = 0; k < members.size(); ++k) {
      FileResult& r = results[members[k]];
      for (const auto& name : r.declared) {
        if (s.find(name) && r.ok()) {
          const Template* t = copies[k].find(name);
          r.diagnostics.push_back(Diagnostic{Severity::Error, std::string(code::scope),
                                             "duplicate declaration of '" + name + "'", t ? t->span : SourceSpan{}, {}});
        }
      }
      s.merge(copies[k]);
    }
  }
  std::vector<std::string> paths;
  for (const auto& f : files) paths.push_back(f->path());
  s.order_by_file(paths);
  return results;
}

bool CorpusReport::ok() const {
  if (!audit.empty()) return false;
  for (const auto& f : files)
    if (!f.ok()) return false;
  return true;
}

bool depends_on(const Session& s, const std::string& name, const std::string& dependency) {
  return s.dependency_cone(name).count(dependency) > 0;
}

std::vector<Diagnostic> audit(const Session& s, const Manifest& m, const std::set<std::string>& sanctioned,
                              const std::vector<std::string>& files) {
  std::vector<Diagnostic> out;
  auto report = [&](std::string msg, SourceSpan span) {
    out.push_back(Diagnostic{Severity::Error, std::string(code::manifest), std::move(msg), std::move(span), {}});
  };
  auto entry_span = [&](const ManifestEntry& e) {
    SourceSpan span;
    span.file = m.path;
    span.start_line = span.end_line = e.line;
    return span;
  };
  std::set<std::string> wanted(files.begin(), files.end());

  for (const auto& name : s.order()) {
    const Template* t = s.find(name);
    if (!t->hit.empty() && t->kind != TemplateKind::Hit) continue;
    std::string file = base_name(t->file);
    if (!wanted.count(file)) continue;
    const ManifestEntry* e = m.find(name);
    if (!e) {
      report("'" + name + "' is declared in " + file + " but missing from the manifest", t->span);
      continue;
    }
    if (e->file != file)
      report("'" + name + "' is declared in " + file + " but listed under " + e->file, entry_span(*e));
    bool axiom = t->kind == TemplateKind::Axiom;
    if (axiom != (e->status == Status::Postulated))
      report("'" + name + "' is " + (axiom ? "an axiom" : "not an axiom") + " but listed as " + status_name(e->status),
             entry_span(*e));
    if (t->kind == TemplateKind::Hit && e->status == Status::Proved)
      report("'" + name + "' is a higher inductive type but listed as proved", entry_span(*e));
    if (axiom && !prelude_axioms().count(name) && !sanctioned.count(name))
      report("postulate '" + name + "' is not in the sanctioned postulate list", entry_span(*e));
    if (e->status == Status::Proved) {
      for (const auto& dep : s.dependency_cone(name)) {
        const Template* d = s.find(dep);
        if (d && d->kind == TemplateKind::Axiom && !prelude_axioms().count(dep) && !sanctioned.count(dep))
          report("proved '" + name + "' depends on unsanctioned axiom '" + dep + "'", entry_span(*e));
      }
    }
  }
  for (const auto& e : m.entries) {
    if (!wanted.count(e.file)) continue;
    if (!s.find(e.name)) report("'" + e.name + "' is listed in the manifest but not declared", entry_span(e));
  }
  return out;
}

CorpusReport check_corpus(Session& s, const Manifest& m, const std::string& dir,
                          const std::set<std::string>& sanctioned, unsigned jobs) {
  auto t0 = std::chrono::steady_clock::now();
  CorpusReport r;
  std::vector<SourceFilePtr> sources;
  for (const auto& f : m.files) {
    std::string path = (std::filesystem::path(dir) / f).string();
    sources.push_back(std::make_shared<const SourceFile>(path, read_file(path)));
  }
  r.files = check_files(s, sources, jobs);
  for (const auto& f : r.files) r.declarations += f.declared.size();
  r.audit = audit(s, m, sanctioned, m.files);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace hott::stdlib
