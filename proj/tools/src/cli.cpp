#include "hott/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <map>
#include <optional>

#include "hott/loopcalc/loopcalc.hpp"
#include "hott/parser/printer.hpp"
#include "hott/stdlib/corpus.hpp"
#include "hott/stdlib/prelude.hpp"

namespace hott::cli {

namespace {

namespace fs = std::filesystem;

struct Options {
  std::vector<std::string> files;
  std::string diag_format = "human";
  bool no_prelude = false;
  unsigned jobs = 1;
  std::string manifest;
  std::string term;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Driver {
 public:
  Driver(const Options& o, std::ostream& out, std::ostream& err) : o_(o), out_(out), err_(err) {}

  int check() {
    load();
    if (o_.manifest.empty() || !manifest_) {
      summary();
      return finish();
    }
    std::vector<std::string> audited;
    for (const auto& f : manifest_->files)
      if (loaded_.count(f)) audited.push_back(f);
    for (auto& d : stdlib::audit(session_, *manifest_, sanctioned_, audited)) report(d);
    summary();
    return finish();
  }

  void summary() {
    if (!machine() && errors_ == 0)
      out_ << "ok: " << checked_decls_ << " declaration(s) in " << checked_files_ << " file(s)\n";
  }

  int norm() {
    load();
    if (errors_) return finish();
    kernel::DeclPtr d = lookup();
    if (!d) return finish();
    Term t = d->kind == kernel::DeclKind::Definition ? kernel::Evaluator(session_.environment()).quote(0, d->value)
                                                     : mk::constant(d->name, d->levels);
    out_ << parse::print(t, {}) << '\n';
    return finish();
  }

  int winding() {
    load();
    if (errors_) return finish();
    kernel::DeclPtr d = lookup();
    if (!d) return finish();
    try {
      auto w = loopcalc::recognize(mk::constant(d->name, d->levels), session_.environment(), d->span);
      out_ << loopcalc::winding(w) << '\n';
    } catch (const DiagnosticError& e) {
      report(e.diagnostic());
    }
    return finish();
  }

 private:
  bool machine() const { return o_.diag_format == "machine"; }

  void report(const Diagnostic& d) {
    if (d.severity == Severity::Error) ++errors_;
    if (machine()) {
      out_ << format_machine(d);
      return;
    }
    auto it = sources_.find(d.span.file);
    err_ << format_human(d, it == sources_.end() ? nullptr : it->second.get());
  }

  int finish() {
    if (!machine() && errors_ > 0) err_ << errors_ << " error(s)\n";
    return errors_ > 0 ? kDiagnostics : kOk;
  }

  SourceFilePtr read(const std::string& path) {
    std::string text;
    try {
      text = stdlib::read_file(path);
    } catch (const std::runtime_error&) {
      throw UsageError("cannot read '" + path + "'");
    }
    auto src = std::make_shared<const SourceFile>(path, text);
    sources_[path] = src;
    return src;
  }

  // Manifest governing a file: --manifest, or a MANIFEST next to the file.
  void find_manifest() {
    std::string path = o_.manifest;
    if (path.empty()) {
      for (const auto& f : o_.files) {
        fs::path candidate = fs::path(f).parent_path() / "MANIFEST";
        if (fs::exists(candidate)) {
          path = candidate.string();
          break;
        }
      }
    }
    if (path.empty()) return;
    try {
      manifest_ = stdlib::read_manifest(path);
    } catch (const DiagnosticError& e) {
      report(e.diagnostic());
      return;
    } catch (const std::runtime_error&) {
      throw UsageError("cannot read manifest '" + path + "'");
    }
    manifest_dir_ = fs::path(path).parent_path().string();
    fs::path sanctioned = fs::path(manifest_dir_) / "SANCTIONED";
    if (fs::exists(sanctioned)) sanctioned_ = stdlib::read_name_list(sanctioned.string());
  }

  // Files to check, in order: corpus files pull in the manifest files that
  // precede them.
  std::vector<SourceFilePtr> plan() {
    std::vector<std::string> requested = o_.files;
    if (requested.empty() && manifest_)
      for (const auto& f : manifest_->files) requested.push_back((fs::path(manifest_dir_) / f).string());
    if (requested.empty()) throw UsageError("no input files");
    std::vector<SourceFilePtr> out;
    auto add = [&](const std::string& path) {
      std::string base = fs::path(path).filename().string();
      if (loaded_.count(base)) return;
      loaded_.insert(base);
      out.push_back(read(path));
    };
    for (const auto& path : requested) {
      std::string base = fs::path(path).filename().string();
      if (manifest_) {
        auto pos = std::find(manifest_->files.begin(), manifest_->files.end(), base);
        if (pos != manifest_->files.end())
          for (auto it = manifest_->files.begin(); it != pos; ++it) add((fs::path(manifest_dir_) / *it).string());
      }
      add(path);
    }
    return out;
  }

  void load() {
    find_manifest();
    if (!o_.no_prelude) {
      stdlib::load_prelude(session_);
      loaded_.insert(std::string(stdlib::prelude_file));
    }
    auto files = plan();
    for (const auto& r : stdlib::check_files(session_, files, o_.jobs)) {
      for (const auto& d : r.diagnostics) report(d);
      checked_files_ += 1;
      checked_decls_ += r.declared.size();
    }
  }

  kernel::DeclPtr lookup() {
    const Template* t = session_.find(o_.term);
    if (!t) {
      SourceSpan at;
      if (!o_.files.empty()) at.file = o_.files.back();
      report(Diagnostic{Severity::Error, std::string(code::scope), "unknown identifier '" + o_.term + "'", at, {}});
      return nullptr;
    }
    return session_.instance(o_.term, std::vector<Level>(t->universe_arity, 0));
  }

  const Options& o_;
  std::ostream& out_;
  std::ostream& err_;
  Session session_;
  std::map<std::string, SourceFilePtr> sources_;
  std::optional<stdlib::Manifest> manifest_;
  std::string manifest_dir_;
  std::set<std::string> sanctioned_;
  std::set<std::string> loaded_;
  std::size_t errors_ = 0;
  std::size_t checked_files_ = 0;
  std::size_t checked_decls_ = 0;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Proof checker for homotopy type theory with higher inductive types", "hott"};
  app.require_subcommand(1);
  app.add_option("--diag-format", o.diag_format, "Diagnostic format")
      ->check(CLI::IsMember({"human", "machine"}));
  app.add_flag("--no-prelude", o.no_prelude, "Do not load the prelude");
  app.add_option("--jobs", o.jobs, "Check independent files in parallel")->check(CLI::PositiveNumber);
  app.add_option("--manifest", o.manifest, "Corpus manifest");

  auto* check = app.add_subcommand("check", "Type-check files");
  check->add_option("files", o.files, "Input files");
  check->fallthrough();
  auto* norm = app.add_subcommand("norm", "Print the normal form of a definition");
  norm->add_option("files", o.files, "Input files")->required();
  norm->add_option("--term", o.term, "Definition name")->required();
  norm->fallthrough();
  auto* wind = app.add_subcommand("winding", "Print the winding number of a loop on the circle");
  wind->add_option("files", o.files, "Input files")->required();
  wind->add_option("--term", o.term, "Definition name")->required();
  wind->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "hott: " << e.what() << '\n';
    return kUsage;
  }

  try {
    Driver d(o, out, err);
    if (check->parsed()) return d.check();
    if (norm->parsed()) return d.norm();
    return d.winding();
  } catch (const UsageError& e) {
    err << "hott: " << e.what() << '\n';
    return kUsage;
  } catch (const InternalError& e) {
    err << "hott: internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const std::exception& e) {
    err << "hott: internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace hott::cli
