#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hott/diagnostic.hpp"
#include "hott/hit/hit.hpp"
#include "hott/kernel/environment.hpp"
#include "hott/parser/resolve.hpp"
#include "hott/parser/surface.hpp"

namespace hott {

enum class TemplateKind { Definition, Axiom, Hit, PointCtor, PathCtor, Eliminator, Computation };

const char* template_kind_name(TemplateKind k);

// A declaration as written, instantiated on demand at concrete levels.
struct Template {
  std::string name;
  TemplateKind kind = TemplateKind::Definition;
  std::size_t universe_arity = 0;
  parse::SurfaceDeclPtr decl;  // the source declaration (the HIT for derived kinds)
  std::string hit;             // derived kinds: the owning HIT
  std::string file;
  SourceSpan span;
};

struct DeclTiming {
  std::string name;
  std::string file;
  double seconds = 0;
};

struct FileResult {
  std::string path;
  SourceFilePtr source;
  std::vector<std::string> declared;  // top-level names, in order
  std::vector<Diagnostic> diagnostics;
  double seconds = 0;

  bool ok() const { return diagnostics.empty(); }
};

// A single-threaded checking session: templates, their instances and the
// dependency graph between declarations.
class Session : public parse::GlobalScope {
 public:
  Session() = default;

  // Checks every declaration of the file in order, stopping at the first
  // error. On error the session is left as it was before the failing
  // declaration.
  FileResult check_source(const SourceFilePtr& src);
  FileResult check_text(const std::string& path, const std::string& text);

  // Declares one parsed declaration. Throws DiagnosticError.
  void declare(const parse::SurfaceDeclPtr& d, const std::string& file);

  // Instance of a known template at the given levels.
  kernel::DeclPtr instance(const std::string& name, const std::vector<Level>& levels);

  const kernel::Environment& environment() const { return env_; }
  const Template* find(const std::string& name) const;
  const std::vector<std::string>& order() const { return order_; }
  const std::set<std::string>& direct_dependencies(const std::string& name) const;
  // Every template reachable from `name`, excluding `name` itself.
  std::set<std::string> dependency_cone(const std::string& name) const;
  const std::vector<DeclTiming>& timings() const { return timings_; }
  const hit::CoreHit* core_hit(const std::string& name, const std::vector<Level>& levels) const;

  // Adds the templates and instances of `other` that are not present here,
  // keeping `other`'s declaration order.
  void merge(const Session& other);
  // Stable reordering of the declarations by the position of their file in
  // `files`; declarations of other files come first.
  void order_by_file(const std::vector<std::string>& files);

  std::optional<std::size_t> universe_arity(const std::string& name) const override;
  void use(const std::string& name, const std::vector<Level>& levels, const SourceSpan& at) override;

 private:
  void instantiate(const Template& t, const std::vector<Level>& levels);
  void instantiate_decl(const Template& t, const std::vector<Level>& levels);
  const hit::CoreHit& ensure_hit(const Template& hit, const std::vector<Level>& levels);
  void ensure_eliminator(const Template& hit, const std::vector<Level>& levels);
  void declare_hit(const parse::SurfaceDeclPtr& d, const std::string& file);
  void add_template(Template t, std::set<std::string> deps);
  void check_fresh(const std::string& name, const SourceSpan& at) const;

  std::map<std::string, Template> templates_;
  std::vector<std::string> order_;
  std::map<std::string, std::set<std::string>> deps_;
  std::map<std::string, hit::CoreHit> hits_;  // by instance key
  kernel::Environment env_;
  std::vector<DeclTiming> timings_;

  std::vector<std::string> resolving_;  // templates whose references are being recorded
  std::set<std::string> pending_;       // templates registered but not usable yet
};

// Names referenced anywhere in the declarations (an over-approximation:
// locals that shadow globals are included).
std::set<std::string> referenced_names(const std::vector<parse::SurfaceDeclPtr>& decls);

}  // namespace hott
