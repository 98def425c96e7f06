#include "facthom/cli.hpp"

#include "facthom/configuration.hpp"
#include "facthom/koszul.hpp"
#include "facthom/manifold.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

namespace facthom::cli {

nlohmann::json Metadata::to_json() const {
  nlohmann::json j;
  j["field"] = field;
  j["maxdeg"] = max_deg;
  j["maxweight"] = max_weight ? nlohmann::json(*max_weight) : nlohmann::json(nullptr);
  j["safe_degree"] = safe_degree;
  j["weight_exact"] = weight_exact;
  return j;
}

namespace {

const char* status_name(Status s) {
  switch (s) {
    case Status::ok: return "ok";
    case Status::check_failed: return "check-failed";
    case Status::error: return "error";
  }
  return "error";
}

Metadata metadata_for(const Field& f, int max_deg, const TruncationPolicy& t) {
  return {f.name(), max_deg, t.max_weight, t.safe_degree_bound(), t.weight_exact};
}

}  // namespace

nlohmann::json JobResult::to_json() const {
  nlohmann::json j;
  j["request"] = request;
  j["metadata"] = metadata.to_json();
  j["status"] = status_name(status);
  if (status == Status::error) {
    nlohmann::json e;
    e["message"] = error;
    if (span) e["span"] = {{"line", span->line}, {"column", span->column}, {"length", span->length}};
    j["error"] = e;
  } else if (table) {
    j["betti"] = table->to_json()["betti"];
  } else if (report) {
    j["report"] = report->to_json();
  }
  return j;
}

std::string JobResult::to_text(bool color) const {
  std::ostringstream os;
  os << "# " << request << "\n";
  os << "field " << metadata.field << ", maxdeg " << metadata.max_deg << ", maxweight "
     << (metadata.max_weight ? std::to_string(*metadata.max_weight) : std::string("-")) << ", safe degree "
     << metadata.safe_degree << (metadata.weight_exact ? " (weight-exact)" : "") << "\n";
  if (status == Status::error) {
    os << (color ? "\033[31merror\033[0m: " : "error: ") << error << "\n";
  } else if (table) {
    os << table->to_text(color);
  } else if (report) {
    os << report->to_text(color);
  }
  return os.str();
}

JobResult execute(const dsl::Request& request) {
  JobResult r;
  r.request = request.echo();
  r.metadata = {request.field.name(), request.max_deg, std::nullopt, request.max_deg, false};
  try {
    if (request.kind == dsl::Request::Kind::facthom) {
      Evaluation e = evaluate(*request.computation);
      r.metadata = metadata_for(request.field, request.max_deg, e.policy);
      r.table = std::move(e.table);
    } else {
      r.metadata = metadata_for(request.field, request.max_deg, hochschild_truncation(*request.algebra, request.max_deg));
      r.report = excision_check(request.algebra, request.max_deg);
      if (!r.report->pass()) r.status = Status::check_failed;
    }
  } catch (const std::exception& e) {
    r.status = Status::error;
    r.error = e.what();
    r.span = request.span;
    r.table.reset();
    r.report.reset();
  }
  return r;
}

namespace {

struct Options {
  std::string field = "Q";
  int max_deg = 4;
  std::optional<int> max_weight;
  bool json = false;
  int jobs = 1;
  std::string preset = "squarezero";
  int dim = 1;
  int deg = 0;
  std::string manifold = "circle";
  std::string file;
};

class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

Field field_of(const Options& o) {
  try {
    return Field::parse(o.field);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

GradedAlgebra preset_of(const Options& o, const Field& f) {
  PresetSpec spec;
  try {
    spec.kind = parse_preset_kind(o.preset);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  spec.dim = o.dim;
  spec.degree = o.deg;
  spec.max_weight = o.max_weight;
  try {
    return preset(f, spec);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--preset: ") + e.what());
  }
}

std::string preset_text(const Options& o) {
  PresetSpec spec{parse_preset_kind(o.preset), o.dim, o.deg, o.max_weight};
  return describe(spec);
}

int weight_bound(const Options& o) { return o.max_weight.value_or(4); }

/// "circle", "interval", "interval:aug", and comma-separated lists of these
/// for disjoint unions.
ManifoldExpr manifold_of(const std::string& text, const AlgebraPtr& a) {
  std::vector<ManifoldExpr> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "circle") {
      parts.push_back(ManifoldExpr::circle("A", a));
    } else if (item == "interval" || item == "interval:aug") {
      bool aug = item == "interval:aug";
      auto q = std::make_shared<const SidedModule>(
          module_from(aug ? ModuleKind::augmentation_right : ModuleKind::regular_right, a));
      auto p = std::make_shared<const SidedModule>(
          module_from(aug ? ModuleKind::augmentation_left : ModuleKind::regular_left, a));
      std::string qn = aug ? "aug" : "regular";
      parts.push_back(ManifoldExpr::interval("A", a, qn, q, qn, p));
    } else {
      throw UsageError("--manifold: unknown piece '" + item + "' (expected circle, interval or interval:aug)");
    }
  }
  if (parts.empty()) throw UsageError("--manifold: empty");
  return ManifoldExpr::disjoint(std::move(parts));
}

class Emitter {
public:
  Emitter(std::ostream& out, bool json, bool color) : out_(out), json_(json), color_(color) {}

  void emit(const JobResult& r, bool json_request = false) {
    if (json_ || json_request)
      out_ << r.to_json().dump() << "\n";
    else
      out_ << r.to_text(color_) << "\n";
    out_.flush();
    if (r.status == Status::check_failed) worst_ = std::max(worst_, 1);
    if (r.status == Status::error) worst_ = std::max(worst_, 2);
  }

  int exit_code() const { return worst_ == 0 ? exit_ok : worst_ == 1 ? exit_check_failed : exit_error; }

private:
  std::ostream& out_;
  bool json_;
  bool color_;
  int worst_ = 0;
};

JobResult guarded(const std::string& request, const Metadata& m, const std::function<void(JobResult&)>& body) {
  JobResult r;
  r.request = request;
  r.metadata = m;
  try {
    body(r);
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    r.status = Status::error;
    r.error = e.what();
    r.table.reset();
    r.report.reset();
  }
  return r;
}

JobResult as_check(std::string request, Metadata m, const std::function<CheckReport()>& make) {
  return guarded(request, m, [&](JobResult& r) {
    r.report = make();
    if (!r.report->pass()) r.status = Status::check_failed;
  });
}

void print_dsl_error(std::ostream& err, const std::string& file, const std::string& source, const dsl::DslError& e,
                     bool color) {
  const dsl::Span& s = e.span();
  err << file << ":" << s.line << ":" << s.column << ": " << (color ? "\033[31m" : "") << dsl::error_kind_name(e.kind())
      << (color ? "\033[0m" : "") << ": " << e.detail() << "\n";
  std::istringstream in(source);
  std::string line;
  for (int i = 1; std::getline(in, line); ++i)
    if (i == s.line) {
      err << "  " << line << "\n  " << std::string(static_cast<std::size_t>(std::max(0, s.column - 1)), ' ')
          << std::string(static_cast<std::size_t>(std::max(1, s.length)), '^') << "\n";
      break;
    }
}

int run_program(const Options& o, std::ostream& out, std::ostream& err, const Environment& env) {
  std::ifstream in(o.file, std::ios::binary);
  if (!in) {
    err << "facthom: cannot read " << o.file << "\n";
    return exit_usage;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string source = buf.str();
  dsl::Program program;
  try {
    program = dsl::parse_program(source);
  } catch (const dsl::DslError& e) {
    if (o.json) {
      JobResult r;
      r.request = "run " + o.file;
      r.status = Status::error;
      r.error = std::string(dsl::error_kind_name(e.kind())) + ": " + e.detail();
      r.span = e.span();
      r.metadata.field = "Q";
      out << r.to_json().dump() << "\n";
    }
    print_dsl_error(err, o.file, source, e, env.color);
    return exit_dsl_error;
  }

  const auto& requests = program.requests;
  std::vector<std::optional<JobResult>> results(requests.size());
  std::mutex mu;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < requests.size();) {
      JobResult r = execute(requests[i]);
      std::lock_guard lock(mu);
      results[i] = std::move(r);
      ready.notify_all();
    }
  };
  const int jobs = std::max(1, std::min<int>(o.jobs, static_cast<int>(std::max<std::size_t>(requests.size(), 1))));
  std::vector<std::jthread> pool;
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);

  Emitter emitter(out, o.json, env.color);
  for (std::size_t i = 0; i < requests.size(); ++i) {
    std::unique_lock lock(mu);
    ready.wait(lock, [&] { return results[i].has_value(); });
    JobResult r = std::move(*results[i]);
    lock.unlock();
    emitter.emit(r, requests[i].json);
  }
  return emitter.exit_code();
}

void add_common(CLI::App* app, Options& o, bool preset_flags) {
  app->add_option("--field", o.field, "Q or Fp:<p>");
  app->add_option("--maxdeg", o.max_deg, "degree bound")->check(CLI::NonNegativeNumber);
  app->add_option("--maxweight", o.max_weight, "weight truncation")->check(CLI::NonNegativeNumber);
  app->add_flag("--json", o.json, "one JSON object per line");
  app->add_option("--jobs", o.jobs, "concurrent requests")->check(CLI::PositiveNumber);
  if (preset_flags) app->add_option("--preset", o.preset, "tensor, sym, exterior, truncpoly or squarezero");
  app->add_option("--dim", o.dim, "dimension of the generating space (order for truncpoly)")
      ->check(CLI::NonNegativeNumber);
  app->add_option("--deg", o.deg, "degree of the generators");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env) {
  CLI::App app{"Factorization homology of framed 1-manifolds with exact coefficients", "facthom"};
  app.require_subcommand(1);
  Options o;

  CLI::App* run_cmd = app.add_subcommand("run", "run a .fh program");
  run_cmd->add_option("file", o.file, "program file")->required();
  run_cmd->add_flag("--json", o.json, "one JSON object per line");
  run_cmd->add_option("--jobs", o.jobs, "concurrent requests")->check(CLI::PositiveNumber);

  CLI::App* hh_cmd = app.add_subcommand("hochschild", "Hochschild homology of a preset");
  add_common(hh_cmd, o, true);
  CLI::App* fh_cmd = app.add_subcommand("facthom", "factorization homology of a 1-manifold with preset coefficients");
  add_common(fh_cmd, o, true);
  fh_cmd->add_option("--manifold", o.manifold, "circle, interval, interval:aug, or a comma-separated disjoint union");
  CLI::App* layers_cmd = app.add_subcommand("layers", "cardinality filtration layers against Hochschild homology");
  add_common(layers_cmd, o, true);
  CLI::App* koszul_cmd = app.add_subcommand("koszul", "dimensions of the Koszul dual");
  add_common(koszul_cmd, o, true);

  CLI::App* check_cmd = app.add_subcommand("check", "run a consistency check");
  check_cmd->require_subcommand(1);
  CLI::App* c_exc = check_cmd->add_subcommand("excision", "cyclic bar against the enveloping-algebra tensor product");
  add_common(c_exc, o, true);
  CLI::App* c_free = check_cmd->add_subcommand("free", "configuration formula for free algebras");
  add_common(c_free, o, false);
  CLI::App* c_sym = check_cmd->add_subcommand("sym", "Hochschild homology of Sym V against Sym(V + V[1])");
  add_common(c_sym, o, false);
  CLI::App* c_pkd = check_cmd->add_subcommand("pkd", "Koszul duality over the circle");
  add_common(c_pkd, o, true);
  CLI::App* c_layers = check_cmd->add_subcommand("layers", "the layers report as a check");
  add_common(c_layers, o, true);

  std::vector<std::string> argv_store{"facthom"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return exit_ok;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return exit_usage;
  }

  try {
    if (run_cmd->parsed()) return run_program(o, out, err, env);

    const Field f = field_of(o);
    Emitter emitter(out, o.json, env.color);
    auto algebra = [&] { return std::make_shared<const GradedAlgebra>(preset_of(o, f)); };
    const std::string field_flag = " field " + f.name();

    if (hh_cmd->parsed() || fh_cmd->parsed()) {
      AlgebraPtr a = algebra();
      ManifoldExpr m = hh_cmd->parsed() ? ManifoldExpr::circle("A", a) : manifold_of(o.manifold, a);
      std::string req = (hh_cmd->parsed() ? "hochschild " : "facthom --manifold " + o.manifold + " ") + preset_text(o) +
                        " maxdeg " + std::to_string(o.max_deg) + field_flag;
      emitter.emit(guarded(req, {f.name(), o.max_deg, o.max_weight, o.max_deg, false}, [&](JobResult& r) {
        Evaluation e = evaluate({m, o.max_deg, f, o.json});
        r.metadata = metadata_for(f, o.max_deg, e.policy);
        r.table = std::move(e.table);
      }));
    } else if (koszul_cmd->parsed()) {
      const int w = weight_bound(o);
      std::string req = "koszul " + preset_text(o) + " weights <= " + std::to_string(w) + field_flag;
      emitter.emit(guarded(req, {f.name(), o.max_deg, w, o.max_deg, true}, [&](JobResult& r) {
        r.table = koszul_dual(*algebra(), w).dimension_table();
      }));
    } else if (layers_cmd->parsed() || c_layers->parsed()) {
      const int k = weight_bound(o);
      std::string req = std::string(c_layers->parsed() ? "check layers " : "layers ") + preset_text(o) +
                        " weights <= " + std::to_string(k) + field_flag;
      Metadata m{f.name(), k + 1, o.max_weight, k + 1, true};
      if (c_layers->parsed()) {
        emitter.emit(as_check(req, m, [&] { return filtration_report(*algebra(), k); }));
      } else {
        emitter.emit(guarded(req, m, [&](JobResult& r) { r.report = filtration_report(*algebra(), k); }));
      }
    } else if (c_exc->parsed()) {
      AlgebraPtr a = algebra();
      std::string req = "check excision " + preset_text(o) + " maxdeg " + std::to_string(o.max_deg) + field_flag;
      emitter.emit(as_check(req, metadata_for(f, o.max_deg, hochschild_truncation(*a, o.max_deg)),
                            [&] { return excision_check(a, o.max_deg); }));
    } else if (c_free->parsed()) {
      const int w = weight_bound(o);
      std::string req = "check free dim " + std::to_string(o.dim) + " deg " + std::to_string(o.deg) + " weights <= " +
                        std::to_string(w) + field_flag;
      emitter.emit(as_check(req, {f.name(), o.max_deg, w, o.max_deg, true},
                            [&] { return free_check(f, o.dim, o.deg, w); }));
    } else if (c_sym->parsed()) {
      const int w = weight_bound(o);
      std::string req = "check sym dim " + std::to_string(o.dim) + " deg " + std::to_string(o.deg) + " weights <= " +
                        std::to_string(w) + " maxdeg " + std::to_string(o.max_deg) + field_flag;
      emitter.emit(as_check(req, {f.name(), o.max_deg, w, o.max_deg, true},
                            [&] { return commutative_tensoring_check(f, o.dim, o.deg, w, o.max_deg); }));
    } else if (c_pkd->parsed()) {
      const int w = weight_bound(o);
      std::string req = "check pkd " + preset_text(o) + " weights <= " + std::to_string(w) + field_flag;
      emitter.emit(as_check(req, {f.name(), o.max_deg, w, o.max_deg, true}, [&] { return pkd_check(*algebra(), w); }));
    }
    return emitter.exit_code();
  } catch (const UsageError& e) {
    err << "facthom: " << e.what() << "\n";
    return exit_usage;
  }
}

}  // namespace facthom::cli
