// zdsg: count, enumerate, and verify zero-divisor semigroups whose graph is
// K_n or K_n with one end vertex.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "zdsg/enumerator.hpp"
#include "zdsg/errors.hpp"
#include "zdsg/export.hpp"
#include "zdsg/formulas.hpp"
#include "zdsg/report.hpp"

namespace {

using namespace zdsg;

struct Common {
  std::string graph = "kn";
  int n = 3;
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  bool allow_long_run = false;
  std::string cache_dir;
  std::string out;

  RunOptions run_options() const {
    RunOptions o;
    o.jobs = jobs;
    o.allow_long_run = allow_long_run;
    if (!cache_dir.empty()) o.cache_dir = cache_dir;
    return o;
  }

  TargetGraph target() const {
    return graph == "kn" ? TargetGraph::complete(n) : TargetGraph::complete_plus_end(n);
  }
};

void add_run_flags(CLI::App* cmd, Common& c) {
  cmd->add_option("--jobs", c.jobs, "Worker threads for the oracle")->check(CLI::PositiveNumber);
  cmd->add_flag("--allow-long-run", c.allow_long_run, "Run the oracle beyond the default budget");
  cmd->add_option("--cache-dir", c.cache_dir, "Directory for cached oracle catalogs");
}

void add_target(CLI::App* cmd, Common& c) {
  cmd->add_option("graph,--graph", c.graph, "Graph family: kn or kn1")
      ->check(CLI::IsMember({"kn", "kn1"}));
  cmd->add_option("n,--n", c.n, "Clique size")->check(CLI::Range(1, 8));
}

// Writes to --out if given, otherwise stdout.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw IoError("cannot open " + path + " for writing");
  f << text;
  if (!f) throw IoError("write to " + path + " failed");
}

std::pair<int, int> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(s);
      return {v, v};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("range must look like 3..4");
  }
}

std::optional<PendantSquare> parse_case(const std::string& s) {
  if (s == "all") return std::nullopt;
  if (s == "0") return PendantSquare::zero;
  if (s == "x1") return PendantSquare::pendant;
  if (s == "a1") return PendantSquare::neighbor;
  return PendantSquare::other;
}

int cmd_count(const Common& c, const std::string& method) {
  MethodSelection sel = MethodSelection::all();
  if (method == "formula") sel = MethodSelection::only(Method::formula);
  if (method == "generator") sel = MethodSelection::only(Method::generator);
  if (method == "oracle") sel = MethodSelection::only(Method::oracle);

  const CountReport r = run_count(c.target(), sel, c.run_options());
  std::cout << render_text(r);
  if (!c.out.empty()) emit(c.out, to_json(r).dump(1) + "\n");
  return r.internally_consistent() ? kExitOk : kExitMismatch;
}

int cmd_enumerate(const Common& c, const std::string& method, const std::string& format,
                  const std::string& case_filter) {
  const TargetGraph target = c.target();
  const bool pendant = target.family == GraphFamily::complete_plus_end;
  if (pendant && c.n < 3) throw UsageError("kn1 needs n >= 3");
  const auto only_case = parse_case(case_filter);
  if (only_case && !pendant) throw UsageError("--case applies to kn1 only");

  bool use_oracle = method == "oracle";
  if (method == "auto") use_oracle = oracle_within_budget(target) || c.allow_long_run;
  if (use_oracle && !oracle_within_budget(target) && !c.allow_long_run) {
    throw BudgetRefusal("the " + target.name() +
                        " oracle is beyond the default budget; pass --allow-long-run");
  }

  ClassCatalog all;
  if (use_oracle) {
    EnumerateOptions eo;
    eo.jobs = c.jobs;
    all = oracle_classes(target, eo);
  } else {
    all = pendant ? generate_pendant(c.n).catalog : generate_complete(c.n).catalog;
  }
  ClassCatalog chosen;
  for (const auto& [key, entry] : all.entries()) {
    if (!only_case || pendant_square_case(entry.representative) == *only_case) {
      chosen.insert(key, entry.multiplicity);
    }
  }

  std::ostringstream os;
  if (format == "json") {
    write_catalog_json(os, chosen);
  } else if (format == "csv") {
    write_catalog_csv(os, chosen, target);
  } else {
    write_catalog_dot(os, chosen, target);
  }
  emit(c.out, os.str());
  std::cerr << chosen.class_count() << " classes (" << (use_oracle ? "oracle" : "generator")
            << ")\n";
  return kExitOk;
}

int cmd_verify(const Common& c, const std::string& range) {
  const auto [lo, hi] = parse_range(range);
  const VerifyReport rep = run_verify(lo, hi, c.run_options());
  const std::string text = render_text(rep);
  std::cout << text;
  if (!c.out.empty()) emit(c.out, text);
  return rep.ok() ? kExitOk : kExitMismatch;
}

int cmd_export_dot(const Common& c) {
  const TargetGraph target = c.target();
  const SimpleGraph g = target_graph(target);
  emit(c.out, to_dot(g, vertex_labels(g)));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zero-divisor semigroups on K_n and K_n with one end vertex"};
  app.require_subcommand(1);

  Common common;
  std::string method = "all";
  std::string enum_method = "auto";
  std::string format = "json";
  std::string case_filter = "all";
  std::string range = "3..4";

  auto* count = app.add_subcommand("count", "Count isomorphism classes by formula, generator, oracle");
  add_target(count, common);
  count->add_option("method,--method", method, "formula, generator, oracle, or all")
      ->check(CLI::IsMember({"formula", "generator", "oracle", "all"}));
  count->add_option("--out", common.out, "Write the JSON report here");
  add_run_flags(count, common);

  auto* enumerate = app.add_subcommand("enumerate", "Write class representatives");
  add_target(enumerate, common);
  enumerate->add_option("out,--out", common.out, "Output path (stdout if omitted)");
  enumerate->add_option("format,--format", format, "json, csv, or dot")
      ->check(CLI::IsMember({"json", "csv", "dot"}));
  enumerate->add_option("--method", enum_method, "auto, generator, or oracle")
      ->check(CLI::IsMember({"auto", "generator", "oracle"}));
  enumerate->add_option("--case", case_filter, "kn1 only: all, 0, x1, a1, a2")
      ->check(CLI::IsMember({"all", "0", "x1", "a1", "a2"}));
  add_run_flags(enumerate, common);

  auto* verify = app.add_subcommand("verify", "Run every cross-check for n in a range");
  verify->add_option("range,--n", range, "Range such as 3..4");
  verify->add_option("--out", common.out, "Also write the text report here");
  add_run_flags(verify, common);

  auto* dot = app.add_subcommand("export-dot", "Write the target graph in DOT");
  add_target(dot, common);
  dot->add_option("--out", common.out, "Output path (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (count->parsed()) return cmd_count(common, method);
    if (enumerate->parsed()) return cmd_enumerate(common, enum_method, format, case_filter);
    if (verify->parsed()) return cmd_verify(common, range);
    if (dot->parsed()) return cmd_export_dot(common);
  } catch (const BudgetRefusal& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitUsage;
}
