// grasscode: enumerate subspaces, export code graphs, run verification suites.
//
// Exit codes: 0 pass, 1 assertion failure, 2 usage error, 3 budget exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "grasscode/code_graph.hpp"
#include "grasscode/graph_io.hpp"
#include "grasscode/suites.hpp"

namespace {

using namespace grasscode;

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kBudget = 3 };

struct UsageError : Error {
  using Error::Error;
};

std::uint64_t env_budget() {
  const char* env = std::getenv("GRASSCODE_BUDGET");
  if (!env || !*env) return kDefaultVertexBudget;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(env, &used);
    if (used != std::string(env).size() || v == 0) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw UsageError("GRASSCODE_BUDGET must be a positive integer");
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw Error("write to '" + path + "' failed");
}

struct Common {
  int q = 2, n = 0, k = 0;
  std::optional<std::uint64_t> budget;
  std::uint64_t effective_budget() const { return budget ? *budget : env_budget(); }
};

int cmd_enum(const Common& c, bool nondeg, const std::string& out_path) {
  const auto params = GrassmannianParams::make(c.n, c.k, c.q, c.effective_budget());
  params.require_budget();
  std::string text;
  std::uint64_t count = 0;
  for_each_subspace(params, [&](const Subspace& x) {
    if (nondeg && !is_nondegenerate(x)) return;
    text += x.to_string();
    text += '\n';
    ++count;
  });
  text += "count=" + std::to_string(count) + "\n";
  write_text(out_path, text);
  return kPass;
}

int cmd_graph(const Common& c, const std::string& variant_name, const std::string& format,
              const std::string& out_path, const std::string& labels_path) {
  const auto params = GrassmannianParams::make(c.n, c.k, c.q, c.effective_budget());
  Variant variant;
  try {
    variant = parse_variant(variant_name);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  if (variant == Variant::custom) throw UsageError("variant 'custom' cannot be built from the command line");
  if (variant == Variant::dual_nondeg && c.n != 2 * c.k) throw UsageError("dual-nondeg requires n = 2k");
  const Graph g = build_graph(params, variant);
  write_text(out_path, format == "graph6" ? to_graph6(g) : to_dimacs(g));
  std::string labels = labels_path;
  if (labels.empty() && !out_path.empty() && out_path != "-") labels = out_path + ".labels";
  if (!labels.empty()) write_text(labels, vertex_labels(g));
  return kPass;
}

int cmd_verify(const std::string& suite, SuiteConfig cfg, const std::string& out_path) {
  if (suite != "all" && !is_suite(suite)) throw UsageError("unknown suite '" + suite + "'");
  const SuiteResult r = suite == "all" ? run_all(cfg) : run_suite(suite, cfg);
  write_text(out_path, r.report.dump(2) + "\n");
  if (r.budget_exceeded) {
    std::cerr << "time budget exhausted before a verdict\n";
    return kBudget;
  }
  return r.pass ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-degenerate linear codes and their Grassmann graphs"};
  app.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App* sub, bool need_nk) {
    sub->add_option("--q", common.q, "field order")->capture_default_str();
    auto* n = sub->add_option("--n", common.n, "ambient dimension");
    auto* k = sub->add_option("--k", common.k, "subspace dimension");
    if (need_nk) {
      n->required();
      k->required();
    }
    sub->add_option("--budget", common.budget, "vertex budget (overrides GRASSCODE_BUDGET)")
        ->check(CLI::PositiveNumber);
  };

  auto* en = app.add_subcommand("enum", "list subspaces, one per line, then count=N");
  add_common(en, true);
  bool nondeg = false;
  std::string enum_out;
  en->add_flag("--nondeg", nondeg, "only non-degenerate codes");
  en->add_option("--out", enum_out, "output file (default stdout)");

  auto* gr = app.add_subcommand("graph", "export a code graph");
  add_common(gr, true);
  std::string variant = "nondeg", format = "graph6", graph_out, labels_out;
  gr->add_option("--variant", variant, "full | nondeg | dual-nondeg")->capture_default_str();
  gr->add_option("--format", format, "graph6 | dimacs")
      ->check(CLI::IsMember({"graph6", "dimacs"}))
      ->capture_default_str();
  gr->add_option("--out", graph_out, "output file (default stdout); labels go to <out>.labels");
  gr->add_option("--labels", labels_out, "vertex label file");

  auto* ve = app.add_subcommand("verify", "run a verification suite and print a JSON report");
  std::string suite, verify_out;
  std::optional<int> vq, vn, vk;
  SuiteConfig cfg;
  std::optional<std::uint64_t> verify_budget;
  ve->add_option("--suite", suite, "suite name or 'all'")->required();
  ve->add_option("--q", vq, "restrict to field order q");
  ve->add_option("--n", vn, "restrict to ambient dimension n");
  ve->add_option("--k", vk, "restrict to dimension k");
  ve->add_option("--out", verify_out, "report file (default stdout)");
  ve->add_option("--seed", cfg.seed, "seed for random map sampling")->capture_default_str();
  ve->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  ve->add_flag("--long", cfg.long_run, "include the (q,n,k) = (2,9,2) distance case");
  ve->add_option("--budget", verify_budget, "vertex budget (overrides GRASSCODE_BUDGET)")
      ->check(CLI::PositiveNumber);
  ve->add_option("--time-budget", cfg.time_budget_seconds, "seconds per distance case, 0 for none")
      ->check(CLI::NonNegativeNumber);
  ve->add_option("--samples", cfg.samples, "random maps per grid point")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }

  try {
    if (*en) return cmd_enum(common, nondeg, enum_out);
    if (*gr) return cmd_graph(common, variant, format, graph_out, labels_out);
    cfg.q = vq;
    cfg.n = vn;
    cfg.k = vk;
    cfg.vertex_budget = verify_budget ? *verify_budget : env_budget();
    return cmd_verify(suite, cfg, verify_out);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    // invalid parameters (unsupported q, k out of range, ...)
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
