#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pga/crossratio.hpp"
#include "pga/error.hpp"
#include "pga/report.hpp"
#include "pga/verify.hpp"

namespace {

struct Flags {
  std::string input = "-";
  int dim = 3;
  int trials = 100;
  std::uint64_t seed = 42;
  double tol = 0.0;  // 0 means: document tolerance, else the default
  std::string config = "all";
  bool json = false;
  bool affine = false;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw pga::Error(pga::ErrorKind::parse, "cannot open input file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

double tolerance(const Flags& f, const pga::InputDocument& doc) {
  if (f.tol > 0.0) return f.tol;
  return doc.tolerance.value_or(pga::kDefaultTolerance);
}

void emit(const Flags& f, const pga::ReportDocument& r) {
  std::fputs((f.json ? pga::to_json(r) : pga::to_text(r)).c_str(), stdout);
}

int compute(const Flags& f) {
  const auto doc = pga::parse_input(read_input(f.input));
  const double tol = tolerance(f, doc);
  const auto result = f.affine ? pga::affine_ratio(doc.quad(), tol) : pga::cross_ratio(doc.quad(), tol);
  emit(f, pga::make_report(result, doc.dimension, tol));
  return 0;
}

int classify(const Flags& f) {
  const auto doc = pga::parse_input(read_input(f.input));
  const double tol = tolerance(f, doc);
  emit(f, pga::make_report(pga::analyze_pencil(doc.quad(), tol), doc.dimension, tol));
  return 0;
}

int verify(const Flags& f) {
  pga::VerifyOptions opts;
  opts.dim = f.dim;
  opts.trials = f.trials;
  opts.seed = f.seed;
  if (f.tol > 0.0) opts.tol = f.tol;
  if (f.config != "all") {
    opts.config = pga::parse_variant(f.config);
    if (!opts.config) throw pga::Error(pga::ErrorKind::parse, "unknown configuration " + f.config);
  }
  const auto report = pga::run_verify(opts);
  std::fputs((f.json ? pga::to_json(report) : pga::to_text(report)).c_str(), stdout);
  return report.all_passed() ? 0 : pga::kExitVerifyFailed;
}

int table(const Flags& f) {
  std::fputs(pga::render_tables(f.dim).c_str(), stdout);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cross-ratios of points, hyperplanes and flats in n-dimensional PGA"};
  app.require_subcommand(1);
  Flags f;

  auto* c = app.add_subcommand("compute", "Cross-ratio of the four objects in a JSON document");
  auto* k = app.add_subcommand("classify", "Configuration of the four objects, without the value");
  auto* v = app.add_subcommand("verify", "Randomized oracle, duality, motor and collapse suites");
  auto* t = app.add_subcommand("table", "Print the pairwise measure tables");

  for (auto* sub : {c, k}) {
    sub->add_option("--input", f.input, "JSON document path, - for standard input");
    sub->add_option("--tol", f.tol, "Relative tolerance (overrides the document)");
    sub->add_flag("--json", f.json, "Machine-readable report");
  }
  c->add_flag("--affine", f.affine, "Three finite points and one ideal point: affine ratio");
  v->add_option("--dim", f.dim, "Euclidean dimension n")->check(CLI::Range(2, 16));
  v->add_option("--trials", f.trials, "Trials per suite and configuration")->check(CLI::NonNegativeNumber);
  v->add_option("--seed", f.seed, "Random seed");
  v->add_option("--tol", f.tol, "Relative tolerance of the value suites");
  v->add_option("--config", f.config, "Configuration name or all");
  v->add_flag("--json", f.json, "Machine-readable report");
  t->add_option("--dim", f.dim, "Euclidean dimension n")->check(CLI::Range(2, 30));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*c) return compute(f);
    if (*k) return classify(f);
    if (*v) return verify(f);
    return table(f);
  } catch (const pga::Error& e) {
    if (f.json) std::fputs(pga::to_json(e).c_str(), stdout);
    std::fprintf(stderr, "error: %s: %s\n", std::string(pga::to_string(e.kind())).c_str(), e.what());
    return pga::exit_code(e.kind());
  }
}
