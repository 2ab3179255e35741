// Command-line front door: validate ring files, run computations, run the
// scenario suite and the identity fuzzer, emit reports.
//
// Exit codes: 0 = success / all checks passed, 1 = a mathematical check
// failed, 2 = usage or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ncomm/algebra.hpp"
#include "ncomm/brackets.hpp"
#include "ncomm/catalog.hpp"
#include "ncomm/identities.hpp"
#include "ncomm/report.hpp"
#include "ncomm/ringfile.hpp"
#include "ncomm/verifier.hpp"

namespace {

using namespace ncomm;

Budgets budgets_from_env() {
  Budgets b;
  if (const char* v = std::getenv("NCOMM_TUPLE_BUDGET")) b.tuples = std::strtoull(v, nullptr, 10);
  if (const char* v = std::getenv("NCOMM_ENUM_BUDGET"))
    b.enumeration = std::strtoull(v, nullptr, 10);
  return b;
}

Ring load_ring(const std::string& source) {
  const std::string prefix = "builtin:";
  if (source.rfind(prefix, 0) == 0) return catalog_ring(source.substr(prefix.size()));
  std::ifstream in(source);
  if (!in) throw BadParameter("cannot open ring file '" + source + "'");
  return make_ring(parse_ring_presentation(in));
}

void print_subgroup(const Ring& ring, const Subgroup& s) {
  std::cout << "rank " << s.rank() << "\n";
  for (const Vec& row : s.rows()) std::cout << "  " << format_element(ring, row) << "\n";
}

std::vector<Vec> parse_elems(const Ring& ring, const std::string& csv) {
  std::vector<Vec> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t comma = csv.find(',', start);
    std::string piece =
        comma == std::string::npos ? csv.substr(start) : csv.substr(start, comma - start);
    if (!piece.empty()) out.push_back(parse_element(ring, piece));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw BadParameter("no elements given");
  return out;
}

int cmd_validate(const std::string& file) {
  Ring ring = load_ring(file);
  std::cout << "ok: " << ring.name() << ", dim " << ring.dim() << ", modulus "
            << ring.modulus().str() << (ring.unity() ? ", unital" : "") << "\n";
  return 0;
}

int cmd_compute(const std::string& source, const std::string& op, int n, int pos,
                long long beta, const std::string& elems) {
  Ring ring = load_ring(source);
  Budgets budgets = budgets_from_env();
  if (op == "bracket") {
    std::vector<Vec> xs = parse_elems(ring, elems);
    if (n > 0 && static_cast<std::size_t>(n) != xs.size())
      throw BadParameter("--n disagrees with the number of elements");
    std::cout << format_element(ring, bracket_vec(ring, xs, beta)) << "\n";
  } else if (op == "ideal") {
    Subgroup t = Subgroup::span(ring, parse_elems(ring, elems));
    print_subgroup(ring, ideal_generated(ring, t, budgets));
  } else if (op == "center") {
    print_subgroup(ring, center(ring));
  } else if (op == "closure") {
    if (n < 2) throw BadParameter("closure needs --n >= 2");
    BracketSpec spec(n, pos, beta, ring.modulus());
    Subgroup seed = Subgroup::span(ring, parse_elems(ring, elems));
    print_subgroup(ring, n_gen_lie_closure(ring, seed, spec, budgets));
  } else if (op == "power") {
    if (n < 1) throw BadParameter("power needs --n >= 1");
    print_subgroup(ring, power_subgroup(ring, static_cast<std::size_t>(n)));
  } else {
    throw BadParameter("unknown op '" + op + "'");
  }
  return 0;
}

int cmd_check(const std::string& name, const VerifierConfig& config, const std::string& json_path,
              bool timings) {
  Report report;
  if (name == "all") {
    report = run_all(config);
  } else {
    VerifierConfig one = config;
    one.only = {name};
    report = run_all(one);
  }
  std::cout << report_to_table(report, timings);
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw BadParameter("cannot write '" + json_path + "'");
    out << report_to_json(report, timings).dump(2) << "\n";
  }
  return report.all_passed() ? 0 : 1;
}

int cmd_fuzz(std::uint64_t seed, int iters, int box) {
  VerifierConfig config;
  config.seed = seed;
  config.fuzz_samples = iters;
  config.fuzz_box = box;
  ScenarioResult result = run_scenario("fuzz_identities", config);
  Report report;
  report.seed = seed;
  report.scenarios.push_back(result);
  std::cout << report_to_table(report);
  for (const std::string& w : result.witnesses) std::cout << "  witness: " << w << "\n";
  return result.status == Status::fail ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for generalized commutators in structure-constant rings"};
  app.require_subcommand(1);

  std::string file, source, op = "bracket", elems, name = "all", json_path;
  int n = 0, pos = 0, iters = 10000, box = 9;
  long long beta = 1;
  std::uint64_t seed = 1;
  bool selftest = false, timings = false;

  CLI::App* validate = app.add_subcommand("validate", "parse and validate a ring file");
  validate->add_option("file", file, "ring presentation file")->required();

  CLI::App* compute = app.add_subcommand("compute", "run one computation and print the result");
  compute->add_option("--ring", source, "ring file path or builtin:<name>")->required();
  compute->add_option("--op", op, "bracket | ideal | center | closure | power")->required();
  compute->add_option("--n", n, "bracket arity / power exponent");
  compute->add_option("--pos", pos, "distinguished slot position r (0-based)");
  compute->add_option("--beta", beta, "bracket twist scalar");
  compute->add_option("--elems", elems, "comma-separated elements, e.g. 2e12,2e22");

  CLI::App* check = app.add_subcommand("check", "run named scenario or the whole suite");
  check->add_option("name", name, "scenario name or 'all'");
  check->add_option("--json", json_path, "write the machine-readable report here");
  check->add_option("--seed", seed, "seed for the randomized parts");
  check->add_option("--fuzz-iters", iters, "fuzz samples per identity")->capture_default_str();
  check->add_flag("--selftest", selftest, "enable the deliberately failing fuzz identity");
  check->add_flag("--timings", timings, "include elapsed milliseconds in the JSON report");

  CLI::App* fuzz = app.add_subcommand("fuzz", "run the identity fuzzer");
  fuzz->add_option("--iters", iters, "samples per identity")->capture_default_str();
  fuzz->add_option("--seed", seed, "rng seed")->required();
  fuzz->add_option("--box", box, "coordinate box for rings over Z")->capture_default_str();

  CLI::App* report_cmd = app.add_subcommand("report", "run everything and write a JSON report");
  report_cmd->add_option("--json", json_path, "output path")->required();
  report_cmd->add_option("--seed", seed, "seed for the randomized parts");
  report_cmd->add_option("--fuzz-iters", iters, "fuzz samples per identity")
      ->capture_default_str();
  report_cmd->add_flag("--timings", timings, "include elapsed milliseconds in the JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (validate->parsed()) return cmd_validate(file);
    if (compute->parsed()) return cmd_compute(source, op, n, pos, beta, elems);
    VerifierConfig config;
    config.seed = seed;
    config.fuzz_box = box;
    config.selftest = selftest;
    if (check->parsed()) {
      // `check` keeps a lighter default fuzz volume; `fuzz` does the full run
      config.fuzz_samples = check->count("--fuzz-iters") ? iters : 2000;
      return cmd_check(name, config, json_path, timings);
    }
    if (fuzz->parsed()) return cmd_fuzz(seed, iters, box);
    if (report_cmd->parsed()) {
      config.fuzz_samples = iters;
      return cmd_check("all", config, json_path, timings);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
