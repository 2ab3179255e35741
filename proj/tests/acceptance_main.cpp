// Acceptance suite: every criterion below is exact (tolerance zero), prints
// one PASS/FAIL line, and the binary exits nonzero if anything failed.

#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "ncomm/verifier.hpp"
#include "oracles.hpp"

using namespace ncomm;

namespace {

struct Criterion {
  std::string label;
  std::function<bool(std::string& detail)> run;
};

bool scenario_passed(const Report& report, const std::string& name, std::string& detail) {
  for (const ScenarioResult& s : report.scenarios) {
    if (s.name != name) continue;
    if (s.status == Status::pass) {
      detail = std::to_string(s.assertions.size()) + " exact assertions";
      return true;
    }
    detail = "scenario " + name + " " + to_string(s.status);
    for (const Assertion& a : s.assertions)
      if (!a.ok) detail += "; " + a.description + " (expected " + a.expected + ", got " + a.got + ")";
    return false;
  }
  detail = "scenario " + name + " missing from the report";
  return false;
}

}  // namespace

int main() {
  VerifierConfig config;
  config.seed = 1;
  config.fuzz_samples = 2000;

  Report report = run_all(config);

  std::vector<Criterion> criteria;

  criteria.push_back({"01 identity fuzzer, 10^4 samples per identity, zero failures",
                      [&](std::string& detail) {
                        const std::vector<std::string> required{
                            "eq1_n3", "eq1_n5", "eq2_n3", "eq2_n5", "eq3_n3", "eq3_n4",
                            "eq3_n5", "eq4_n3", "eq4_n4", "eq4_n5", "lemma6_2", "prop4_2_j1",
                            "prop4_2_j2", "thm3_7", "beta_lemma6_2"};
                        VerifierConfig heavy = config;
                        heavy.fuzz_samples = 10000;
                        ScenarioResult fuzz = scenarios::fuzz_identities(heavy);
                        if (fuzz.status != Status::pass) {
                          detail = "fuzzer reported failures:";
                          for (const auto& w : fuzz.witnesses) detail += " " + w;
                          return false;
                        }
                        for (const std::string& name : required) {
                          bool covered = false;
                          for (const Assertion& a : fuzz.assertions)
                            covered = covered || a.description.rfind(name + " on", 0) == 0;
                          if (!covered) {
                            detail = "identity " + name + " was never exercised";
                            return false;
                          }
                        }
                        detail = std::to_string(fuzz.assertions.size()) +
                                 " identity/ring combinations, all clean";
                        return true;
                      }});

  auto from_scenario = [&](const std::string& label, const std::string& scenario) {
    criteria.push_back({label, [&report, scenario](std::string& detail) {
                          return scenario_passed(report, scenario, detail);
                        }});
  };
  from_scenario("02 odd-arity bracket subgroups are ideals on every default ring", "thm2_1");
  from_scenario("03 even matrix ring: 4e12 separates [R,R] from [R,R,R]", "example1");
  from_scenario("04 strict upper triangulars: brackets equal ring powers, strict chain",
                "example2");
  from_scenario("05 idempotent span: commutator ideal structure", "thm3_10_example3");
  criteria.push_back({"06 unital rings: arity 3..5 brackets equal I([R,R]); prop3_5 equality",
                      [&](std::string& detail) {
                        std::string d1, d2;
                        bool a = scenario_passed(report, "thm3_7_cor3_8", d1);
                        bool b = scenario_passed(report, "prop3_5", d2);
                        detail = d1 + "; " + d2;
                        return a && b;
                      }});
  from_scenario("07 simple matrix rings equal their bracket subgroups, [R,R] proper",
                "thm4_4_cor4_13");
  from_scenario("08 Z*I + M2(2Z): identity never a bracket value, ideal inside 4Z lattice",
                "example7");
  from_scenario("09 M2(4Z): N^2 = 16Z lattice, strict 2^k chain", "example8");
  from_scenario("10 herstein kernel: nonzero noncommutative ideal inside brackets",
                "thm4_11_cor4_12");
  from_scenario("11 closures of 100 random seeds fill the simple rings, zero exceptions",
                "thm5_1_instances");
  from_scenario("12 beta-twisted arity-3 brackets fill M2(GF(5)) for every unit beta", "cor8_5");

  criteria.push_back(
      {"13 grid power values equal exhaustive enumeration (k = 2, 3, 4)",
       [&](std::string& detail) {
         int checked = 0;
         for (const Ring& ring : default_ring_set()) {
           if (!oracles::enumerable(ring, 4096)) continue;
           for (unsigned k : {2u, 3u, 4u}) {
             Subgroup grid = power_values_subgroup(ring, k);
             Subgroup brute = oracles::power_values_by_enumeration(ring, k);
             if (grid != brute) {
               detail = ring.name() + " at k = " + std::to_string(k) + ": grid rank " +
                        std::to_string(grid.rank()) + " vs enumeration rank " +
                        std::to_string(brute.rank());
               return false;
             }
             ++checked;
           }
         }
         detail = std::to_string(checked) + " (ring, k) pairs agree exactly";
         return checked > 0;
       }});

  criteria.push_back(
      {"14 canonical bases are presentation-independent; reports are byte-stable",
       [&](std::string& detail) {
         Rng rng(2026);
         int checked = 0;
         for (const Ring& ring : default_ring_set()) {
           Budgets budgets = scenarios::wide_budgets();
           for (const Subgroup& s :
                {scenarios::bracket_pow(ring, 2, budgets),
                 scenarios::bracket_pow(ring, 3, budgets),
                 scenarios::commutator_ideal(ring, budgets)}) {
             std::vector<Vec> gens = s.rows();
             if (gens.empty()) continue;
             gens.push_back(gens[rng.below(gens.size())]);
             Vec neg = gens[rng.below(gens.size())];
             for (Int& x : neg) x = -x;
             gens.push_back(neg);
             std::rotate(gens.begin(), gens.begin() + rng.below(gens.size()), gens.end());
             if (Subgroup::span(ring, gens).rows() != s.rows()) {
               detail = "permuted generators changed the canonical basis in " + ring.name();
               return false;
             }
             ++checked;
           }
         }
         Report second = run_all(config);
         if (report_to_json(report).dump(2) != report_to_json(second).dump(2)) {
           detail = "rerunning the suite with the same seed changed the JSON report";
           return false;
         }
         detail = std::to_string(checked) + " subgroups stable; JSON rerun byte-identical";
         return true;
       }});

  criteria.push_back(
      {"15 no assertion decides whether even-arity bracket subgroups are ideals",
       [&](std::string& detail) {
         // Odd arities may be asserted (criterion 02); evens only ever appear
         // behind an observed is_ideal guard, never as an ideal claim.
         int scanned = 0;
         for (const ScenarioResult& s : report.scenarios) {
           for (const Assertion& a : s.assertions) {
             ++scanned;
             bool mentions_even = a.description.find("arity-2 ") != std::string::npos ||
                                  a.description.find("arity-4 ") != std::string::npos ||
                                  a.description.find("arity-6 ") != std::string::npos ||
                                  a.description.find("arity 2") != std::string::npos;
             bool claims_ideal = a.description.find("is a two-sided ideal") != std::string::npos ||
                                 a.description.find("is an ideal") != std::string::npos ||
                                 a.description.find("is not an ideal") != std::string::npos;
             if (mentions_even && claims_ideal) {
               detail = "found a forbidden assertion: " + a.description;
               return false;
             }
           }
         }
         detail = std::to_string(scanned) + " assertions scanned, none decides the open question";
         return true;
       }});

  int failures = 0;
  for (const Criterion& c : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << c.label;
    if (!detail.empty()) std::cout << " -- " << detail;
    std::cout << "\n";
    if (!ok) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}
