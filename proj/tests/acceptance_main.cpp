// Acceptance gate: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstring>
#include <iostream>

#include "freecurve/verify.hpp"

using namespace freecurve;

namespace {

struct CriterionResult {
  bool pass = false;
  double seconds = 0.0;
  std::string detail;
};

struct Gate {
  int failures = 0;

  void report(int num, const std::string& name, const CriterionResult& r) {
    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << num << ": " << name << " (" << r.seconds
              << " s)";
    if (!r.detail.empty()) std::cout << "  -- " << r.detail;
    std::cout << "\n" << std::flush;
    if (!r.pass) ++failures;
  }
};

CriterionResult run_suites(VerifyContext& vc, const std::vector<std::string>& suites,
                           double budget_seconds, VerificationOutcome* keep = nullptr) {
  CriterionResult res;
  auto t0 = std::chrono::steady_clock::now();
  long failed = 0, total = 0;
  std::string first_failure;
  try {
    for (const auto& s : suites) {
      VerificationOutcome o = run_suite(s, vc);
      failed += o.failed();
      total += o.total();
      for (const auto& c : o.claims)
        if (!c.pass && first_failure.empty())
          first_failure = c.claim + ": expected " + c.expected + ", computed " + c.computed;
      if (keep) *keep = std::move(o);
    }
  } catch (const std::exception& e) {
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    res.detail = std::string("exception: ") + e.what();
    return res;
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool in_budget = budget_seconds <= 0 || res.seconds < budget_seconds;
  res.pass = failed == 0 && in_budget;
  std::string detail = std::to_string(total - failed) + "/" + std::to_string(total) + " claims";
  if (!in_budget)
    detail += "; over budget (" + std::to_string(budget_seconds) + " s)";
  if (!first_failure.empty()) detail += "; first failure: " + first_failure;
  res.detail = detail;
  return res;
}

}  // namespace

int main(int argc, char** argv) {
  VerifyOptions opts;
  opts.crosscheck_small = true;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--stretch") == 0) opts.stretch = true;
    if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) opts.seed = std::strtoull(argv[++i], nullptr, 10);
  }
  VerifyContext vc(opts);
  Gate gate;

  gate.report(1, "two-cusp series k=2..5: free, tau=3k^2, exponents (k,k), templates",
              run_suites(vc, {"thm2ii"}, 5.0));
  gate.report(2, "recursion curves: printed forms, freeness, tau, template relation",
              run_suites(vc, {"prop2i"}, 30.0));
  gate.report(3, "one-cusp family d=5..9: free, tau, exponents", run_suites(vc, {"stfam"}, 10.0));
  gate.report(4, "tricuspidal curves d=5..10: construction, free, d1=2, tau",
              run_suites(vc, {"prop3"}, 60.0));
  gate.report(5, "unicuspidal (k,4k-1) series: free for k=3..6, quartic not free",
              run_suites(vc, {"prop4i"}, 60.0));
  gate.report(6, "Fibonacci-degree series k<=2: (d,tau,d1) table",
              run_suites(vc, {"prop4ii"}, opts.stretch ? 4000.0 : 300.0));
  gate.report(7, "line arrangements: tau = 27/37/49, exponents", run_suites(vc, {"arrangements"}, 10.0));
  gate.report(8, "pencil union: free, pinned tau and exponents", run_suites(vc, {"valles"}, 60.0));

  VerificationOutcome identities;
  gate.report(9, "identity suite over the corpus plus 20 random curves",
              run_suites(vc, {"identities"}, 0.0, &identities));

  {
    CriterionResult res;
    long matched = 0;
    for (const auto& c : identities.claims) {
      if (c.claim == "threshold-sum probe" || c.claim == "family freeness probe") {
        ++matched;
        if (!c.pass) res.detail += c.claim + " has counterexamples: " + c.computed + "; ";
      }
    }
    res.pass = matched == 2 && res.detail.empty();
    if (res.pass) res.detail = "no counterexamples";
    gate.report(10, "conjecture probes report zero counterexamples", res);
  }

  {
    CriterionResult res;
    res.pass = vc.ctx.stats.checks > 0 && vc.ctx.stats.mismatches == 0;
    res.detail = std::to_string(vc.ctx.stats.checks) + " small matrices cross-checked, " +
                 std::to_string(vc.ctx.stats.mismatches) + " mismatches";
    gate.report(11, "fraction-free oracle agrees with the multi-modular ranks", res);
  }

  std::cout << (gate.failures == 0 ? "acceptance: all criteria pass"
                                   : "acceptance: " + std::to_string(gate.failures) + " criteria FAILED")
            << "\n";
  return gate.failures == 0 ? 0 : 1;
}
