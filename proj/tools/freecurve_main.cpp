#include <CLI11.hpp>

#include <unistd.h>

#include <fstream>
#include <iostream>

#include "freecurve/json_io.hpp"
#include "freecurve/parser.hpp"
#include "freecurve/verify.hpp"

namespace fc = freecurve;

namespace {

fc::Rational parse_rational_arg(const std::string& text) {
  fc::ParseResult r = fc::parse_expression(text);
  if (!r.ok()) throw fc::InputError("bad rational '" + text + "': " + r.diagnostic->message);
  if (r.poly->is_zero()) return fc::Rational(0);
  if (r.poly->degree() != 0) throw fc::InputError("'" + text + "' is not a rational constant");
  return r.poly->terms().front().second;
}

std::vector<fc::Rational> parse_coeff_list(const std::string& text) {
  std::vector<fc::Rational> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, ',')) out.push_back(parse_rational_arg(cur));
  return out;
}

struct FamilyArgs {
  std::string id;
  int d = 0, k = -1, j = -1;
  std::string a, b, c;
  std::string which = "d9";
  std::string coeffs;
  bool stretch = false;
};

fc::CurveSpec build_family(const FamilyArgs& fa) {
  const std::string& id = fa.id;
  auto coeffs_or = [&](std::size_t n, bool last_one) {
    if (!fa.coeffs.empty()) {
      auto v = parse_coeff_list(fa.coeffs);
      if (v.size() != n)
        throw fc::InputError("expected " + std::to_string(n) + " coefficients, got " +
                             std::to_string(v.size()));
      return v;
    }
    std::vector<fc::Rational> v(n, fc::Rational(0));
    if (last_one && n) v.back() = fc::Rational(1);
    return v;
  };
  if (id == "stfam") {
    int d = fa.d > 0 ? fa.d : 7;
    fc::Rational a = fa.a.empty() ? fc::Rational(1) : parse_rational_arg(fa.a);
    fc::Rational b = fa.b.empty() ? fc::Rational(0) : parse_rational_arg(fa.b);
    fc::Rational c = fa.c.empty() ? fc::Rational(0) : parse_rational_arg(fa.c);
    return fc::gen_stfam(d, a, b, c);
  }
  if (id == "valles") return fc::gen_valles_pencil();
  if (id == "prop1") {
    int k = fa.k >= 0 ? fa.k : 2;
    return fc::gen_prop1(k, coeffs_or(k + 1, true));
  }
  if (id == "prop2i") return fc::gen_prop2i(fa.d > 0 ? fa.d : 6);
  if (id == "prop2ii") {
    int k = fa.k >= 0 ? fa.k : 2;
    return fc::gen_prop2ii(k, coeffs_or(std::max(0, k - 1), true));
  }
  if (id == "thm2ii") return fc::gen_thm2ii(fa.k >= 0 ? fa.k : 2);
  if (id == "prop2iii") {
    int k = fa.k >= 0 ? fa.k : 1;
    int j = fa.j >= 0 ? fa.j : 1;
    return fc::gen_prop2iii(k, j, coeffs_or(k + j, true));
  }
  if (id == "prop3") {
    int a = fa.a.empty() ? 2 : std::stoi(fa.a);
    int b = fa.b.empty() ? 1 : std::stoi(fa.b);
    return fc::gen_prop3(a, b);
  }
  if (id == "prop4i") return fc::gen_prop4i(fa.k >= 0 ? fa.k : 3);
  if (id == "prop4ii") {
    int k = fa.k >= 0 ? fa.k : 1;
    if (k >= 3 && !fa.stretch) throw fc::InputError("prop4ii with k >= 3 needs --stretch");
    return fc::gen_prop4ii(k);
  }
  if (id == "arrangement") return fc::gen_line_arrangement(fa.which);
  throw fc::InputError("unknown family '" + id + "'; see 'freecurve families list'");
}

bool want_json(bool json_flag) { return json_flag || !isatty(STDOUT_FILENO); }

std::string opt_str(const std::optional<int>& v) { return v ? std::to_string(*v) : "infinite"; }

void print_analysis_table(const std::string& id, const fc::TriPoly& f, const fc::Analysis& a) {
  const auto& p = a.profile;
  const auto& r = a.report;
  std::cout << "curve        " << id << "\n";
  std::cout << "poly         " << f.str() << "\n";
  std::cout << "degree d     " << p.d << "    socle degree T = " << p.T << "\n";
  std::cout << "tau          " << p.tau << (p.plateau_verified ? "" : "   [plateau NOT verified]")
            << "\n";
  std::cout << "ct / st / mdr  " << opt_str(p.ct) << " / " << p.st << " / " << opt_str(p.mdr)
            << "\n";
  std::cout << "free         " << (r.free ? "yes" : "no") << "   (balance "
            << (r.criterion_ii ? "yes" : "no") << ", midpoint " << (r.criterion_iii ? "yes" : "no")
            << ")\n";
  if (r.d1) std::cout << "exponents    (" << *r.d1 << ", " << *r.d2 << ")\n";
  std::cout << "delta        " << r.delta << "\n";
  std::cout << "rigid        " << (r.rigid ? (*r.rigid ? "yes" : "no") : "unknown") << "\n";
  std::cout << "ct+st == T   " << (r.conj10_holds ? "yes" : "no") << "\n";
  if (r.euler.computed) {
    std::cout << "E(C) / E(U)  " << r.euler.euler_curve << " / " << r.euler.euler_complement
              << "   rational-cuspidal consistent: "
              << (r.euler.rational_cuspidal_consistent ? "yes" : "no") << "\n";
  }
  std::cout << "m            ";
  for (long v : p.m) std::cout << v << " ";
  std::cout << "\n";
  std::cout << "ar           ";
  for (long v : p.ar) std::cout << v << " ";
  std::cout << "\n";
  std::cout << "defects      ";
  for (std::size_t j = 0; j < a.defects.n.size(); ++j) {
    if (a.defects.n[j])
      std::cout << *a.defects.n[j];
    else
      std::cout << "?";
    std::cout << (j + 1 < a.defects.n.size() ? " " : "");
  }
  std::cout << "\n";
  for (const auto& note : r.notes) std::cout << "note: " << note << "\n";
}

int cmd_analyze(const std::string& poly_text, const FamilyArgs& fa, int affine_degree,
                const std::string& field, const std::string& saturation, int kmax, bool json_flag,
                std::uint64_t seed, bool irreducible_flag) {
  fc::TriPoly f;
  std::string id;
  fc::AnalysisOptions aopts;
  if (!poly_text.empty()) {
    fc::ParseResult r = fc::parse_expression(poly_text);
    if (!r.ok()) {
      std::cerr << "parse error at offset " << r.diagnostic->position << ": "
                << r.diagnostic->message << "\n";
      return 1;
    }
    f = *r.poly;
    if (affine_degree > 0) f = fc::homogenize(f, affine_degree);
    if (!f.is_homogeneous() || f.is_zero()) {
      std::cerr << "input is not a nonzero homogeneous polynomial; pass --affine-degree d to "
                   "homogenize an affine equation\n";
      return 1;
    }
    id = "poly";
    aopts.irreducible = irreducible_flag;
  } else {
    fc::CurveSpec spec = build_family(fa);
    f = spec.f;
    id = spec.id;
    aopts.irreducible = spec.expected.irreducible.value_or(false);
    aopts.singularities = spec.singularities;
  }
  if (saturation == "direct")
    aopts.saturation = fc::SaturationMode::direct;
  else if (saturation == "both")
    aopts.saturation = fc::SaturationMode::both;

  fc::RandomPrimeSource primes(seed);
  fc::LinalgOptions lopts;
  lopts.exact_only = field == "qq";
  lopts.crosscheck_small = !lopts.exact_only;  // auto mode spot-checks small matrices exactly
  fc::LinalgContext ctx(primes, lopts);
  fc::ProfileOptions popts;
  if (kmax > 0) popts.kmax_override = kmax;

  fc::CurveInput curve = fc::CurveInput::from_poly(f);
  fc::Analysis a = fc::analyze_curve(curve, ctx, aopts, popts);
  if (want_json(json_flag))
    std::cout << fc::analysis_to_json(id, f, a).dump(2) << "\n";
  else
    print_analysis_table(id, f, a);
  return 0;
}

int cmd_verify(const std::string& suites_csv, bool stretch, bool json_flag, std::uint64_t seed,
               const std::string& out_path, bool crosscheck) {
  std::vector<std::string> suites;
  if (suites_csv.empty() || suites_csv == "all") {
    suites = fc::suite_names();
  } else {
    std::istringstream in(suites_csv);
    std::string cur;
    while (std::getline(in, cur, ',')) suites.push_back(cur);
  }
  fc::VerifyOptions vopts;
  vopts.stretch = stretch;
  vopts.seed = seed;
  vopts.crosscheck_small = crosscheck;
  fc::VerifyContext vc(vopts);

  fc::Json all = fc::Json::object();
  long failed = 0;
  bool as_json = want_json(json_flag);
  for (const std::string& s : suites) {
    fc::VerificationOutcome outcome = fc::run_suite(s, vc);
    failed += outcome.failed();
    all[s] = fc::outcome_to_json(outcome);
    if (!as_json) {
      std::cout << "== suite " << s << ": " << (outcome.total() - outcome.failed()) << "/"
                << outcome.total() << " claims pass\n";
      for (const auto& cl : outcome.claims) {
        std::cout << "  [" << (cl.pass ? "PASS" : "FAIL") << "] " << cl.claim << "  (" << cl.citation
                  << ")";
        if (!cl.pass) std::cout << "  expected " << cl.expected << ", computed " << cl.computed;
        std::cout << "\n";
      }
    }
  }
  if (crosscheck) {
    fc::Json xo;
    xo["checks"] = vc.ctx.stats.checks;
    xo["mismatches"] = vc.ctx.stats.mismatches;
    all["cross_oracle"] = xo;
    if (!as_json)
      std::cout << "== cross-oracle: " << vc.ctx.stats.checks << " small matrices verified, "
                << vc.ctx.stats.mismatches << " mismatches\n";
  }
  if (as_json) std::cout << all.dump(2) << "\n";
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    out << all.dump(2) << "\n";
  }
  return failed == 0 ? 0 : 1;
}

int cmd_syzygies(const std::string& poly_text, const FamilyArgs& fa, int degree, bool json_flag,
                 std::uint64_t seed) {
  fc::TriPoly f;
  if (!poly_text.empty()) {
    fc::ParseResult r = fc::parse_expression(poly_text);
    if (!r.ok()) {
      std::cerr << "parse error at offset " << r.diagnostic->position << ": "
                << r.diagnostic->message << "\n";
      return 1;
    }
    f = *r.poly;
  } else {
    f = build_family(fa).f;
  }
  fc::RandomPrimeSource primes(seed);
  fc::LinalgContext ctx(primes);
  auto basis = fc::syzygy_basis_in_degree(fc::CurveInput::from_poly(f), degree, ctx);
  if (want_json(json_flag)) {
    fc::Json j = fc::Json::array();
    for (const auto& t : basis)
      j.push_back(fc::Json{{"a", t[0].str()}, {"b", t[1].str()}, {"c", t[2].str()}});
    std::cout << fc::Json{{"degree", degree}, {"dimension", basis.size()}, {"basis", j}}.dump(2)
              << "\n";
  } else {
    std::cout << "relation space in coefficient degree " << degree << ": dimension " << basis.size()
              << "\n";
    for (const auto& t : basis) {
      std::cout << "  a = " << t[0].str() << "\n";
      std::cout << "  b = " << t[1].str() << "\n";
      std::cout << "  c = " << t[2].str() << "\n\n";
    }
  }
  return 0;
}

int cmd_families(const std::string& action, const FamilyArgs& fa, const std::string& out_path,
                 bool json_flag) {
  if (action == "list") {
    fc::Json j = fc::Json::array();
    for (const auto& info : fc::family_catalogue()) j.push_back(fc::family_info_to_json(info));
    if (want_json(json_flag)) {
      std::cout << j.dump(2) << "\n";
    } else {
      for (const auto& info : fc::family_catalogue()) {
        std::cout << info.id << "\n  parameters: " << info.parameters
                  << "\n  defaults:   " << info.defaults << "\n  " << info.provenance << "\n\n";
      }
    }
    return 0;
  }
  if (action == "gen") {
    fc::CurveSpec spec = build_family(fa);
    if (!out_path.empty()) {
      std::ofstream out(out_path);
      out << spec.f.str() << "\n";
    }
    fc::Json j = fc::curve_spec_to_json(spec);
    if (want_json(json_flag))
      std::cout << j.dump(2) << "\n";
    else
      std::cout << spec.id << "  (degree " << spec.d << ")\n" << spec.f.str() << "\n";
    return 0;
  }
  throw fc::InputError("families action must be 'list' or 'gen'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact graded invariants and freeness certification for reduced plane curves"};
  app.require_subcommand(1);

  std::string poly_text, field = "auto", saturation = "formula", suites, out_path, action = "list";
  FamilyArgs fa;
  int affine_degree = 0, kmax = 0, degree = 0;
  bool json_flag = false, stretch = false, crosscheck = false, irreducible = false;
  std::uint64_t seed = fc::kDefaultPrimeSeed;

  auto add_family_flags = [&](CLI::App* cmd) {
    cmd->add_option("--family", fa.id, "family id (see 'families list')");
    cmd->add_option("--d", fa.d, "degree parameter");
    cmd->add_option("--k", fa.k, "k parameter");
    cmd->add_option("--j", fa.j, "j parameter");
    cmd->add_option("--a", fa.a, "a parameter (rational, or integer for prop3)");
    cmd->add_option("--b", fa.b, "b parameter");
    cmd->add_option("--c", fa.c, "c parameter");
    cmd->add_option("--which", fa.which, "arrangement selector: d7, d8 or d9");
    cmd->add_option("--coeffs", fa.coeffs, "comma-separated coefficient list");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "full invariant profile and freeness report");
  analyze->add_option("--poly", poly_text, "polynomial in x, y, z");
  add_family_flags(analyze);
  analyze->add_option("--affine-degree", affine_degree, "homogenize an affine input to this degree");
  analyze->add_option("--field", field, "auto (multi-modular) or qq (exact only)")
      ->check(CLI::IsMember({"auto", "qq"}));
  analyze->add_option("--saturation", saturation, "formula, direct or both")
      ->check(CLI::IsMember({"formula", "direct", "both"}));
  analyze->add_option("--kmax", kmax, "override the top computed degree");
  analyze->add_flag("--json", json_flag, "force JSON output");
  analyze->add_option("--seed", seed, "prime sampler seed");
  analyze->add_flag("--stretch", stretch, "allow the long-running parameter ranges");
  analyze->add_flag("--irreducible", irreducible, "declare a user polynomial irreducible");

  CLI::App* verify = app.add_subcommand("verify-paper", "run the catalogue verification suites");
  verify->add_option("--suite", suites, "comma-separated suite list (default: all)");
  verify->add_flag("--stretch", stretch, "extend to the long-running ranges");
  verify->add_flag("--json", json_flag, "force JSON output");
  verify->add_option("--seed", seed, "prime sampler seed");
  verify->add_option("--out", out_path, "also write the JSON report to this file");
  verify->add_flag("--crosscheck", crosscheck, "Bareiss-verify every small certified rank");

  CLI::App* syz = app.add_subcommand("syzygies", "exact relation-space basis in one degree");
  syz->add_option("--poly", poly_text, "polynomial in x, y, z");
  add_family_flags(syz);
  syz->add_option("--degree", degree, "coefficient degree")->required();
  syz->add_flag("--json", json_flag, "force JSON output");
  syz->add_option("--seed", seed, "prime sampler seed");

  CLI::App* fam = app.add_subcommand("families", "list the catalogue or generate one member");
  fam->add_option("action", action, "list or gen")->check(CLI::IsMember({"list", "gen"}));
  add_family_flags(fam);
  fam->add_option("--id", fa.id, "family id (alias of --family)");
  fam->add_option("--out", out_path, "write the polynomial text to this file");
  fam->add_flag("--json", json_flag, "force JSON output");
  fam->add_flag("--stretch", stretch, "allow the long-running parameter ranges");

  CLI11_PARSE(app, argc, argv);
  fa.stretch = stretch;

  try {
    if (app.got_subcommand(analyze)) {
      if (poly_text.empty() == fa.id.empty()) {
        std::cerr << "give exactly one of --poly or --family\n";
        return 1;
      }
      return cmd_analyze(poly_text, fa, affine_degree, field, saturation, kmax, json_flag, seed,
                         irreducible);
    }
    if (app.got_subcommand(verify)) return cmd_verify(suites, stretch, json_flag, seed, out_path, crosscheck);
    if (app.got_subcommand(syz)) {
      if (poly_text.empty() == fa.id.empty()) {
        std::cerr << "give exactly one of --poly or --family\n";
        return 1;
      }
      return cmd_syzygies(poly_text, fa, degree, json_flag, seed);
    }
    if (app.got_subcommand(fam)) return cmd_families(action, fa, out_path, json_flag);
  } catch (const fc::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const fc::InconsistencyError& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
