#include "freecurve/json_io.hpp"

namespace freecurve {

namespace {

Json opt_or_infinite(const std::optional<int>& v) {
  if (v) return *v;
  return "infinite";
}

const char* method_name(DefectMethod m) {
  switch (m) {
    case DefectMethod::formula: return "formula";
    case DefectMethod::direct_oracle: return "direct-oracle";
    case DefectMethod::both_agree: return "both-agree";
    case DefectMethod::uncomputed: return "uncomputed";
  }
  return "uncomputed";
}

}  // namespace

Json profile_to_json(const MilnorProfile& p) {
  Json j;
  j["d"] = p.d;
  j["T"] = p.T;
  j["tau"] = p.tau;
  j["ct"] = opt_or_infinite(p.ct);
  j["st"] = p.st;
  j["mdr"] = opt_or_infinite(p.mdr);
  j["plateau_verified"] = p.plateau_verified;
  j["m"] = p.m;
  j["m_smooth"] = p.m_smooth;
  j["ar"] = p.ar;
  j["er"] = p.er;
  return j;
}

Json freeness_to_json(const FreenessReport& r, const SaturationDefects& defects, long tau) {
  Json j;
  j["free"] = r.free;
  j["d1"] = r.d1 ? Json(*r.d1) : Json(nullptr);
  j["d2"] = r.d2 ? Json(*r.d2) : Json(nullptr);
  j["tau"] = tau;
  j["delta"] = r.delta;
  j["criteria"] = Json{{"balance", r.criterion_ii}, {"midpoint", r.criterion_iii}};
  Json defs = Json::array();
  for (std::size_t i = 0; i < defects.n.size(); ++i) {
    Json e;
    e["j"] = i;
    e["n"] = defects.n[i] ? Json(*defects.n[i]) : Json(nullptr);
    e["method"] = method_name(defects.method[i]);
    defs.push_back(std::move(e));
  }
  j["defects"] = std::move(defs);
  j["rigid"] = r.rigid ? Json(*r.rigid) : Json(nullptr);
  j["conj10"] = r.conj10_holds;
  if (r.euler.computed) {
    j["euler"] = Json{{"EC", r.euler.euler_curve}, {"EU", r.euler.euler_complement}};
    j["cuspidal_consistent"] = r.euler.rational_cuspidal_consistent;
  } else {
    j["euler"] = nullptr;
    j["cuspidal_consistent"] = nullptr;
  }
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

Json analysis_to_json(const std::string& curve_id, const TriPoly& f, const Analysis& a) {
  Json j;
  j["curve"] = Json{{"id", curve_id}, {"d", a.profile.d}, {"poly", f.str()}};
  j["profile"] = profile_to_json(a.profile);
  j["freeness"] = freeness_to_json(a.report, a.defects, a.profile.tau);
  j["primes_used"] = a.profile.primes_used;
  return j;
}

Json family_info_to_json(const FamilyInfo& info) {
  return Json{{"id", info.id},
              {"parameters", info.parameters},
              {"defaults", info.defaults},
              {"provenance", info.provenance}};
}

Json curve_spec_to_json(const CurveSpec& s) {
  Json j;
  j["id"] = s.id;
  j["degree"] = s.d;
  j["poly"] = s.f.str();
  Json params = Json::object();
  for (const auto& [k, v] : s.params) params[k] = v;
  j["parameters"] = std::move(params);
  j["provenance"] = s.provenance;
  Json exp = Json::object();
  auto put_long = [&](const char* name, const std::optional<long>& v) {
    if (v) exp[name] = *v;
  };
  auto put_int = [&](const char* name, const std::optional<int>& v) {
    if (v) exp[name] = *v;
  };
  auto put_bool = [&](const char* name, const std::optional<bool>& v) {
    if (v) exp[name] = *v;
  };
  put_long("tau", s.expected.tau);
  put_long("mu", s.expected.mu);
  put_int("d1", s.expected.d1);
  put_int("d2", s.expected.d2);
  put_bool("free", s.expected.free);
  put_bool("rigid", s.expected.rigid);
  put_bool("irreducible", s.expected.irreducible);
  put_bool("rational_cuspidal", s.expected.rational_cuspidal);
  exp["verified_defaults"] = s.expected.verified_defaults;
  j["expected"] = std::move(exp);
  return j;
}

long VerificationOutcome::failed() const {
  long n = 0;
  for (const auto& c : claims)
    if (!c.pass) ++n;
  return n;
}

Json outcome_to_json(const VerificationOutcome& o) {
  Json claims = Json::array();
  for (const auto& c : o.claims) {
    claims.push_back(Json{{"claim", c.claim},
                          {"citation", c.citation},
                          {"expected", c.expected},
                          {"computed", c.computed},
                          {"pass", c.pass},
                          {"runtime_ms", c.runtime_ms}});
  }
  Json j;
  j["claims"] = std::move(claims);
  j["summary"] =
      Json{{"total", o.total()}, {"passed", o.total() - o.failed()}, {"failed", o.failed()}};
  return j;
}

}  // namespace freecurve
