#pragma once

#include <json.hpp>

#include "freecurve/families.hpp"

namespace freecurve {

using Json = nlohmann::ordered_json;

Json profile_to_json(const MilnorProfile& p);
Json freeness_to_json(const FreenessReport& r, const SaturationDefects& defects, long tau);
Json analysis_to_json(const std::string& curve_id, const TriPoly& f, const Analysis& a);
Json family_info_to_json(const FamilyInfo& info);
Json curve_spec_to_json(const CurveSpec& s);

struct ClaimRecord {
  std::string claim;
  std::string citation;
  std::string expected;
  std::string computed;
  bool pass = false;
  double runtime_ms = 0.0;
};

struct VerificationOutcome {
  std::vector<ClaimRecord> claims;
  long total() const { return static_cast<long>(claims.size()); }
  long failed() const;
  bool ok() const { return failed() == 0; }
};

Json outcome_to_json(const VerificationOutcome& o);

}  // namespace freecurve
