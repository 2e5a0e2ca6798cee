#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cmc/profiles.hpp"

namespace cmc::cli {

enum class Relation {
  AbsDiff,  // |actual - expected| <= tolerance
  AtMost,   // actual <= expected + tolerance
  AtLeast,  // actual >= expected - tolerance
  Above,    // actual > expected
};
const char* to_string(Relation r) noexcept;

struct CheckRecord {
  std::string name;
  double expected = 0.0;
  double actual = 0.0;
  double tolerance = 0.0;
  Relation relation = Relation::AbsDiff;
  bool pass = false;
  double seconds = 0.0;  // wall time, reported apart from the checks
};

struct VerifyReport {
  std::vector<CheckRecord> checks;
  bool pass() const;
  // {"checks": [...], "pass": ...}; timing goes under a separate "timing" key
  // so that everything else is reproducible byte for byte.
  nlohmann::ordered_json to_json(bool with_timing) const;
};

// Runs the property suite that applies to the profile. A tolerance override
// replaces every check tolerance.
VerifyReport verify_profile(const ProfileCurve& p, std::optional<double> tolerance = {});

}  // namespace cmc::cli
