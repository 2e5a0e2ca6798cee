#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cmc/profiles.hpp"

namespace cmc::cli {

enum class Subcommand { Generate, Verify, Bounds, Figures };
enum class Format { Csv, Json };

const char* to_string(Subcommand s) noexcept;
const char* to_string(Format f) noexcept;
// Command-line spelling of a family, e.g. "rot-sphere-h2".
const char* family_flag(FamilyTag tag) noexcept;

struct RunConfig {
  Subcommand subcommand = Subcommand::Generate;
  std::optional<FamilyTag> family;
  double H = 1.0;
  double nu0 = 0.0;
  std::optional<double> m;
  double c = 0.0;  // curvature of the base, for bounds
  std::optional<double> c0;      // first integral, rot-general-s2
  std::optional<double> energy;  // energy, hyp-general
  int samples = 256;
  Format format = Format::Csv;
  std::string output;
  std::optional<double> tolerance;  // replaces every check tolerance
  std::optional<double> height;     // for the distance bound

  ProfileFamily profile_family() const;
  // Throws InvalidInputError when the values break the family or estimate
  // parameter invariants.
  void validate() const;
  nlohmann::ordered_json to_json() const;
};

struct ParseResult {
  std::optional<RunConfig> config;
  int exit_code = 0;  // meaningful when config is empty (help or bad flags)
};

// CLI11 front end. Option values may also come from --config FILE holding
// "key = value" lines with the long option names; flags win over the file.
ParseResult parse_arguments(const std::vector<std::string>& args, std::ostream& out,
                            std::ostream& err);

}  // namespace cmc::cli
