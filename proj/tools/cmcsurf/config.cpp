#include "config.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "cmc/error.hpp"
#include "cmc/estimates.hpp"

namespace cmc::cli {

namespace {

const std::map<std::string, FamilyTag> kFamilies{
    {"rot-sphere-h2", FamilyTag::RotSphereH2xR},
    {"rot-sphere-s2", FamilyTag::RotSphereS2xR},
    {"rot-torus-s2", FamilyTag::RotTorusS2xR},
    {"rot-general-s2", FamilyTag::RotGeneralS2xR},
    {"hyp-cylinder", FamilyTag::HypCylinderH2xR},
    {"hyp-general", FamilyTag::HypGeneralH2xR},
    {"parabolic", FamilyTag::ParabolicH2xR},
    {"euclidean-sphere", FamilyTag::EuclSphere},
    {"euclidean-cylinder", FamilyTag::EuclCylinder},
};

const std::map<std::string, Format> kFormats{{"csv", Format::Csv}, {"json", Format::Json}};

void finite_or_throw(double v, const char* what) {
  if (!std::isfinite(v)) throw InvalidInputError(std::string(what) + " must be finite");
}

}  // namespace

const char* to_string(Subcommand s) noexcept {
  switch (s) {
    case Subcommand::Generate: return "generate";
    case Subcommand::Verify: return "verify";
    case Subcommand::Bounds: return "bounds";
    case Subcommand::Figures: return "figures";
  }
  return "unknown";
}

const char* to_string(Format f) noexcept { return f == Format::Csv ? "csv" : "json"; }

const char* family_flag(FamilyTag tag) noexcept {
  for (const auto& [name, t] : kFamilies)
    if (t == tag) return name.c_str();
  return "unknown";
}

ProfileFamily RunConfig::profile_family() const {
  if (!family) throw InvalidInputError("--family is required");
  ProfileFamily f{*family, H, 0.0};
  if (*family == FamilyTag::RotGeneralS2xR) {
    if (!c0) throw InvalidInputError("rot-general-s2 needs --c0");
    f.aux = *c0;
  } else if (*family == FamilyTag::HypGeneralH2xR) {
    f.aux = energy.value_or(0.0);
  }
  return f;
}

void RunConfig::validate() const {
  finite_or_throw(H, "--mean-curvature");
  finite_or_throw(nu0, "--nu0");
  finite_or_throw(c, "-c");
  if (m) finite_or_throw(*m, "-m");
  if (c0) finite_or_throw(*c0, "--c0");
  if (energy) finite_or_throw(*energy, "--energy");
  if (height) finite_or_throw(*height, "--height");
  if (tolerance && !(*tolerance > 0.0 && std::isfinite(*tolerance)))
    throw InvalidInputError("--tolerance must be positive");
  if (samples < 2) throw InvalidInputError("--samples must be at least 2");
  if (!(H > 0.0)) throw InvalidInputError("mean curvature H must be positive");
  switch (subcommand) {
    case Subcommand::Generate:
    case Subcommand::Verify: {
      const ProfileFamily f = profile_family();
      if (c0 && f.tag != FamilyTag::RotGeneralS2xR)
        throw InvalidInputError("--c0 only applies to rot-general-s2");
      if (energy && f.tag != FamilyTag::HypGeneralH2xR)
        throw InvalidInputError("--energy only applies to hyp-general");
      break;
    }
    case Subcommand::Bounds: {
      const EstimateParams p{c, H, nu0, m};
      p.validate();
      if (height && *height < 0.0) throw InvalidInputError("--height must be non-negative");
      break;
    }
    case Subcommand::Figures:
      break;
  }
}

nlohmann::ordered_json RunConfig::to_json() const {
  nlohmann::ordered_json j;
  j["subcommand"] = to_string(subcommand);
  j["family"] = family ? nlohmann::ordered_json(family_flag(*family)) : nullptr;
  j["H"] = H;
  j["nu0"] = nu0;
  j["m"] = m ? nlohmann::ordered_json(*m) : nullptr;
  j["c"] = c;
  j["c0"] = c0 ? nlohmann::ordered_json(*c0) : nullptr;
  j["energy"] = energy ? nlohmann::ordered_json(*energy) : nullptr;
  j["samples"] = samples;
  j["format"] = to_string(format);
  j["output"] = output;
  j["tolerance"] = tolerance ? nlohmann::ordered_json(*tolerance) : nullptr;
  j["height"] = height ? nlohmann::ordered_json(*height) : nullptr;
  return j;
}

ParseResult parse_arguments(const std::vector<std::string>& args, std::ostream& out,
                            std::ostream& err) {
  CLI::App app{"Constant mean curvature invariant surfaces in M^2(c) x R"};
  app.name("cmcsurf");
  app.set_config("--config", "", "file of key = value lines; flags override it");
  app.require_subcommand(1, 1);

  RunConfig cfg;
  FamilyTag family{};
  double m = 0.0, c0 = 0.0, energy = 0.0, tolerance = 0.0, height = 0.0;

  // Options live on the top level so that one config file serves every
  // subcommand; fallthrough lets them follow the subcommand name.
  CLI::Option* family_opt =
      app.add_option("--family", family, "profile family")
          ->transform(CLI::CheckedTransformer(kFamilies, CLI::ignore_case))
          ->option_text("NAME (rot-sphere-h2, rot-sphere-s2, rot-torus-s2, rot-general-s2,\n"
                        "       hyp-cylinder, hyp-general, parabolic, euclidean-sphere,\n"
                        "       euclidean-cylinder)");
  app.add_option("-H,--mean-curvature", cfg.H, "mean curvature H > 0");
  app.add_option("--nu0", cfg.nu0, "boundary angle nu0 in (-1, 0]");
  CLI::Option* m_opt = app.add_option("-m", m, "height fraction in (0, 1/2]");
  app.add_option("-c,--curvature", cfg.c, "curvature of the base space form");
  CLI::Option* c0_opt = app.add_option("--c0", c0, "first integral for rot-general-s2");
  CLI::Option* energy_opt = app.add_option("--energy", energy, "energy for hyp-general");
  app.add_option("--samples", cfg.samples, "number of samples");
  app.add_option("--format", cfg.format, "csv or json")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case))
      ->option_text("csv|json");
  app.add_option("--output", cfg.output, "output file (directory for figures)");
  CLI::Option* tol_opt =
      app.add_option("--tolerance", tolerance, "replace every verification tolerance");
  CLI::Option* height_opt = app.add_option("--height", height, "height for the distance bound");

  struct Sub {
    const char* name;
    const char* help;
    Subcommand kind;
  };
  const Sub subs[] = {
      {"generate", "sample a profile", Subcommand::Generate},
      {"verify", "run the property suite for a profile", Subcommand::Verify},
      {"bounds", "evaluate the height, curvature and distance estimates", Subcommand::Bounds},
      {"figures", "write the figure data bundles", Subcommand::Figures},
  };
  for (const Sub& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->fallthrough();
    sub->callback([&cfg, kind = s.kind] { cfg.subcommand = kind; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return {std::nullopt, code == 0 ? 0 : 2};
  }

  if (*family_opt) cfg.family = family;
  if (*m_opt) cfg.m = m;
  if (*c0_opt) cfg.c0 = c0;
  if (*energy_opt) cfg.energy = energy;
  if (*tol_opt) cfg.tolerance = tolerance;
  if (*height_opt) cfg.height = height;
  return {cfg, 0};
}

}  // namespace cmc::cli
