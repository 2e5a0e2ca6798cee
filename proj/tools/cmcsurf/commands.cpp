#include "commands.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <utility>

#include "cmc/error.hpp"
#include "cmc/estimates.hpp"
#include "cmc/geomcheck.hpp"
#include "verify.hpp"

namespace cmc::cli {

namespace {

std::string profile_stem(const RunConfig& cfg) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "_H%.6g", cfg.H);
  return std::string(family_flag(*cfg.family)) + buf;
}

const char* to_string(HeightClass h) {
  switch (h) {
    case HeightClass::Sphere: return "sphere";
    case HeightClass::HalfSphere: return "half_sphere";
    case HeightClass::None: break;
  }
  return "none";
}

// Profile curve (intrinsic coordinate, height) on samples + 1 chart points;
// a chart that covers one side of the axis is mirrored to the other.
std::vector<std::pair<double, double>> figure_curve(const ProfileCurve& p, int samples) {
  const Interval d = p.chart_domain();
  std::vector<std::pair<double, double>> pts;
  bool one_sided = p.orbit_kind() == OrbitKind::Rotation;
  for (int i = 0; i <= samples; ++i) {
    const ChartPoint q = p.chart(d.lo + d.length() * i / samples);
    const double s = p.base_arclength_of(q.base);
    if (s < -1e-12) one_sided = false;
    pts.emplace_back(s, q.height);
  }
  if (one_sided) {
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i)
      if (pts[i].first > 1e-12) pts.emplace_back(-pts[i].first, pts[i].second);
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

double peak_of(const ProfileCurve& p) { return p.chart(p.chart_top()).height; }

void append_curve(Table& t, double H, const ProfileCurve& p, int samples) {
  for (const auto& [s, h] : figure_curve(p, samples)) t.rows.push_back({H, s, h});
}

void emit(const std::filesystem::path& path, const std::string& content, std::ostream& out) {
  if (path.empty()) {
    out << content;
  } else {
    write_atomically(path, content);
  }
}

}  // namespace

Table generate_table(const ProfileCurve& p, int samples) {
  Table t{{"param", "base_arclength", "h", "nu", "H_num"}, {}};
  const ProfileSweep sw = sweep_profile(p, samples);
  for (std::size_t i = 0; i < sw.tau.size(); ++i) {
    const double s = p.base_arclength_of(p.chart(sw.tau[i]).base);
    t.rows.push_back({sw.tau[i], s, sw.height[i], sw.nu[i], sw.mean_curvature[i]});
  }
  return t;
}

std::vector<std::pair<std::string, double>> bounds_record(const RunConfig& cfg) {
  EstimateParams p{cfg.c, cfg.H, cfg.nu0, cfg.m};
  p.validate();
  std::vector<std::pair<std::string, double>> r;
  const double alpha = alpha_max(p);
  r.emplace_back("alpha_max", alpha);
  r.emplace_back("kappa_lower_general", kappa_lower_general(p));
  if (cfg.m) r.emplace_back("kappa_lower_height", kappa_lower_height(p));
  if (cfg.height) r.emplace_back("distance_lower_bound", distance_lower_bound(p, *cfg.height));
  // Both forms of the nu0 correction in the convexity cap, side by side.
  const ConvexityCap cap = convexity_height_cap(p);
  r.emplace_back("convexity_fraction_difference_of_squares", cap.difference_of_squares);
  r.emplace_back("convexity_fraction_square_of_difference", cap.square_of_difference);
  r.emplace_back("convexity_height_difference_of_squares", cap.difference_of_squares * alpha);
  r.emplace_back("convexity_height_square_of_difference", cap.square_of_difference * alpha);
  if (cfg.height) {
    r.emplace_back("convex_difference_of_squares",
                   *cfg.height <= cap.difference_of_squares * alpha ? 1.0 : 0.0);
    r.emplace_back("convex_square_of_difference",
                   *cfg.height <= cap.square_of_difference * alpha ? 1.0 : 0.0);
  }
  return r;
}

FigureBundle figure_data(int samples) {
  FigureBundle b;
  for (Table* t : {&b.fig1_spheres, &b.fig1_cylinders, &b.fig2_spheres, &b.fig2_tori})
    t->columns = {"H", "arclength", "height"};

  nlohmann::ordered_json f1;
  f1["H"] = nlohmann::ordered_json::array();
  for (double H : {0.54, 0.6, 0.7, 0.8, 0.9, 1.0}) {
    const ProfileCurve sphere = make_profile({FamilyTag::RotSphereH2xR, H, 0.0});
    const ProfileCurve cyl = make_profile({FamilyTag::HypCylinderH2xR, H, 0.0});
    append_curve(b.fig1_spheres, H, sphere, samples);
    append_curve(b.fig1_cylinders, H, cyl, samples);
    f1["H"].push_back(H);
    f1["sphere_peak"].push_back(peak_of(sphere));
    f1["cylinder_peak"].push_back(peak_of(cyl));
    f1["peak_ratio"].push_back(peak_of(cyl) / peak_of(sphere));
  }

  const TorusArgmax best = torus_height_argmax();
  nlohmann::ordered_json f2;
  f2["H_star"] = best.H;
  f2["torus_peak_at_H_star"] = best.height;
  f2["H"] = nlohmann::ordered_json::array();
  for (double H : {0.05, 0.12, best.H, 0.6, 1.0, 2.0}) {
    const ProfileCurve sphere = make_profile({FamilyTag::RotSphereS2xR, H, 0.0});
    const ProfileCurve torus = make_profile({FamilyTag::RotTorusS2xR, H, 0.0});
    append_curve(b.fig2_spheres, H, sphere, samples);
    append_curve(b.fig2_tori, H, torus, samples);
    f2["H"].push_back(H);
    f2["sphere_peak"].push_back(peak_of(sphere));
    f2["torus_peak"].push_back(peak_of(torus));
  }
  b.metadata["figure1"] = f1;
  b.metadata["figure2"] = f2;
  return b;
}

int run_generate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const ProfileCurve p = make_profile(cfg.profile_family());
  const Table t = generate_table(p, cfg.samples);
  const char* ext = cfg.format == Format::Csv ? ".csv" : ".json";
  const auto path = resolve_output(cfg.output, profile_stem(cfg) + ext);
  emit(path, cfg.format == Format::Csv ? to_csv(t) : to_json(t), out);

  nlohmann::ordered_json meta;
  meta["config"] = cfg.to_json();
  meta["family"] = to_string(p.family().tag);
  meta["is_bigraph"] = p.is_bigraph();
  meta["height_class"] = to_string(p.height_class());
  meta["max_height"] = p.is_bigraph() ? nlohmann::ordered_json(max_height(p)) : nullptr;
  meta["rows"] = t.rows.size();
  double hmax = -1e300;
  for (const auto& row : t.rows) hmax = std::max(hmax, row[2]);

  std::ostream& summary = path.empty() ? err : out;
  if (!path.empty()) {
    std::filesystem::path mp = path;
    mp += ".meta.json";
    write_atomically(mp, meta.dump(2) + "\n");
    summary << "wrote " << t.rows.size() << " rows to " << path.string() << "\n";
  }
  summary << to_string(p.family().tag) << " H=" << terminal_number(p.family().H)
          << " is_bigraph=" << (p.is_bigraph() ? "true" : "false")
          << " max sampled h=" << terminal_number(hmax) << "\n";
  return 0;
}

int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const ProfileCurve p = make_profile(cfg.profile_family());
  const VerifyReport report = verify_profile(p, cfg.tolerance);
  nlohmann::ordered_json j;
  j["config"] = cfg.to_json();
  const nlohmann::ordered_json body = report.to_json(true);
  for (const auto& [k, v] : body.items()) j[k] = v;
  const auto path = resolve_output(cfg.output, "verify_" + profile_stem(cfg) + ".json");
  emit(path, j.dump(2) + "\n", out);

  std::ostream& summary = path.empty() ? err : out;
  for (const CheckRecord& c : report.checks)
    summary << (c.pass ? "PASS " : "FAIL ") << c.name << " actual=" << terminal_number(c.actual)
            << " expected=" << terminal_number(c.expected) << " " << to_string(c.relation)
            << " tol=" << terminal_number(c.tolerance) << "\n";
  summary << (report.pass() ? "overall PASS" : "overall FAIL") << "\n";
  return report.pass() ? 0 : 1;
}

int run_bounds(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const auto record = bounds_record(cfg);
  for (const auto& [k, v] : record) out << k << " = " << terminal_number(v) << "\n";
  const char* ext = cfg.format == Format::Csv ? ".csv" : ".json";
  const auto path = resolve_output(cfg.output, std::string("bounds") + ext);
  if (path.empty()) return 0;
  if (cfg.format == Format::Csv) {
    Table t;
    t.rows.emplace_back();
    for (const auto& [k, v] : record) {
      t.columns.push_back(k);
      t.rows.back().push_back(v);
    }
    write_atomically(path, to_csv(t));
  } else {
    nlohmann::ordered_json j;
    j["config"] = cfg.to_json();
    for (const auto& [k, v] : record) j["bounds"][k] = v;
    write_atomically(path, j.dump(2) + "\n");
  }
  return 0;
}

int run_figures(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  std::filesystem::path dir = resolve_output(cfg.output, ".");
  if (dir.empty()) dir = "figures";
  const FigureBundle b = figure_data(cfg.samples);
  const std::pair<const char*, const Table*> files[] = {
      {"fig1_spheres.csv", &b.fig1_spheres},
      {"fig1_cylinders.csv", &b.fig1_cylinders},
      {"fig2_spheres.csv", &b.fig2_spheres},
      {"fig2_tori.csv", &b.fig2_tori},
  };
  for (const auto& [name, t] : files) write_atomically(dir / name, to_csv(*t));
  write_atomically(dir / "figures_meta.json", b.metadata.dump(2) + "\n");
  out << "wrote figure data to " << dir.string() << " (H* = "
      << terminal_number(b.metadata["figure2"]["H_star"].get<double>()) << ")\n";
  return 0;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const ParseResult parsed = parse_arguments(args, out, err);
  if (!parsed.config) return parsed.exit_code;
  const RunConfig& cfg = *parsed.config;
  try {
    cfg.validate();
    switch (cfg.subcommand) {
      case Subcommand::Generate: return run_generate(cfg, out, err);
      case Subcommand::Verify: return run_verify(cfg, out, err);
      case Subcommand::Bounds: return run_bounds(cfg, out, err);
      case Subcommand::Figures: return run_figures(cfg, out, err);
    }
  } catch (const InvalidInputError& e) {
    err << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const NoSolutionError& e) {
    err << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "numerical failure (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return 3;
  } catch (const IoError& e) {
    err << "I/O failure: " << e.what() << "\n";
    return 3;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "I/O failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << "\n";
    return 3;
  }
  return 3;
}

}  // namespace cmc::cli
