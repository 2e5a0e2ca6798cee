#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "config.hpp"
#include "output.hpp"

namespace cmc::cli {

// Columns param, base_arclength, h, nu, H_num at cell midpoints of the
// profile's regular chart.
Table generate_table(const ProfileCurve& p, int samples);

// alpha_max, curvature bounds, distance bound and convexity caps, in a fixed
// order; optional entries are omitted when their input is missing.
std::vector<std::pair<std::string, double>> bounds_record(const RunConfig& cfg);

struct FigureBundle {
  Table fig1_spheres, fig1_cylinders, fig2_spheres, fig2_tori;  // H, arclength, height
  nlohmann::ordered_json metadata;
};
FigureBundle figure_data(int samples);

int run_generate(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_bounds(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_figures(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Parses, validates and dispatches; returns the process exit code
// (0 pass, 1 verification failure, 2 invalid input, 3 numerical or I/O).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cmc::cli
