#pragma once

#include <optional>
#include <string>
#include <vector>

#include "radar_order/model.hpp"

namespace radar {

struct RenderSpec {
  int width = 640;
  int height = 640;
  int margin = 60;
  /// Cycled when there are more profiles than colors.
  std::vector<std::string> profile_colors = {"#1f77b4", "#d62728", "#2ca02c",
                                             "#ff7f0e", "#9467bd", "#8c564b"};
  double fill_opacity = 0.25;
  int gridline_rings = 4;
  std::optional<std::string> title;
};

/// Radius of the outermost ring: min(width, height) / 2 - margin.
double chart_radius(const RenderSpec& spec);

/// SVG 1.1 radar chart. Axis i sits at angle -pi/2 + 2*pi*i/p (12 o'clock,
/// clockwise) and carries feature perm[i]; each profile becomes one closed
/// <polygon>. Coordinates are written with two decimals, so identical inputs
/// give identical bytes.
std::string render_svg(const ProfileMatrix& matrix, const Permutation& perm,
                       const RenderSpec& spec = {});

}  // namespace radar
