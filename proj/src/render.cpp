#include "radar_order/render.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

namespace radar {

namespace {

std::string xml_escape(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

// Avoids "-0.00" for coordinates that round to zero from below.
std::string coord(double v) {
  std::string s = fmt::format("{:.2f}", v);
  if (s == "-0.00") s = "0.00";
  return s;
}

void validate(const RenderSpec& spec) {
  if (spec.width <= 2 * spec.margin || spec.height <= 2 * spec.margin) {
    throw config_error("render: width and height must exceed twice the margin");
  }
  if (spec.margin < 0) throw config_error("render: margin must be >= 0");
  if (spec.gridline_rings < 0) {
    throw config_error("render: gridline ring count must be >= 0");
  }
  if (!(spec.fill_opacity >= 0.0 && spec.fill_opacity <= 1.0)) {
    throw config_error("render: fill opacity must lie in [0, 1]");
  }
  if (spec.profile_colors.empty()) {
    throw config_error("render: at least one profile color is required");
  }
}

}  // namespace

double chart_radius(const RenderSpec& spec) {
  return std::min(spec.width, spec.height) / 2.0 - spec.margin;
}

std::string render_svg(const ProfileMatrix& matrix, const Permutation& perm,
                       const RenderSpec& spec) {
  validate(spec);
  const std::size_t p = matrix.feature_count();
  if (perm.size() != p) {
    throw input_error("render: permutation length does not match features");
  }
  const double cx = spec.width / 2.0;
  const double cy = spec.height / 2.0;
  const double radius = chart_radius(spec);

  std::vector<double> cos_a(p), sin_a(p);
  for (std::size_t i = 0; i < p; ++i) {
    const double theta = -std::numbers::pi / 2.0 +
                         2.0 * std::numbers::pi * static_cast<double>(i) /
                             static_cast<double>(p);
    cos_a[i] = std::cos(theta);
    sin_a[i] = std::sin(theta);
  }

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
      "width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">\n",
      spec.width, spec.height, spec.width, spec.height);
  svg += fmt::format(
      "  <rect class=\"background\" x=\"0\" y=\"0\" width=\"{}\" "
      "height=\"{}\" fill=\"#ffffff\"/>\n",
      spec.width, spec.height);
  if (spec.title) {
    svg += fmt::format(
        "  <text class=\"title\" x=\"{}\" y=\"{}\" text-anchor=\"middle\" "
        "font-family=\"sans-serif\" font-size=\"16\">{}</text>\n",
        coord(cx), coord(spec.margin / 2.0), xml_escape(*spec.title));
  }

  svg += "  <g class=\"grid\" fill=\"none\" stroke=\"#cccccc\" "
         "stroke-width=\"1\">\n";
  for (int k = 1; k <= spec.gridline_rings; ++k) {
    svg += fmt::format("    <circle cx=\"{}\" cy=\"{}\" r=\"{}\"/>\n",
                       coord(cx), coord(cy),
                       coord(radius * k / spec.gridline_rings));
  }
  svg += "  </g>\n";

  svg += "  <g class=\"axes\" stroke=\"#888888\" stroke-width=\"1\">\n";
  for (std::size_t i = 0; i < p; ++i) {
    svg += fmt::format(
        "    <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>\n", coord(cx),
        coord(cy), coord(cx + radius * cos_a[i]), coord(cy + radius * sin_a[i]));
  }
  svg += "  </g>\n";

  svg += "  <g class=\"labels\" font-family=\"sans-serif\" font-size=\"12\" "
         "fill=\"#333333\">\n";
  const double label_radius = radius + 14.0;
  for (std::size_t i = 0; i < p; ++i) {
    const double x = cx + label_radius * cos_a[i];
    const double y = cy + label_radius * sin_a[i];
    const char* anchor = std::abs(cos_a[i]) < 1e-9 ? "middle"
                         : cos_a[i] > 0.0         ? "start"
                                                  : "end";
    svg += fmt::format(
        "    <text class=\"axis-label\" x=\"{}\" y=\"{}\" "
        "text-anchor=\"{}\" dominant-baseline=\"middle\">{}</text>\n",
        coord(x), coord(y), anchor,
        xml_escape(matrix.feature_names()[perm[i]]));
  }
  svg += "  </g>\n";

  svg += "  <g class=\"profiles\" stroke-width=\"2\">\n";
  for (std::size_t j = 0; j < matrix.profile_count(); ++j) {
    const auto& color = spec.profile_colors[j % spec.profile_colors.size()];
    std::string points;
    for (std::size_t i = 0; i < p; ++i) {
      const double r = radius * matrix.at(j, perm[i]);
      if (i > 0) points += ' ';
      points += coord(cx + r * cos_a[i]);
      points += ',';
      points += coord(cy + r * sin_a[i]);
    }
    svg += fmt::format(
        "    <polygon points=\"{}\" fill=\"{}\" fill-opacity=\"{:.2f}\" "
        "stroke=\"{}\"/>\n",
        points, xml_escape(color), spec.fill_opacity, xml_escape(color));
  }
  svg += "  </g>\n";

  svg += "  <g class=\"legend\" font-family=\"sans-serif\" font-size=\"12\">\n";
  for (std::size_t j = 0; j < matrix.profile_count(); ++j) {
    const auto& color = spec.profile_colors[j % spec.profile_colors.size()];
    const double y = 10.0 + 18.0 * static_cast<double>(j);
    svg += fmt::format(
        "    <rect x=\"10.00\" y=\"{}\" width=\"12\" height=\"12\" "
        "fill=\"{}\"/>\n",
        coord(y), xml_escape(color));
    svg += fmt::format(
        "    <text class=\"legend-label\" x=\"28.00\" y=\"{}\" "
        "dominant-baseline=\"middle\">{}</text>\n",
        coord(y + 6.0), xml_escape(matrix.profile_names()[j]));
  }
  svg += "  </g>\n";
  svg += "</svg>\n";
  return svg;
}

}  // namespace radar
