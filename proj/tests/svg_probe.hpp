#pragma once

// Reads back rendered SVG with Boost.PropertyTree so tests can check
// structure and geometry without string matching.

#include <cmath>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

namespace svg_probe {

using Point = std::pair<double, double>;

struct Summary {
  std::vector<std::vector<Point>> polygons;
  std::size_t axis_lines = 0;
  std::vector<std::string> axis_labels;
  std::vector<std::string> legend_labels;
  std::size_t rings = 0;
};

inline std::vector<Point> parse_points(const std::string& text) {
  std::vector<Point> out;
  std::istringstream in(text);
  std::string pair;
  while (in >> pair) {
    const auto comma = pair.find(',');
    out.emplace_back(std::stod(pair.substr(0, comma)),
                     std::stod(pair.substr(comma + 1)));
  }
  return out;
}

inline void walk(const boost::property_tree::ptree& node, Summary& s) {
  for (const auto& [tag, child] : node) {
    if (tag == "polygon") {
      s.polygons.push_back(parse_points(child.get<std::string>("<xmlattr>.points")));
    } else if (tag == "line") {
      ++s.axis_lines;
    } else if (tag == "circle") {
      ++s.rings;
    } else if (tag == "text") {
      const auto cls = child.get<std::string>("<xmlattr>.class", "");
      if (cls == "axis-label") s.axis_labels.push_back(child.data());
      if (cls == "legend-label") s.legend_labels.push_back(child.data());
    }
    walk(child, s);
  }
}

/// Throws boost::property_tree::xml_parser_error on malformed XML.
inline Summary read(const std::string& svg) {
  std::istringstream in(svg);
  boost::property_tree::ptree tree;
  boost::property_tree::read_xml(in, tree);
  Summary s;
  walk(tree, s);
  return s;
}

inline double area(const std::vector<Point>& poly) {
  double twice = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const auto& [x0, y0] = poly[i];
    const auto& [x1, y1] = poly[(i + 1) % poly.size()];
    twice += x0 * y1 - x1 * y0;
  }
  return std::abs(twice) / 2.0;
}

}  // namespace svg_probe
