#pragma once

// Graphviz rendering of a decomposition. Output is byte-stable for a given
// decomposition: vertices and edges come out in sorted order.

#include <array>
#include <sstream>
#include <string>

#include "ucat/greedy.hpp"

namespace ucat::io {

inline constexpr std::array<std::string_view, 10> kPalette = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
};

inline std::string render_dot(const Decomposition& d) {
  const MetricTree& tree = *d.refined_tree;
  auto quoted = [](const std::string& s) { return "\"" + s + "\""; };
  auto color_of = [](std::size_t i) { return std::string(kPalette[i % kPalette.size()]); };

  std::ostringstream os;
  os << "graph decomposition {\n";
  os << "  node [shape=circle, fontname=\"Helvetica\"];\n";
  os << "  edge [color=\"#bbbbbb\", style=dashed];\n";
  for (const auto& v : tree.vertices()) {
    os << "  " << quoted(v.str()) << " [label=\"" << v.str()
       << "\\nf=" << to_display_string(d.input_on_refined.at(v)) << "\"";
    for (std::size_t i = 0; i < d.components.size(); ++i) {
      if (d.components[i].mode == v) {
        os << ", shape=doublecircle, color=\"" << color_of(i) << "\"";
        break;
      }
    }
    if (v.is_synthetic()) os << ", style=dotted";
    os << "];\n";
  }
  for (const auto& e : tree.edges()) {
    os << "  " << quoted(e.u.str()) << " -- " << quoted(e.w.str()) << ";\n";
  }
  // One colored copy of each edge where a component is positive.
  for (std::size_t i = 0; i < d.components.size(); ++i) {
    const auto& c = d.components[i];
    os << "  subgraph component_" << i << " {\n";
    os << "    edge [color=\"" << color_of(i) << "\", style=solid, penwidth=2];\n";
    for (const auto& e : tree.edges()) {
      if (sgn(c.values.at(e.u)) > 0 || sgn(c.values.at(e.w)) > 0) {
        os << "    " << quoted(e.u.str()) << " -- " << quoted(e.w.str()) << ";\n";
      }
    }
    os << "  }\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace ucat::io
