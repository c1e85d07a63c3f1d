#include "negsets/dot.hpp"

#include <array>
#include <sstream>

namespace negsets {

namespace {

constexpr std::array<const char*, 10> kPalette{"blue",      "darkgreen", "orange", "purple",
                                               "brown",     "magenta",   "cyan3",  "goldenrod",
                                               "slategray", "olivedrab"};

}  // namespace

std::string family_color(std::size_t index) { return kPalette[index % kPalette.size()]; }

std::string export_dot(const SignedGraph& g, const DotAnnotations& annotations) {
  if (annotations.highlight) annotations.highlight->require_host(g, "export_dot");
  for (const auto& member : annotations.family) member.require_host(g, "export_dot");

  std::ostringstream out;
  out << "graph " << annotations.name << " {\n";
  out << "  node [shape=circle];\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    std::string color = g.is_negative(e) ? "red" : "";
    int width = 0;
    for (std::size_t i = 0; i < annotations.family.size(); ++i)
      if (annotations.family[i].contains(e)) {
        color = family_color(i);
        width = 2;
        break;
      }
    if (annotations.highlight && annotations.highlight->contains(e)) {
      color = "blue";
      width = 3;
    }
    std::vector<std::string> attrs;
    if (!color.empty()) attrs.push_back("color=" + color);
    if (g.is_negative(e)) attrs.push_back("style=dashed");
    if (width) attrs.push_back("penwidth=" + std::to_string(width));
    out << "  " << ed.u << " -- " << ed.v;
    if (!attrs.empty()) {
      out << " [";
      for (std::size_t i = 0; i < attrs.size(); ++i) out << (i ? " " : "") << attrs[i];
      out << "]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace negsets
