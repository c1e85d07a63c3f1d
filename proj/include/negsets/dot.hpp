#pragma once

// Graphviz export. Positive edges are drawn solid, negative edges dashed red.

#include <optional>
#include <string>
#include <vector>

#include "negsets/core.hpp"

namespace negsets {

struct DotAnnotations {
  /// Drawn bold; takes the highlight color instead of the sign color.
  std::optional<EdgeSubset> highlight;
  /// One color per member, in order. An edge keeps the color of the first
  /// member containing it.
  std::vector<EdgeSubset> family;
  std::string name = "G";
};

std::string export_dot(const SignedGraph& g, const DotAnnotations& annotations = {});

/// Color used for family member `index`.
std::string family_color(std::size_t index);

}  // namespace negsets
