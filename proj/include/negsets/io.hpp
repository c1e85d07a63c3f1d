#pragma once

// Line-oriented ".sg" signed graph format:
//
//   c <comment>
//   p sg <n> <m>
//   e <u> <v> <+|->      (m lines, 0-indexed)
//
// Serialization writes edges in canonical (u < v, lexicographic) order, so
// parse(serialize(g)) == g and serialize(parse(text)) == text for canonical text.

#include <filesystem>
#include <string>
#include <string_view>

#include "negsets/core.hpp"

namespace negsets {

/// Throws ParseError with the offending 1-based line number.
SignedGraph parse_sg(std::string_view text);
SignedGraph read_sg_file(const std::filesystem::path& path);

std::string to_sg(const SignedGraph& g);
void write_sg_file(const SignedGraph& g, const std::filesystem::path& path);

}  // namespace negsets
