#pragma once

// Command-line driver. Commands: balance, negation-check, minimal,
// certify-minimum, certify-unique, acyclic, packing, frustration,
// oracle-verify, export-dot.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "negsets/core.hpp"

namespace negsets::cli {

enum ExitCode : int {
  kOk = 0,
  kPropertyFails = 1,
  kUsage = 2,
  kPrecondition = 3,
  kMinusK5 = 4,
  kInternal = 5,
};

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

/// Parses "0-1,2-3" (braces and spaces allowed) into edges of g. Throws
/// InvalidGraphError for pairs that are not edges.
EdgeSubset parse_edge_list(const SignedGraph& g, std::string_view text);

/// A switching of g whose negative edge set is b. Throws PreconditionError
/// if b is not a negation set.
VertexSubset switching_for(const SignedGraph& g, const EdgeSubset& b);

}  // namespace negsets::cli
