#pragma once

// Minimality test for negation sets and certificate-style sufficient tests for
// minimum and unique-minimum negation sets.

#include <optional>
#include <vector>

#include "negsets/core.hpp"

namespace negsets {

/// |b| edge-disjoint negative circles.
struct DisjointCircleCertificate {
  std::vector<std::vector<Vertex>> circles;
};

/// Two negative circles through one edge of b.
struct CirclePair {
  Edge edge;
  std::vector<Vertex> first;
  std::vector<Vertex> second;
};

struct TwoCirclePerEdgeCertificate {
  std::vector<CirclePair> pairs;
};

/// A negation set b of a connected graph is minimal iff g minus b is connected.
/// Throws PreconditionError if b is not a negation set or g is disconnected.
bool is_minimal(const SignedGraph& g, const EdgeSubset& b);

/// True iff cert holds exactly |b| negative, pairwise edge-disjoint circles
/// (which proves b minimum). Throws MalformedCertificateError if an entry is
/// not a circle of g, PreconditionError if b is not a negation set.
bool verify_disjoint_circle_certificate(const SignedGraph& g, const EdgeSubset& b,
                                        const DisjointCircleCertificate& cert);

/// For a signing of K_n with b = E^-(g): edge-colors b with at most
/// max_degree(b) + 1 colors and, when enough vertices lie outside V(b), joins
/// every b-edge to the spare vertex of its color class. Returns nullopt when
/// there are too few spare vertices. Spare vertices are the lowest-index
/// vertices outside V(b), assigned in color order.
std::optional<DisjointCircleCertificate> triangle_certificate_for_complete(const SignedGraph& g,
                                                                           const EdgeSubset& b);

/// Checks the circle-pair structure for b = E^-(g): one pair per edge of b,
/// both circles negative and through that edge, sharing no other edge, and
/// the edge unions of different pairs disjoint. Minimality of b is the
/// caller's hypothesis and is not checked here.
bool verify_two_circle_certificate(const SignedGraph& g, const EdgeSubset& b,
                                   const TwoCirclePerEdgeCertificate& cert);

/// For a signing of K_n with b = E^-(g): true iff |b| <= n/2 - 1, in which
/// case b is the unique minimum negation set.
bool unique_minimum_by_size(const SignedGraph& g, const EdgeSubset& b);

/// Proper edge coloring of the subgraph formed by `edges` with at most
/// Delta + 1 colors (Misra-Gries). Result is indexed by EdgeId; edges outside
/// the subset get -1.
std::vector<int> proper_edge_coloring(const EdgeSubset& edges);

bool is_complete(const SignedGraph& g);

}  // namespace negsets
