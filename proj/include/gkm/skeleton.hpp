#pragma once

#include "gkm/graph.hpp"
#include "gkm/linalg.hpp"

#include <optional>
#include <vector>

namespace gkm {

class AbstractGKMGraph;  // gkm_graph.hpp

// An n-GKM skeleton: a connected simple n-valent graph with the default
// orientation/ordering (darts (u,v) with u < v, lexicographic) and an
// integer label vector d of length |E|/2, one candidate first-Chern value
// per oriented edge.
struct GKMSkeleton {
  DartGraph graph;
  IntVec labels;

  GKMSkeleton(DartGraph g, IntVec d);
  size_t edge_count() const { return labels.size(); }
};

// Square matrix with entries in {2,1,-1,0} recording shared endpoints of
// ordered edges; independent of the label vector.
RatMat structure_matrix(const GKMSkeleton& s);
RatMat structure_matrix(const DartGraph& g);

// Columns f_1..f_m in Q^delta presenting the kernel of A - D; rows form the
// canonical (RREF-derived) kernel basis, so the system is deterministic.
struct FundamentalSystem {
  RatMat f;  // delta x m
  size_t defect() const { return f.rows(); }
  RatVec column(size_t i) const { return f.column(i); }
};

struct DefectResult {
  size_t defect = 0;
  std::optional<FundamentalSystem> fs;  // present iff defect > 0
};

DefectResult defect_and_fundamental_system(const GKMSkeleton& s);

// (K1): columns f_j, f_k linearly independent whenever a_{j,k} = +-1.
// GL(Q, delta)-invariant, so any fundamental system gives the same verdict.
bool check_k1(const FundamentalSystem& fs, const RatMat& a);

// Per-(connection, index) outcome of the K2 pairing test at one edge.
enum class K2Mark { IntegerMultiple, RationalFailure, NonCollinear };

struct K2ConnectionReport {
  Connection connection;
  std::vector<std::pair<size_t, size_t>> index_map;  // IND_{i(e)} -> IND_{t(e)}
  // One entry per k in IND_{i(e_j)}, aligned with index_map.
  std::vector<K2Mark> marks;
  // Witness nu for the first rational failure, if any.
  std::optional<Rat> rational_witness;
  std::optional<size_t> rational_index;

  bool satisfies() const;
  bool fails_by_rational() const;
};

struct K2EdgeReport {
  size_t edge_index;
  std::vector<K2ConnectionReport> connections;
  bool satisfied() const;
  // Number of connections that do not fail by a rational number.
  size_t non_rational_count() const;
};

struct K2Report {
  std::vector<K2EdgeReport> edges;
  bool all_satisfied() const;
  std::vector<size_t> failing_edges() const;
};

std::pair<bool, K2Report> check_k2(const GKMSkeleton& s, const FundamentalSystem& fs);

// Builds the abstract (n, delta)-GKM graph supported by the skeleton.
// Requires K1 and K2; the result is validated and satisfies C1(e_i) = d_i.
AbstractGKMGraph construct_weights(const GKMSkeleton& s, const FundamentalSystem& fs);

// Projection-test verdict for 3-skeletons with defect 3, K1 true, K2 false.
struct ProjectionVerdict {
  bool ruled_out = false;
  std::string reason;  // empty for NoStatement
  // When ruled out by the two-edge criterion: (j1, j2, h1, h2).
  std::optional<std::tuple<size_t, size_t, RatVec, RatVec>> witness;
};

ProjectionVerdict projection_test(const GKMSkeleton& s, const FundamentalSystem& fs,
                                  const K2Report& k2);

// Lexicographically minimal relabeling of d over the automorphism group of
// the graph acting on unordered edges. Two skeletons on the same graph are
// isomorphic iff their canonical vectors agree.
IntVec skeleton_canonical_label_vector(const GKMSkeleton& s);
IntVec permute_labels(const DartGraph& g, const IntVec& labels, const std::vector<int>& aut);

bool is_positive_and_24(const GKMSkeleton& s);

}  // namespace gkm
