#pragma once

#include "gkm/graph.hpp"
#include "gkm/linalg.hpp"
#include "gkm/polynomial.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gkm {

// Abstract (n,d)-GKM graph: a connected simple n-valent graph with an
// antisymmetric weight map into Z^d \ {0} satisfying the span, pairwise
// independence and compatible-connection axioms.
class AbstractGKMGraph {
 public:
  // One weight per oriented edge (same order as graph.oriented_edges());
  // the reversed dart carries the negated weight.
  AbstractGKMGraph(DartGraph graph, int d, std::vector<IntVec> oriented_weights);

  const DartGraph& graph() const { return graph_; }
  int rank() const { return d_; }
  int valence() const { return graph_.vertex_count() ? graph_.degree(0) : 0; }

  IntVec weight(const Dart& e) const;
  const std::vector<IntVec>& oriented_weights() const { return w_; }

  // Weights of the out-darts at v, in neighbor order.
  std::vector<IntVec> weights_at(int v) const;

 private:
  DartGraph graph_;
  int d_;
  std::vector<IntVec> w_;
};

struct ValidationReport {
  bool valid = true;
  std::vector<std::string> violations;
};

struct VertexProfile {
  std::vector<int> index;               // lambda(v)
  std::vector<IntVec> weight_sum;       // phi(v) = -sum of outgoing weights
  RatVec xi_component;                  // phi^xi(v)
  std::vector<std::vector<int>> stable; // Xi_v, sorted
};

struct KirwanWitness {
  int class_vertex;     // index-1 vertex whose class fails
  int at_vertex;        // vertex where propagation breaks
  std::string reason;   // "non-integer coefficient", "inconsistent", "divisibility"
  std::optional<Rat> coefficient;
};

struct KirwanResult {
  bool pass = false;
  // Per index-1 vertex: the degree-two class as a vertex -> Z^d map.
  std::map<int, std::vector<IntVec>> classes;
  std::optional<KirwanWitness> witness;
};

namespace gkmgraph {

ValidationReport validate(const AbstractGKMGraph& g);

// C1 per oriented edge, via the weight-sum difference identity; throws if
// some difference is not an integer multiple of the edge weight.
std::vector<Int> first_chern_map(const AbstractGKMGraph& g);
Int first_chern(const AbstractGKMGraph& g, const Dart& e);

bool is_positive(const AbstractGKMGraph& g);
bool twenty_four_rule(const AbstractGKMGraph& g);

// Graph isomorphism F plus unimodular theta with theta(w1(e)) = w2(F(e)).
struct GkmIsomorphism {
  std::vector<int> vertex_map;
  RatMat theta;
};
std::optional<GkmIsomorphism> isomorphic(const AbstractGKMGraph& g1, const AbstractGKMGraph& g2);

// Applies an integer surjection theta (d' x d) to all weights; returns the
// projected graph iff it validates. Throws if theta is not surjective.
std::optional<AbstractGKMGraph> project(const AbstractGKMGraph& g, const RatMat& theta);

bool is_generic(const AbstractGKMGraph& g, const IntVec& xi);
// Smallest generic vector in a deterministic max-norm/lex enumeration.
IntVec find_generic(const AbstractGKMGraph& g);
std::vector<IntVec> sample_generic(const AbstractGKMGraph& g, size_t count);

VertexProfile vertex_profile(const AbstractGKMGraph& g, const IntVec& xi);

// For each index-1 vertex, seeds the special degree-two class on indices
// <= 1 and propagates to higher vertices in increasing phi^xi order;
// fails when a coefficient leaves Z or a cross-check dart violates
// divisibility. Requires g positive and xi generic.
KirwanResult kirwan_class_test(const AbstractGKMGraph& g, const IntVec& xi);

// Exact Chern-number integral via localization: sum over vertices of
// sigma-products over the product of vertex weights, evaluated at two
// deterministic generic rational points (values asserted equal). The
// monomial lists Chern indices, e.g. {1,1,1} for c1^3.
Rat abbv_integrate(const AbstractGKMGraph& g, const std::vector<int>& monomial);

// b_{2i} = number of vertices of index i.
std::vector<size_t> betti_numbers(const AbstractGKMGraph& g, const IntVec& xi);

// Integer GKM membership: alpha(p) - alpha(q) divisible by the edge weight
// for every dart. Requires pairwise-coprime weights at every vertex.
bool membership_test(const AbstractGKMGraph& g, const std::vector<IntPolynomial>& alpha);

// Restriction map of the equivariant first Chern class: vertex -> sum of
// weights at the vertex, as linear polynomials.
std::vector<IntPolynomial> equivariant_chern_restrictions(const AbstractGKMGraph& g);

}  // namespace gkmgraph
}  // namespace gkm
