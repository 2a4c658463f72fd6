#pragma once

#include "gkm/gkm_graph.hpp"
#include "gkm/linalg.hpp"

#include <optional>
#include <vector>

namespace gkm {

// Full-dimensional polytope given by its vertex list (checked). Edges may be
// supplied or derived from the hull.
struct Polytope {
  size_t dim = 0;
  std::vector<RatVec> vertices;
  std::optional<std::vector<std::pair<int, int>>> edges;
};

// Supporting hyperplane <normal, x> = level with primitive integer outward
// normal; the polytope lies in <normal, x> <= level.
struct Facet {
  IntVec normal;
  Rat level;
  std::vector<int> on_vertices;  // sorted
};

namespace polytope {

// Primitive integer vector along a nonzero rational direction.
IntVec primitive_direction(const RatVec& direction);

std::vector<Facet> facets(const Polytope& p);

// Undirected edge skeleton: {u,v} spans an edge iff the minimal face
// containing both has vertex set exactly {u,v}.
std::vector<std::pair<int, int>> edge_skeleton(const Polytope& p);

// Smooth: at each vertex exactly d edges whose primitive directions form a
// Z-basis of Z^d.
bool is_smooth(const Polytope& p);

// Reflexive: integral vertices and every facet at level exactly 1.
bool is_reflexive(const Polytope& p);

// GKM graph of the toric manifold belonging to a smooth polytope: vertices
// and edges of the polytope, weights the primitive edge directions.
AbstractGKMGraph graph_from_polytope(const Polytope& p);

}  // namespace polytope
}  // namespace gkm
