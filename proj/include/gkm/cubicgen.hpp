#pragma once

#include "gkm/graph.hpp"

#include <functional>
#include <vector>

namespace gkm::graph {

// Exhaustive generation of all connected simple cubic graphs on `vertices`
// vertices, one labeled representative per isomorphism class. Orderly
// (canonical-prefix) enumeration over adjacency matrices: a graph is kept
// iff its upper-triangle bitstring is the lexicographic maximum over all
// relabelings, and prefixes that are already beaten are pruned. Practical
// through vertices = 16; used to build the cubic-graph database shipped
// under data/.
void enumerate_all_cubic(int vertices, const std::function<void(const DartGraph&)>& emit);

std::vector<DartGraph> generate_all_cubic(int vertices);

}  // namespace gkm::graph
