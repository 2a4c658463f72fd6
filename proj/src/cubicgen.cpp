#include "gkm/cubicgen.hpp"

#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>

namespace gkm::graph {
namespace {

// Orderly-style enumeration over adjacency matrices. Rows are filled in
// vertex order under two sound prunes (any canonically labeled graph
// survives both), and isomorph rejection happens at the leaves via
// canonical_form. The prunes keep the tree small enough that the leaf
// count stays within a factor of a few hundred of the class count.
struct Enumerator {
  int n;
  const std::function<void(const DartGraph&)>& emit;
  std::vector<uint32_t> adj;
  std::vector<int> deg;
  std::set<std::string> seen;

  Enumerator(int n_, const std::function<void(const DartGraph&)>& emit_)
      : n(n_), emit(emit_), adj(n_, 0), deg(n_, 0) {}

  bool adjacent(int u, int w) const { return (adj[u] >> w) & 1u; }

  void add(int u, int w) {
    adj[u] |= 1u << w;
    adj[w] |= 1u << u;
    ++deg[u];
    ++deg[w];
  }
  void remove(int u, int w) {
    adj[u] &= ~(1u << w);
    adj[w] &= ~(1u << u);
    --deg[u];
    --deg[w];
  }

  // Swapping two pending column labels must not produce a lexicographically
  // larger matrix: over the completed rows, pending columns must compare
  // non-increasing. Kills almost all non-canonical label orders early.
  bool pending_columns_monotone(int i) const {
    const uint32_t lowmask = (1u << (i + 1)) - 1;
    for (int j = i + 1; j + 1 < n; ++j) {
      uint32_t x = (adj[j] ^ adj[j + 1]) & lowmask;
      if (x && !((adj[j] >> std::countr_zero(x)) & 1u)) return false;
    }
    return true;
  }

  bool feasible(int i) {
    // All future edges live among {i+1..n-1}.
    int deficit_sum = 0;
    for (int j = i + 1; j < n; ++j) {
      int d = 3 - deg[j];
      if (d < 0) return false;
      deficit_sum += d;
      int partners = 0;
      for (int k = i + 1; k < n; ++k)
        if (k != j && deg[k] < 3 && !adjacent(j, k)) ++partners;
      if (d > partners) return false;
    }
    if (deficit_sum % 2 != 0) return false;

    // A closed saturated prefix can never reconnect.
    if (i < n - 1) {
      bool closed = true;
      for (int v = 0; v <= i && closed; ++v) {
        if (deg[v] != 3) closed = false;
        if ((adj[v] >> (i + 1)) != 0) closed = false;
      }
      if (closed) return false;
    }
    return true;
  }

  void accept() {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int w = u + 1; w < n; ++w)
        if (adjacent(u, w)) edges.emplace_back(u, w);
    DartGraph g(n, edges);
    if (!g.is_connected()) return;
    if (seen.insert(canonical_form(g)).second) emit(g);
  }

  void fill_row(int i) {
    if (i == n) {
      accept();
      return;
    }
    int need = 3 - deg[i];
    if (need < 0) return;
    choose(i, i + 1, need);
  }

  void choose(int i, int from, int remaining) {
    if (remaining == 0) {
      if (feasible(i) && pending_columns_monotone(i)) fill_row(i + 1);
      return;
    }
    for (int w = from; w + remaining <= n; ++w) {
      if (deg[w] >= 3) continue;
      add(i, w);
      choose(i, w + 1, remaining - 1);
      remove(i, w);
    }
  }
};

}  // namespace

void enumerate_all_cubic(int vertices, const std::function<void(const DartGraph&)>& emit) {
  if (vertices < 4 || vertices > 30 || vertices % 2 != 0)
    throw std::invalid_argument("vertex count must be even and at least 4");
  Enumerator gen(vertices, emit);
  // Row 0 of a canonically labeled cubic matrix: vertex 0 adjacent to 1,2,3.
  gen.add(0, 1);
  gen.add(0, 2);
  gen.add(0, 3);
  gen.fill_row(1);
}

std::vector<DartGraph> generate_all_cubic(int vertices) {
  std::vector<DartGraph> out;
  enumerate_all_cubic(vertices, [&](const DartGraph& g) { out.push_back(g); });
  return out;
}

}  // namespace gkm::graph
