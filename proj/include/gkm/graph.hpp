#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gkm {

// A dart is a directed edge (src, dst); the involution pairs (v,w) with
// (w,v). Simple graphs only: no loops, no repeated darts.
struct Dart {
  int src = 0;
  int dst = 0;
  friend auto operator<=>(const Dart&, const Dart&) = default;
};

class DartGraph {
 public:
  DartGraph() = default;
  // Each undirected edge listed once; both darts are created.
  DartGraph(int vertices, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return v_; }
  int edge_count() const { return static_cast<int>(sigma_.size()); }  // undirected
  int dart_count() const { return 2 * edge_count(); }

  // Default orientation: darts (u,v) with u < v, lexicographic order. The
  // i-th element is the paper-style oriented edge e_{i+1}.
  const std::vector<Dart>& oriented_edges() const { return sigma_; }

  // Index into oriented_edges() of the undirected edge {u,v}, if present.
  std::optional<size_t> edge_index(int u, int v) const;

  bool adjacent(int u, int v) const;
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  // Out-darts at v in neighbor order (E_v^i).
  std::vector<Dart> out_darts(int v) const;

  bool is_connected() const;
  bool is_regular(int n) const;

  // Applies a relabeling perm (old vertex -> new vertex).
  DartGraph relabeled(const std::vector<int>& perm) const;

  bool operator==(const DartGraph& rhs) const;

 private:
  int v_ = 0;
  std::vector<std::vector<int>> adj_;  // sorted neighbor lists
  std::vector<Dart> sigma_;            // default orientation, lexicographic
};

// Connection along a dart e: a bijection E^i_{i(e)} -> E^i_{t(e)} with
// e -> reversed(e), stored as dart pairs in neighbor order of i(e).
struct Connection {
  Dart along;
  std::vector<std::pair<Dart, Dart>> map;  // (e', nabla(e'))
  Dart apply(const Dart& d) const;
};

namespace graph {

// graph6 codec (format of the public cubic-graph lists).
DartGraph parse_graph6(const std::string& line);
std::string write_graph6(const DartGraph& g);
std::vector<DartGraph> parse_graph6_file(const std::string& path);

bool is_cubic_connected(const DartGraph& g);

// All connected simple cubic graphs on V vertices up to isomorphism, by
// brute-force enumeration with canonical-form rejection. Oracle scale only.
std::vector<DartGraph> generate_cubic(int vertices);

// Canonical byte string: equal iff isomorphic. Refinement plus backtracking
// over vertex bijections; fine for V <= 16.
std::string canonical_form(const DartGraph& g);

// The full automorphism group as explicit vertex bijections.
std::vector<std::vector<int>> automorphisms(const DartGraph& g);

// All graph isomorphisms g1 -> g2 (empty if none).
std::vector<std::vector<int>> isomorphisms(const DartGraph& g1, const DartGraph& g2);

// All (n-1)! connections along e fixing e -> reversed(e).
std::vector<Connection> connections_along(const DartGraph& g, const Dart& e);

// IND_v: indices (0-based) into oriented_edges() of the edges at v.
std::vector<size_t> index_sets(const DartGraph& g, int v);

// Index bijection IND_{i(e)} -> IND_{t(e)} induced by a connection.
std::vector<std::pair<size_t, size_t>> induced_index_map(const DartGraph& g,
                                                         const Connection& c);

}  // namespace graph
}  // namespace gkm
