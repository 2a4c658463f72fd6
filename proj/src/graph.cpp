#include "gkm/graph.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace gkm {

DartGraph::DartGraph(int vertices, const std::vector<std::pair<int, int>>& edges)
    : v_(vertices), adj_(vertices) {
  for (auto [u, w] : edges) {
    if (u < 0 || w < 0 || u >= v_ || w >= v_) throw std::invalid_argument("vertex out of range");
    if (u == w) throw std::invalid_argument("loop edge");
    if (u > w) std::swap(u, w);
    sigma_.push_back({u, w});
  }
  std::sort(sigma_.begin(), sigma_.end());
  if (std::adjacent_find(sigma_.begin(), sigma_.end()) != sigma_.end())
    throw std::invalid_argument("repeated edge");
  for (const Dart& d : sigma_) {
    adj_[d.src].push_back(d.dst);
    adj_[d.dst].push_back(d.src);
  }
  for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

std::optional<size_t> DartGraph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  Dart key{u, v};
  auto it = std::lower_bound(sigma_.begin(), sigma_.end(), key);
  if (it == sigma_.end() || !(*it == key)) return std::nullopt;
  return static_cast<size_t>(it - sigma_.begin());
}

bool DartGraph::adjacent(int u, int v) const {
  const auto& nbrs = adj_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Dart> DartGraph::out_darts(int v) const {
  std::vector<Dart> out;
  out.reserve(adj_[v].size());
  for (int w : adj_[v]) out.push_back({v, w});
  return out;
}

bool DartGraph::is_connected() const {
  if (v_ == 0) return false;
  std::vector<bool> seen(v_, false);
  std::vector<int> stack = {0};
  seen[0] = true;
  int found = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : adj_[u])
      if (!seen[w]) {
        seen[w] = true;
        ++found;
        stack.push_back(w);
      }
  }
  return found == v_;
}

bool DartGraph::is_regular(int n) const {
  for (int v = 0; v < v_; ++v)
    if (degree(v) != n) return false;
  return true;
}

DartGraph DartGraph::relabeled(const std::vector<int>& perm) const {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(sigma_.size());
  for (const Dart& d : sigma_) edges.emplace_back(perm[d.src], perm[d.dst]);
  return DartGraph(v_, edges);
}

bool DartGraph::operator==(const DartGraph& rhs) const {
  return v_ == rhs.v_ && sigma_ == rhs.sigma_;
}

Dart Connection::apply(const Dart& d) const {
  for (const auto& [from, to] : map)
    if (from == d) return to;
  throw std::invalid_argument("dart not in connection domain");
}

namespace graph {
namespace {

int read_g6_byte(const std::string& s, size_t& pos) {
  if (pos >= s.size()) throw std::invalid_argument("malformed graph6: truncated");
  unsigned char c = static_cast<unsigned char>(s[pos++]);
  if (c < 63 || c > 126) throw std::invalid_argument("malformed graph6: byte out of range");
  return c - 63;
}

}  // namespace

DartGraph parse_graph6(const std::string& raw) {
  std::string s = raw;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  const std::string header = ">>graph6<<";
  if (s.rfind(header, 0) == 0) s = s.substr(header.size());
  if (s.empty()) throw std::invalid_argument("malformed graph6: empty record");

  size_t pos = 0;
  long long n = read_g6_byte(s, pos);
  if (n == 63) {
    long long a = read_g6_byte(s, pos);
    if (a == 63) {
      long long parts[6];
      for (auto& p : parts) p = read_g6_byte(s, pos);
      n = 0;
      for (long long p : parts) n = (n << 6) | p;
    } else {
      long long b = read_g6_byte(s, pos);
      long long c = read_g6_byte(s, pos);
      n = (a << 12) | (b << 6) | c;
    }
  }
  if (n < 0 || n > 100000) throw std::invalid_argument("malformed graph6: vertex count out of range");

  const long long nbits = n * (n - 1) / 2;
  const long long nbytes = (nbits + 5) / 6;
  std::vector<int> groups;
  groups.reserve(static_cast<size_t>(nbytes));
  for (long long i = 0; i < nbytes; ++i) groups.push_back(read_g6_byte(s, pos));
  if (pos != s.size()) throw std::invalid_argument("malformed graph6: trailing garbage");

  std::vector<std::pair<int, int>> edges;
  long long bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if ((groups[bit / 6] >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
  // Padding bits must be zero.
  for (long long b = nbits; b < nbytes * 6; ++b)
    if ((groups[b / 6] >> (5 - b % 6)) & 1)
      throw std::invalid_argument("malformed graph6: nonzero padding");
  return DartGraph(static_cast<int>(n), edges);
}

std::string write_graph6(const DartGraph& g) {
  const int n = g.vertex_count();
  if (n > 62) throw std::invalid_argument("graph6 writer supports at most 62 vertices");
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  const int nbits = n * (n - 1) / 2;
  std::vector<int> bits(static_cast<size_t>((nbits + 5) / 6 * 6), 0);
  int bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if (g.adjacent(i, j)) bits[bit] = 1;
  for (size_t k = 0; k < bits.size(); k += 6) {
    int v = 0;
    for (size_t t = 0; t < 6; ++t) v = (v << 1) | bits[k + t];
    out.push_back(static_cast<char>(v + 63));
  }
  return out;
}

std::vector<DartGraph> parse_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<DartGraph> graphs;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    graphs.push_back(parse_graph6(line));
  }
  return graphs;
}

bool is_cubic_connected(const DartGraph& g) {
  return g.vertex_count() > 0 && g.is_regular(3) && g.is_connected();
}

namespace {

// Iterated neighbor-color refinement. Cell order of the refined partition is
// determined by signatures, so it is isomorphism-invariant.
std::vector<int> refine_colors(const DartGraph& g, std::vector<int> colors) {
  const int n = g.vertex_count();
  while (true) {
    std::vector<std::pair<int, std::vector<int>>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> nc;
      nc.reserve(g.neighbors(v).size());
      for (int w : g.neighbors(v)) nc.push_back(colors[w]);
      std::sort(nc.begin(), nc.end());
      sig[v] = {colors[v], std::move(nc)};
    }
    std::map<std::pair<int, std::vector<int>>, int> rank;
    for (int v = 0; v < n; ++v) rank.emplace(sig[v], 0);
    int next = 0;
    for (auto& [k, r] : rank) r = next++;
    std::vector<int> fresh(n);
    bool changed = false;
    for (int v = 0; v < n; ++v) {
      fresh[v] = rank[sig[v]];
      if (fresh[v] != colors[v]) changed = true;
    }
    colors = std::move(fresh);
    if (!changed) return colors;
  }
}

std::string adjacency_bits(const DartGraph& g, const std::vector<int>& label) {
  const int n = g.vertex_count();
  std::vector<int> pos(n);
  for (int v = 0; v < n; ++v) pos[label[v]] = v;  // new label -> old vertex
  std::string bits;
  bits.reserve(static_cast<size_t>(n * (n - 1) / 2));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) bits.push_back(g.adjacent(pos[i], pos[j]) ? '1' : '0');
  return bits;
}

struct CanonSearch {
  const DartGraph& g;
  std::string best;
  bool have_best = false;

  void visit(const std::vector<int>& colors) {
    const int n = g.vertex_count();
    // Discrete iff colors are a permutation of 0..n-1. The cell picked for
    // individualization must be chosen by color, never by vertex id, or the
    // search tree would depend on the labeling.
    std::vector<int> count(n, 0);
    for (int v = 0; v < n; ++v) ++count[colors[v]];
    int first_clash = -1;
    for (int c = 0; c < n && first_clash < 0; ++c)
      if (count[c] > 1) first_clash = c;
    if (first_clash < 0) {
      std::string bits = adjacency_bits(g, colors);
      if (!have_best || bits < best) {
        best = std::move(bits);
        have_best = true;
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (colors[v] != first_clash) continue;
      std::vector<int> next = colors;
      // Individualize v: give it a color strictly between its cell and the
      // rest of the cell.
      for (int w = 0; w < n; ++w)
        if (next[w] > first_clash || (next[w] == first_clash && w != v)) next[w] += 1;
      visit(refine_colors(g, next));
    }
  }
};

}  // namespace

std::string canonical_form(const DartGraph& g) {
  const int n = g.vertex_count();
  CanonSearch search{g};
  search.visit(refine_colors(g, std::vector<int>(n, 0)));
  std::string out = std::to_string(n);
  out.push_back(':');
  out += search.have_best ? search.best : "";
  return out;
}

namespace {

void isomorphism_search(const DartGraph& g1, const DartGraph& g2,
                        const std::vector<int>& order, const std::vector<int>& c1,
                        const std::vector<int>& c2, std::vector<int>& image,
                        std::vector<bool>& used, size_t depth,
                        std::vector<std::vector<int>>& out) {
  if (depth == order.size()) {
    out.push_back(image);
    return;
  }
  int v = order[depth];
  for (int w = 0; w < g2.vertex_count(); ++w) {
    if (used[w] || c1[v] != c2[w]) continue;
    bool ok = true;
    for (size_t k = 0; k < depth && ok; ++k) {
      int u = order[k];
      if (g1.adjacent(u, v) != g2.adjacent(image[u], w)) ok = false;
    }
    if (!ok) continue;
    image[v] = w;
    used[w] = true;
    isomorphism_search(g1, g2, order, c1, c2, image, used, depth + 1, out);
    used[w] = false;
  }
}

}  // namespace

std::vector<std::vector<int>> isomorphisms(const DartGraph& g1, const DartGraph& g2) {
  if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return {};
  const int n = g1.vertex_count();
  if (n == 0) return {};
  std::vector<int> c1 = refine_colors(g1, std::vector<int>(n, 0));
  std::vector<int> c2 = refine_colors(g2, std::vector<int>(n, 0));
  auto hist = [](const std::vector<int>& c) {
    std::vector<int> h = c;
    std::sort(h.begin(), h.end());
    return h;
  };
  if (hist(c1) != hist(c2)) return {};

  // BFS order on g1 binds adjacency constraints early.
  std::vector<int> order;
  std::vector<bool> seen(n, false);
  for (int root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<int> queue = {root};
    seen[root] = true;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      order.push_back(u);
      for (int w : g1.neighbors(u))
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
    }
  }
  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);
  std::vector<std::vector<int>> out;
  isomorphism_search(g1, g2, order, c1, c2, image, used, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> automorphisms(const DartGraph& g) { return isomorphisms(g, g); }

std::vector<Connection> connections_along(const DartGraph& g, const Dart& e) {
  if (!g.adjacent(e.src, e.dst)) throw std::invalid_argument("dart not in graph");
  std::vector<Dart> from = g.out_darts(e.src);
  std::vector<Dart> to = g.out_darts(e.dst);
  Dart ebar{e.dst, e.src};
  std::vector<Dart> from_rest, to_rest;
  for (const Dart& d : from)
    if (!(d == e)) from_rest.push_back(d);
  for (const Dart& d : to)
    if (!(d == ebar)) to_rest.push_back(d);

  std::vector<Connection> out;
  std::vector<size_t> idx(to_rest.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end());
  do {
    Connection c;
    c.along = e;
    c.map.emplace_back(e, ebar);
    for (size_t i = 0; i < from_rest.size(); ++i) c.map.emplace_back(from_rest[i], to_rest[idx[i]]);
    out.push_back(std::move(c));
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

std::vector<size_t> index_sets(const DartGraph& g, int v) {
  std::vector<size_t> out;
  const auto& edges = g.oriented_edges();
  for (size_t k = 0; k < edges.size(); ++k)
    if (edges[k].src == v || edges[k].dst == v) out.push_back(k);
  return out;
}

std::vector<std::pair<size_t, size_t>> induced_index_map(const DartGraph& g,
                                                         const Connection& c) {
  std::vector<std::pair<size_t, size_t>> out;
  for (const auto& [d, nd] : c.map)
    out.emplace_back(*g.edge_index(d.src, d.dst), *g.edge_index(nd.src, nd.dst));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct CubicEnumerator {
  int n;
  std::vector<std::vector<int>> adj;
  std::vector<int> deg;
  int used = 0;
  std::set<std::string> seen;
  std::vector<DartGraph>* out;

  void add_edge(int u, int w) {
    adj[u].push_back(w);
    adj[w].push_back(u);
    ++deg[u];
    ++deg[w];
  }
  void remove_edge(int u, int w) {
    adj[u].pop_back();
    adj[w].pop_back();
    --deg[u];
    --deg[w];
  }
  bool adjacent(int u, int w) const {
    return std::find(adj[u].begin(), adj[u].end(), w) != adj[u].end();
  }

  void finish() {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int w : adj[u])
        if (u < w) edges.emplace_back(u, w);
    DartGraph g(n, edges);
    std::string key = canonical_form(g);
    if (seen.insert(std::move(key)).second) out->push_back(std::move(g));
  }

  // Saturate the lowest-degree-deficient used vertex; new labels are
  // introduced in order, so each isomorphism class is met at least once.
  void extend() {
    int u = -1;
    for (int v = 0; v < used; ++v)
      if (deg[v] < 3) {
        u = v;
        break;
      }
    if (u == -1) {
      if (used == n) finish();
      return;
    }
    int need = 3 - deg[u];
    std::vector<int> cand;
    for (int w = u + 1; w < used; ++w)
      if (deg[w] < 3 && !adjacent(u, w)) cand.push_back(w);

    // Choose how many brand-new vertices to attach (they take consecutive
    // labels starting at `used`), and which existing vertices fill the rest.
    for (int fresh = 0; fresh <= need; ++fresh) {
      if (used + fresh > n) break;
      int pick = need - fresh;
      if (pick > static_cast<int>(cand.size())) continue;
      std::vector<int> sel(pick);
      choose_existing(u, cand, 0, pick, sel, fresh);
    }
  }

  void choose_existing(int u, const std::vector<int>& cand, size_t start, int remaining,
                       std::vector<int>& sel, int fresh) {
    if (remaining == 0) {
      for (int t = 0; t < fresh; ++t) add_edge(u, used + t);
      for (int w : sel) add_edge(u, w);
      used += fresh;
      extend();
      used -= fresh;
      for (auto it = sel.rbegin(); it != sel.rend(); ++it) remove_edge(u, *it);
      for (int t = fresh - 1; t >= 0; --t) remove_edge(u, used + t);
      return;
    }
    for (size_t i = start; i + remaining <= cand.size(); ++i) {
      sel[sel.size() - remaining] = cand[i];
      choose_existing(u, cand, i + 1, remaining - 1, sel, fresh);
    }
  }
};

}  // namespace

std::vector<DartGraph> generate_cubic(int vertices) {
  if (vertices < 4 || vertices > 10 || vertices % 2 != 0)
    throw std::invalid_argument("vertex count must be even and in [4, 10]");
  std::vector<DartGraph> out;
  CubicEnumerator e{vertices,
                    std::vector<std::vector<int>>(vertices),
                    std::vector<int>(vertices, 0),
                    1,
                    {},
                    &out};
  e.extend();
  std::sort(out.begin(), out.end(), [](const DartGraph& a, const DartGraph& b) {
    return canonical_form(a) < canonical_form(b);
  });
  return out;
}

}  // namespace graph
}  // namespace gkm
