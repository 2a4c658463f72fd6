#include "gkm/gkm_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace gkm {

AbstractGKMGraph::AbstractGKMGraph(DartGraph graph, int d, std::vector<IntVec> oriented_weights)
    : graph_(std::move(graph)), d_(d), w_(std::move(oriented_weights)) {
  if (w_.size() != static_cast<size_t>(graph_.edge_count()))
    throw std::invalid_argument("one weight per oriented edge required");
  for (const IntVec& w : w_)
    if (w.size() != static_cast<size_t>(d_))
      throw std::invalid_argument("weight dimension mismatch");
}

IntVec AbstractGKMGraph::weight(const Dart& e) const {
  auto idx = graph_.edge_index(e.src, e.dst);
  if (!idx) throw std::invalid_argument("dart not in graph");
  return e.src < e.dst ? w_[*idx] : linalg::int_neg(w_[*idx]);
}

std::vector<IntVec> AbstractGKMGraph::weights_at(int v) const {
  std::vector<IntVec> out;
  for (const Dart& e : graph_.out_darts(v)) out.push_back(weight(e));
  return out;
}

namespace gkmgraph {
namespace {

bool z_span_is_full(const std::vector<IntVec>& vectors, size_t d) {
  auto rows = linalg::hermite_normal_form(vectors);
  if (rows.size() != d) return false;
  for (size_t i = 0; i < d; ++i) {
    size_t pivot = 0;
    while (pivot < d && rows[i][pivot] == 0) ++pivot;
    if (pivot == d || rows[i][pivot] != 1) return false;
  }
  return true;
}

bool compatible_connection_exists(const AbstractGKMGraph& g, const Dart& e) {
  RatVec we = to_rat(g.weight(e));
  for (const Connection& conn : graph::connections_along(g.graph(), e)) {
    bool ok = true;
    for (const auto& [from, to] : conn.map) {
      RatVec diff = to_rat(linalg::int_sub(g.weight(from), g.weight(to)));
      auto c = linalg::multiple_of(diff, we);
      if (!c.has_value() || !is_integer(*c)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace

ValidationReport validate(const AbstractGKMGraph& g) {
  ValidationReport report;
  auto fail = [&](std::string msg) {
    report.valid = false;
    report.violations.push_back(std::move(msg));
  };

  const DartGraph& graph = g.graph();
  const size_t d = static_cast<size_t>(g.rank());
  if (graph.vertex_count() == 0 || !graph.is_connected()) fail("graph not connected");
  int n = graph.vertex_count() ? graph.degree(0) : 0;
  if (!graph.is_regular(n)) fail("graph not n-valent");
  if (n >= 2 && (g.rank() < 2 || g.rank() > n))
    fail("torus rank must satisfy 2 <= d <= n");

  for (size_t i = 0; i < g.oriented_weights().size(); ++i)
    if (linalg::int_is_zero(g.oriented_weights()[i]))
      fail("zero weight at edge " + std::to_string(i + 1));
  if (!report.valid) return report;

  for (int v = 0; v < graph.vertex_count(); ++v) {
    auto ws = g.weights_at(v);
    if (!z_span_is_full(ws, d))
      fail("weights at vertex " + std::to_string(v + 1) + " do not span Z^d");
    for (size_t i = 0; i < ws.size(); ++i)
      for (size_t j = i + 1; j < ws.size(); ++j)
        if (!linalg::linearly_independent_pair(to_rat(ws[i]), to_rat(ws[j])))
          fail("dependent weights at vertex " + std::to_string(v + 1));
  }
  if (!report.valid) return report;

  for (const Dart& e : graph.oriented_edges()) {
    if (!compatible_connection_exists(g, e))
      fail("no compatible connection along (" + std::to_string(e.src + 1) + "," +
           std::to_string(e.dst + 1) + ")");
    Dart rev{e.dst, e.src};
    if (!compatible_connection_exists(g, rev))
      fail("no compatible connection along (" + std::to_string(e.dst + 1) + "," +
           std::to_string(e.src + 1) + ")");
  }
  return report;
}

Int first_chern(const AbstractGKMGraph& g, const Dart& e) {
  IntVec lhs(g.rank(), 0);
  for (const Dart& d : g.graph().out_darts(e.src)) lhs = linalg::int_add(lhs, g.weight(d));
  for (const Dart& d : g.graph().out_darts(e.dst)) lhs = linalg::int_sub(lhs, g.weight(d));
  auto c = linalg::multiple_of(to_rat(lhs), to_rat(g.weight(e)));
  if (!c.has_value() || !is_integer(*c))
    throw std::logic_error("weight-sum difference is not an integer multiple of the edge weight");
  return num(*c);
}

std::vector<Int> first_chern_map(const AbstractGKMGraph& g) {
  std::vector<Int> out;
  out.reserve(g.graph().oriented_edges().size());
  for (const Dart& e : g.graph().oriented_edges()) out.push_back(first_chern(g, e));
  return out;
}

bool is_positive(const AbstractGKMGraph& g) {
  for (const Int& c : first_chern_map(g))
    if (c <= 0) return false;
  return true;
}

bool twenty_four_rule(const AbstractGKMGraph& g) {
  Int sum = 0;
  for (const Int& c : first_chern_map(g)) sum += c;
  return sum == 24;
}

std::optional<GkmIsomorphism> isomorphic(const AbstractGKMGraph& g1, const AbstractGKMGraph& g2) {
  if (g1.rank() != g2.rank()) return std::nullopt;
  const size_t d = static_cast<size_t>(g1.rank());
  const auto& edges = g1.graph().oriented_edges();

  // d independent weights determine theta; verified globally afterwards.
  std::vector<size_t> pivots;
  {
    std::vector<RatVec> cols;
    for (size_t i = 0; i < edges.size() && pivots.size() < d; ++i) {
      cols.push_back(to_rat(g1.oriented_weights()[i]));
      if (linalg::rank(RatMat::from_columns(cols)) == pivots.size() + 1)
        pivots.push_back(i);
      else
        cols.pop_back();
    }
    if (pivots.size() < d) return std::nullopt;  // cannot happen for valid graphs
  }
  std::vector<RatVec> ucols;
  for (size_t i : pivots) ucols.push_back(to_rat(g1.oriented_weights()[i]));
  RatMat uinv = linalg::invert(RatMat::from_columns(ucols));

  for (const auto& f : graph::isomorphisms(g1.graph(), g2.graph())) {
    std::vector<RatVec> vcols;
    for (size_t i : pivots) {
      Dart e = edges[i];
      vcols.push_back(to_rat(g2.weight({f[e.src], f[e.dst]})));
    }
    RatMat theta = RatMat::from_columns(vcols) * uinv;
    // theta must be an integer matrix with unit determinant.
    bool integral = true;
    std::vector<IntVec> rows(d, IntVec(d));
    for (size_t r = 0; r < d && integral; ++r)
      for (size_t c = 0; c < d; ++c) {
        if (!is_integer(theta(r, c))) {
          integral = false;
          break;
        }
        rows[r][c] = num(theta(r, c));
      }
    if (!integral || !z_span_is_full(rows, d)) continue;
    bool all_match = true;
    for (size_t i = 0; i < edges.size() && all_match; ++i) {
      RatVec mapped = theta.apply(to_rat(g1.oriented_weights()[i]));
      IntVec expect = g2.weight({f[edges[i].src], f[edges[i].dst]});
      for (size_t c = 0; c < d; ++c)
        if (mapped[c] != Rat(expect[c])) {
          all_match = false;
          break;
        }
    }
    if (all_match) return GkmIsomorphism{f, theta};
  }
  return std::nullopt;
}

std::optional<AbstractGKMGraph> project(const AbstractGKMGraph& g, const RatMat& theta) {
  const size_t d = static_cast<size_t>(g.rank());
  const size_t dnew = theta.rows();
  if (theta.cols() != d) throw std::invalid_argument("projection arity mismatch");
  std::vector<IntVec> cols(d, IntVec(dnew));
  for (size_t c = 0; c < d; ++c)
    for (size_t r = 0; r < dnew; ++r) {
      if (!is_integer(theta(r, c))) throw std::invalid_argument("projection must be integral");
      cols[c][r] = num(theta(r, c));
    }
  if (!z_span_is_full(cols, dnew))
    throw std::invalid_argument("projection must be a surjection onto Z^d'");

  std::vector<IntVec> weights;
  for (const IntVec& w : g.oriented_weights()) {
    RatVec mapped = theta.apply(to_rat(w));
    IntVec wi(dnew);
    for (size_t r = 0; r < dnew; ++r) wi[r] = num(mapped[r]);
    weights.push_back(std::move(wi));
  }
  AbstractGKMGraph candidate(g.graph(), static_cast<int>(dnew), weights);
  if (!validate(candidate).valid) return std::nullopt;
  return candidate;
}

bool is_generic(const AbstractGKMGraph& g, const IntVec& xi) {
  if (xi.size() != static_cast<size_t>(g.rank()))
    throw std::invalid_argument("generic vector dimension mismatch");
  for (const IntVec& w : g.oriented_weights()) {
    Int p = 0;
    for (size_t i = 0; i < xi.size(); ++i) p += w[i] * xi[i];
    if (p == 0) return false;
  }
  return true;
}

namespace {

bool next_in_box(IntVec& v, const Int& radius) {
  size_t i = v.size();
  while (i > 0) {
    --i;
    if (v[i] < radius) {
      v[i] += 1;
      for (size_t j = i + 1; j < v.size(); ++j) v[j] = -radius;
      return true;
    }
  }
  return false;
}

}  // namespace

// Z^d by increasing max-norm, lexicographic within each shell.
std::vector<IntVec> sample_generic(const AbstractGKMGraph& g, size_t count) {
  std::vector<IntVec> out;
  const size_t d = static_cast<size_t>(g.rank());
  for (Int radius = 1; out.size() < count && radius <= 64; ++radius) {
    IntVec v(d, -radius);
    do {
      Int maxabs = 0;
      for (const Int& x : v) maxabs = std::max(maxabs, boost::multiprecision::abs(x));
      if (maxabs == radius && is_generic(g, v)) out.push_back(v);
    } while (out.size() < count && next_in_box(v, radius));
  }
  if (out.size() < count) throw std::logic_error("generic vector search exhausted");
  return out;
}

IntVec find_generic(const AbstractGKMGraph& g) { return sample_generic(g, 1).front(); }

VertexProfile vertex_profile(const AbstractGKMGraph& g, const IntVec& xi) {
  if (!is_generic(g, xi)) throw std::domain_error("vector is not generic");
  const DartGraph& graph = g.graph();
  const int n = graph.vertex_count();
  VertexProfile p;
  p.index.resize(n);
  p.weight_sum.resize(n);
  p.xi_component.resize(n);
  p.stable.resize(n);

  for (int v = 0; v < n; ++v) {
    IntVec sum(g.rank(), 0);
    int idx = 0;
    for (const Dart& e : graph.out_darts(v)) {
      IntVec w = g.weight(e);
      Int pair = 0;
      for (size_t i = 0; i < w.size(); ++i) pair += w[i] * xi[i];
      if (pair < 0) ++idx;
      sum = linalg::int_add(sum, w);
    }
    p.index[v] = idx;
    p.weight_sum[v] = linalg::int_neg(sum);
    Rat comp = 0;
    for (size_t i = 0; i < p.weight_sum[v].size(); ++i)
      comp += Rat(p.weight_sum[v][i] * xi[i]);
    p.xi_component[v] = comp;
  }

  for (int v = 0; v < n; ++v) {
    std::vector<bool> seen(n, false);
    seen[v] = true;
    std::vector<int> queue = {v};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      for (const Dart& e : graph.out_darts(u)) {
        Int pair = 0;
        IntVec w = g.weight(e);
        for (size_t i = 0; i < w.size(); ++i) pair += w[i] * xi[i];
        if (pair > 0 && !seen[e.dst]) {
          seen[e.dst] = true;
          queue.push_back(e.dst);
        }
      }
    }
    for (int u = 0; u < n; ++u)
      if (seen[u]) p.stable[v].push_back(u);
  }
  return p;
}

KirwanResult kirwan_class_test(const AbstractGKMGraph& g, const IntVec& xi) {
  if (!is_positive(g)) throw std::domain_error("graph is not positive");
  VertexProfile prof = vertex_profile(g, xi);  // throws on non-generic xi
  const DartGraph& graph = g.graph();
  const int n = graph.vertex_count();

  KirwanResult result;
  result.pass = true;

  auto pairing = [&](const IntVec& w) {
    Int p = 0;
    for (size_t i = 0; i < w.size(); ++i) p += w[i] * xi[i];
    return p;
  };

  std::vector<int> high;
  for (int v = 0; v < n; ++v)
    if (prof.index[v] >= 2) high.push_back(v);
  std::sort(high.begin(), high.end(), [&](int a, int b) {
    if (prof.xi_component[a] != prof.xi_component[b])
      return prof.xi_component[a] < prof.xi_component[b];
    return a < b;
  });

  for (int v = 0; v < n; ++v) {
    if (prof.index[v] != 1) continue;

    // Negative Euler class: the unique descending weight at v.
    IntVec tau;
    for (const Dart& e : graph.out_darts(v))
      if (pairing(g.weight(e)) < 0) tau = g.weight(e);

    auto in_stable = [&](int w) {
      const auto& s = prof.stable[v];
      return std::binary_search(s.begin(), s.end(), w);
    };

    std::vector<IntVec> gamma(n);
    std::vector<bool> known(n, false);
    for (int w = 0; w < n; ++w) {
      if (prof.index[w] > 1) continue;
      if (!in_stable(w))
        gamma[w] = IntVec(g.rank(), 0);
      else
        gamma[w] = tau;  // index 0 inside the stable set cannot occur except v itself
      known[w] = true;
    }

    bool ok = true;
    for (int w : high) {
      std::vector<Dart> descending;
      for (const Dart& e : graph.out_darts(w))
        if (pairing(g.weight(e)) < 0) descending.push_back(e);
      // Positivity makes descending neighbours strictly lower in phi^xi,
      // so their classes are already known.
      const Dart& e1 = descending[0];
      const Dart& e2 = descending[1];
      if (!known[e1.dst] || !known[e2.dst])
        throw std::logic_error("propagation order violated");

      RatVec target = to_rat(linalg::int_sub(gamma[e1.dst], gamma[e2.dst]));
      auto sol =
          linalg::solve_two_unknowns(target, linalg::int_neg(g.weight(e1)), g.weight(e2));
      if (!sol.has_value()) {
        result.witness = KirwanWitness{v, w, "inconsistent system", std::nullopt};
        ok = false;
        break;
      }
      auto [a1, a2] = *sol;
      if (!is_integer(a1) || !is_integer(a2)) {
        Rat bad = !is_integer(a1) ? a1 : a2;
        result.witness = KirwanWitness{v, w, "non-integer coefficient", bad};
        ok = false;
        break;
      }
      IntVec value = gamma[e1.dst];
      IntVec step = g.weight(e1);
      for (size_t i = 0; i < value.size(); ++i) value[i] += num(a1) * step[i];
      gamma[w] = value;
      known[w] = true;

      bool cross_ok = true;
      for (size_t k = 2; k < descending.size(); ++k) {
        const Dart& e3 = descending[k];
        RatVec diff = to_rat(linalg::int_sub(gamma[w], gamma[e3.dst]));
        auto c = linalg::multiple_of(diff, to_rat(g.weight(e3)));
        if (!c.has_value() || !is_integer(*c)) cross_ok = false;
      }
      if (!cross_ok) {
        result.witness = KirwanWitness{v, w, "divisibility", std::nullopt};
        ok = false;
        break;
      }
    }

    if (ok) {
      // Full edge-divisibility check over every dart.
      for (const Dart& e : graph.oriented_edges()) {
        RatVec diff = to_rat(linalg::int_sub(gamma[e.src], gamma[e.dst]));
        auto c = linalg::multiple_of(diff, to_rat(g.weight(e)));
        if (!c.has_value() || !is_integer(*c)) {
          result.witness = KirwanWitness{v, e.src, "divisibility", std::nullopt};
          ok = false;
          break;
        }
      }
    }

    if (!ok) {
      result.pass = false;
      result.classes.clear();
      return result;
    }
    result.classes[v] = gamma;
  }
  return result;
}

Rat abbv_integrate(const AbstractGKMGraph& g, const std::vector<int>& monomial) {
  const int n = g.valence();
  int degree = 0;
  for (int i : monomial) {
    if (i < 0 || i > n) throw std::invalid_argument("chern index out of range");
    degree += i;
  }
  if (degree > n) throw std::invalid_argument("monomial degree exceeds half-dimension");

  const size_t d = static_cast<size_t>(g.rank());
  auto point_for = [&](Int t) {
    RatVec pt(d);
    Rat power = 1;
    for (size_t i = 0; i < d; ++i) {
      pt[i] = power;
      power *= Rat(t);
    }
    return pt;
  };
  auto valid_point = [&](const RatVec& pt) {
    for (const IntVec& w : g.oriented_weights())
      if (linalg::int_dot(w, pt) == 0) return false;
    return true;
  };

  std::vector<RatVec> points;
  for (Int t = 2; points.size() < 2; ++t) {
    if (t > 10000) throw std::logic_error("evaluation point search exhausted");
    RatVec pt = point_for(t);
    if (valid_point(pt)) points.push_back(pt);
  }

  std::vector<Rat> values;
  for (const RatVec& pt : points) {
    Rat total = 0;
    for (int v = 0; v < g.graph().vertex_count(); ++v) {
      RatVec vals;
      for (const Dart& e : g.graph().out_darts(v)) vals.push_back(linalg::int_dot(g.weight(e), pt));
      Rat numer = 1;
      for (int i : monomial) numer *= symalg::sym_value(vals, static_cast<size_t>(i));
      Rat denom = 1;
      for (const Rat& x : vals) denom *= x;
      total += numer / denom;
    }
    values.push_back(total);
  }
  if (values[0] != values[1])
    throw std::logic_error("localization sum is not constant across evaluation points");
  if (degree < n && values[0] != 0)
    throw std::logic_error("positive-codegree integral must vanish");
  if (degree == n && !is_integer(values[0]))
    throw std::logic_error("top-degree integral must be an integer");
  return values[0];
}

std::vector<size_t> betti_numbers(const AbstractGKMGraph& g, const IntVec& xi) {
  VertexProfile prof = vertex_profile(g, xi);
  const int n = g.valence();
  std::vector<size_t> betti(static_cast<size_t>(n) + 1, 0);
  for (int idx : prof.index) betti[static_cast<size_t>(idx)] += 1;
  if (is_positive(g) && (betti.front() != 1 || betti.back() != 1))
    throw std::logic_error("positive graph must have unique extrema");
  return betti;
}

std::vector<IntPolynomial> equivariant_chern_restrictions(const AbstractGKMGraph& g) {
  std::vector<IntPolynomial> out;
  for (int v = 0; v < g.graph().vertex_count(); ++v) {
    IntPolynomial sum(g.rank());
    for (const IntVec& w : g.weights_at(v)) sum = sum + LinearForm{w}.to_polynomial();
    out.push_back(sum);
  }
  return out;
}

bool membership_test(const AbstractGKMGraph& g, const std::vector<IntPolynomial>& alpha) {
  const DartGraph& graph = g.graph();
  if (alpha.size() != static_cast<size_t>(graph.vertex_count()))
    throw std::invalid_argument("one class restriction per vertex required");
  for (int v = 0; v < graph.vertex_count(); ++v) {
    std::vector<LinearForm> ws;
    for (const IntVec& w : g.weights_at(v)) ws.push_back(LinearForm{w});
    if (!symalg::pairwise_coprime(ws))
      throw std::domain_error("weights are not pairwise coprime at vertex " +
                              std::to_string(v + 1));
  }
  for (const Dart& e : graph.oriented_edges()) {
    IntPolynomial diff = alpha[e.src] - alpha[e.dst];
    if (!symalg::divisible_by_linear(diff, LinearForm{g.weight(e)}).has_value()) return false;
  }
  return true;
}

}  // namespace gkmgraph
}  // namespace gkm
