#include "gkm/skeleton.hpp"

#include "gkm/gkm_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace gkm {

GKMSkeleton::GKMSkeleton(DartGraph g, IntVec d) : graph(std::move(g)), labels(std::move(d)) {
  if (!graph.is_connected()) throw std::invalid_argument("skeleton graph must be connected");
  int n = graph.degree(0);
  if (!graph.is_regular(n)) throw std::invalid_argument("skeleton graph must be n-valent");
  if (labels.size() != static_cast<size_t>(graph.edge_count()))
    throw std::invalid_argument("label vector length must equal |E|/2");
}

RatMat structure_matrix(const DartGraph& g) {
  const auto& e = g.oriented_edges();
  const size_t m = e.size();
  RatMat a(m, m);
  for (size_t j = 0; j < m; ++j) {
    a(j, j) = 2;
    for (size_t k = 0; k < m; ++k) {
      if (j == k) continue;
      if (e[j].src == e[k].src || e[j].dst == e[k].dst)
        a(j, k) = 1;
      else if (e[j].src == e[k].dst || e[j].dst == e[k].src)
        a(j, k) = -1;
    }
  }
  return a;
}

RatMat structure_matrix(const GKMSkeleton& s) { return structure_matrix(s.graph); }

DefectResult defect_and_fundamental_system(const GKMSkeleton& s) {
  RatMat m = structure_matrix(s);
  for (size_t i = 0; i < m.rows(); ++i) m(i, i) -= Rat(s.labels[i]);
  auto basis = linalg::kernel_basis(m);
  DefectResult out;
  out.defect = basis.size();
  if (!basis.empty()) {
    RatMat f(basis.size(), s.edge_count());
    for (size_t r = 0; r < basis.size(); ++r)
      for (size_t c = 0; c < s.edge_count(); ++c) f(r, c) = basis[r][c];
    out.fs = FundamentalSystem{std::move(f)};
  }
  return out;
}

bool check_k1(const FundamentalSystem& fs, const RatMat& a) {
  const size_t m = fs.f.cols();
  for (size_t j = 0; j < m; ++j)
    for (size_t k = j + 1; k < m; ++k) {
      if (a(j, k) == 0 || j == k) continue;
      if (!linalg::linearly_independent_pair(fs.column(j), fs.column(k))) return false;
    }
  return true;
}

bool K2ConnectionReport::satisfies() const {
  return std::all_of(marks.begin(), marks.end(),
                     [](K2Mark m) { return m == K2Mark::IntegerMultiple; });
}

bool K2ConnectionReport::fails_by_rational() const { return rational_witness.has_value(); }

bool K2EdgeReport::satisfied() const {
  return std::any_of(connections.begin(), connections.end(),
                     [](const K2ConnectionReport& c) { return c.satisfies(); });
}

size_t K2EdgeReport::non_rational_count() const {
  size_t n = 0;
  for (const auto& c : connections)
    if (!c.fails_by_rational()) ++n;
  return n;
}

bool K2Report::all_satisfied() const {
  return std::all_of(edges.begin(), edges.end(),
                     [](const K2EdgeReport& e) { return e.satisfied(); });
}

std::vector<size_t> K2Report::failing_edges() const {
  std::vector<size_t> out;
  for (const auto& e : edges)
    if (!e.satisfied()) out.push_back(e.edge_index);
  return out;
}

std::pair<bool, K2Report> check_k2(const GKMSkeleton& s, const FundamentalSystem& fs) {
  RatMat a = structure_matrix(s);
  K2Report report;
  const auto& edges = s.graph.oriented_edges();
  for (size_t j = 0; j < edges.size(); ++j) {
    K2EdgeReport edge_report;
    edge_report.edge_index = j;
    RatVec fj = fs.column(j);
    for (const Connection& conn : graph::connections_along(s.graph, edges[j])) {
      K2ConnectionReport cr;
      cr.connection = conn;
      cr.index_map = graph::induced_index_map(s.graph, conn);
      for (const auto& [k, nk] : cr.index_map) {
        RatVec combo = linalg::add(linalg::scale(a(j, k), fs.column(k)),
                                   linalg::scale(a(j, nk), fs.column(nk)));
        auto c = linalg::multiple_of(combo, fj);
        if (!c.has_value()) {
          cr.marks.push_back(K2Mark::NonCollinear);
        } else if (is_integer(*c)) {
          cr.marks.push_back(K2Mark::IntegerMultiple);
        } else {
          cr.marks.push_back(K2Mark::RationalFailure);
          if (!cr.rational_witness) {
            cr.rational_witness = *c;
            cr.rational_index = k;
          }
        }
      }
      edge_report.connections.push_back(std::move(cr));
    }
    report.edges.push_back(std::move(edge_report));
  }
  bool ok = report.all_satisfied();
  return {ok, std::move(report)};
}

AbstractGKMGraph construct_weights(const GKMSkeleton& s, const FundamentalSystem& fs) {
  const size_t delta = fs.defect();
  if (delta == 0) throw std::invalid_argument("defect must be positive");
  RatMat a = structure_matrix(s);
  if (!check_k1(fs, a)) throw std::invalid_argument("kernel condition (K1) fails");
  if (!check_k2(s, fs).first) throw std::invalid_argument("kernel condition (K2) fails");

  // Base vertex: lowest index. The lattice span of its incident columns is
  // vertex-independent; validation below re-asserts it at every vertex.
  auto ind = graph::index_sets(s.graph, 0);
  std::vector<RatVec> at_base;
  for (size_t k : ind) at_base.push_back(fs.column(k));
  auto basis = linalg::lattice_span_basis(at_base);
  RatMat m = linalg::invert(RatMat::from_columns(basis));

  std::vector<IntVec> weights;
  weights.reserve(s.edge_count());
  for (size_t i = 0; i < s.edge_count(); ++i) {
    RatVec w = m.apply(fs.column(i));
    IntVec wi(w.size());
    for (size_t t = 0; t < w.size(); ++t) {
      if (!is_integer(w[t])) throw std::logic_error("axiom violation: non-integral weight");
      wi[t] = num(w[t]);
    }
    weights.push_back(std::move(wi));
  }
  AbstractGKMGraph g(s.graph, static_cast<int>(delta), weights);
  auto report = gkmgraph::validate(g);
  if (!report.valid) throw std::logic_error("axiom violation: " + report.violations.front());

  // Supported-graph identities: A W^T = D W^T and C1(e_i) = d_i.
  RatMat wt(s.edge_count(), delta);
  for (size_t i = 0; i < s.edge_count(); ++i)
    for (size_t t = 0; t < delta; ++t) wt(i, t) = Rat(weights[i][t]);
  RatMat lhs = a * wt;
  for (size_t i = 0; i < s.edge_count(); ++i)
    for (size_t t = 0; t < delta; ++t)
      if (lhs(i, t) != Rat(s.labels[i]) * wt(i, t))
        throw std::logic_error("axiom violation: structure equation fails");
  auto chern = gkmgraph::first_chern_map(g);
  for (size_t i = 0; i < s.edge_count(); ++i)
    if (chern[i] != s.labels[i])
      throw std::logic_error("axiom violation: first Chern values disagree with labels");
  return g;
}

ProjectionVerdict projection_test(const GKMSkeleton& s, const FundamentalSystem& fs,
                                  const K2Report& k2) {
  if (s.graph.degree(0) != 3 || fs.defect() != 3)
    throw std::domain_error("projection test requires a 3-skeleton of defect 3");
  RatMat a = structure_matrix(s);
  if (!check_k1(fs, a)) throw std::domain_error("projection test requires (K1)");
  if (k2.all_satisfied()) throw std::domain_error("projection test requires (K2) to fail");

  ProjectionVerdict verdict;

  // Every connection along some edge fails by a rational number: no
  // supported graph can have a compatible connection there.
  for (const auto& edge : k2.edges) {
    if (edge.non_rational_count() == 0) {
      verdict.ruled_out = true;
      verdict.reason =
          "every connection along e" + std::to_string(edge.edge_index + 1) +
          " fails (K2) by a rational number";
      return verdict;
    }
  }

  // Two edges, each with a unique viable connection, whose pairing vectors
  // force the rank of the weight transformation below 2.
  struct Candidate {
    size_t j;
    const K2ConnectionReport* conn;
  };
  std::vector<Candidate> candidates;
  for (const auto& edge : k2.edges) {
    if (edge.non_rational_count() != 1) continue;
    for (const auto& c : edge.connections)
      if (!c.fails_by_rational()) candidates.push_back({edge.edge_index, &c});
  }

  auto pairing_vector = [&](const Candidate& cand, size_t k) {
    size_t nk = 0;
    for (const auto& [from, to] : cand.conn->index_map)
      if (from == k) nk = to;
    return linalg::add(linalg::scale(a(cand.j, k), fs.column(k)),
                       linalg::scale(a(cand.j, nk), fs.column(nk)));
  };

  for (size_t x = 0; x < candidates.size(); ++x) {
    for (size_t y = x + 1; y < candidates.size(); ++y) {
      const auto& c1 = candidates[x];
      const auto& c2 = candidates[y];
      RatVec f1 = fs.column(c1.j);
      RatVec f2 = fs.column(c2.j);
      for (const auto& [k1, nk1] : c1.conn->index_map) {
        if (k1 == c1.j) continue;
        RatVec h1 = pairing_vector(c1, k1);
        if (linalg::is_zero(h1)) continue;
        for (const auto& [k2i, nk2] : c2.conn->index_map) {
          if (k2i == c2.j) continue;
          RatVec h2 = pairing_vector(c2, k2i);
          if (linalg::is_zero(h2)) continue;
          bool dependent = !linalg::linearly_independent_pair(f1, h2) ||
                           !linalg::linearly_independent_pair(f1, f2) ||
                           !linalg::linearly_independent_pair(h1, f2) ||
                           !linalg::linearly_independent_pair(h1, h2);
          if (!dependent) continue;
          if (linalg::rank(RatMat::from_columns({f1, f2, h1, h2})) != 3) continue;
          verdict.ruled_out = true;
          verdict.reason = "edges e" + std::to_string(c1.j + 1) + ", e" +
                           std::to_string(c2.j + 1) +
                           " admit no rank-2 weight transformation";
          verdict.witness = {c1.j, c2.j, h1, h2};
          return verdict;
        }
      }
    }
  }
  return verdict;  // NoStatement
}

IntVec permute_labels(const DartGraph& g, const IntVec& labels, const std::vector<int>& aut) {
  const auto& edges = g.oriented_edges();
  IntVec out(labels.size());
  for (size_t i = 0; i < edges.size(); ++i) {
    size_t j = *g.edge_index(aut[edges[i].src], aut[edges[i].dst]);
    out[j] = labels[i];
  }
  return out;
}

IntVec skeleton_canonical_label_vector(const GKMSkeleton& s) {
  IntVec best = s.labels;
  for (const auto& aut : graph::automorphisms(s.graph)) {
    IntVec v = permute_labels(s.graph, s.labels, aut);
    if (std::lexicographical_compare(v.begin(), v.end(), best.begin(), best.end())) best = v;
  }
  return best;
}

bool is_positive_and_24(const GKMSkeleton& s) {
  Int sum = 0;
  for (const Int& d : s.labels) {
    if (d <= 0) return false;
    sum += d;
  }
  return sum == 24;
}

}  // namespace gkm
