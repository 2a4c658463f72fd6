#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gkm/linalg.hpp"
#include "test_util.hpp"

using namespace gkm;
using namespace gkm::linalg;
using gkm::test::ivec;
using gkm::test::mat;
using gkm::test::rvec;

namespace {

// Structure matrix of the complete-graph-on-four-vertices skeleton with the
// lexicographic edge ordering; used as a shared fixture across suites.
RatMat k4_structure() {
  return mat({{2, 1, 1, -1, -1, 0},
              {1, 2, 1, 1, 0, -1},
              {1, 1, 2, 0, 1, 1},
              {-1, 1, 0, 2, 1, -1},
              {-1, 0, 1, 1, 2, 1},
              {0, -1, 1, -1, 1, 2}});
}

RatMat sub_diag(RatMat m, int64_t d) {
  for (size_t i = 0; i < m.rows(); ++i) m(i, i) -= d;
  return m;
}

}  // namespace

TEST_CASE("kernel_basis basics") {
  CHECK(kernel_basis(RatMat::identity(3)).empty());

  auto zero_kernel = kernel_basis(RatMat(2, 2));
  REQUIRE(zero_kernel.size() == 2);
  CHECK(zero_kernel[0] == rvec({1, 0}));
  CHECK(zero_kernel[1] == rvec({0, 1}));
}

TEST_CASE("kernel of K4 label matrix has dimension 3") {
  auto basis = kernel_basis(sub_diag(k4_structure(), 4));
  CHECK(basis.size() == 3);
  RatMat m = sub_diag(k4_structure(), 4);
  for (const auto& v : basis) CHECK(is_zero(m.apply(v)));
}

TEST_CASE("rank examples") {
  // Columns f3, f5, h1, h2 from the projection-test worked example.
  RatMat cols = RatMat::from_columns(
      {rvec({0, 0, 3}), rvec({0, 0, 3}), rvec({-1, 0, 1}), rvec({0, -1, -1})});
  CHECK(rank(cols) == 3);

  CHECK(rank(RatMat(4, 5)) == 0);

  RatMat f = mat({{0, -1, 0, -1, 0, 1}, {-1, 0, 0, 1, 1, 0}, {1, 1, 1, 0, 0, 0}});
  CHECK(rank(f) == 3);
}

TEST_CASE("rank with rational entries") {
  RatMat m(2, 2);
  m(0, 0) = Rat(1, 2);
  m(0, 1) = Rat(1, 3);
  m(1, 0) = Rat(3, 2);
  m(1, 1) = Rat(1, 1);
  CHECK(rank(m) == 1);
}

TEST_CASE("multiple_of") {
  CHECK(multiple_of(rvec({0, 0, 12}), rvec({0, 0, 3})) == Rat(4));
  CHECK_FALSE(multiple_of(rvec({-1, 0, 1}), rvec({0, 0, 3})).has_value());
  CHECK(multiple_of(rvec({0, 0}), rvec({0, 0})) == Rat(0));
  CHECK_FALSE(multiple_of(rvec({1, 0}), rvec({0, 0})).has_value());
  CHECK(multiple_of(rvec({1, -3}), rvec({-2, 6})) == Rat(-1, 2));
}

TEST_CASE("multiple_of round trip") {
  for (int trial = 0; trial < 300; ++trial) {
    size_t d = static_cast<size_t>(gkm::test::rand_int(1, 5));
    RatVec f(d);
    bool nonzero = false;
    for (auto& x : f) {
      x = Rat(gkm::test::rand_int(-9, 9), gkm::test::rand_int(1, 5));
      if (x != 0) nonzero = true;
    }
    if (!nonzero) continue;
    Rat c(gkm::test::rand_int(-20, 20), gkm::test::rand_int(1, 7));
    auto got = multiple_of(scale(c, f), f);
    REQUIRE(got.has_value());
    CHECK(*got == c);
  }
}

TEST_CASE("lattice_span_basis examples") {
  auto b = lattice_span_basis({rvec({1, 0}), rvec({0, 1}), rvec({1, 1})});
  REQUIRE(b.size() == 2);
  CHECK(b[0] == rvec({1, 0}));
  CHECK(b[1] == rvec({0, 1}));

  // Already a basis; the halves/thirds must be preserved exactly.
  RatVec half = {Rat(1, 2), Rat(0)};
  RatVec third = {Rat(0), Rat(1, 3)};
  auto c = lattice_span_basis({half, third});
  REQUIRE(c.size() == 2);
  CHECK(c[0] == half);
  CHECK(c[1] == third);

  CHECK_THROWS_WITH_AS(lattice_span_basis({rvec({1, 0}), rvec({2, 0})}), "span deficient",
                       std::domain_error);
}

TEST_CASE("lattice_span_basis of the K4 base-vertex columns") {
  // Columns 1,2,3 of the printed fundamental system: the edges at the first
  // vertex. Their Z-span is all of Z^3.
  auto b = lattice_span_basis({rvec({0, -1, 1}), rvec({-1, 0, 1}), rvec({0, 0, 1})});
  REQUIRE(b.size() == 3);
  std::vector<IntVec> rows;
  for (const auto& v : b) {
    IntVec r;
    for (const auto& x : v) {
      REQUIRE(is_integer(x));
      r.push_back(num(x));
    }
    rows.push_back(r);
  }
  auto h = hermite_normal_form(rows);
  REQUIRE(h.size() == 3);
  CHECK(h[0] == ivec({1, 0, 0}));
  CHECK(h[1] == ivec({0, 1, 0}));
  CHECK(h[2] == ivec({0, 0, 1}));
}

TEST_CASE("lattice_span_basis double inclusion") {
  for (int trial = 0; trial < 200; ++trial) {
    size_t d = static_cast<size_t>(gkm::test::rand_int(1, 3));
    size_t n = d + static_cast<size_t>(gkm::test::rand_int(0, 3));
    std::vector<RatVec> in(n, RatVec(d));
    for (auto& v : in)
      for (auto& x : v) x = Rat(gkm::test::rand_int(-6, 6), gkm::test::rand_int(1, 4));
    RatMat m = RatMat::from_columns(in);
    if (rank(m) != d) continue;
    auto out = lattice_span_basis(in);
    REQUIRE(out.size() == d);

    // Z-span equality via HNF re-reduction: the HNF of the union equals the
    // HNF of either side.
    Int l = 1;
    auto collect = [&](const std::vector<RatVec>& vs) {
      for (const auto& v : vs)
        for (const auto& x : v) l = boost::multiprecision::lcm(l, den(x));
    };
    collect(in);
    collect(out);
    auto scaled = [&](const std::vector<RatVec>& vs) {
      std::vector<IntVec> rows;
      for (const auto& v : vs) {
        IntVec r(v.size());
        for (size_t j = 0; j < v.size(); ++j) r[j] = num(v[j]) * (l / den(v[j]));
        rows.push_back(r);
      }
      return rows;
    };
    auto a = scaled(in);
    auto b = scaled(out);
    auto both = a;
    both.insert(both.end(), b.begin(), b.end());
    CHECK(hermite_normal_form(b) == hermite_normal_form(both));
    auto a_and_out = b;
    a_and_out.insert(a_and_out.end(), a.begin(), a.end());
    CHECK(hermite_normal_form(a) == hermite_normal_form(a_and_out));
  }
}

TEST_CASE("invert") {
  CHECK(invert(RatMat::identity(4)) == RatMat::identity(4));

  RatMat d = mat({{2, 0}, {0, 3}});
  RatMat dinv = invert(d);
  CHECK(dinv(0, 0) == Rat(1, 2));
  CHECK(dinv(1, 1) == Rat(1, 3));
  CHECK(dinv(0, 1) == 0);

  CHECK_THROWS_WITH_AS(invert(mat({{1, 2}, {2, 4}})), "singular", std::domain_error);
  CHECK_THROWS_WITH_AS(invert(RatMat(2, 3)), "singular", std::domain_error);

  // Basis matrix at the base vertex of the K4 example: multiply-back check.
  RatMat basis = RatMat::from_columns({rvec({0, -1, 1}), rvec({-1, 0, 1}), rvec({0, 0, 1})});
  CHECK(invert(basis) * basis == RatMat::identity(3));
}

TEST_CASE("invert multiply-back property") {
  for (int trial = 0; trial < 120; ++trial) {
    size_t n = static_cast<size_t>(gkm::test::rand_int(1, 5));
    RatMat m(n, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        m(i, j) = Rat(gkm::test::rand_int(-8, 8), gkm::test::rand_int(1, 4));
    if (rank(m) != n) continue;
    CHECK(invert(m) * m == RatMat::identity(n));
  }
}

TEST_CASE("solve_two_unknowns") {
  // From the Kirwan propagation worked example: A1 = 2, A2 = 1.
  auto a = solve_two_unknowns(rvec({-1, 2}), ivec({0, 1}), ivec({-1, 0}));
  REQUIRE(a.has_value());
  CHECK(a->first == 2);
  CHECK(a->second == 1);

  // And the half-integer failure witness: B1 = 1/2.
  auto b = solve_two_unknowns(rvec({1, 0}), ivec({2, 0}), ivec({-2, 1}));
  REQUIRE(b.has_value());
  CHECK(b->first == Rat(1, 2));
  CHECK(b->second == 0);

  auto c = solve_two_unknowns(rvec({0, 0}), ivec({1, 0}), ivec({0, 1}));
  REQUIRE(c.has_value());
  CHECK(c->first == 0);
  CHECK(c->second == 0);

  CHECK_THROWS_WITH_AS(solve_two_unknowns(rvec({1, 1}), ivec({1, 2}), ivec({2, 4})),
                       "dependent directions", std::domain_error);

  // Independent directions in Q^3 that do not span the target.
  CHECK_FALSE(
      solve_two_unknowns(rvec({0, 0, 1}), ivec({1, 0, 0}), ivec({0, 1, 0})).has_value());
}

TEST_CASE("rank-nullity on random matrices") {
  for (int trial = 0; trial < 300; ++trial) {
    size_t r = static_cast<size_t>(gkm::test::rand_int(1, 6));
    size_t c = static_cast<size_t>(gkm::test::rand_int(1, 6));
    RatMat m(r, c);
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < c; ++j)
        m(i, j) = Rat(gkm::test::rand_int(-5, 5), gkm::test::rand_int(1, 3));
    auto basis = kernel_basis(m);
    CHECK(rank(m) + basis.size() == c);
    for (const auto& v : basis) CHECK(is_zero(m.apply(v)));
  }
}
