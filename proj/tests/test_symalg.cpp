#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gkm/polynomial.hpp"
#include "test_util.hpp"

using namespace gkm;
using namespace gkm::symalg;
using gkm::test::ivec;
using gkm::test::rvec;

namespace {

LinearForm lf(std::initializer_list<int64_t> xs) { return LinearForm{gkm::test::ivec(xs)}; }

IntPolynomial random_poly(size_t d, int max_deg, int nterms) {
  IntPolynomial p(d);
  for (int t = 0; t < nterms; ++t) {
    Monomial m(d);
    for (size_t i = 0; i < d; ++i) m[i] = static_cast<uint32_t>(gkm::test::rand_int(0, max_deg));
    p.add_term(m, Int(gkm::test::rand_int(-9, 9)));
  }
  return p;
}

}  // namespace

TEST_CASE("sym_poly_in_weights") {
  // Weights at the first fixed point of the CP^3 complexity-one table.
  std::vector<LinearForm> w = {lf({1, 0}), lf({0, 2}), lf({3, 3})};
  IntPolynomial s1 = sym_poly_in_weights(w, 1);
  IntPolynomial expect(2);
  expect.add_term({1, 0}, 4);
  expect.add_term({0, 1}, 5);
  CHECK(s1 == expect);

  CHECK(sym_poly_in_weights(w, 0) == IntPolynomial::constant(2, 1));

  std::vector<LinearForm> xy = {lf({1, 0}), lf({0, 1})};
  IntPolynomial x1x2(2);
  x1x2.add_term({1, 1}, 1);
  CHECK(sym_poly_in_weights(xy, 2) == x1x2);

  CHECK_THROWS_AS(sym_poly_in_weights(xy, 3), std::invalid_argument);
}

TEST_CASE("sym_poly generating function identity") {
  // Sum_k sigma_k t^k equals the product of (1 + t*alpha_i); compare
  // t-coefficients after expanding the product.
  for (int trial = 0; trial < 200; ++trial) {
    size_t d = static_cast<size_t>(gkm::test::rand_int(1, 3));
    size_t n = static_cast<size_t>(gkm::test::rand_int(1, 4));
    std::vector<LinearForm> ws;
    for (size_t i = 0; i < n; ++i) {
      IntVec c(d);
      for (auto& x : c) x = gkm::test::rand_int(-4, 4);
      ws.push_back(LinearForm{c});
    }
    // Product expansion: coefficients of t^0..t^n.
    std::vector<IntPolynomial> coeff(n + 1, IntPolynomial(d));
    coeff[0] = IntPolynomial::constant(d, 1);
    for (size_t i = 0; i < n; ++i) {
      IntPolynomial a = ws[i].to_polynomial();
      for (size_t j = std::min(n, i + 1); j >= 1; --j)
        coeff[j] = coeff[j] + coeff[j - 1] * a;
    }
    for (size_t k = 0; k <= n; ++k) CHECK(coeff[k] == sym_poly_in_weights(ws, k));
  }
}

TEST_CASE("divisible_by_linear") {
  IntPolynomial p(2);
  p.add_term({2, 0}, 1);
  p.add_term({0, 2}, -1);
  auto q = divisible_by_linear(p, lf({1, -1}));
  REQUIRE(q.has_value());
  IntPolynomial expect(2);
  expect.add_term({1, 0}, 1);
  expect.add_term({0, 1}, 1);
  CHECK(*q == expect);

  IntPolynomial x1 = IntPolynomial::variable(2, 0);
  CHECK_FALSE(divisible_by_linear(x1, lf({2, 0})).has_value());

  IntPolynomial prod = lf({3, 1}).to_polynomial() * lf({1, -2}).to_polynomial();
  auto q2 = divisible_by_linear(prod, lf({3, 1}));
  REQUIRE(q2.has_value());
  CHECK(*q2 == lf({1, -2}).to_polynomial());

  CHECK(divisible_by_linear(IntPolynomial(2), lf({1, 1}))->is_zero());
}

TEST_CASE("divisible_by_linear round trip") {
  for (int trial = 0; trial < 300; ++trial) {
    size_t d = static_cast<size_t>(gkm::test::rand_int(1, 3));
    IntVec c(d);
    bool nz = false;
    for (auto& x : c) {
      x = gkm::test::rand_int(-3, 3);
      if (x != 0) nz = true;
    }
    if (!nz) continue;
    LinearForm l{c};
    IntPolynomial q = random_poly(d, 3, 4);
    auto got = divisible_by_linear(l.to_polynomial() * q, l);
    REQUIRE(got.has_value());
    CHECK(*got == q);
  }
}

TEST_CASE("pairwise_coprime") {
  CHECK(pairwise_coprime({lf({1, 0}), lf({0, 2}), lf({3, 3})}));
  CHECK_FALSE(pairwise_coprime({lf({2, 0}), lf({0, 2})}));
  CHECK(pairwise_coprime({lf({-2, -3}), lf({-3, -1}), lf({-3, -3})}));
}

TEST_CASE("pairwise_coprime invariances") {
  for (int trial = 0; trial < 200; ++trial) {
    size_t n = static_cast<size_t>(gkm::test::rand_int(2, 4));
    std::vector<LinearForm> ws;
    for (size_t i = 0; i < n; ++i) {
      IntVec c(2);
      c[0] = gkm::test::rand_int(-6, 6);
      c[1] = gkm::test::rand_int(-6, 6);
      if (c[0] == 0 && c[1] == 0) c[0] = 1;
      ws.push_back(LinearForm{c});
    }
    bool base = pairwise_coprime(ws);

    auto negated = ws;
    size_t flip = static_cast<size_t>(gkm::test::rand_int(0, static_cast<int64_t>(n) - 1));
    negated[flip].coeffs = linalg::int_neg(negated[flip].coeffs);
    CHECK(pairwise_coprime(negated) == base);

    auto shuffled = ws;
    std::shuffle(shuffled.begin(), shuffled.end(), gkm::test::rng());
    CHECK(pairwise_coprime(shuffled) == base);
  }
}

TEST_CASE("evaluate") {
  CHECK(IntPolynomial::constant(3, 1).evaluate(rvec({7, -2, 5})) == 1);

  IntPolynomial s(2);
  s.add_term({1, 0}, 1);
  s.add_term({0, 1}, 1);
  CHECK(s.evaluate(rvec({1, 1})) == 2);

  // sigma_{3,3} of the CP^3 table weights at (1,1): 1 * 2 * 6.
  std::vector<LinearForm> w = {lf({1, 0}), lf({0, 2}), lf({3, 3})};
  CHECK(sym_poly_in_weights(w, 3).evaluate(rvec({1, 1})) == 12);

  RatVec pt = {Rat(1, 2), Rat(-2, 3)};
  IntPolynomial p(2);
  p.add_term({2, 1}, 6);  // 6 x^2 y at (1/2, -2/3) = -1
  CHECK(p.evaluate(pt) == -1);
}
