#pragma once

#include "gkm/linalg.hpp"
#include "gkm/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace gkm {

// Exponent multi-index; the variable count is carried by context.
using Monomial = std::vector<uint32_t>;

// Sparse multivariate polynomial with integer coefficients, modeling
// Z[x_1,...,x_d]. Zero coefficients are never stored.
class IntPolynomial {
 public:
  explicit IntPolynomial(size_t nvars) : nvars_(nvars) {}
  static IntPolynomial constant(size_t nvars, const Int& c);
  static IntPolynomial variable(size_t nvars, size_t index);

  size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  size_t degree() const;  // max total degree, 0 for the zero polynomial

  const std::map<Monomial, Int>& terms() const { return terms_; }
  Int coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Int& c);

  IntPolynomial operator+(const IntPolynomial& rhs) const;
  IntPolynomial operator-(const IntPolynomial& rhs) const;
  IntPolynomial operator*(const IntPolynomial& rhs) const;
  IntPolynomial operator-() const;
  bool operator==(const IntPolynomial& rhs) const = default;

  Rat evaluate(const RatVec& point) const;

  std::string to_string() const;

 private:
  void check_compatible(const IntPolynomial& rhs) const;
  size_t nvars_;
  std::map<Monomial, Int> terms_;
};

// Nonzero integer linear form sum c_i * x_i, e.g. a torus weight seen as a
// degree-two class of the classifying space.
struct LinearForm {
  IntVec coeffs;
  IntPolynomial to_polynomial() const;
};

namespace symalg {

// Elementary symmetric polynomial of degree k evaluated on the weight
// linear forms; degree 0 gives 1.
IntPolynomial sym_poly_in_weights(const std::vector<LinearForm>& weights, size_t k);

// Elementary symmetric function on scalar values, same recurrence.
Rat sym_value(const RatVec& values, size_t k);

// Quotient q with p = l*q over Z when it exists; absent otherwise.
std::optional<IntPolynomial> divisible_by_linear(const IntPolynomial& p, const LinearForm& l);

// True iff no integer k outside {0, +-1} divides two distinct weights.
bool pairwise_coprime(const std::vector<LinearForm>& weights);

}  // namespace symalg
}  // namespace gkm
