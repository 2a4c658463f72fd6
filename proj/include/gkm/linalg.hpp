#pragma once

#include "gkm/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace gkm {

// Dense matrix over Q, row-major. Dimensions are fixed at construction.
class RatMat {
 public:
  RatMat() : rows_(0), cols_(0) {}
  RatMat(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  RatMat(size_t rows, size_t cols, std::vector<Rat> entries);

  static RatMat identity(size_t n);
  // Builds a matrix from the given column vectors.
  static RatMat from_columns(const std::vector<RatVec>& cols);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  const Rat& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }
  Rat& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }

  RatVec row(size_t i) const;
  RatVec column(size_t j) const;

  RatMat transposed() const;
  RatMat operator*(const RatMat& rhs) const;
  RatVec apply(const RatVec& v) const;

  bool operator==(const RatMat& rhs) const = default;

 private:
  size_t rows_, cols_;
  std::vector<Rat> a_;
};

namespace linalg {

// In-place reduced row echelon form; returns the pivot columns.
std::vector<size_t> rref(RatMat& m);

// Canonical basis of ker(m) derived from the RREF, deterministic.
// Empty iff the kernel is trivial.
std::vector<RatVec> kernel_basis(const RatMat& m);

// Exact rank via fraction-free (Bareiss) elimination over Z after
// clearing denominators.
size_t rank(const RatMat& m);

// The coefficient c with v = c*f when v is collinear with f; absent when
// not collinear. For f = 0 returns 0 iff v = 0.
std::optional<Rat> multiple_of(const RatVec& v, const RatVec& f);

// Given vectors whose Q-span is all of Q^d, returns d vectors with the
// same Z-span: clear denominators by the common lcm L, take the
// column-style Hermite normal form over Z (positive pivots), divide by L.
// Throws std::domain_error("span deficient") if the Q-span is a proper
// subspace.
std::vector<RatVec> lattice_span_basis(const std::vector<RatVec>& vectors);

// Row-style Hermite normal form of an integer matrix (rows = generators):
// nonzero rows first, positive pivots, entries above each pivot reduced
// into [0, pivot). The Z-row-span is preserved.
std::vector<IntVec> hermite_normal_form(std::vector<IntVec> rows);

// Exact inverse; throws std::domain_error("singular").
RatMat invert(const RatMat& m);

// Unique (A1, A2) with target = A1*u + A2*v, if target lies in the span
// of the linearly independent u, v; absent otherwise.
// Throws std::domain_error("dependent directions") if u, v are dependent.
std::optional<std::pair<Rat, Rat>> solve_two_unknowns(const RatVec& target,
                                                      const IntVec& u,
                                                      const IntVec& v);

// Small helpers shared across modules.
bool is_zero(const RatVec& v);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec add(const RatVec& a, const RatVec& b);
RatVec scale(const Rat& c, const RatVec& v);
Rat dot(const RatVec& a, const RatVec& b);
bool linearly_independent_pair(const RatVec& a, const RatVec& b);

IntVec int_sub(const IntVec& a, const IntVec& b);
IntVec int_add(const IntVec& a, const IntVec& b);
IntVec int_neg(const IntVec& v);
Rat int_dot(const IntVec& a, const RatVec& b);
bool int_is_zero(const IntVec& v);

}  // namespace linalg
}  // namespace gkm
