#include "gkm/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace gkm {

RatMat::RatMat(size_t rows, size_t cols, std::vector<Rat> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != rows_ * cols_) throw std::invalid_argument("entry count mismatch");
}

RatMat RatMat::identity(size_t n) {
  RatMat m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMat RatMat::from_columns(const std::vector<RatVec>& cols) {
  if (cols.empty()) return RatMat(0, 0);
  RatMat m(cols[0].size(), cols.size());
  for (size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != m.rows()) throw std::invalid_argument("ragged columns");
    for (size_t i = 0; i < m.rows(); ++i) m(i, j) = cols[j][i];
  }
  return m;
}

RatVec RatMat::row(size_t i) const {
  RatVec r(cols_);
  for (size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
  return r;
}

RatVec RatMat::column(size_t j) const {
  RatVec c(rows_);
  for (size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

RatMat RatMat::transposed() const {
  RatMat t(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatMat RatMat::operator*(const RatMat& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("dimension mismatch");
  RatMat out(rows_, rhs.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const Rat& x = (*this)(i, k);
      if (x == 0) continue;
      for (size_t j = 0; j < rhs.cols_; ++j) out(i, j) += x * rhs(k, j);
    }
  return out;
}

RatVec RatMat::apply(const RatVec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("dimension mismatch");
  RatVec out(rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0) out[i] += (*this)(i, j) * v[j];
  return out;
}

namespace linalg {

std::vector<size_t> rref(RatMat& m) {
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (size_t j = c; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Rat inv = 1 / m(r, c);
    for (size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rat f = m(i, c);
      for (size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<RatVec> kernel_basis(const RatMat& m) {
  RatMat r = m;
  std::vector<size_t> pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t c : pivots) is_pivot[c] = true;

  std::vector<RatVec> basis;
  for (size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    RatVec v(m.cols());
    v[c] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

size_t rank(const RatMat& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  // Clear denominators row by row, then run Bareiss.
  std::vector<IntVec> a(m.rows(), IntVec(m.cols()));
  for (size_t i = 0; i < m.rows(); ++i) {
    Int l = 1;
    for (size_t j = 0; j < m.cols(); ++j) l = boost::multiprecision::lcm(l, den(m(i, j)));
    for (size_t j = 0; j < m.cols(); ++j) a[i][j] = num(m(i, j)) * (l / den(m(i, j)));
  }
  size_t r = 0;
  Int prev = 1;
  for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    size_t p = r;
    while (p < m.rows() && a[p][c] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[r]);
    for (size_t i = r + 1; i < m.rows(); ++i) {
      for (size_t j = c + 1; j < m.cols(); ++j)
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

std::optional<Rat> multiple_of(const RatVec& v, const RatVec& f) {
  if (v.size() != f.size()) throw std::invalid_argument("dimension mismatch");
  size_t k = 0;
  while (k < f.size() && f[k] == 0) ++k;
  if (k == f.size()) {
    // f = 0: only the zero vector is a multiple, with coefficient 0.
    if (is_zero(v)) return Rat(0);
    return std::nullopt;
  }
  Rat c = v[k] / f[k];
  for (size_t i = 0; i < f.size(); ++i)
    if (v[i] != c * f[i]) return std::nullopt;
  return c;
}

std::vector<IntVec> hermite_normal_form(std::vector<IntVec> rows) {
  if (rows.empty()) return rows;
  const size_t n = rows[0].size();
  size_t r = 0;
  for (size_t c = 0; c < n && r < rows.size(); ++c) {
    // Euclidean reduction within column c on rows r..end.
    while (true) {
      size_t p = rows.size();
      for (size_t i = r; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        if (p == rows.size() ||
            boost::multiprecision::abs(rows[i][c]) < boost::multiprecision::abs(rows[p][c]))
          p = i;
      }
      if (p == rows.size()) break;  // column is zero below r
      std::swap(rows[p], rows[r]);
      bool cleared = true;
      for (size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        Int q = rows[i][c] / rows[r][c];  // truncated division keeps remainders small
        for (size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][c] != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (rows[r][c] == 0) continue;
    if (rows[r][c] < 0)
      for (size_t j = 0; j < n; ++j) rows[r][j] = -rows[r][j];
    // Reduce entries above the pivot into [0, pivot).
    for (size_t i = 0; i < r; ++i) {
      Int q = rows[i][c] / rows[r][c];
      if (rows[i][c] - q * rows[r][c] < 0) q -= 1;
      if (q != 0)
        for (size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

std::vector<RatVec> lattice_span_basis(const std::vector<RatVec>& vectors) {
  if (vectors.empty()) throw std::domain_error("span deficient");
  const size_t d = vectors[0].size();
  Int l = 1;
  for (const RatVec& v : vectors) {
    if (v.size() != d) throw std::invalid_argument("dimension mismatch");
    for (const Rat& x : v) l = boost::multiprecision::lcm(l, den(x));
  }
  std::vector<IntVec> rows;
  rows.reserve(vectors.size());
  for (const RatVec& v : vectors) {
    IntVec r(d);
    for (size_t j = 0; j < d; ++j) r[j] = num(v[j]) * (l / den(v[j]));
    rows.push_back(std::move(r));
  }
  rows = hermite_normal_form(std::move(rows));
  if (rows.size() != d) throw std::domain_error("span deficient");
  std::vector<RatVec> out(d, RatVec(d));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) out[i][j] = Rat(rows[i][j], l);
  return out;
}

RatMat invert(const RatMat& m) {
  if (m.rows() != m.cols()) throw std::domain_error("singular");
  const size_t n = m.rows();
  RatMat aug(n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  std::vector<size_t> pivots = rref(aug);
  if (pivots.size() != n || pivots.back() >= n) throw std::domain_error("singular");
  RatMat inv(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::optional<std::pair<Rat, Rat>> solve_two_unknowns(const RatVec& target, const IntVec& u,
                                                      const IntVec& v) {
  if (u.size() != v.size() || target.size() != u.size())
    throw std::invalid_argument("dimension mismatch");
  const size_t d = u.size();
  // Find a 2x2 invertible minor of [u v].
  for (size_t i = 0; i < d; ++i) {
    for (size_t j = i + 1; j < d; ++j) {
      Int det = u[i] * v[j] - u[j] * v[i];
      if (det == 0) continue;
      Rat a1 = Rat(target[i] * v[j] - target[j] * v[i]) / Rat(det);
      Rat a2 = Rat(Rat(u[i]) * target[j] - Rat(u[j]) * target[i]) / Rat(det);
      for (size_t k = 0; k < d; ++k)
        if (target[k] != a1 * u[k] + a2 * v[k]) return std::nullopt;
      return std::make_pair(a1, a2);
    }
  }
  throw std::domain_error("dependent directions");
}

bool is_zero(const RatVec& v) {
  for (const Rat& x : v)
    if (x != 0) return false;
  return true;
}

RatVec sub(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVec add(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVec scale(const Rat& c, const RatVec& v) {
  RatVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

Rat dot(const RatVec& a, const RatVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool linearly_independent_pair(const RatVec& a, const RatVec& b) {
  if (is_zero(a) || is_zero(b)) return false;
  return !multiple_of(a, b).has_value();
}

IntVec int_sub(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVec int_add(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVec int_neg(const IntVec& v) {
  IntVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
  return r;
}

Rat int_dot(const IntVec& a, const RatVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
  return s;
}

bool int_is_zero(const IntVec& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace linalg
}  // namespace gkm
