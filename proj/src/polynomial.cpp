#include "gkm/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace gkm {

IntPolynomial IntPolynomial::constant(size_t nvars, const Int& c) {
  IntPolynomial p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

IntPolynomial IntPolynomial::variable(size_t nvars, size_t index) {
  if (index >= nvars) throw std::invalid_argument("variable index out of range");
  IntPolynomial p(nvars);
  Monomial m(nvars, 0);
  m[index] = 1;
  p.add_term(m, 1);
  return p;
}

size_t IntPolynomial::degree() const {
  size_t d = 0;
  for (const auto& [m, c] : terms_) {
    size_t t = 0;
    for (uint32_t e : m) t += e;
    d = std::max(d, t);
  }
  return d;
}

Int IntPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Int(0) : it->second;
}

void IntPolynomial::add_term(const Monomial& m, const Int& c) {
  if (m.size() != nvars_) throw std::invalid_argument("monomial arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void IntPolynomial::check_compatible(const IntPolynomial& rhs) const {
  if (nvars_ != rhs.nvars_) throw std::invalid_argument("mixed variable counts");
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& rhs) const {
  check_compatible(rhs);
  IntPolynomial out = *this;
  for (const auto& [m, c] : rhs.terms_) out.add_term(m, c);
  return out;
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& rhs) const {
  check_compatible(rhs);
  IntPolynomial out = *this;
  for (const auto& [m, c] : rhs.terms_) out.add_term(m, -c);
  return out;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial out(nvars_);
  for (const auto& [m, c] : terms_) out.add_term(m, -c);
  return out;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& rhs) const {
  check_compatible(rhs);
  IntPolynomial out(nvars_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : rhs.terms_) {
      Monomial m(nvars_);
      for (size_t i = 0; i < nvars_; ++i) m[i] = ma[i] + mb[i];
      out.add_term(m, ca * cb);
    }
  return out;
}

Rat IntPolynomial::evaluate(const RatVec& point) const {
  if (point.size() != nvars_) throw std::invalid_argument("point dimension mismatch");
  Rat total = 0;
  for (const auto& [m, c] : terms_) {
    Rat t(c);
    for (size_t i = 0; i < nvars_; ++i)
      for (uint32_t e = 0; e < m[i]; ++e) t *= point[i];
    total += t;
  }
  return total;
}

std::string IntPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    Int a = boost::multiprecision::abs(c);
    bool has_vars = false;
    for (uint32_t e : m) has_vars = has_vars || e > 0;
    if (a != 1 || !has_vars) os << a.str();
    bool started = a != 1 || !has_vars;
    for (size_t i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      if (started) os << "*";
      os << "x" << i + 1;
      if (m[i] > 1) os << "^" << m[i];
      started = true;
    }
  }
  return os.str();
}

IntPolynomial LinearForm::to_polynomial() const {
  IntPolynomial p(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i) {
    Monomial m(coeffs.size(), 0);
    m[i] = 1;
    p.add_term(m, coeffs[i]);
  }
  return p;
}

namespace symalg {

IntPolynomial sym_poly_in_weights(const std::vector<LinearForm>& weights, size_t k) {
  const size_t n = weights.size();
  if (k > n) throw std::invalid_argument("degree exceeds weight count");
  const size_t d = weights.empty() ? 0 : weights[0].coeffs.size();
  for (const auto& w : weights)
    if (w.coeffs.size() != d) throw std::invalid_argument("mixed variable counts");
  std::vector<IntPolynomial> e(k + 1, IntPolynomial(d));
  e[0] = IntPolynomial::constant(d, 1);
  for (size_t i = 0; i < n; ++i) {
    IntPolynomial a = weights[i].to_polynomial();
    for (size_t j = std::min(k, i + 1); j >= 1; --j) e[j] = e[j] + e[j - 1] * a;
  }
  return e[k];
}

Rat sym_value(const RatVec& values, size_t k) {
  if (k > values.size()) throw std::invalid_argument("degree exceeds value count");
  RatVec e(k + 1);
  e[0] = 1;
  for (size_t i = 0; i < values.size(); ++i)
    for (size_t j = std::min(k, i + 1); j >= 1; --j) e[j] += e[j - 1] * values[i];
  return e[k];
}

std::optional<IntPolynomial> divisible_by_linear(const IntPolynomial& p, const LinearForm& l) {
  const size_t d = p.nvars();
  if (l.coeffs.size() != d) throw std::invalid_argument("mixed variable counts");
  size_t m = d;
  for (size_t i = 0; i < d; ++i)
    if (l.coeffs[i] != 0) {
      m = i;
      break;
    }
  if (m == d) throw std::invalid_argument("zero linear form");
  if (p.is_zero()) return IntPolynomial(d);

  // Long division by l in the variable x_m over the fraction field.
  const Rat lead(l.coeffs[m]);
  std::map<Monomial, Rat> rem;
  for (const auto& [mono, c] : p.terms()) rem[mono] = Rat(c);
  std::map<Monomial, Rat> quot;

  auto degree_in_m = [&]() {
    uint32_t deg = 0;
    for (const auto& [mono, c] : rem)
      if (c != 0) deg = std::max(deg, mono[m]);
    return deg;
  };

  for (uint32_t k = degree_in_m(); k >= 1; k = degree_in_m()) {
    bool progressed = false;
    // Move every x_m^k term through the division step.
    std::vector<std::pair<Monomial, Rat>> leading;
    for (const auto& [mono, c] : rem)
      if (mono[m] == k && c != 0) leading.emplace_back(mono, c);
    if (leading.empty()) break;
    for (const auto& [mono, c] : leading) {
      Monomial q = mono;
      q[m] -= 1;
      Rat qc = c / lead;
      quot[q] += qc;
      // rem -= qc * x^q * l
      for (size_t i = 0; i < d; ++i) {
        if (l.coeffs[i] == 0) continue;
        Monomial t = q;
        t[i] += 1;
        Rat& slot = rem[t];
        slot -= qc * Rat(l.coeffs[i]);
        if (slot == 0) rem.erase(t);
      }
      progressed = true;
    }
    if (!progressed) break;
  }

  for (const auto& [mono, c] : rem)
    if (c != 0) return std::nullopt;
  IntPolynomial out(d);
  for (const auto& [mono, c] : quot) {
    if (c == 0) continue;
    if (!is_integer(c)) return std::nullopt;
    out.add_term(mono, num(c));
  }
  return out;
}

bool pairwise_coprime(const std::vector<LinearForm>& weights) {
  std::vector<Int> contents;
  contents.reserve(weights.size());
  for (const auto& w : weights) contents.push_back(content(w.coeffs));
  for (size_t i = 0; i < contents.size(); ++i)
    for (size_t j = i + 1; j < contents.size(); ++j)
      if (boost::multiprecision::gcd(contents[i], contents[j]) > 1) return false;
  return true;
}

}  // namespace symalg
}  // namespace gkm
