#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace gkm {

// Arbitrary-precision scalars. All arithmetic in this project is exact;
// there are no floating-point code paths and no tolerance parameters.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return den(r) == 1; }

inline RatVec to_rat(const IntVec& v) {
  RatVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

// gcd of all entries, non-negative; 0 for the zero vector.
inline Int content(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
  return g;
}

// Parses "p", "-p" or "p/q". Used by the JSON readers.
inline Rat parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int p(s.substr(0, slash));
    Int q(s.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("zero denominator");
    return Rat(p, q);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational: " + s);
  }
}

inline std::string rational_to_string(const Rat& r) {
  std::string s = num(r).str();
  if (den(r) != 1) s += "/" + den(r).str();
  return s;
}

}  // namespace gkm
