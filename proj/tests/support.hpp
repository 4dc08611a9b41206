#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "negabase/expression.hpp"
#include "negabase/integers.hpp"

namespace fx {

using namespace negabase;
using Float = boost::multiprecision::cpp_bin_float_50;

inline NumberField field(const char* poly) { return NumberField::create(parse_polynomial(poly)); }

inline const char* const kGolden = "x^2-x-1";
inline const char* const kGm2 = "x^2-3x+1";
inline const char* const kComplex = "x^3-2x^2-1";
inline const char* const kComplex2 = "x^6-3x^5-2x^4-2x^3-x^2+2x+1";
inline const char* const kTwo = "x-2";
inline const char* const kThree = "x-3";
inline const char* const kPlastic = "x^3-x-1";
inline const char* const kThreeHalves = "x-3/2";

inline const std::vector<const char*>& yrrap_fixtures() {
  static const std::vector<const char*> v{kGolden, kGm2, kComplex, kComplex2, kTwo, kThree};
  return v;
}

inline AlgReal el(const NumberField& f, const char* expr) { return parse_element(f, expr); }

// ---- independent floating oracle ---------------------------------------------

inline Float to_float(const Rational& q) { return Float(q.get_num().get_str()) / Float(q.get_den().get_str()); }

inline Float eval(const std::vector<Float>& c, const Float& x) {
  Float acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

/// Largest real root of an integer polynomial by downward scanning and bisection,
/// without any of the library's root machinery.
inline Float float_root(const std::vector<long>& coeffs) {
  std::vector<Float> c(coeffs.begin(), coeffs.end());
  Float bound = 1;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) bound = std::max(bound, 1 + abs(c[i] / c.back()));
  const int lead = c.back() > 0 ? 1 : -1;
  Float hi = bound, lo = bound;
  while (lead * eval(c, lo) > 0) {
    hi = lo;
    lo -= Float(1) / 256;
  }
  for (int i = 0; i < 200; ++i) {
    Float mid = (lo + hi) / 2;
    if (lead * eval(c, mid) > 0) hi = mid;
    else lo = mid;
  }
  return (lo + hi) / 2;
}

inline Float to_float(const AlgReal& a, const Float& beta) {
  Float acc = 0;
  const auto& c = a.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * beta + to_float(*it);
  return acc;
}

inline Float ffloor(const Float& x) { return floor(x); }

/// T_{-b} evaluated in floating point.
inline Float float_step(const Float& x, const Float& b) { return -b * x - floor(b / (b + 1) - b * x); }

inline bool near(const Float& a, const Float& b, const Float& tol = Float("1e-30")) { return abs(a - b) < tol; }

// ---- hand-rolled generators --------------------------------------------------

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational(long max_num = 20, long max_den = 12) {
    Rational q(integer(-max_num, max_num), integer(1, max_den));
    q.canonicalize();
    return q;
  }

  AlgReal element(const NumberField& f, long max_num = 20, long max_den = 12) {
    std::vector<Rational> c;
    for (int i = 0; i < f.degree(); ++i) c.push_back(coin() || i == 0 ? rational(max_num, max_den) : Rational(0));
    return AlgReal(f, c);
  }

  AlgReal nonzero(const NumberField& f) {
    for (;;) {
      AlgReal a = element(f);
      if (!a.is_zero()) return a;
    }
  }

  /// Exact rational point of [-b/(b+1), 1/(b+1)), found by rejection.
  AlgReal domain_point(const MinusBetaMap& map, bool open = false) {
    for (;;) {
      const long den = integer(1, 997);
      AlgReal x(map.field(), Rational(integer(-den, den / 2 + 1), den));
      if (open ? map.in_open_domain(x) : map.in_domain(x)) return x;
    }
  }

  /// Point of the domain that is a rational combination of powers of beta.
  AlgReal domain_element(const MinusBetaMap& map) {
    for (;;) {
      AlgReal x = element(map.field(), 5, 9);
      if (map.in_domain(x)) return x;
    }
  }

  Word word(std::size_t alphabet, std::size_t max_len) {
    Word w(static_cast<std::size_t>(integer(0, static_cast<long>(max_len))));
    for (Symbol& a : w) a = static_cast<Symbol>(integer(0, static_cast<long>(alphabet) - 1));
    return w;
  }
};

/// Full pipeline for one base.
struct Pipeline {
  NumberField f;
  OrbitData orbit;
  PartitionData p;
  AntiMorphism psi;
  AntiMorphism hat;

  explicit Pipeline(const char* poly)
      : f(field(poly)),
        orbit(negabase::orbit(f, OrbitKind::minus_beta)),
        p(build_partition(orbit)),
        psi(build_psi(p)),
        hat(build_hat_psi(psi, p)) {}

  Symbol point(const std::string& name) const {
    for (std::size_t a = 0; a < psi.size(); ++a)
      if (psi.names[a] == name) return static_cast<Symbol>(a);
    throw std::runtime_error("no letter " + name);
  }
  Word word(const std::vector<std::string>& names) const {
    Word w;
    for (const auto& n : names) w.push_back(point(n));
    return w;
  }
};

inline std::string joined(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += x;
  return s;
}

}  // namespace fx
