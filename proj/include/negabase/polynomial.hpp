#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace negabase {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense univariate polynomial over Q, constant term first. The coefficient
/// vector never carries trailing zeros; the zero polynomial is empty.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t power);
  static Polynomial from_integers(const std::vector<Integer>& coeffs);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  Rational coeff(std::size_t i) const;
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& x) const;
  int sign_at(const Rational& x) const;

  Polynomial derivative() const;
  Polynomial monic() const;
  /// Integer coefficients with content 1 and positive leading coefficient.
  std::vector<Integer> primitive_integer() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Euclidean division: a = q*b + r with deg r < deg b.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
  /// Monic gcd (zero if both are zero).
  static Polynomial gcd(Polynomial a, Polynomial b);

  std::string to_string(char var = 'x') const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

/// Sturm chain p, p', -rem(p, p'), ...
std::vector<Polynomial> sturm_chain(const Polynomial& p);
/// Number of distinct real roots in the half-open interval (a, b].
int count_roots(const std::vector<Polynomial>& chain, const Rational& a, const Rational& b);

/// Rational roots of an integer polynomial (candidate enumeration).
std::vector<Rational> rational_roots(const std::vector<Integer>& coeffs);

/// Cauchy bound: every real root has |x| < bound.
Rational root_bound(const Polynomial& p);

}  // namespace negabase
