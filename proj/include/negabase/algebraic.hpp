#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "negabase/polynomial.hpp"

namespace negabase {

struct RationalInterval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

namespace detail {
struct FieldImpl;
}

/// Q(beta) for a real algebraic beta > 1, given by a squarefree polynomial with
/// no rational roots (degree > 1) and an isolating interval. Irreducibility is
/// a precondition: a reducible polynomial that passes the checks makes zero
/// tests unreliable.
///
/// Handles are cheap to copy; copies refer to the same field. The root
/// enclosure is refined lazily and shared by all copies (guarded by a mutex,
/// refinement is monotone).
class NumberField {
 public:
  /// Selects the largest real root when `interval` is empty.
  static NumberField create(const std::vector<Integer>& minpoly,
                            std::optional<RationalInterval> interval = std::nullopt);
  static NumberField create(const Polynomial& minpoly,
                            std::optional<RationalInterval> interval = std::nullopt);

  int degree() const;
  /// Primitive integer coefficients, constant term first.
  const std::vector<Integer>& minpoly() const;
  const Polynomial& monic_minpoly() const;
  /// The interval given at creation (after validation), not the refined one.
  RationalInterval isolating_interval() const;
  /// Current cached enclosure of beta.
  RationalInterval enclosure() const;
  /// Refines the cached enclosure to width <= 2^-bits and returns it.
  RationalInterval refine(unsigned bits) const;

  friend bool operator==(const NumberField& a, const NumberField& b) { return a.impl_ == b.impl_; }

  const detail::FieldImpl& impl() const { return *impl_; }

 private:
  explicit NumberField(std::shared_ptr<detail::FieldImpl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<detail::FieldImpl> impl_;
};

/// Element of Q(beta), stored as the reduced representative c_0 + c_1 b + ...
/// of degree < deg p.
class AlgReal {
 public:
  AlgReal(NumberField field, const Rational& value);
  AlgReal(NumberField field, std::vector<Rational> coeffs);

  static AlgReal beta(const NumberField& field);
  static AlgReal zero(const NumberField& field) { return AlgReal(field, Rational(0)); }
  static AlgReal one(const NumberField& field) { return AlgReal(field, Rational(1)); }

  const NumberField& field() const noexcept { return field_; }
  /// Always exactly `degree` entries.
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const;
  /// True when the representative is a constant.
  bool is_rational() const;
  /// Exact sign via enclosure refinement.
  int sign() const;

  AlgReal operator-() const;
  AlgReal& operator+=(const AlgReal& o);
  AlgReal& operator-=(const AlgReal& o);
  AlgReal& operator*=(const AlgReal& o);
  AlgReal& operator/=(const AlgReal& o);
  AlgReal& operator*=(const Rational& r);
  AlgReal& operator+=(const Rational& r);

  friend AlgReal operator+(AlgReal a, const AlgReal& b) { return a += b; }
  friend AlgReal operator-(AlgReal a, const AlgReal& b) { return a -= b; }
  friend AlgReal operator*(AlgReal a, const AlgReal& b) { return a *= b; }
  friend AlgReal operator/(AlgReal a, const AlgReal& b) { return a /= b; }
  friend AlgReal operator+(AlgReal a, const Rational& b) { return a += b; }
  friend AlgReal operator-(AlgReal a, const Rational& b) { return a += Rational(-b); }
  friend AlgReal operator*(AlgReal a, const Rational& b) { return a *= b; }
  friend AlgReal operator*(const Rational& b, AlgReal a) { return a *= b; }

  AlgReal inverse() const;
  AlgReal pow(long exponent) const;

  /// Exact structural equality (valid under the irreducibility precondition).
  friend bool operator==(const AlgReal& a, const AlgReal& b);
  friend std::strong_ordering operator<=>(const AlgReal& a, const AlgReal& b);

  Integer floor() const;
  Integer ceil() const;

  /// Enclosure of width <= 2^-bits.
  RationalInterval approximate(unsigned bits) const;
  /// Correctly rounded decimal with `significant` digits.
  std::string to_decimal(int significant = 6) const;
  double to_double() const;
  /// Human form such as "b^2-b-1" or "(1/2)b+3".
  std::string to_string(char var = 'b') const;

  std::size_t hash() const noexcept;

 private:
  void check_same_field(const AlgReal& o) const;
  NumberField field_;
  std::vector<Rational> coeffs_;
};

enum class Order { less, equal, greater };

/// Operation-style entry points mirroring the library surface.
enum class ArithOp { add, sub, mul, div };
AlgReal arith(const AlgReal& a, const AlgReal& b, ArithOp op);
Order compare(const AlgReal& a, const AlgReal& b);
enum class RoundMode { floor, ceil };
Integer floor_ceil(const AlgReal& a, RoundMode mode);

struct AlgRealHash {
  std::size_t operator()(const AlgReal& a) const noexcept { return a.hash(); }
};

const AlgReal& min_of(const AlgReal& a, const AlgReal& b);
const AlgReal& max_of(const AlgReal& a, const AlgReal& b);

}  // namespace negabase
