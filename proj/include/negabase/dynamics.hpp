#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "negabase/algebraic.hpp"

namespace negabase {

/// The (-beta)-transformation x -> -beta*x - floor(beta/(beta+1) - beta*x) on
/// [-beta/(beta+1), 1/(beta+1)). Holds the field constants it needs.
class MinusBetaMap {
 public:
  explicit MinusBetaMap(const NumberField& field);

  const NumberField& field() const { return beta_.field(); }
  const AlgReal& beta() const { return beta_; }
  /// -beta/(beta+1)
  const AlgReal& left() const { return left_; }
  /// 1/(beta+1)
  const AlgReal& right() const { return right_; }
  /// floor(beta); the largest possible digit.
  long max_digit() const { return max_digit_; }

  bool in_domain(const AlgReal& x) const;
  bool in_open_domain(const AlgReal& x) const;

  long digit(const AlgReal& x) const;
  AlgReal step(const AlgReal& x) const;
  /// (d_1, ..., d_n) with d_k the digit of T^{k-1}(x).
  std::vector<long> expand_digits(const AlgReal& x, std::size_t n) const;

 private:
  void require_domain(const AlgReal& x) const;
  AlgReal beta_;
  AlgReal left_;
  AlgReal right_;
  AlgReal upper_;  // beta/(beta+1)
  long max_digit_;
};

AlgReal step_minus_beta(const AlgReal& x);
long digit_minus_beta(const AlgReal& x);
std::vector<long> expand_digits(const AlgReal& x, std::size_t n);

/// Left limit of the beta-transformation: T(x^-) = beta*x - ceil(beta*x) + 1 on (0, 1].
AlgReal step_beta_left_limit(const AlgReal& x);
/// beta-transformation x -> beta*x - floor(beta*x) on [0, 1).
AlgReal step_beta(const AlgReal& x);

enum class OrbitKind { minus_beta, beta_left_limit };
enum class OrbitStatus { finite, cap_exceeded };

struct OrbitData {
  OrbitKind kind = OrbitKind::minus_beta;
  /// t_0, t_1, ... pairwise distinct.
  std::vector<AlgReal> values;
  std::size_t preperiod = 0;
  std::optional<std::size_t> period;
  OrbitStatus status = OrbitStatus::cap_exceeded;

  bool finite() const { return status == OrbitStatus::finite; }
  /// Index of an exact value, if present.
  std::optional<std::size_t> index_of(const AlgReal& x) const;
};

inline constexpr std::size_t kDefaultOrbitCap = 4096;

/// Iterates from -beta/(beta+1) (minus_beta) or from 1 (beta_left_limit) until
/// an exact repeat or until `cap` distinct values have been stored.
OrbitData orbit(const NumberField& field, OrbitKind kind, std::size_t cap = kDefaultOrbitCap);

/// True when beta >= (1+sqrt5)/2, decided exactly.
bool at_least_golden(const NumberField& field);

}  // namespace negabase
