#include "negabase/dynamics.hpp"

#include <unordered_map>

#include "negabase/error.hpp"

namespace negabase {

MinusBetaMap::MinusBetaMap(const NumberField& field)
    : beta_(AlgReal::beta(field)),
      left_(AlgReal::zero(field)),
      right_(AlgReal::zero(field)),
      upper_(AlgReal::zero(field)),
      max_digit_(0) {
  right_ = (beta_ + Rational(1)).inverse();
  upper_ = beta_ * right_;
  left_ = -upper_;
  max_digit_ = beta_.floor().get_si();
}

bool MinusBetaMap::in_domain(const AlgReal& x) const { return left_ <= x && x < right_; }

bool MinusBetaMap::in_open_domain(const AlgReal& x) const { return left_ < x && x < right_; }

void MinusBetaMap::require_domain(const AlgReal& x) const {
  if (!in_domain(x))
    throw Error(ErrorCode::out_of_domain,
                "x = " + x.to_string() + " is outside [-b/(b+1), 1/(b+1))");
}

long MinusBetaMap::digit(const AlgReal& x) const {
  require_domain(x);
  const long d = (upper_ - beta_ * x).floor().get_si();
  if (d < 0 || d > max_digit_)
    throw std::logic_error("digit outside {0, ..., floor(beta)}");
  return d;
}

AlgReal MinusBetaMap::step(const AlgReal& x) const {
  const long d = digit(x);
  return -(beta_ * x) - Rational(d);
}

std::vector<long> MinusBetaMap::expand_digits(const AlgReal& x, std::size_t n) const {
  std::vector<long> digits;
  digits.reserve(n);
  AlgReal cur = x;
  for (std::size_t k = 0; k < n; ++k) {
    const long d = digit(cur);
    digits.push_back(d);
    cur = -(beta_ * cur) - Rational(d);
  }
  return digits;
}

AlgReal step_minus_beta(const AlgReal& x) { return MinusBetaMap(x.field()).step(x); }
long digit_minus_beta(const AlgReal& x) { return MinusBetaMap(x.field()).digit(x); }
std::vector<long> expand_digits(const AlgReal& x, std::size_t n) {
  return MinusBetaMap(x.field()).expand_digits(x, n);
}

AlgReal step_beta_left_limit(const AlgReal& x) {
  if (x.sign() <= 0 || x > AlgReal::one(x.field()))
    throw Error(ErrorCode::out_of_domain, "x = " + x.to_string() + " is outside (0, 1]");
  const AlgReal bx = AlgReal::beta(x.field()) * x;
  return bx - Rational(bx.ceil()) + Rational(1);
}

AlgReal step_beta(const AlgReal& x) {
  if (x.sign() < 0 || x >= AlgReal::one(x.field()))
    throw Error(ErrorCode::out_of_domain, "x = " + x.to_string() + " is outside [0, 1)");
  const AlgReal bx = AlgReal::beta(x.field()) * x;
  return bx - Rational(bx.floor());
}

std::optional<std::size_t> OrbitData::index_of(const AlgReal& x) const {
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] == x) return i;
  return std::nullopt;
}

OrbitData orbit(const NumberField& field, OrbitKind kind, std::size_t cap) {
  if (cap == 0) throw Error(ErrorCode::invalid_input, "orbit cap must be positive");
  OrbitData out;
  out.kind = kind;
  std::optional<MinusBetaMap> map;
  AlgReal cur = AlgReal::one(field);
  if (kind == OrbitKind::minus_beta) {
    map.emplace(field);
    cur = map->left();
  }
  std::unordered_map<AlgReal, std::size_t, AlgRealHash> seen;
  while (out.values.size() < cap) {
    if (auto it = seen.find(cur); it != seen.end()) {
      out.preperiod = it->second;
      out.period = out.values.size() - it->second;
      out.status = OrbitStatus::finite;
      return out;
    }
    seen.emplace(cur, out.values.size());
    out.values.push_back(cur);
    cur = kind == OrbitKind::minus_beta ? map->step(cur) : step_beta_left_limit(cur);
  }
  if (auto it = seen.find(cur); it != seen.end()) {
    out.preperiod = it->second;
    out.period = out.values.size() - it->second;
    out.status = OrbitStatus::finite;
  }
  return out;
}

bool at_least_golden(const NumberField& field) {
  const AlgReal b = AlgReal::beta(field);
  return (b * b - b - Rational(1)).sign() >= 0;
}

}  // namespace negabase
