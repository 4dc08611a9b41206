#include "negabase/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "negabase/error.hpp"

namespace negabase {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_input: return "invalid_input";
    case ErrorCode::no_root: return "no_root";
    case ErrorCode::reducible: return "reducible";
    case ErrorCode::field_mismatch: return "field_mismatch";
    case ErrorCode::division_by_zero: return "division_by_zero";
    case ErrorCode::out_of_domain: return "out_of_domain";
    case ErrorCode::precondition: return "precondition";
    case ErrorCode::not_finite: return "not_finite";
    case ErrorCode::cap_exceeded: return "cap_exceeded";
    case ErrorCode::degenerate: return "degenerate";
  }
  return "unknown";
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t power) {
  std::vector<Rational> v(power + 1);
  v[power] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::from_integers(const std::vector<Integer>& coeffs) {
  std::vector<Rational> v;
  v.reserve(coeffs.size());
  for (const auto& c : coeffs) v.emplace_back(c);
  return Polynomial(std::move(v));
}

void Polynomial::normalize() {
  for (auto& c : coeffs_) c.canonicalize();
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

int Polynomial::sign_at(const Rational& x) const { return sgn((*this)(x)); }

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  std::vector<Rational> v = coeffs_;
  const Rational lead = leading();
  for (auto& c : v) c /= lead;
  return Polynomial(std::move(v));
}

std::vector<Integer> Polynomial::primitive_integer() const {
  if (is_zero()) return {};
  Integer den_lcm = 1;
  for (const auto& c : coeffs_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(coeffs_.size());
  Integer content = 0;
  for (const auto& c : coeffs_) {
    Integer v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    out.push_back(std::move(v));
  }
  if (sgn(out.back()) < 0) content = -content;
  for (auto& v : out) v /= content;
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a) {
  std::vector<Rational> v = a.coeffs_;
  for (auto& c : v) c = -c;
  return Polynomial(std::move(v));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(v));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::division_by_zero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial{}, a};
  std::vector<Rational> rem = a.coeffs_;
  std::vector<Rational> quot(a.coeffs_.size() - b.coeffs_.size() + 1);
  const std::size_t db = b.coeffs_.size() - 1;
  for (std::size_t k = quot.size(); k-- > 0;) {
    Rational q = rem[k + db] / b.leading();
    quot[k] = q;
    if (sgn(q) == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * b.coeffs_[j];
  }
  rem.resize(db);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::string Polynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (!first) os << (sgn(c) < 0 ? "-" : "+");
    else if (sgn(c) < 0) os << "-";
    first = false;
    const bool unit = mag == 1;
    if (i == 0 || !unit) {
      if (mag.get_den() != 1 && i > 0) os << "(" << mag.get_str() << ")";
      else os << mag.get_str();
    }
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

std::vector<Polynomial> sturm_chain(const Polynomial& p) {
  std::vector<Polynomial> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    Polynomial r = Polynomial::divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  if (chain.back().is_zero()) chain.pop_back();
  return chain;
}

namespace {

int sign_variations(const std::vector<Polynomial>& chain, const Rational& x) {
  int variations = 0;
  int last = 0;
  for (const auto& q : chain) {
    const int s = q.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

std::vector<Integer> divisors(Integer n) {
  n = abs(n);
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

int count_roots(const std::vector<Polynomial>& chain, const Rational& a, const Rational& b) {
  return sign_variations(chain, a) - sign_variations(chain, b);
}

std::vector<Rational> rational_roots(const std::vector<Integer>& coeffs) {
  std::vector<Integer> c = coeffs;
  while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
  std::vector<Rational> roots;
  if (c.size() < 2) return roots;
  std::size_t shift = 0;
  while (sgn(c[shift]) == 0) ++shift;
  if (shift > 0) roots.emplace_back(0);
  c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(shift));
  if (c.size() < 2) return roots;
  const Polynomial p = Polynomial::from_integers(c);
  for (const auto& num : divisors(c.front())) {
    for (const auto& den : divisors(c.back())) {
      for (int s : {1, -1}) {
        Rational cand(num * s, den);
        cand.canonicalize();
        if (cand.get_den() != den) continue;  // already tried in lowest terms
        if (p.sign_at(cand) == 0) roots.push_back(cand);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

Rational root_bound(const Polynomial& p) {
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p.coeffs()[i] / p.leading())));
  return m + 1;
}

}  // namespace negabase
