#include "negabase/algebraic.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "negabase/error.hpp"

namespace negabase {

namespace detail {

struct Enclosure {
  Rational lo;
  Rational hi;
  std::vector<Rational> lo_pow;  // lo^i, i < degree
  std::vector<Rational> hi_pow;
  unsigned bits = 0;
};

struct FieldImpl {
  std::vector<Integer> minpoly;
  Polynomial poly;
  Polynomial monic;
  int degree = 0;
  RationalInterval isolating;
  int sign_at_lo = 0;

  mutable std::mutex mu;
  mutable std::shared_ptr<const Enclosure> enclosure;

  std::shared_ptr<const Enclosure> snapshot() const {
    std::lock_guard<std::mutex> lock(mu);
    return enclosure;
  }

  std::shared_ptr<const Enclosure> refine_to(unsigned bits) const;
};

namespace {

bool wider_than(const Rational& lo, const Rational& hi, unsigned bits) {
  Rational w = hi - lo;
  mpq_mul_2exp(w.get_mpq_t(), w.get_mpq_t(), bits);
  return w > 1;
}

std::shared_ptr<const Enclosure> make_enclosure(const Rational& lo, const Rational& hi, int degree,
                                                unsigned bits) {
  auto e = std::make_shared<Enclosure>();
  e->lo = lo;
  e->hi = hi;
  e->bits = bits;
  e->lo_pow.resize(static_cast<std::size_t>(degree));
  e->hi_pow.resize(static_cast<std::size_t>(degree));
  Rational pl = 1, ph = 1;
  for (int i = 0; i < degree; ++i) {
    e->lo_pow[static_cast<std::size_t>(i)] = pl;
    e->hi_pow[static_cast<std::size_t>(i)] = ph;
    pl *= lo;
    ph *= hi;
  }
  return e;
}

}  // namespace

std::shared_ptr<const Enclosure> FieldImpl::refine_to(unsigned bits) const {
  std::lock_guard<std::mutex> lock(mu);
  if (enclosure->bits >= bits) return enclosure;
  Rational lo = enclosure->lo;
  Rational hi = enclosure->hi;
  if (lo != hi) {
    while (wider_than(lo, hi, bits)) {
      Rational mid = (lo + hi) / 2;
      const int s = poly.sign_at(mid);
      if (s == 0) {
        lo = hi = mid;
        break;
      }
      if (s == sign_at_lo) lo = mid;
      else hi = mid;
    }
  }
  enclosure = make_enclosure(lo, hi, degree, bits);
  return enclosure;
}

}  // namespace detail

namespace {

using detail::Enclosure;
using detail::FieldImpl;

RationalInterval evaluate(const std::vector<Rational>& c, const Enclosure& e) {
  RationalInterval r{c[0], c[0]};
  for (std::size_t i = 1; i < c.size(); ++i) {
    const int s = sgn(c[i]);
    if (s > 0) {
      r.lo += c[i] * e.lo_pow[i];
      r.hi += c[i] * e.hi_pow[i];
    } else if (s < 0) {
      r.lo += c[i] * e.hi_pow[i];
      r.hi += c[i] * e.lo_pow[i];
    }
  }
  return r;
}

constexpr unsigned kInitialBits = 64;

}  // namespace

NumberField NumberField::create(const std::vector<Integer>& minpoly,
                                std::optional<RationalInterval> interval) {
  return create(Polynomial::from_integers(minpoly), std::move(interval));
}

NumberField NumberField::create(const Polynomial& input, std::optional<RationalInterval> interval) {
  if (input.degree() < 1)
    throw Error(ErrorCode::invalid_input, "minimal polynomial must have degree >= 1");
  auto impl = std::make_shared<FieldImpl>();
  impl->minpoly = input.primitive_integer();
  impl->poly = Polynomial::from_integers(impl->minpoly);
  impl->monic = impl->poly.monic();
  impl->degree = impl->poly.degree();
  const Polynomial& p = impl->poly;

  if (impl->degree == 1) {
    const Rational root = -impl->monic.coeff(0);
    if (interval && !interval->contains(root))
      throw Error(ErrorCode::no_root, "interval does not contain the root " + root.get_str());
    if (root <= 1) throw Error(ErrorCode::no_root, "root " + root.get_str() + " is not > 1");
    impl->isolating = {root, root};
    impl->enclosure = detail::make_enclosure(root, root, 1, ~0u);
    return NumberField(std::move(impl));
  }

  if (Polynomial::gcd(p, p.derivative()).degree() > 0)
    throw Error(ErrorCode::reducible, "polynomial " + p.to_string() + " is not squarefree");
  if (auto roots = rational_roots(impl->minpoly); !roots.empty())
    throw Error(ErrorCode::reducible,
                "polynomial " + p.to_string() + " has the rational root " + roots.front().get_str());

  const auto chain = sturm_chain(p);
  Rational lo, hi;
  if (interval) {
    lo = interval->lo;
    hi = interval->hi;
    if (!(lo < hi)) throw Error(ErrorCode::invalid_input, "isolating interval must satisfy lo < hi");
    const int n = count_roots(chain, lo, hi);
    if (n != 1)
      throw Error(ErrorCode::no_root,
                  "interval [" + lo.get_str() + ", " + hi.get_str() + "] contains " +
                      std::to_string(n) + " roots, expected exactly one");
    if (lo < 1) {
      if (hi <= 1 || count_roots(chain, Rational(1), hi) != 1)
        throw Error(ErrorCode::no_root, "isolated root is not > 1");
      lo = 1;
    }
  } else {
    const Rational bound = root_bound(p);
    lo = 1;
    hi = bound;
    if (count_roots(chain, lo, hi) == 0) throw Error(ErrorCode::no_root, "no real root > 1");
    while (count_roots(chain, lo, hi) > 1) {
      Rational mid = (lo + hi) / 2;
      if (count_roots(chain, mid, hi) >= 1) lo = mid;
      else hi = mid;
    }
  }
  impl->isolating = {lo, hi};
  impl->sign_at_lo = p.sign_at(lo);
  impl->enclosure = detail::make_enclosure(lo, hi, impl->degree, 0);
  NumberField field(std::move(impl));
  field.refine(kInitialBits);
  return field;
}

int NumberField::degree() const { return impl_->degree; }
const std::vector<Integer>& NumberField::minpoly() const { return impl_->minpoly; }
const Polynomial& NumberField::monic_minpoly() const { return impl_->monic; }
RationalInterval NumberField::isolating_interval() const { return impl_->isolating; }

RationalInterval NumberField::enclosure() const {
  auto e = impl_->snapshot();
  return {e->lo, e->hi};
}

RationalInterval NumberField::refine(unsigned bits) const {
  auto e = impl_->refine_to(bits);
  return {e->lo, e->hi};
}

// ---------------------------------------------------------------------------

AlgReal::AlgReal(NumberField field, const Rational& value)
    : field_(std::move(field)), coeffs_(static_cast<std::size_t>(field_.degree())) {
  coeffs_[0] = value;
  coeffs_[0].canonicalize();
}

AlgReal::AlgReal(NumberField field, std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  const auto d = static_cast<std::size_t>(field_.degree());
  for (auto& c : coeffs_) c.canonicalize();
  if (coeffs_.size() > d) {
    // Reduce an arbitrary representative modulo p.
    Polynomial r = Polynomial::divmod(Polynomial(coeffs_), field_.monic_minpoly()).second;
    coeffs_ = r.coeffs();
  }
  coeffs_.resize(d);
}

AlgReal AlgReal::beta(const NumberField& field) {
  if (field.degree() == 1) return AlgReal(field, -field.monic_minpoly().coeff(0));
  std::vector<Rational> c(static_cast<std::size_t>(field.degree()));
  c[1] = 1;
  return AlgReal(field, std::move(c));
}

void AlgReal::check_same_field(const AlgReal& o) const {
  if (!(field_ == o.field_)) throw Error(ErrorCode::field_mismatch, "operands belong to different fields");
}

bool AlgReal::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

bool AlgReal::is_rational() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

int AlgReal::sign() const {
  if (is_rational()) return sgn(coeffs_[0]);
  const FieldImpl& impl = field_.impl();
  auto e = impl.snapshot();
  for (;;) {
    const RationalInterval r = evaluate(coeffs_, *e);
    if (sgn(r.lo) > 0) return 1;
    if (sgn(r.hi) < 0) return -1;
    e = impl.refine_to(std::max(2 * e->bits, kInitialBits));
  }
}

AlgReal AlgReal::operator-() const {
  AlgReal r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

AlgReal& AlgReal::operator+=(const AlgReal& o) {
  check_same_field(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

AlgReal& AlgReal::operator-=(const AlgReal& o) {
  check_same_field(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

AlgReal& AlgReal::operator*=(const Rational& r) {
  for (auto& c : coeffs_) c *= r;
  return *this;
}

AlgReal& AlgReal::operator+=(const Rational& r) {
  coeffs_[0] += r;
  return *this;
}

AlgReal& AlgReal::operator*=(const AlgReal& o) {
  check_same_field(o);
  const std::size_t d = coeffs_.size();
  if (o.is_rational()) return *this *= o.coeffs_[0];
  if (is_rational()) {
    const Rational c = coeffs_[0];
    coeffs_ = o.coeffs_;
    return *this *= c;
  }
  std::vector<Rational> prod(2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j) prod[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  const auto& m = field_.monic_minpoly().coeffs();
  for (std::size_t k = prod.size(); k-- > d;) {
    if (sgn(prod[k]) == 0) continue;
    const Rational c = prod[k];
    for (std::size_t j = 0; j < d; ++j) prod[k - d + j] -= c * m[j];
    prod[k] = 0;
  }
  prod.resize(d);
  coeffs_ = std::move(prod);
  return *this;
}

AlgReal AlgReal::inverse() const {
  if (is_zero()) throw Error(ErrorCode::division_by_zero, "division by zero in Q(beta)");
  if (is_rational()) return AlgReal(field_, Rational(1) / coeffs_[0]);
  // Extended Euclid: s*a + t*p = g.
  Polynomial r0 = field_.monic_minpoly(), r1(coeffs_);
  Polynomial s0, s1 = Polynomial::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = Polynomial::divmod(r0, r1);
    Polynomial s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() > 0)
    throw Error(ErrorCode::reducible, "element shares a factor with the minimal polynomial");
  std::vector<Rational> c = s0.coeffs();
  for (auto& x : c) x /= r0.coeff(0);
  return AlgReal(field_, std::move(c));
}

AlgReal& AlgReal::operator/=(const AlgReal& o) {
  check_same_field(o);
  if (o.is_zero()) throw Error(ErrorCode::division_by_zero, "division by zero in Q(beta)");
  if (o.is_rational()) return *this *= Rational(Rational(1) / o.coeffs_[0]);
  return *this *= o.inverse();
}

AlgReal AlgReal::pow(long exponent) const {
  AlgReal base = exponent < 0 ? inverse() : *this;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  AlgReal result = one(field_);
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

bool operator==(const AlgReal& a, const AlgReal& b) {
  a.check_same_field(b);
  return a.coeffs_ == b.coeffs_;
}

std::strong_ordering operator<=>(const AlgReal& a, const AlgReal& b) {
  a.check_same_field(b);
  const int s = (a - b).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Integer AlgReal::floor() const {
  if (is_rational()) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), coeffs_[0].get_num_mpz_t(), coeffs_[0].get_den_mpz_t());
    return r;
  }
  const RationalInterval a = approximate(32);
  Rational mid = (a.lo + a.hi) / 2;
  Integer n;
  mpz_fdiv_q(n.get_mpz_t(), mid.get_num_mpz_t(), mid.get_den_mpz_t());
  while ((*this - Rational(n)).sign() < 0) --n;
  while ((*this - Rational(n + 1)).sign() >= 0) ++n;
  return n;
}

Integer AlgReal::ceil() const { return -(-*this).floor(); }

RationalInterval AlgReal::approximate(unsigned bits) const {
  if (is_rational()) return {coeffs_[0], coeffs_[0]};
  const FieldImpl& impl = field_.impl();
  auto e = impl.snapshot();
  for (;;) {
    RationalInterval r = evaluate(coeffs_, *e);
    if (!detail::wider_than(r.lo, r.hi, bits)) return r;
    e = impl.refine_to(std::max({2 * e->bits, kInitialBits, bits + 8}));
  }
}

namespace {

Integer pow10(long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return r;
}

Rational pow10q(long e) {
  return e >= 0 ? Rational(pow10(e)) : Rational(Integer(1), pow10(-e));
}

// floor(log10(x)) for x > 0.
long floor_log10(const Rational& x) {
  long e = static_cast<long>(mpz_sizeinbase(x.get_num_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(x.get_den_mpz_t(), 10));
  while (pow10q(e) > x) --e;
  while (pow10q(e + 1) <= x) ++e;
  return e;
}

// Round half away from zero.
Integer round_rational(const Rational& x) {
  Rational a = abs(x) + Rational(1, 2);
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
  return sgn(x) < 0 ? Integer(-r) : r;
}

std::string place_point(const std::string& digits, long e, bool negative) {
  // digits holds the significant digits d_0 d_1 ..., value = 0.d_0 d_1 ... * 10^(e+1).
  std::string out;
  const long n = static_cast<long>(digits.size());
  if (e >= n - 1) {
    out = digits + std::string(static_cast<std::size_t>(e - (n - 1)), '0');
  } else if (e >= 0) {
    out = digits.substr(0, static_cast<std::size_t>(e + 1)) + "." + digits.substr(static_cast<std::size_t>(e + 1));
  } else {
    out = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + digits;
  }
  if (out.find('.') != std::string::npos) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return negative ? "-" + out : out;
}

}  // namespace

std::string AlgReal::to_decimal(int significant) const {
  if (significant < 1) significant = 1;
  if (is_zero()) return "0";
  for (unsigned bits = 64;; bits *= 2) {
    const RationalInterval r = approximate(bits);
    if (sgn(r.lo) * sgn(r.hi) <= 0 && !(r.lo == r.hi)) continue;
    const bool negative = sgn(r.lo) < 0;
    Rational a = negative ? Rational(-r.hi) : r.lo;
    Rational b = negative ? Rational(-r.lo) : r.hi;
    long e = floor_log10(a);
    if (floor_log10(b) != e) continue;
    Integer na = round_rational(a * pow10q(significant - 1 - e));
    Integer nb = round_rational(b * pow10q(significant - 1 - e));
    if (na != nb) continue;
    if (na == pow10(significant)) {
      ++e;
      na = round_rational(a * pow10q(significant - 1 - e));
      nb = round_rational(b * pow10q(significant - 1 - e));
      if (na != nb) continue;
    }
    return place_point(na.get_str(), e, negative);
  }
}

double AlgReal::to_double() const {
  const RationalInterval r = approximate(60);
  return Rational((r.lo + r.hi) / 2).get_d();
}

std::string AlgReal::to_string(char var) const { return Polynomial(coeffs_).to_string(var); }

std::size_t AlgReal::hash() const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2); };
  for (const auto& c : coeffs_) {
    for (mpz_srcptr z : {c.get_num_mpz_t(), c.get_den_mpz_t()}) {
      mix(static_cast<std::size_t>(z->_mp_size));
      const std::size_t n = mpz_size(z);
      for (std::size_t i = 0; i < n; ++i) mix(static_cast<std::size_t>(mpz_getlimbn(z, static_cast<mp_size_t>(i))));
    }
  }
  return h;
}

AlgReal arith(const AlgReal& a, const AlgReal& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  return a;
}

Order compare(const AlgReal& a, const AlgReal& b) {
  const auto c = a <=> b;
  if (c < 0) return Order::less;
  if (c > 0) return Order::greater;
  return Order::equal;
}

Integer floor_ceil(const AlgReal& a, RoundMode mode) {
  return mode == RoundMode::floor ? a.floor() : a.ceil();
}

const AlgReal& min_of(const AlgReal& a, const AlgReal& b) { return b < a ? b : a; }
const AlgReal& max_of(const AlgReal& a, const AlgReal& b) { return a < b ? b : a; }

}  // namespace negabase
