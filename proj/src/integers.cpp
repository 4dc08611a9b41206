#include "negabase/integers.hpp"

#include <algorithm>
#include <unordered_set>

#include "negabase/error.hpp"

namespace negabase {

namespace {

void sort_unique(std::vector<AlgReal>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

void require_window(const AlgReal& lo, const AlgReal& hi) {
  if (hi < lo) throw Error(ErrorCode::invalid_input, "window is reversed");
}

}  // namespace

std::vector<AlgReal> DistanceSet::sorted() const {
  std::vector<AlgReal> out = values;
  std::sort(out.begin(), out.end());
  return out;
}

IntegerEnumeration enumerate_minus(DerivedWord& dw, const ReturnWordSystem& rws, const AlgReal& lo,
                                   const AlgReal& hi) {
  require_window(lo, hi);
  const NumberField& field = lo.field();
  if (!at_least_golden(field))
    throw Error(ErrorCode::precondition, "beta is below the golden ratio; Z_{-b} = {0}");

  // Left-to-right list of consecutive z'_k with the labels between them.
  std::vector<AlgReal> left_pts;
  std::vector<std::size_t> left_lbl;
  AlgReal z = AlgReal::zero(field);
  for (std::size_t k = 1; !(z < lo); ++k) {
    const std::size_t c = dw.left_at(k);
    z -= rws.length(c);
    left_pts.push_back(z);
    left_lbl.push_back(c);
  }
  std::vector<AlgReal> pts(left_pts.rbegin(), left_pts.rend());
  std::vector<std::size_t> lbl(left_lbl.rbegin(), left_lbl.rend());
  pts.push_back(AlgReal::zero(field));
  z = AlgReal::zero(field);
  for (std::size_t k = 1; !(hi < z); ++k) {
    const std::size_t c = dw.right_at(k);
    z += rws.length(c);
    pts.push_back(z);
    lbl.push_back(c);
  }

  IntegerEnumeration out{Side::minus_beta, {}, {}, lo, hi};
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i] < lo || hi < pts[i]) continue;
    if (!out.points.empty()) out.gap_labels.push_back(rws.derived.names[lbl[i - 1]]);
    out.points.push_back(pts[i]);
  }
  return out;
}

IntegerEnumeration zminus_small(const NumberField& field) {
  if (at_least_golden(field))
    throw Error(ErrorCode::precondition, "beta is not below the golden ratio");
  const AlgReal zero = AlgReal::zero(field);
  return {Side::minus_beta, {zero}, {}, zero, zero};
}

bool closed_form_full_branch(const NumberField& field) {
  const AlgReal b = AlgReal::beta(field);
  return !(b * b < (b + Rational(1)) * Rational(b.floor()));
}

IntegerEnumeration closed_form_window(const NumberField& field) {
  if (!at_least_golden(field)) throw Error(ErrorCode::precondition, "beta is below the golden ratio");
  const AlgReal b = AlgReal::beta(field);
  const long fl = b.floor().get_si();
  const long top = closed_form_full_branch(field) ? fl : fl - 1;
  IntegerEnumeration out{Side::minus_beta, {}, {}, -b, AlgReal::one(field)};
  for (long j = 0; j <= top; ++j) out.points.push_back(-b + Rational(j));
  out.points.push_back(AlgReal::zero(field));
  out.points.push_back(AlgReal::one(field));
  sort_unique(out.points);
  return out;
}

std::size_t oracle_depth(const NumberField& field, const AlgReal& lo, const AlgReal& hi) {
  require_window(lo, hi);
  const MinusBetaMap map(field);
  const AlgReal inv = -map.beta().inverse();
  AlgReal a = lo, c = hi;
  std::size_t d = 0;
  while (!(map.in_open_domain(a) && map.in_open_domain(c))) {
    a *= inv;
    c *= inv;
    ++d;
  }
  return d;
}

std::vector<AlgReal> oracle_minus(const NumberField& field, const AlgReal& lo, const AlgReal& hi,
                                  std::size_t depth) {
  const bool covered = depth >= oracle_depth(field, lo, hi);
  const MinusBetaMap map(field);
  const AlgReal minus_beta = -map.beta();
  const AlgReal inv = minus_beta.inverse();
  std::unordered_set<AlgReal, AlgRealHash> found;
  // A leaf with an admissible extension other than 0 -> 0 means longer strings exist.
  bool exhausted = true;

  // s is the scaled tail sum_{k<m} a_k (-b)^{k-m}; v = (-b)^m s.
  struct Frame {
    AlgReal s, v, pow;
    std::size_t m;
  };
  std::vector<Frame> stack;
  stack.push_back({AlgReal::zero(field), AlgReal::zero(field), AlgReal::one(field), 0});
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (!(f.v < lo) && !(hi < f.v)) found.insert(f.v);
    for (long a = map.max_digit(); a >= 0; --a) {
      AlgReal s = (f.s + Rational(a)) * inv;
      if (!map.in_domain(s)) continue;
      if (f.m == depth) {
        if (a != 0 || !f.s.is_zero()) exhausted = false;
        continue;
      }
      stack.push_back({std::move(s), f.v + f.pow * Rational(a), f.pow * minus_beta, f.m + 1});
    }
  }
  if (!covered && !exhausted)
    throw Error(ErrorCode::precondition, "oracle depth " + std::to_string(depth) + " does not cover the window");
  std::vector<AlgReal> out(found.begin(), found.end());
  sort_unique(out);
  return out;
}

bool member_minus(const NumberField& field, const AlgReal& y) {
  const MinusBetaMap map(field);
  const AlgReal inv = -map.beta().inverse();
  AlgReal s = y;
  std::size_t n = 0;
  while (!map.in_open_domain(s)) {
    s *= inv;
    ++n;
  }
  for (std::size_t k = 0; k < n; ++k) s = map.step(s);
  return s.is_zero();
}

DistanceSet distances(const ReturnWordSystem& rws) {
  DistanceSet d;
  d.values = *rws.derived.lengths;
  d.labels = rws.derived.names;
  return d;
}

std::vector<std::pair<long, AlgReal>> z_points(TwoSidedWord& fp, const PartitionData& p, const AlgReal& lo,
                                               const AlgReal& hi) {
  require_window(lo, hi);
  std::vector<std::pair<long, AlgReal>> left, right;
  AlgReal z = AlgReal::zero(p.field);
  for (long k = -1; !(z < lo); --k) {
    z -= p.measure(fp.at(2 * k + 1));
    left.emplace_back(k, z);
  }
  z = AlgReal::zero(p.field);
  for (long k = 1; !(hi < z); ++k) {
    z += p.measure(fp.at(2 * k - 1));
    right.emplace_back(k, z);
  }
  std::vector<std::pair<long, AlgReal>> out;
  auto keep = [&](const std::pair<long, AlgReal>& e) {
    if (!(e.second < lo) && !(hi < e.second)) out.push_back(e);
  };
  for (auto it = left.rbegin(); it != left.rend(); ++it) keep(*it);
  keep({0, AlgReal::zero(p.field)});
  for (const auto& e : right) keep(e);
  return out;
}

std::vector<AlgReal> s_set_minus(TwoSidedWord& fp, const PartitionData& p, const AlgReal& x, const AlgReal& lo,
                                 const AlgReal& hi) {
  const Letter a = locate(p, x);
  std::vector<AlgReal> out;
  if (!a.is_gap()) {
    for (auto& [k, z] : z_points(fp, p, lo, hi))
      if (fp.at(2 * k) == a.symbol()) out.push_back(z);
    return out;
  }
  const AlgReal shift = x - p.points[a.index];
  for (auto& [k, z] : z_points(fp, p, lo - shift, hi - shift))
    if (fp.at(2 * k + 1) == a.symbol()) out.push_back(z + shift);
  return out;
}

Word beta_fixed_word(const AntiMorphism& phi, std::size_t length) {
  Word w = phi.image(0);
  if (w.front() != 0) throw std::logic_error("phi_beta(1) must start with 1");
  if (w.size() < 2) throw Error(ErrorCode::degenerate, "phi_beta(1) does not grow");
  for (std::size_t cursor = 1; w.size() < length; ++cursor) {
    const Word& img = phi.image(w[cursor]);
    w.insert(w.end(), img.begin(), img.end());
  }
  return w;
}

IntegerEnumeration enumerate_beta(const AntiMorphism& phi, std::size_t count) {
  if (count == 0) throw Error(ErrorCode::invalid_input, "count must be positive");
  if (!phi.values || phi.values->empty()) throw Error(ErrorCode::precondition, "phi_beta carries no letter values");
  const NumberField field = phi.values->front().field();
  const Word u = beta_fixed_word(phi, count);
  IntegerEnumeration out{Side::beta, {AlgReal::zero(field)}, {}, AlgReal::zero(field), AlgReal::zero(field)};
  for (std::size_t k = 1; k < count; ++k) {
    out.points.push_back(out.points.back() + (*phi.values)[u[k - 1]]);
    out.gap_labels.push_back(phi.names[u[k - 1]]);
  }
  out.hi = out.points.back();
  return out;
}

std::vector<AlgReal> oracle_beta(const NumberField& field, const AlgReal& hi, std::size_t depth) {
  const AlgReal beta = AlgReal::beta(field);
  const AlgReal one = AlgReal::one(field);
  if (!(hi < beta.pow(static_cast<long>(depth))))
    throw Error(ErrorCode::precondition, "oracle depth " + std::to_string(depth) + " does not cover the window");
  const AlgReal inv = beta.inverse();
  const long max_digit = beta.floor().get_si();
  std::unordered_set<AlgReal, AlgRealHash> found;
  struct Frame {
    AlgReal s, v, pow;
    std::size_t m;
  };
  std::vector<Frame> stack;
  stack.push_back({AlgReal::zero(field), AlgReal::zero(field), one, 0});
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (!(hi < f.v)) found.insert(f.v);
    if (f.m == depth) continue;
    for (long a = max_digit; a >= 0; --a) {
      AlgReal s = (f.s + Rational(a)) * inv;
      if (!(s < one)) continue;
      stack.push_back({std::move(s), f.v + f.pow * Rational(a), f.pow * beta, f.m + 1});
    }
  }
  std::vector<AlgReal> out(found.begin(), found.end());
  sort_unique(out);
  return out;
}

bool member_beta(const NumberField& field, const AlgReal& y) {
  if (y.sign() < 0) return false;
  const AlgReal inv = AlgReal::beta(field).inverse();
  const AlgReal one = AlgReal::one(field);
  AlgReal s = y;
  std::size_t n = 0;
  while (!(s < one)) {
    s *= inv;
    ++n;
  }
  for (std::size_t k = 0; k < n; ++k) s = step_beta(s);
  return s.is_zero();
}

std::vector<AlgReal> s_set_beta(const AntiMorphism& phi, const AlgReal& x, std::size_t count) {
  if (x.sign() < 0 || !(x < AlgReal::one(x.field())))
    throw Error(ErrorCode::out_of_domain, "x = " + x.to_string() + " is outside [0, 1)");
  const auto& values = *phi.values;
  std::vector<AlgReal> out;
  Word u = beta_fixed_word(phi, 2);
  AlgReal z = AlgReal::zero(x.field());
  for (std::size_t k = 0; out.size() < count; ++k) {
    if (k >= u.size()) u = beta_fixed_word(phi, 2 * u.size());
    if (x < values[u[k]]) out.push_back(z + x);
    z += values[u[k]];
  }
  return out;
}

}  // namespace negabase
