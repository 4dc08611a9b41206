#include "negabase/partition.hpp"

#include <algorithm>

#include "negabase/error.hpp"

namespace negabase {

std::string PartitionData::point_name(std::size_t i) const {
  if (i == zero_index) return "0";
  return "t" + std::to_string(*orbit_index[i]);
}

std::string PartitionData::letter_name(Letter a) const {
  return (a.is_gap() ? "hat_" : "") + point_name(a.index);
}

AlgReal PartitionData::measure(Symbol s) const {
  const Letter a = Letter::from_symbol(s);
  return a.is_gap() ? gap_lengths.at(a.index) : AlgReal::zero(field);
}

AlgReal PartitionData::representative(Symbol s) const {
  const Letter a = Letter::from_symbol(s);
  if (!a.is_gap()) return points.at(a.index);
  return (points.at(a.index) + right_ends.at(a.index)) * Rational(1, 2);
}

PartitionData build_partition(const OrbitData& orbit) {
  if (orbit.kind != OrbitKind::minus_beta)
    throw Error(ErrorCode::invalid_input, "partition needs a (-beta)-orbit");
  if (!orbit.finite())
    throw Error(ErrorCode::not_finite, "orbit is not finite within its cap (Yrrap status undetermined)");
  const NumberField field = orbit.values.front().field();
  const MinusBetaMap map(field);

  struct Entry {
    AlgReal value;
    std::optional<std::size_t> orbit_index;
  };
  std::vector<Entry> entries;
  for (std::size_t i = 0; i < orbit.values.size(); ++i) entries.push_back({orbit.values[i], i});
  const AlgReal zero = AlgReal::zero(field);
  const auto zero_pos = orbit.index_of(zero);
  if (!zero_pos) entries.push_back({zero, std::nullopt});
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.value < b.value; });

  PartitionData p{field, {}, {}, {}, {}, 0, 0, zero_pos.has_value(), orbit.values.size()};
  for (auto& e : entries) {
    p.points.push_back(e.value);
    p.orbit_index.push_back(e.orbit_index);
  }
  for (std::size_t i = 0; i < p.points.size(); ++i) {
    if (p.points[i].is_zero()) p.zero_index = i;
    p.right_ends.push_back(i + 1 < p.points.size() ? p.points[i + 1] : map.right());
    p.gap_lengths.push_back(p.right_ends[i] - p.points[i]);
  }
  if (!(p.points.front() == map.left()))
    throw std::logic_error("smallest point of V'_beta must be -beta/(beta+1)");
  // t = max{x in V_beta | x < 0}; every negative point of V'_beta lies in V_beta.
  p.t_index = p.zero_index - 1;
  return p;
}

Letter locate(const PartitionData& p, const AlgReal& x) {
  const MinusBetaMap map(p.field);
  if (!map.in_domain(x))
    throw Error(ErrorCode::out_of_domain, "x = " + x.to_string() + " is outside [-b/(b+1), 1/(b+1))");
  // Largest point <= x.
  auto it = std::upper_bound(p.points.begin(), p.points.end(), x,
                             [](const AlgReal& v, const AlgReal& pt) { return v < pt; });
  const auto i = static_cast<std::size_t>(std::distance(p.points.begin(), it)) - 1;
  if (p.points[i] == x) return {LetterKind::point, i};
  return {LetterKind::gap, i};
}

GapImage gap_image(const PartitionData& p, std::size_t gap_index) {
  const MinusBetaMap map(p.field);
  const AlgReal& x = p.points.at(gap_index);
  const AlgReal& r = p.right_ends.at(gap_index);
  const AlgReal inv_beta = map.beta().inverse();

  // Preimages y = -(v + a)/beta of the points v of V'_beta that fall in (x, r).
  std::vector<std::pair<AlgReal, std::size_t>> cuts;
  for (std::size_t vi = 0; vi < p.points.size(); ++vi) {
    for (long a = 0; a <= map.max_digit(); ++a) {
      AlgReal y = -((p.points[vi] + Rational(a)) * inv_beta);
      if (!(x < y && y < r)) continue;
      if (map.digit(y) != a) continue;
      if (!(map.step(y) == p.points[vi])) throw std::logic_error("cut point does not map onto V'_beta");
      cuts.emplace_back(std::move(y), vi);
    }
  }
  std::sort(cuts.begin(), cuts.end(), [](const auto& u, const auto& v) { return u.first < v.first; });

  GapImage out;
  for (auto& c : cuts) out.cut_points.push_back(c.first);

  // Segment i is (y_i, y_{i+1}) with y_0 = x and y_{m+1} = r.
  const std::size_t m = cuts.size();
  std::vector<Symbol> segment_letters(m + 1);
  for (std::size_t i = 0; i <= m; ++i) {
    const AlgReal& lo = i == 0 ? x : cuts[i - 1].first;
    const AlgReal& hi = i == m ? r : cuts[i].first;
    const Letter img = locate(p, map.step((lo + hi) * Rational(1, 2)));
    if (!img.is_gap()) throw std::logic_error("segment midpoint maps onto a point of V'_beta");
    segment_letters[i] = img.symbol();
  }
  for (std::size_t i = m + 1; i-- > 0;) {
    out.letters.push_back(segment_letters[i]);
    if (i > 0) out.letters.push_back(point_symbol(cuts[i - 1].second));
  }
  return out;
}

}  // namespace negabase
