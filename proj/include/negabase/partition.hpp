#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "negabase/dynamics.hpp"

namespace negabase {

using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;

enum class LetterKind { point, gap };

/// A letter of A_beta: a point {x} or the gap (x, r_x) after x, for x in V'_beta.
/// Encoded as a Symbol by 2*index (+1 for gaps), so parity gives the kind.
struct Letter {
  LetterKind kind = LetterKind::point;
  std::size_t index = 0;

  Symbol symbol() const { return static_cast<Symbol>(2 * index + (kind == LetterKind::gap ? 1 : 0)); }
  static Letter from_symbol(Symbol s) {
    return {s % 2 ? LetterKind::gap : LetterKind::point, s / 2};
  }
  bool is_gap() const { return kind == LetterKind::gap; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

inline bool is_gap_symbol(Symbol s) { return s % 2 == 1; }
inline Symbol point_symbol(std::size_t index) { return static_cast<Symbol>(2 * index); }
inline Symbol gap_symbol(std::size_t index) { return static_cast<Symbol>(2 * index + 1); }

/// V'_beta = V_beta u {0} in increasing order, with successors r_x and the
/// measures of the gaps J_xhat = (x, r_x).
struct PartitionData {
  NumberField field;
  std::vector<AlgReal> points;
  std::vector<AlgReal> right_ends;
  std::vector<AlgReal> gap_lengths;
  /// Orbit index n of each point (t_n); empty for 0 when 0 is not in V_beta.
  std::vector<std::optional<std::size_t>> orbit_index;
  std::size_t t_index = 0;
  std::size_t zero_index = 0;
  bool zero_in_V = false;
  /// #V_beta.
  std::size_t orbit_size = 0;

  std::size_t size() const { return points.size(); }
  /// "0" for zero, "t<n>" otherwise.
  std::string point_name(std::size_t i) const;
  /// "0", "t3", "hat_0", "hat_t3".
  std::string letter_name(Letter a) const;
  std::string symbol_name(Symbol s) const { return letter_name(Letter::from_symbol(s)); }
  /// Lebesgue measure of J_a (zero for point letters).
  AlgReal measure(Symbol s) const;
  /// Midpoint (x + r_x)/2 for gap letters; the point itself otherwise.
  AlgReal representative(Symbol s) const;
};

PartitionData build_partition(const OrbitData& orbit);

/// The letter a with x in J_a.
Letter locate(const PartitionData& p, const AlgReal& x);

struct GapImage {
  std::vector<AlgReal> cut_points;  // y_1 < ... < y_m
  Word letters;                     // psi(xhat) = xhat_m T(y_m) ... xhat_1 T(y_1) xhat_0
  std::size_t m() const { return cut_points.size(); }
};

/// Image of the gap letter with point index `gap_index` under the anti-morphism psi.
GapImage gap_image(const PartitionData& p, std::size_t gap_index);

}  // namespace negabase
