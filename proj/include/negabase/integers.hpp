#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "negabase/words.hpp"

namespace negabase {

enum class Side { minus_beta, beta };

struct IntegerEnumeration {
  Side side = Side::minus_beta;
  std::vector<AlgReal> points;
  /// Name of the return word (or letter) between points[i] and points[i+1].
  std::vector<std::string> gap_labels;
  AlgReal lo;
  AlgReal hi;
};

struct DistanceSet {
  Side side = Side::minus_beta;
  /// Class order.
  std::vector<AlgReal> values;
  std::vector<std::string> labels;
  std::vector<AlgReal> sorted() const;
};

/// Z_{-beta} in [lo, hi] from the derived word. Needs beta >= golden ratio.
IntegerEnumeration enumerate_minus(DerivedWord& dw, const ReturnWordSystem& rws, const AlgReal& lo,
                                   const AlgReal& hi);

/// {0}; only for 1 < beta < golden ratio.
IntegerEnumeration zminus_small(const NumberField& field);

/// Z_{-beta} in [-beta, 1] by the closed form; beta >= golden ratio.
IntegerEnumeration closed_form_window(const NumberField& field);
/// True when beta^2 >= floor(beta)(beta+1).
bool closed_form_full_branch(const NumberField& field);

/// Smallest depth d with lo, hi in (-beta)^d times the open domain.
std::size_t oracle_depth(const NumberField& field, const AlgReal& lo, const AlgReal& hi);
/// All sums a_0 + a_1(-b) + ... + a_{n-1}(-b)^{n-1}, n <= depth, whose digit
/// strings stay admissible, lying in [lo, hi]. Sorted. Throws unless depth
/// reaches oracle_depth or no admissible string is longer than depth apart
/// from trailing zeros at state 0.
std::vector<AlgReal> oracle_minus(const NumberField& field, const AlgReal& lo, const AlgReal& hi,
                                  std::size_t depth);

bool member_minus(const NumberField& field, const AlgReal& y);

DistanceSet distances(const ReturnWordSystem& rws);

/// z_k = sum of lambda(u_{2j-1}), j = 1..k (negated sums on the left).
std::vector<std::pair<long, AlgReal>> z_points(TwoSidedWord& fp, const PartitionData& p,
                                               const AlgReal& lo, const AlgReal& hi);

/// S_{-beta}(x) restricted to [lo, hi], sorted.
std::vector<AlgReal> s_set_minus(TwoSidedWord& fp, const PartitionData& p, const AlgReal& x,
                                 const AlgReal& lo, const AlgReal& hi);

/// One-sided fixed point u_1 u_2 ... of phi_beta starting with letter 1.
Word beta_fixed_word(const AntiMorphism& phi, std::size_t length);

/// z_0, ..., z_{count-1}.
IntegerEnumeration enumerate_beta(const AntiMorphism& phi, std::size_t count);

/// Greedy-expansion values in [0, hi] with at most `depth` digits. Sorted.
std::vector<AlgReal> oracle_beta(const NumberField& field, const AlgReal& hi, std::size_t depth);
bool member_beta(const NumberField& field, const AlgReal& y);

/// First `count` elements of {z_k + x | u_{k+1} > x}.
std::vector<AlgReal> s_set_beta(const AntiMorphism& phi, const AlgReal& x, std::size_t count);

}  // namespace negabase
