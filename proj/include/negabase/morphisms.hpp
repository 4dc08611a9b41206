#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "negabase/partition.hpp"

namespace negabase {

inline constexpr std::size_t kDefaultApplyCap = 50'000'000;

/// Letter-to-word map over the alphabet {0, ..., n-1}. When `reversing` is set the
/// map is an anti-morphism: apply(uv) = apply(v) apply(u).
struct AntiMorphism {
  std::vector<std::string> names;
  std::vector<Word> images;
  bool reversing = true;
  /// L or lambda value of each letter.
  std::optional<std::vector<AlgReal>> lengths;
  /// Exact value a letter stands for (points of V'_beta, elements of Delta_beta).
  std::optional<std::vector<AlgReal>> values;

  std::size_t size() const { return images.size(); }
  const Word& image(Symbol a) const;
  Word apply(const Word& w, unsigned power = 1, std::size_t cap = kDefaultApplyCap) const;
  /// Sum of letter lengths.
  AlgReal length_of(const Word& w) const;
  std::string word_name(const Word& w, const std::string& sep = " ") const;
  /// "A -> AB, B -> A" style summary.
  std::string table(const std::string& sep = "") const;
};

/// psi_beta on A_beta; symbols follow Letter::symbol().
AntiMorphism build_psi(const PartitionData& p);

/// Point letters deleted. Hat letter i is the gap after point i.
AntiMorphism build_hat_psi(const AntiMorphism& psi, const PartitionData& p);
/// Deletes point letters and renumbers gap symbol 2i+1 as i.
Word hat_projection(const Word& w);

/// phi_beta on Delta_beta (orbit of 1^-); letter 0 is the value 1.
AntiMorphism build_beta_substitution(const OrbitData& orbit);

}  // namespace negabase
