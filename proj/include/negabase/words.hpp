#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "negabase/morphisms.hpp"

namespace negabase {

inline constexpr std::size_t kDefaultWordCap = 1'000'000;

/// ... u_-2 u_-1 u_0 u_1 u_2 ... with u_0 = 0, grown from the fixed point of
/// psi^2 seeded with hat_0. The left half is psi of the right half, read backwards.
class TwoSidedWord {
 public:
  TwoSidedWord(AntiMorphism psi, Symbol center, Symbol seed);

  Symbol center() const { return center_; }
  /// u_k for any integer k; grows the stored halves as needed.
  Symbol at(long k);
  void ensure_radius(std::size_t radius);
  /// u_1, u_2, ...
  const Word& right() const { return right_; }
  /// u_-1, u_-2, ...
  const Word& left() const { return left_; }
  /// Largest n with psi^{2n}(seed) inside the stored right half.
  std::size_t generation() const;
  const AntiMorphism& psi() const { return psi_; }

 private:
  void grow_right();
  void grow_left();
  AntiMorphism psi_;
  std::vector<Word> sigma_;
  Symbol center_;
  Symbol seed_;
  Word right_;
  Word left_;
  std::size_t right_cursor_ = 1;
  std::size_t left_cursor_ = 0;
};

TwoSidedWord fixed_point(const AntiMorphism& psi, const PartitionData& p, std::size_t radius);

/// 0 hat_0 x_1 hat_x_1 ... x_m hat_x_m x_-l hat_x_-l ... x_-1 hat_x_-1
Word w_beta(const PartitionData& p);

enum class ReturnKind { full, hat };

struct ReturnWordSystem {
  ReturnKind kind = ReturnKind::full;
  /// Marked letter and whether it opens (true) or closes (false) each return word.
  Symbol marker = 0;
  bool marker_first = true;
  /// Concrete return words in discovery order; words[0] is the start word.
  std::vector<Word> words;
  /// phi on concrete words, as word indices.
  std::vector<std::vector<std::size_t>> word_images;
  std::vector<std::size_t> class_of;
  std::vector<std::size_t> class_representative;
  /// phi over classes, named A, B, ... by first appearance.
  AntiMorphism derived;
  bool identification_consistent = true;
  std::vector<std::string> diagnostics;
  std::size_t letters_processed = 0;

  std::size_t class_count() const { return class_representative.size(); }
  std::optional<std::size_t> find(const Word& w) const;
  /// Class of a return word of 0 taken from the fixed word over A_beta.
  std::size_t classify(const Word& full_word) const;
  const AlgReal& length(std::size_t cls) const { return derived.lengths->at(cls); }

  std::map<Word, std::size_t> index;
};

std::string class_name(std::size_t i);

ReturnWordSystem return_words(const AntiMorphism& psi, const PartitionData& p,
                              std::size_t cap = kDefaultWordCap);
ReturnWordSystem hat_return_words(const AntiMorphism& hat_psi, const PartitionData& p,
                                  std::size_t cap = kDefaultWordCap);

/// Splits w into blocks that each start (marker_first) or end with the marker.
std::vector<Word> split_at(const Word& w, Symbol marker, bool marker_first);

/// ... u'_-2 u'_-1 u'_1 u'_2 ... : the fixed word recoded by its return words of 0.
/// Holds references; `fp` and `rws` must outlive it.
class DerivedWord {
 public:
  DerivedWord(TwoSidedWord& fp, const ReturnWordSystem& rws);

  void ensure(std::size_t count);
  /// Class of u'_k, k = 1, 2, ...
  std::size_t right_at(std::size_t k);
  /// Class of u'_-k, k = 1, 2, ...
  std::size_t left_at(std::size_t k);
  const std::vector<std::size_t>& right() const { return right_; }
  const std::vector<std::size_t>& left() const { return left_; }
  /// Index in the fixed word where u'_k starts, for k = 0 (u_0) .. right().size().
  const std::vector<long>& right_starts() const { return right_starts_; }
  const std::vector<long>& left_starts() const { return left_starts_; }
  std::string right_names(std::size_t count);
  /// u'_-count ... u'_-1 left to right.
  std::string left_names(std::size_t count);

 private:
  void step_right();
  void step_left();
  TwoSidedWord* fp_;
  const ReturnWordSystem* rws_;
  Symbol zero_;
  std::vector<std::size_t> right_;
  std::vector<std::size_t> left_;
  std::vector<long> right_starts_{0};
  std::vector<long> left_starts_{0};
};

}  // namespace negabase
