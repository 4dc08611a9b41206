#include "negabase/words.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "negabase/error.hpp"

namespace negabase {

TwoSidedWord::TwoSidedWord(AntiMorphism psi, Symbol center, Symbol seed)
    : psi_(std::move(psi)), center_(center), seed_(seed) {
  for (std::size_t a = 0; a < psi_.size(); ++a) sigma_.push_back(psi_.apply({static_cast<Symbol>(a)}, 2));
  right_ = sigma_.at(seed_);
  if (right_.front() != seed_) throw std::logic_error("psi^2(seed) must start with the seed");
  if (right_.size() < 2) throw Error(ErrorCode::degenerate, "psi^2 does not grow the seed; no fixed point");
}

void TwoSidedWord::grow_right() {
  if (right_cursor_ >= right_.size()) throw Error(ErrorCode::degenerate, "fixed word stopped growing");
  const Word& img = sigma_[right_[right_cursor_++]];
  right_.insert(right_.end(), img.begin(), img.end());
}

void TwoSidedWord::grow_left() {
  while (left_cursor_ >= right_.size()) grow_right();
  const Word& img = psi_.images[right_[left_cursor_++]];
  left_.insert(left_.end(), img.rbegin(), img.rend());
}

void TwoSidedWord::ensure_radius(std::size_t radius) {
  while (right_.size() < radius) grow_right();
  while (left_.size() < radius) grow_left();
}

Symbol TwoSidedWord::at(long k) {
  if (k == 0) return center_;
  const auto n = static_cast<std::size_t>(k > 0 ? k : -k);
  if (k > 0) {
    while (right_.size() < n) grow_right();
    return right_[n - 1];
  }
  while (left_.size() < n) grow_left();
  return left_[n - 1];
}

std::size_t TwoSidedWord::generation() const {
  std::size_t gen = 0;
  std::size_t len = 1;
  for (;;) {
    std::size_t next = 0;
    for (std::size_t i = 0; i < len; ++i) next += sigma_[right_[i]].size();
    if (next > right_.size()) return gen;
    ++gen;
    len = next;
  }
}

TwoSidedWord fixed_point(const AntiMorphism& psi, const PartitionData& p, std::size_t radius) {
  TwoSidedWord fp(psi, point_symbol(p.zero_index), gap_symbol(p.zero_index));
  fp.ensure_radius(radius);
  return fp;
}

Word w_beta(const PartitionData& p) {
  Word w;
  for (std::size_t i = p.zero_index; i < p.size(); ++i) {
    w.push_back(point_symbol(i));
    w.push_back(gap_symbol(i));
  }
  for (std::size_t i = 0; i < p.zero_index; ++i) {
    w.push_back(point_symbol(i));
    w.push_back(gap_symbol(i));
  }
  return w;
}

std::string class_name(std::size_t i) {
  if (i < 26) return std::string(1, static_cast<char>('A' + i));
  return "R" + std::to_string(i);
}

std::vector<Word> split_at(const Word& w, Symbol marker, bool marker_first) {
  std::vector<Word> out;
  if (w.empty()) return out;
  if (marker_first ? w.front() != marker : w.back() != marker)
    throw std::logic_error("word does not begin or end with the marker");
  for (Symbol a : w) {
    if (out.empty() || (marker_first ? a == marker : out.back().back() == marker)) out.emplace_back();
    out.back().push_back(a);
  }
  return out;
}

std::optional<std::size_t> ReturnWordSystem::find(const Word& w) const {
  auto it = index.find(w);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

std::size_t ReturnWordSystem::classify(const Word& full_word) const {
  const auto i = find(kind == ReturnKind::full ? full_word : hat_projection(full_word));
  if (!i) throw std::logic_error("return word missing from the closed system");
  return class_of[*i];
}

namespace {

struct ClosureSpec {
  ReturnKind kind;
  Symbol marker;
  bool marker_first;
  Word start;
  std::function<Word(const Word&)> image;  // word to be split into return words
  std::function<Word(const Word&)> key;
  const AntiMorphism* letters;             // for L values
};

ReturnWordSystem close_system(const ClosureSpec& spec, std::size_t cap) {
  ReturnWordSystem rws;
  rws.kind = spec.kind;
  rws.marker = spec.marker;
  rws.marker_first = spec.marker_first;

  auto intern = [&rws](const Word& w) {
    auto [it, inserted] = rws.index.emplace(w, rws.words.size());
    if (inserted) rws.words.push_back(w);
    return it->second;
  };
  intern(spec.start);
  for (std::size_t i = 0; i < rws.words.size(); ++i) {
    const Word img = spec.image(rws.words[i]);
    rws.letters_processed += img.size();
    if (rws.letters_processed > cap)
      throw Error(ErrorCode::cap_exceeded,
                  "return-word closure exceeded " + std::to_string(cap) + " letters");
    std::vector<std::size_t> seq;
    for (const Word& piece : split_at(img, spec.marker, spec.marker_first)) seq.push_back(intern(piece));
    rws.word_images.push_back(std::move(seq));
  }

  // Identification: start from equal keys, refine until the class images agree.
  const std::size_t n = rws.words.size();
  std::vector<std::size_t> cls(n);
  {
    std::map<Word, std::size_t> by_key;
    for (std::size_t i = 0; i < n; ++i)
      cls[i] = by_key.emplace(spec.key(rws.words[i]), by_key.size()).first->second;
  }
  const std::vector<std::size_t> key_cls = cls;
  std::size_t count = *std::max_element(cls.begin(), cls.end()) + 1;
  for (;;) {
    std::map<std::vector<std::size_t>, std::size_t> by_sig;
    std::vector<std::size_t> next(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::size_t> sig{cls[i]};
      for (std::size_t j : rws.word_images[i]) sig.push_back(cls[j]);
      next[i] = by_sig.emplace(std::move(sig), by_sig.size()).first->second;
    }
    const std::size_t next_count = by_sig.size();
    cls = std::move(next);
    if (next_count == count) break;
    count = next_count;
  }
  rws.class_of = cls;
  for (std::size_t i = 0; i < n; ++i)
    if (cls[i] == rws.class_representative.size()) rws.class_representative.push_back(i);

  const std::size_t key_count = *std::max_element(key_cls.begin(), key_cls.end()) + 1;
  rws.identification_consistent = key_count == count;
  if (!rws.identification_consistent) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (key_cls[i] == key_cls[j] && cls[i] != cls[j])
          rws.diagnostics.push_back("return words " + std::to_string(i) + " and " + std::to_string(j) +
                                    " share a gap key but their derived images differ; kept apart");
  }

  AntiMorphism& d = rws.derived;
  d.reversing = true;
  std::vector<AlgReal> lengths;
  for (std::size_t c = 0; c < count; ++c) {
    const std::size_t rep = rws.class_representative[c];
    d.names.push_back(class_name(c));
    Word img;
    for (std::size_t j : rws.word_images[rep]) img.push_back(static_cast<Symbol>(cls[j]));
    d.images.push_back(std::move(img));
    lengths.push_back(spec.letters->length_of(rws.words[rep]));
  }
  d.lengths = std::move(lengths);
  return rws;
}

}  // namespace

ReturnWordSystem return_words(const AntiMorphism& psi, const PartitionData& p, std::size_t cap) {
  const Symbol zero = point_symbol(p.zero_index);
  ClosureSpec spec{ReturnKind::full, zero, true, w_beta(p),
                   [&psi, zero](const Word& w) {
                     Word wz = w;
                     wz.push_back(zero);
                     Word img = psi.apply(wz);
                     if (img.back() != zero) throw std::logic_error("psi(w0) must end with 0");
                     img.pop_back();
                     return img;
                   },
                   [](const Word& w) { return hat_projection(w); }, &psi};
  ReturnWordSystem rws = close_system(spec, cap);
  if (!(rws.length(0) == AlgReal::one(p.field))) throw std::logic_error("L(w_beta) must be 1");
  return rws;
}

ReturnWordSystem hat_return_words(const AntiMorphism& hat_psi, const PartitionData& p, std::size_t cap) {
  const bool zero_marker = !p.zero_in_V || p.orbit_size % 2 == 1;
  const Symbol marker = static_cast<Symbol>(zero_marker ? p.zero_index : p.t_index);
  ClosureSpec spec{ReturnKind::hat, marker, zero_marker, hat_projection(w_beta(p)),
                   [&hat_psi](const Word& w) { return hat_psi.apply(w); },
                   [](const Word& w) { return w; }, &hat_psi};
  return close_system(spec, cap);
}

DerivedWord::DerivedWord(TwoSidedWord& fp, const ReturnWordSystem& rws)
    : fp_(&fp), rws_(&rws), zero_(fp.center()) {}

void DerivedWord::step_right() {
  const long start = right_starts_.back();
  long k = start + 1;
  Word w{fp_->at(start)};
  for (Symbol a; (a = fp_->at(k)) != zero_; ++k) w.push_back(a);
  right_.push_back(rws_->classify(w));
  right_starts_.push_back(k);
}

void DerivedWord::step_left() {
  const long end = left_starts_.back();
  long k = end - 1;
  while (fp_->at(k) != zero_) --k;
  Word w;
  for (long j = k; j < end; ++j) w.push_back(fp_->at(j));
  left_.push_back(rws_->classify(w));
  left_starts_.push_back(k);
}

void DerivedWord::ensure(std::size_t count) {
  while (right_.size() < count) step_right();
  while (left_.size() < count) step_left();
}

std::size_t DerivedWord::right_at(std::size_t k) {
  while (right_.size() < k) step_right();
  return right_.at(k - 1);
}

std::size_t DerivedWord::left_at(std::size_t k) {
  while (left_.size() < k) step_left();
  return left_.at(k - 1);
}

std::string DerivedWord::right_names(std::size_t count) {
  std::string out;
  for (std::size_t k = 1; k <= count; ++k) out += rws_->derived.names[right_at(k)];
  return out;
}

std::string DerivedWord::left_names(std::size_t count) {
  std::string out;
  for (std::size_t k = count; k >= 1; --k) out += rws_->derived.names[left_at(k)];
  return out;
}

}  // namespace negabase
