#include "negabase/morphisms.hpp"

#include "negabase/error.hpp"

namespace negabase {

const Word& AntiMorphism::image(Symbol a) const {
  if (a >= images.size()) throw Error(ErrorCode::invalid_input, "unknown letter " + std::to_string(a));
  return images[a];
}

Word AntiMorphism::apply(const Word& w, unsigned power, std::size_t cap) const {
  Word cur = w;
  for (unsigned n = 0; n < power; ++n) {
    std::size_t total = 0;
    for (Symbol a : cur) {
      total += image(a).size();
      if (total > cap) throw Error(ErrorCode::cap_exceeded, "word length exceeds " + std::to_string(cap));
    }
    Word next;
    next.reserve(total);
    if (reversing) {
      for (auto it = cur.rbegin(); it != cur.rend(); ++it) next.insert(next.end(), images[*it].begin(), images[*it].end());
    } else {
      for (Symbol a : cur) next.insert(next.end(), images[a].begin(), images[a].end());
    }
    cur = std::move(next);
  }
  return cur;
}

AlgReal AntiMorphism::length_of(const Word& w) const {
  if (!lengths) throw Error(ErrorCode::precondition, "morphism carries no letter lengths");
  if (lengths->empty()) throw Error(ErrorCode::precondition, "empty alphabet");
  AlgReal sum = AlgReal::zero(lengths->front().field());
  for (Symbol a : w) {
    image(a);
    sum += (*lengths)[a];
  }
  return sum;
}

std::string AntiMorphism::word_name(const Word& w, const std::string& sep) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += sep;
    out += names.at(w[i]);
  }
  return out;
}

std::string AntiMorphism::table(const std::string& sep) const {
  std::string out;
  for (std::size_t a = 0; a < size(); ++a) {
    if (a) out += ", ";
    out += names[a] + " -> " + word_name(images[a], sep);
  }
  return out;
}

AntiMorphism build_psi(const PartitionData& p) {
  const MinusBetaMap map(p.field);
  AntiMorphism psi;
  psi.reversing = true;
  std::vector<AlgReal> lengths, values;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Letter img = locate(p, map.step(p.points[i]));
    if (img.is_gap()) throw std::logic_error("T(V'_beta) must lie in V'_beta");
    psi.names.push_back(p.letter_name({LetterKind::point, i}));
    psi.images.push_back({img.symbol()});
    lengths.push_back(AlgReal::zero(p.field));
    values.push_back(p.points[i]);

    GapImage g = gap_image(p, i);
    if (g.letters.size() != 2 * g.m() + 1)
      throw std::logic_error("gap image must alternate gap and point letters");
    psi.names.push_back(p.letter_name({LetterKind::gap, i}));
    psi.images.push_back(std::move(g.letters));
    lengths.push_back(p.gap_lengths[i]);
    values.push_back(p.points[i]);
  }
  psi.lengths = std::move(lengths);
  psi.values = std::move(values);

  const Word& zero_hat = psi.images[gap_symbol(p.zero_index)];
  const Word& t_hat = psi.images[gap_symbol(p.t_index)];
  if (zero_hat.back() != gap_symbol(p.t_index) || t_hat.front() != gap_symbol(p.zero_index))
    throw std::logic_error("psi(hat_0) must end with hat_t and psi(hat_t) must start with hat_0");
  return psi;
}

Word hat_projection(const Word& w) {
  Word out;
  for (Symbol a : w)
    if (is_gap_symbol(a)) out.push_back(a / 2);
  return out;
}

AntiMorphism build_hat_psi(const AntiMorphism& psi, const PartitionData& p) {
  AntiMorphism hat;
  hat.reversing = true;
  std::vector<AlgReal> lengths, values;
  for (std::size_t i = 0; i < p.size(); ++i) {
    hat.names.push_back(psi.names.at(gap_symbol(i)));
    hat.images.push_back(hat_projection(psi.image(gap_symbol(i))));
    lengths.push_back(p.gap_lengths[i]);
    values.push_back(p.points[i]);
  }
  hat.lengths = std::move(lengths);
  hat.values = std::move(values);
  return hat;
}

AntiMorphism build_beta_substitution(const OrbitData& orbit) {
  if (orbit.kind != OrbitKind::beta_left_limit)
    throw Error(ErrorCode::invalid_input, "phi_beta needs the orbit of 1^-");
  if (!orbit.finite()) throw Error(ErrorCode::not_finite, "orbit of 1^- is not finite (Parry status undetermined)");
  const NumberField field = orbit.values.front().field();
  const AlgReal beta = AlgReal::beta(field);
  if (!(orbit.values.front() == AlgReal::one(field))) throw Error(ErrorCode::precondition, "orbit must start at 1");

  AntiMorphism phi;
  phi.reversing = false;
  for (const AlgReal& x : orbit.values) {
    const long ones = (beta * x).ceil().get_si() - 1;
    Word img(static_cast<std::size_t>(ones), 0);
    const auto next = orbit.index_of(step_beta_left_limit(x));
    if (!next) throw std::logic_error("T_beta(x^-) left the orbit");
    img.push_back(static_cast<Symbol>(*next));
    phi.names.push_back(x.to_string());
    phi.images.push_back(std::move(img));
  }
  phi.lengths = orbit.values;
  phi.values = orbit.values;
  return phi;
}

}  // namespace negabase
