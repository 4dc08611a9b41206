#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "negabase/error.hpp"
#include "support.hpp"

using namespace negabase;

namespace {

/// Everything needed to enumerate on the minus side.
struct Minus {
  fx::Pipeline pl;
  ReturnWordSystem rws;
  TwoSidedWord fp;
  DerivedWord dw;

  explicit Minus(const char* poly)
      : pl(poly), rws(return_words(pl.psi, pl.p)), fp(fixed_point(pl.psi, pl.p, 64)), dw(fp, rws) {}

  AlgReal el(const char* e) const { return fx::el(pl.f, e); }
  IntegerEnumeration enumerate(const AlgReal& lo, const AlgReal& hi) { return enumerate_minus(dw, rws, lo, hi); }
  IntegerEnumeration enumerate(const char* lo, const char* hi) { return enumerate(el(lo), el(hi)); }
};

std::string names(const std::vector<AlgReal>& v) {
  std::string s;
  for (const AlgReal& a : v) s += (s.empty() ? "" : " ") + a.to_string();
  return s;
}

/// T^n(y / (-b)^n) for the least n placing y / (-b)^n in the open domain.
AlgReal anchor(const MinusBetaMap& map, const AlgReal& y) {
  AlgReal s = y;
  std::size_t n = 0;
  while (!map.in_open_domain(s)) {
    s = -(s / map.beta());
    ++n;
  }
  for (std::size_t k = 0; k < n; ++k) s = map.step(s);
  return s;
}

}  // namespace

TEST_CASE("enumerate_minus examples") {
  Minus g(fx::kGolden);
  const IntegerEnumeration eg = g.enumerate("-b^3", "b^4");
  CHECK(fx::joined(eg.gap_labels) == "AABABAABAABAB");
  CHECK(eg.points.size() == 14);
  CHECK(eg.points.front() == g.el("-b^3"));
  CHECK(eg.points.back() == g.el("b^4"));

  Minus g2(fx::kGm2);
  const IntegerEnumeration e2 = g2.enumerate("-b", "b^2");
  CHECK(fx::joined(e2.gap_labels) == "ABABBAB");
  const IntegerEnumeration small = g2.enumerate("-b", "b");
  CHECK(names(small.points) == "-b -b+1 0 1 b");

  const IntegerEnumeration zero = g.enumerate("0", "0");
  CHECK(names(zero.points) == "0");
  CHECK(zero.gap_labels.empty());

  for (std::size_t i = 0; i + 1 < eg.points.size(); ++i) {
    const std::size_t cls = eg.gap_labels[i] == "A" ? 0 : 1;
    CHECK(eg.points[i + 1] - eg.points[i] == g.rws.length(cls));
  }
}

TEST_CASE("zminus_small and closed form") {
  CHECK(names(zminus_small(fx::field(fx::kPlastic)).points) == "0");
  CHECK(names(zminus_small(fx::field(fx::kThreeHalves)).points) == "0");
  CHECK_THROWS_AS(zminus_small(fx::field(fx::kGolden)), Error);

  CHECK(names(closed_form_window(fx::field(fx::kGolden)).points) == "-b -b+1 0 1");
  CHECK(closed_form_full_branch(fx::field(fx::kGolden)));
  CHECK(names(closed_form_window(fx::field(fx::kGm2)).points) == "-b -b+1 0 1");
  CHECK_FALSE(closed_form_full_branch(fx::field(fx::kGm2)));
  CHECK(names(closed_form_window(fx::field(fx::kThree)).points) == "-3 -2 -1 0 1");
  CHECK_THROWS_AS(closed_form_window(fx::field(fx::kPlastic)), Error);
}

TEST_CASE("oracle_minus examples") {
  const NumberField two = fx::field(fx::kTwo);
  const AlgReal lo(two, Rational(-5)), hi(two, Rational(5));
  const auto z = oracle_minus(two, lo, hi, oracle_depth(two, lo, hi));
  REQUIRE(z.size() == 11);
  for (long k = -5; k <= 5; ++k) CHECK(z[static_cast<std::size_t>(k + 5)] == AlgReal(two, Rational(k)));

  const NumberField g = fx::field(fx::kGolden);
  const AlgReal glo = fx::el(g, "-b"), ghi = AlgReal::one(g);
  CHECK(names(oracle_minus(g, glo, ghi, oracle_depth(g, glo, ghi))) == "-b -b+1 0 1");
  CHECK(names(oracle_minus(g, AlgReal::zero(g), AlgReal::zero(g), 1)) == "0");
  CHECK_THROWS_AS(oracle_minus(g, fx::el(g, "-b^3"), fx::el(g, "b^4"), 2), Error);
}

TEST_CASE("member_minus examples") {
  const NumberField g = fx::field(fx::kGolden);
  CHECK(member_minus(g, fx::el(g, "-b^3")));
  CHECK(member_minus(g, fx::el(g, "-b+1")));
  CHECK(member_minus(g, AlgReal::zero(g)));
  CHECK_FALSE(member_minus(g, fx::el(g, "1/2")));
  CHECK_FALSE(member_minus(g, fx::el(g, "b-1/2")));
  const NumberField two = fx::field(fx::kTwo);
  CHECK_FALSE(member_minus(two, AlgReal(two, Rational(1, 2))));
  CHECK(member_minus(two, AlgReal(two, Rational(-7))));
  const NumberField pl = fx::field(fx::kPlastic);
  CHECK_FALSE(member_minus(pl, AlgReal::one(pl)));
}

TEST_CASE("distance sets") {
  Minus g(fx::kGolden);
  CHECK(names(distances(g.rws).sorted()) == "b-1 1");
  Minus g2(fx::kGm2);
  CHECK(names(distances(g2.rws).sorted()) == "1 b-1");
  const fx::Pipeline c(fx::kComplex);
  const DistanceSet dc = distances(hat_return_words(c.hat, c.p));
  CHECK(names(dc.values) == "1 b-1 b^2-b-1 b^2-b b");
  const fx::Pipeline c2(fx::kComplex2);
  const DistanceSet d6 = distances(hat_return_words(c2.hat, c2.p));
  CHECK(d6.values.size() == 6);
  CHECK(d6.values[5].to_decimal(3) == "3.12");
}

TEST_CASE("s_set_minus examples") {
  Minus g(fx::kGolden);
  const AlgReal lo = g.el("-b^3"), hi = g.el("b^4");
  CHECK(s_set_minus(g.fp, g.pl.p, AlgReal::zero(g.pl.f), lo, hi) == g.enumerate(lo, hi).points);
  // Letter t at even index of the materialized word.
  std::vector<AlgReal> expect;
  for (const auto& [k, z] : z_points(g.fp, g.pl.p, lo, hi))
    if (g.fp.at(2 * k) == point_symbol(g.pl.p.t_index)) expect.push_back(z);
  CHECK(s_set_minus(g.fp, g.pl.p, g.el("-1/b"), lo, hi) == expect);
  CHECK(!expect.empty());
  CHECK_THROWS_AS(s_set_minus(g.fp, g.pl.p, g.el("1"), lo, hi), Error);
}

TEST_CASE("beta side examples") {
  const NumberField g = fx::field(fx::kGolden);
  const AntiMorphism fib = build_beta_substitution(orbit(g, OrbitKind::beta_left_limit));
  CHECK(names(enumerate_beta(fib, 5).points) == "0 1 b b+1 b+2");
  const NumberField two = fx::field(fx::kTwo);
  CHECK(names(enumerate_beta(build_beta_substitution(orbit(two, OrbitKind::beta_left_limit)), 4).points) ==
        "0 1 2 3");
  CHECK(member_beta(g, fx::el(g, "b+2")));
  CHECK_FALSE(member_beta(g, fx::el(g, "2")));
  CHECK_FALSE(member_beta(g, fx::el(g, "-1")));

  CHECK(s_set_beta(fib, AlgReal::zero(g), 20) == enumerate_beta(fib, 20).points);
  const Word u = beta_fixed_word(fib, 40);
  const auto z = enumerate_beta(fib, 40).points;
  std::vector<AlgReal> expect;
  for (std::size_t k = 0; k + 1 < z.size() && expect.size() < 10; ++k)
    if (u[k] == 0) expect.push_back(z[k] + fx::el(g, "b-1"));
  CHECK(s_set_beta(fib, fx::el(g, "b-1"), 10) == expect);
  CHECK_THROWS_AS(s_set_beta(fib, AlgReal::one(g), 3), Error);

  // Shift property inside [0, b-1).
  const AlgReal x = fx::el(g, "1/10"), y = fx::el(g, "1/2");
  const auto sx = s_set_beta(fib, x, 30), sy = s_set_beta(fib, y, 30);
  for (std::size_t i = 0; i < sx.size(); ++i) CHECK(sx[i] - x == sy[i] - y);
}

// ---- properties --------------------------------------------------------------

TEST_CASE("property: oracle equivalence on [-b^3, b^4]") {
  for (const char* poly : fx::yrrap_fixtures()) {
    Minus m(poly);
    const AlgReal lo = m.el("-b^3"), hi = m.el("b^4");
    const auto oracle = oracle_minus(m.pl.f, lo, hi, oracle_depth(m.pl.f, lo, hi));
    CHECK_MESSAGE(oracle == m.enumerate(lo, hi).points, poly);
  }
  for (long b : {2L, 3L}) {
    Minus m(b == 2 ? fx::kTwo : fx::kThree);
    const auto pts = m.enumerate("-b^3", "b^4").points;
    REQUIRE(pts.size() == static_cast<std::size_t>(b * b * b * b + b * b * b + 1));
    for (std::size_t i = 0; i < pts.size(); ++i)
      CHECK(pts[i] == AlgReal(m.pl.f, Rational(-b * b * b + static_cast<long>(i))));
  }
}

TEST_CASE("property: closed form matches the oracle on [-b, 1]") {
  for (const char* poly : fx::yrrap_fixtures()) {
    const NumberField f = fx::field(poly);
    const AlgReal lo = fx::el(f, "-b"), hi = AlgReal::one(f);
    CHECK_MESSAGE(closed_form_window(f).points == oracle_minus(f, lo, hi, oracle_depth(f, lo, hi)), poly);
    const AlgReal b = AlgReal::beta(f);
    CHECK(closed_form_full_branch(f) == (b * b >= AlgReal(f, Rational(b.floor())) * (b + Rational(1))));
  }
}

TEST_CASE("property: small bases collapse") {
  for (const char* poly : {fx::kPlastic, fx::kThreeHalves}) {
    const NumberField f = fx::field(poly);
    CHECK(names(oracle_minus(f, AlgReal(f, Rational(-10)), AlgReal(f, Rational(10)), 10)) == "0");
  }
}

TEST_CASE("property: self-similarity and membership") {
  for (const char* poly : fx::yrrap_fixtures()) {
    Minus m(poly);
    const AlgReal mb = -AlgReal::beta(m.pl.f);
    fx::Gen gen(7);
    for (int i = 0; i < 1000; ++i) {
      const AlgReal lo(m.pl.f, Rational(-gen.integer(0, 6))), hi(m.pl.f, Rational(gen.integer(0, 6)));
      const auto small = m.enumerate(lo, hi).points;
      const auto big = m.enumerate(mb * hi, mb * lo).points;
      const std::set<std::string> in_big = [&] {
        std::set<std::string> s;
        for (const AlgReal& a : big) s.insert(a.to_string());
        return s;
      }();
      for (const AlgReal& a : small) REQUIRE(in_big.count((mb * a).to_string()) == 1);
    }
    const auto pts = m.enumerate("-b^2", "b^2").points;
    for (const AlgReal& a : pts) CHECK(member_minus(m.pl.f, a));
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
      CHECK_FALSE(member_minus(m.pl.f, (pts[i] + pts[i + 1]) / AlgReal(m.pl.f, Rational(2))));
  }
}

TEST_CASE("property: GIFS identity on windows") {
  for (const char* poly : {fx::kGolden, fx::kGm2, fx::kComplex, fx::kTwo}) {
    Minus m(poly);
    const MinusBetaMap map(m.pl.f);
    const AlgReal mb = -map.beta();
    const AlgReal lo = m.el("-b^4"), hi = m.el("b^4");
    for (std::size_t i = 0; i < m.pl.p.size(); ++i) {
      const AlgReal& x = m.pl.p.points[i];
      std::set<std::string> rhs;
      for (long a = 0; a <= map.max_digit(); ++a) {
        const AlgReal y = -((x + Rational(a)) / map.beta());
        if (!map.in_domain(y)) continue;
        for (const AlgReal& s : s_set_minus(m.fp, m.pl.p, y, hi / mb, lo / mb)) rhs.insert((mb * s).to_string());
      }
      std::set<std::string> lhs;
      for (const AlgReal& s : s_set_minus(m.fp, m.pl.p, x, lo, hi)) lhs.insert(s.to_string());
      std::string dl, dr;
      for (const auto& v : lhs) if (!rhs.count(v)) dl += v + " ";
      for (const auto& v : rhs) if (!lhs.count(v)) dr += v + " ";
      CHECK_MESSAGE(lhs == rhs, poly << " x = " << x.to_string() << " only lhs: " << dl << " only rhs: " << dr);
    }
  }
}

TEST_CASE("property: distance realization and gap bound") {
  for (const char* poly : fx::yrrap_fixtures()) {
    Minus m(poly);
    const auto pts = m.enumerate("-b^5", "b^5").points;
    std::set<std::string> seen, expect;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) seen.insert((pts[i + 1] - pts[i]).to_string());
    const DistanceSet d = distances(m.rws);
    for (const AlgReal& v : d.values) expect.insert(v.to_string());
    CHECK_MESSAGE(seen == expect, poly);

    const AlgReal b = AlgReal::beta(m.pl.f);
    // Integer bases meet the inequality too, but there every gap is 1.
    if (b.is_rational()) CHECK(d.sorted().back() == AlgReal::one(m.pl.f));
    else if (b * b < AlgReal(m.pl.f, Rational(b.floor())) * (b + Rational(1)))
      CHECK(d.sorted().back() > AlgReal::one(m.pl.f));
  }
}

TEST_CASE("property: S sets partition the line") {
  for (const char* poly : {fx::kGolden, fx::kGm2, fx::kComplex}) {
    Minus m(poly);
    const MinusBetaMap map(m.pl.f);
    const AlgReal lo = m.el("-b^3"), hi = m.el("b^3");
    const auto zs = z_points(m.fp, m.pl.p, lo - Rational(2), hi + Rational(2));
    fx::Gen gen(3);
    for (int i = 0; i < 100; ++i) {
      const AlgReal y(m.pl.f, Rational(gen.integer(-800, 800), 211));
      // Unique tile of the z_k grid holding y.
      std::size_t hits = 0;
      AlgReal x = AlgReal::zero(m.pl.f);
      for (std::size_t j = 0; j + 1 < zs.size(); ++j) {
        const auto& [k, z] = zs[j];
        if (y == z) {
          ++hits;
          x = m.pl.p.points[m.fp.at(2 * k) / 2];
        } else if (z < y && y < zs[j + 1].second) {
          ++hits;
          x = m.pl.p.points[m.fp.at(2 * k + 1) / 2] + (y - z);
        }
      }
      REQUIRE(hits == 1);
      CHECK(x == anchor(map, y));
    }
  }
}

TEST_CASE("property: beta side") {
  const NumberField g = fx::field(fx::kGolden);
  const AntiMorphism fib = build_beta_substitution(orbit(g, OrbitKind::beta_left_limit));
  const AlgReal b = AlgReal::beta(g);
  const auto z = enumerate_beta(fib, 200).points;
  for (unsigned n = 1; n <= 6; ++n) CHECK(z[fib.apply({0}, n).size()] == b.pow(n));

  const AlgReal top = z[99];
  std::size_t depth = 1;
  while (!(top < b.pow(static_cast<long>(depth)))) ++depth;
  const auto greedy = oracle_beta(g, top, depth);
  CHECK(std::vector<AlgReal>(z.begin(), z.begin() + 100) == greedy);

  std::set<std::string> diffs;
  for (std::size_t i = 0; i + 1 < z.size(); ++i) diffs.insert((z[i + 1] - z[i]).to_string());
  CHECK(diffs == std::set<std::string>{"1", "b-1"});

  for (const char* poly : {fx::kGm2, fx::kComplex, fx::kThree}) {
    const NumberField f = fx::field(poly);
    const AntiMorphism phi = build_beta_substitution(orbit(f, OrbitKind::beta_left_limit));
    const auto zz = enumerate_beta(phi, 60).points;
    std::set<std::string> allowed;
    for (const AlgReal& v : *phi.values) allowed.insert(v.to_string());
    for (std::size_t i = 0; i + 1 < zz.size(); ++i) CHECK(allowed.count((zz[i + 1] - zz[i]).to_string()) == 1);
    for (const AlgReal& v : zz) CHECK(member_beta(f, v));
  }
}
