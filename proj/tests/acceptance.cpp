// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "negabase/cli.hpp"
#include "support.hpp"

using namespace negabase;

namespace {

struct Check {
  std::string detail;
  bool ok = true;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::string names(const std::vector<AlgReal>& v) {
  std::string s;
  for (const AlgReal& a : v) s += (s.empty() ? "" : " ") + a.to_string();
  return s;
}

std::set<std::string> name_set(const std::vector<AlgReal>& v) {
  std::set<std::string> s;
  for (const AlgReal& a : v) s.insert(a.to_string());
  return s;
}

using Table = std::map<std::string, std::string>;

Table table_of(const AntiMorphism& m) {
  Table t;
  for (std::size_t a = 0; a < m.size(); ++a) t[m.names[a]] = m.word_name(m.images[a]);
  return t;
}

struct Minus {
  fx::Pipeline pl;
  ReturnWordSystem rws;
  TwoSidedWord fp;
  DerivedWord dw;
  explicit Minus(const char* poly)
      : pl(poly), rws(return_words(pl.psi, pl.p)), fp(fixed_point(pl.psi, pl.p, 64)), dw(fp, rws) {}
  AlgReal el(const char* e) const { return fx::el(pl.f, e); }
  IntegerEnumeration enumerate(const AlgReal& lo, const AlgReal& hi) { return enumerate_minus(dw, rws, lo, hi); }
};

bool near(const AlgReal& a, const char* dec, const char* tol) {
  const RationalInterval r = a.approximate(60);
  const Rational target = parse_rational(dec), t = parse_rational(tol);
  return r.lo > target - t && r.hi < target + t;
}

// ---- criteria ----------------------------------------------------------------

void golden(Check& c) {
  Minus m(fx::kGolden);
  c.require(names(m.pl.orbit.values) == names({m.el("-1/b"), m.el("0")}), "orbit");
  c.require(table_of(m.pl.psi) == Table{{"t0", "0"}, {"hat_t0", "hat_0 t0 hat_t0"}, {"0", "0"}, {"hat_0", "hat_t0"}},
            "psi table");
  c.require(m.rws.class_count() == 2 && m.rws.derived.table() == "A -> AB, B -> A", "phi_{-b}");
  c.require(name_set(distances(m.rws).values) == name_set({m.el("1"), m.el("b-1")}), "distances");
  c.require(m.dw.left_names(13) == "AABAABABAABAB", "left derived word");
  c.require(m.dw.right_names(21) == "AABAABABAABAABABAABAB", "right derived word");
}

void gm2(Check& c) {
  Minus m(fx::kGm2);
  const OrbitData& o = m.pl.orbit;
  c.require(o.finite() && o.period == 2u && o.values.size() == 2, "orbit period");
  c.require(o.values.size() > 1 && o.values[1] == m.el("-b^-1/(b+1)"), "t1");
  c.require(m.rws.derived.table() == "A -> AB, B -> ABB", "phi_{-b} after identification");
  c.require(name_set(distances(m.rws).values) == name_set({m.el("1"), m.el("b-1")}), "distances");
  c.require(fx::joined(m.enumerate(m.el("-b"), m.el("b^2")).gap_labels) == "ABABBAB", "labels on [-b, b^2]");
}

void complex3(Check& c) {
  const fx::Pipeline pl(fx::kComplex);
  c.require(table_of(pl.hat) == Table{{"hat_t0", "hat_t2 hat_t0"},
                                      {"hat_t1", "hat_t0 hat_t1 hat_t3 hat_0"},
                                      {"hat_t3", "hat_0 hat_t2"},
                                      {"hat_0", "hat_t3"},
                                      {"hat_t2", "hat_t0 hat_t1"}},
            "hat psi table");
  const ReturnWordSystem h = hat_return_words(pl.hat, pl.p);
  c.require(h.class_count() == 5, "five hat return words");
  c.require(h.derived.table() == "A -> AB, B -> AC, C -> AD, D -> AED, E -> ABD", "hat phi");
  std::vector<AlgReal> expect;
  for (const char* e : {"1", "b-1", "b^2-b-1", "b^2-b", "b"}) expect.push_back(fx::el(pl.f, e));
  const DistanceSet d = distances(h);
  c.require(names(d.values) == names(expect), "distances");
  c.require(name_set(distances(return_words(pl.psi, pl.p)).values) == name_set(expect), "distances via R");
  c.require(near(d.values[3], "2.659", "0.001"), "L(D) decimal");
  c.require(d.values[3] > AlgReal(pl.f, Rational(2)), "L(D) > 2");
}

void complex6(Check& c) {
  const fx::Pipeline pl(fx::kComplex2);
  const OrbitData& o = pl.orbit;
  const AlgReal target = fx::el(pl.f, "-1/(b+1)");
  c.require(o.values.size() == 6 && o.values[5] == target && step_minus_beta(o.values[5]) == target, "t5 = t6");
  const ReturnWordSystem h = hat_return_words(pl.hat, pl.p);
  c.require(h.class_count() == 6, "six hat return words");
  c.require(h.derived.table() == "A -> AAB, B -> AACAB, C -> AADAB, D -> AAE, E -> AACAF, F -> AACABACAB",
            "hat phi");
  const std::vector<const char*> l{"1", "1.695", "1.569", "1.104", "2.081", "3.12"};
  for (std::size_t i = 0; i < l.size() && i < h.class_count(); ++i)
    c.require(near(h.length(i), l[i], "0.001"), std::string("L value ") + class_name(i));
}

void oracle_equivalence(Check& c) {
  for (const char* poly : fx::yrrap_fixtures()) {
    Minus m(poly);
    const AlgReal lo = m.el("-b^3"), hi = m.el("b^4");
    const auto pts = m.enumerate(lo, hi).points;
    c.require(pts == oracle_minus(m.pl.f, lo, hi, oracle_depth(m.pl.f, lo, hi)), std::string("mismatch ") + poly);
    const AlgReal b = AlgReal::beta(m.pl.f);
    if (b.is_rational()) {
      const long n = b.floor().get_si();
      std::vector<AlgReal> z;
      for (long k = -n * n * n; k <= n * n * n * n; ++k) z.push_back(AlgReal(m.pl.f, Rational(k)));
      c.require(pts == z, std::string("integers ") + poly);
    }
  }
}

void small_bases(Check& c) {
  for (const char* poly : {fx::kPlastic, fx::kThreeHalves}) {
    const NumberField f = fx::field(poly);
    c.require(names(zminus_small(f).points) == "0", std::string("zminus_small ") + poly);
    const auto z = oracle_minus(f, AlgReal(f, Rational(-10)), AlgReal(f, Rational(10)), 10);
    c.require(names(z) == "0", std::string("oracle ") + poly);
  }
}

void closed_form(Check& c) {
  for (const char* poly : fx::yrrap_fixtures()) {
    const NumberField f = fx::field(poly);
    const AlgReal lo = fx::el(f, "-b"), hi = AlgReal::one(f), b = AlgReal::beta(f);
    c.require(closed_form_window(f).points == oracle_minus(f, lo, hi, oracle_depth(f, lo, hi)),
              std::string("window ") + poly);
    c.require(closed_form_full_branch(f) == (b * b >= AlgReal(f, Rational(b.floor())) * (b + Rational(1))),
              std::string("branch ") + poly);
  }
}

void properties(Check& c) {
  const int n = 1000;
  {
    const NumberField f = fx::field(fx::kComplex);
    fx::Gen gen(1);
    for (int i = 0; i < n; ++i) {
      const AlgReal a = gen.element(f), b = gen.element(f), d = gen.element(f);
      c.require((a + b) + d == a + (b + d) && a * (b + d) == a * b + a * d && (a * b) * d == a * (b * d),
                "field axioms");
      if (!a.is_zero()) c.require(a * a.inverse() == AlgReal::one(f), "inverse");
      const Integer k = a.floor();
      c.require(AlgReal(f, Rational(k)) <= a && a < AlgReal(f, Rational(k + 1)), "floor contract");
    }
  }
  for (const char* poly : fx::yrrap_fixtures()) {
    const std::string tag = std::string(" ") + poly;
    Minus m(poly);
    const MinusBetaMap map(m.pl.f);
    const AlgReal beta = map.beta();
    fx::Gen gen(2);
    for (int i = 0; i < n; ++i) {
      const AlgReal x = gen.domain_point(map);
      c.require(map.in_domain(map.step(x)), "domain closure" + tag);
      if (map.in_open_domain(x)) c.require(map.step(-(x / beta)) == x, "T(-x/b) = x" + tag);
      const Word u = gen.word(m.pl.psi.size(), 10), v = gen.word(m.pl.psi.size(), 10);
      c.require(m.pl.psi.length_of(m.pl.psi.apply(u)) == beta * m.pl.psi.length_of(u), "measure expansion" + tag);
      Word uv = u, vu;
      uv.insert(uv.end(), v.begin(), v.end());
      vu = m.pl.psi.apply(v);
      const Word pu = m.pl.psi.apply(u);
      vu.insert(vu.end(), pu.begin(), pu.end());
      c.require(m.pl.psi.apply(uv) == vu, "anti-morphism law" + tag);
      const AlgReal lo(m.pl.f, Rational(-gen.integer(0, 5))), hi(m.pl.f, Rational(gen.integer(0, 5)));
      const auto big = name_set(m.enumerate(-beta * hi, -beta * lo).points);
      for (const AlgReal& z : m.enumerate(lo, hi).points)
        c.require(big.count((-beta * z).to_string()) == 1, "self-similarity" + tag);
    }
    for (std::size_t i = 0; i < m.pl.p.size(); ++i)
      c.require(m.pl.psi.length_of(m.pl.psi.image(gap_symbol(i))) == beta * m.pl.p.gap_lengths[i],
                "L(psi(hat x))" + tag);

    const long radius = 10000;
    TwoSidedWord fp = fixed_point(m.pl.psi, m.pl.p, radius + 2);
    const Symbol zero = point_symbol(m.pl.p.zero_index), zhat = gap_symbol(m.pl.p.zero_index),
                 that = gap_symbol(m.pl.p.t_index);
    const bool even_case = !m.pl.p.zero_in_V || m.pl.p.orbit_size % 2 == 0;
    const bool odd_case = !m.pl.p.zero_in_V || m.pl.p.orbit_size % 2 == 1;
    bool parity = true, hat = true;
    for (long k = -radius; k <= radius; ++k) {
      parity = parity && is_gap_symbol(fp.at(k)) == (k % 2 != 0);
      if (k % 2 != 0 || k == -radius || k == radius) continue;
      const bool z = fp.at(k) == zero, before = fp.at(k - 1) == that, after = fp.at(k + 1) == zhat;
      hat = hat && z == (before || after) && (!even_case || z == before) && (!odd_case || z == after);
    }
    c.require(parity, "parity typing" + tag);
    c.require(hat, "hat equivalences" + tag);
  }
  for (const char* poly : {fx::kGolden, fx::kGm2, fx::kComplex}) {
    Minus m(poly);
    const MinusBetaMap map(m.pl.f);
    const auto zs = z_points(m.fp, m.pl.p, m.el("-b^3"), m.el("b^3"));
    fx::Gen gen(3);
    for (int i = 0; i < 100; ++i) {
      const AlgReal y(m.pl.f, Rational(gen.integer(-800, 800), 211));
      AlgReal s = y;
      std::size_t steps = 0;
      for (; !map.in_open_domain(s); ++steps) s = -(s / map.beta());
      for (std::size_t k = 0; k < steps; ++k) s = map.step(s);
      std::size_t hits = 0;
      AlgReal x = s;
      for (std::size_t j = 0; j + 1 < zs.size(); ++j) {
        const auto& [k, z] = zs[j];
        if (y == z) ++hits, x = m.pl.p.points[m.fp.at(2 * k) / 2];
        else if (z < y && y < zs[j + 1].second) ++hits, x = m.pl.p.points[m.fp.at(2 * k + 1) / 2] + (y - z);
      }
      c.require(hits == 1 && x == s, std::string("S-set partition ") + poly);
    }
  }
}

void beta_side(Check& c) {
  const NumberField g = fx::field(fx::kGolden);
  const AntiMorphism phi = build_beta_substitution(orbit(g, OrbitKind::beta_left_limit));
  c.require(!phi.reversing && phi.size() == 2 && phi.image(0) == Word{0, 1} && phi.image(1) == Word{0},
            "Fibonacci substitution");
  const AlgReal b = AlgReal::beta(g);
  const auto z = enumerate_beta(phi, 200).points;
  for (unsigned n = 1; n <= 6; ++n) c.require(z[phi.apply({0}, n).size()] == b.pow(n), "z at |phi^n(1)|");
  std::size_t depth = 1;
  while (!(z[99] < b.pow(static_cast<long>(depth)))) ++depth;
  c.require(oracle_beta(g, z[99], depth) == std::vector<AlgReal>(z.begin(), z.begin() + 100), "greedy oracle");
  std::vector<AlgReal> diffs;
  for (std::size_t i = 0; i + 1 < z.size(); ++i) diffs.push_back(z[i + 1] - z[i]);
  c.require(name_set(diffs) == name_set({AlgReal::one(g), b - Rational(1)}), "Delta_b");
}

void determinism(Check& c) {
  for (const char* poly : fx::yrrap_fixtures()) {
    std::string runs[2];
    for (auto& r : runs) {
      std::ostringstream out, err;
      cli::RunConfig cfg;
      cfg.polynomial = poly;
      c.require(cli::run(cfg, out, err) == cli::kExitOk, std::string("analyze failed ") + poly);
      r = out.str();
    }
    c.require(runs[0] == runs[1] && !runs[0].empty(), std::string("output differs ") + poly);
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"golden ratio", golden},
      {"(3+sqrt5)/2", gm2},
      {"b^3 = 2b^2+1", complex3},
      {"sextic fixture", complex6},
      {"oracle equivalence", oracle_equivalence},
      {"small-base collapse", small_bases},
      {"closed-form window", closed_form},
      {"property suites", properties},
      {"beta side", beta_side},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    std::cout << (c.ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first;
    if (!c.ok) std::cout << " (" << c.detail << ")";
    std::cout << "\n";
    failed += c.ok ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
