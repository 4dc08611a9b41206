#include "negabase/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "negabase/expression.hpp"

namespace negabase::cli {

using json = nlohmann::ordered_json;

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::cap_exceeded:
    case ErrorCode::not_finite:
      return kExitCap;
    case ErrorCode::degenerate:
      return kExitFailure;
    default:
      return kExitInput;
  }
}

namespace {

std::pair<std::string, std::string> split_pair(const std::string& text, const char* what) {
  int nest = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++nest;
    else if (text[i] == ')') --nest;
    else if (text[i] == ',' && nest == 0) return {text.substr(0, i), text.substr(i + 1)};
  }
  throw Error(ErrorCode::invalid_input, std::string(what) + " must be two comma-separated values: \"" + text + "\"");
}

std::size_t positive(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used == text.size() && v > 0) return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::invalid_input, std::string(what) + " must be a positive integer, got \"" + text + "\"");
}

const std::map<std::string, Command> kCommands{
    {"analyze", Command::analyze},     {"orbit", Command::orbit},       {"morphism", Command::morphism},
    {"integers", Command::integers},   {"distances", Command::distances}, {"expand", Command::expand},
    {"render", Command::render}};

// ---- JSON pieces -------------------------------------------------------------

json exact(const AlgReal& a, int precision) {
  json coeffs = json::array();
  for (const Rational& c : a.coeffs()) coeffs.push_back(c.get_str());
  return json{{"exact", a.to_string()}, {"coeffs", coeffs}, {"decimal", a.to_decimal(precision)}};
}

json base_json(const NumberField& f, int precision) {
  json coeffs = json::array();
  for (const Integer& c : f.minpoly()) coeffs.push_back(c.get_str());
  const RationalInterval iv = f.isolating_interval();
  return json{{"minpoly", Polynomial::from_integers(f.minpoly()).to_string('x')},
              {"coefficients", coeffs},
              {"degree", f.degree()},
              {"interval", {iv.lo.get_str(), iv.hi.get_str()}},
              {"beta", exact(AlgReal::beta(f), precision)},
              {"at_least_golden", at_least_golden(f)}};
}

json orbit_json(const OrbitData& o, int precision) {
  json values = json::array();
  const char* prefix = o.kind == OrbitKind::minus_beta ? "t" : "d";
  for (std::size_t i = 0; i < o.values.size(); ++i) {
    json v = exact(o.values[i], precision);
    v["name"] = prefix + std::to_string(i);
    values.push_back(std::move(v));
  }
  json out{{"kind", o.kind == OrbitKind::minus_beta ? "minus_beta" : "beta_left_limit"},
           {"status", o.finite() ? "finite" : "cap_exceeded"},
           {"size", o.values.size()}};
  if (o.finite()) {
    out["preperiod"] = o.preperiod;
    out["period"] = *o.period;
  }
  out["values"] = std::move(values);
  return out;
}

json partition_json(const PartitionData& p, int precision) {
  json pts = json::array();
  for (std::size_t i = 0; i < p.size(); ++i) {
    pts.push_back(json{{"name", p.point_name(i)},
                       {"value", exact(p.points[i], precision)},
                       {"gap", p.letter_name({LetterKind::gap, i})},
                       {"right_end", exact(p.right_ends[i], precision)},
                       {"gap_length", exact(p.gap_lengths[i], precision)}});
  }
  return json{{"t", p.point_name(p.t_index)},
              {"zero_in_V", p.zero_in_V},
              {"orbit_size", p.orbit_size},
              {"points", std::move(pts)}};
}

json word_json(const AntiMorphism& m, const Word& w) {
  json out = json::array();
  for (Symbol a : w) out.push_back(m.names.at(a));
  return out;
}

json morphism_json(const AntiMorphism& m, int precision) {
  json alphabet = json::array();
  json images = json::object();
  for (std::size_t a = 0; a < m.size(); ++a) {
    json letter{{"name", m.names[a]}};
    if (m.values) letter["value"] = exact((*m.values)[a], precision);
    if (m.lengths) letter["length"] = exact((*m.lengths)[a], precision);
    alphabet.push_back(std::move(letter));
    images[m.names[a]] = word_json(m, m.images[a]);
  }
  return json{{"reversing", m.reversing}, {"alphabet", std::move(alphabet)}, {"images", std::move(images)},
              {"table", m.table(" ")}};
}

json rws_json(const ReturnWordSystem& r, const AntiMorphism& letters, int precision) {
  json words = json::array();
  for (std::size_t i = 0; i < r.words.size(); ++i)
    words.push_back(json{{"class", class_name(r.class_of[i])}, {"letters", word_json(letters, r.words[i])}});
  json classes = json::array();
  json phi = json::object();
  for (std::size_t c = 0; c < r.class_count(); ++c) {
    json members = json::array();
    for (std::size_t i = 0; i < r.words.size(); ++i)
      if (r.class_of[i] == c) members.push_back(i);
    classes.push_back(json{{"name", r.derived.names[c]}, {"members", members}, {"length", exact(r.length(c), precision)}});
    phi[r.derived.names[c]] = r.derived.word_name(r.derived.images[c], "");
  }
  return json{{"marker", letters.names.at(r.marker)},
              {"marker_position", r.marker_first ? "first" : "last"},
              {"words", std::move(words)},
              {"classes", std::move(classes)},
              {"phi", std::move(phi)},
              {"table", r.derived.table()},
              {"identification_consistent", r.identification_consistent},
              {"diagnostics", r.diagnostics},
              {"letters_processed", r.letters_processed}};
}

json enumeration_json(const IntegerEnumeration& e, int precision) {
  json pts = json::array();
  for (const AlgReal& p : e.points) pts.push_back(exact(p, precision));
  return json{{"side", e.side == Side::minus_beta ? "minus_beta" : "beta"},
              {"window", {exact(e.lo, precision), exact(e.hi, precision)}},
              {"count", e.points.size()},
              {"points", std::move(pts)},
              {"gap_labels", e.gap_labels}};
}

// ---- pipeline ----------------------------------------------------------------

/// Lazily built objects shared by the commands.
struct Session {
  const RunConfig& cfg;
  NumberField field;
  std::optional<OrbitData> minus_orbit;
  std::optional<PartitionData> partition;
  std::optional<AntiMorphism> psi;
  std::optional<AntiMorphism> hat_psi;
  std::unique_ptr<TwoSidedWord> fp;
  std::optional<ReturnWordSystem> rws;
  std::optional<ReturnWordSystem> hat_rws;
  std::unique_ptr<DerivedWord> derived;

  static NumberField make_field(const RunConfig& c) {
    std::optional<RationalInterval> iv;
    if (c.interval) iv = RationalInterval{parse_rational(c.interval->first), parse_rational(c.interval->second)};
    return NumberField::create(parse_polynomial(c.polynomial), iv);
  }
  explicit Session(const RunConfig& c) : cfg(c), field(make_field(c)) {}

  const OrbitData& orbit() {
    if (!minus_orbit) minus_orbit = negabase::orbit(field, OrbitKind::minus_beta, cfg.orbit_cap);
    return *minus_orbit;
  }
  const PartitionData& part() {
    if (!partition) partition = build_partition(orbit());
    return *partition;
  }
  const AntiMorphism& psi_map() {
    if (!psi) psi = build_psi(part());
    return *psi;
  }
  const AntiMorphism& hat_map() {
    if (!hat_psi) hat_psi = build_hat_psi(psi_map(), part());
    return *hat_psi;
  }
  const ReturnWordSystem& returns() {
    if (!rws) rws = return_words(psi_map(), part(), cfg.word_cap);
    return *rws;
  }
  const ReturnWordSystem& hat_returns() {
    if (!hat_rws) hat_rws = hat_return_words(hat_map(), part(), cfg.word_cap);
    return *hat_rws;
  }
  DerivedWord& derived_word() {
    if (!derived) {
      fp = std::make_unique<TwoSidedWord>(fixed_point(psi_map(), part(), 1));
      derived = std::make_unique<DerivedWord>(*fp, returns());
    }
    return *derived;
  }
  std::pair<AlgReal, AlgReal> window() {
    AlgReal lo = parse_element(field, cfg.window.first);
    AlgReal hi = parse_element(field, cfg.window.second);
    if (hi < lo) throw Error(ErrorCode::invalid_input, "window is reversed");
    return {lo, hi};
  }
  IntegerEnumeration minus_integers() {
    auto [lo, hi] = window();
    if (!at_least_golden(field)) {
      IntegerEnumeration e = zminus_small(field);
      if (lo.sign() > 0 || hi.sign() < 0) e.points.clear();
      e.lo = lo;
      e.hi = hi;
      return e;
    }
    return enumerate_minus(derived_word(), returns(), lo, hi);
  }
  OrbitData beta_orbit() { return negabase::orbit(field, OrbitKind::beta_left_limit, cfg.orbit_cap); }
  AntiMorphism beta_substitution() { return build_beta_substitution(beta_orbit()); }
};

json analyze(Session& s) {
  const int prec = s.cfg.precision;
  json out{{"command", "analyze"}, {"base", base_json(s.field, prec)}};
  const OrbitData& o = s.orbit();
  out["orbit"] = orbit_json(o, prec);
  out["yrrap"] = o.finite() ? "yes" : "undetermined";
  const bool golden = at_least_golden(s.field);
  if (o.finite()) {
    out["partition"] = partition_json(s.part(), prec);
    out["psi"] = morphism_json(s.psi_map(), prec);
    out["hat_psi"] = morphism_json(s.hat_map(), prec);
    if (golden) {
      out["w_beta"] = word_json(s.psi_map(), w_beta(s.part()));
      out["return_words"] = rws_json(s.returns(), s.psi_map(), prec);
      out["hat_return_words"] = rws_json(s.hat_returns(), s.hat_map(), prec);
      json d = json::array();
      const DistanceSet ds = distances(s.returns());
      for (std::size_t i = 0; i < ds.values.size(); ++i) {
        json v = exact(ds.values[i], prec);
        v["label"] = ds.labels[i];
        d.push_back(std::move(v));
      }
      out["distances"] = std::move(d);
    }
  }
  if (golden) {
    json cf = enumeration_json(closed_form_window(s.field), prec);
    cf["branch"] = closed_form_full_branch(s.field) ? "b^2 >= floor(b)(b+1)" : "b^2 < floor(b)(b+1)";
    out["closed_form_window"] = std::move(cf);
  } else {
    out["integers"] = json{{"points", {exact(AlgReal::zero(s.field), prec)}},
                           {"note", "beta is below the golden ratio, so Z_{-b} = {0}"}};
  }
  return out;
}

json distances_json(Session& s) {
  const int prec = s.cfg.precision;
  json d = json::array();
  if (s.cfg.side == Side::beta) {
    const OrbitData o = s.beta_orbit();
    if (!o.finite()) throw Error(ErrorCode::not_finite, "orbit of 1^- is not finite (Parry status undetermined)");
    for (const AlgReal& v : o.values) d.push_back(exact(v, prec));
    return json{{"command", "distances"}, {"side", "beta"}, {"values", std::move(d)}};
  }
  const DistanceSet ds = distances(s.returns());
  for (std::size_t i = 0; i < ds.values.size(); ++i) {
    json v = exact(ds.values[i], prec);
    v["label"] = ds.labels[i];
    d.push_back(std::move(v));
  }
  return json{{"command", "distances"}, {"side", "minus_beta"}, {"values", std::move(d)}};
}

json build_report(Session& s) {
  const RunConfig& c = s.cfg;
  const int prec = c.precision;
  switch (c.command) {
    case Command::analyze:
      return analyze(s);
    case Command::orbit: {
      const OrbitData o = c.side == Side::beta ? s.beta_orbit() : s.orbit();
      return json{{"command", "orbit"}, {"base", base_json(s.field, prec)}, {"orbit", orbit_json(o, prec)}};
    }
    case Command::morphism: {
      json out{{"command", "morphism"}, {"base", base_json(s.field, prec)}};
      if (c.side == Side::beta) {
        out["phi_beta"] = morphism_json(s.beta_substitution(), prec);
      } else {
        out["psi"] = morphism_json(s.psi_map(), prec);
        out["hat_psi"] = morphism_json(s.hat_map(), prec);
      }
      return out;
    }
    case Command::integers: {
      const IntegerEnumeration e =
          c.side == Side::beta ? enumerate_beta(s.beta_substitution(), c.count) : s.minus_integers();
      return json{{"command", "integers"}, {"integers", enumeration_json(e, prec)}};
    }
    case Command::distances:
      return distances_json(s);
    case Command::expand: {
      if (!c.point) throw Error(ErrorCode::invalid_input, "expand needs --point");
      const AlgReal x = parse_element(s.field, *c.point);
      const MinusBetaMap map(s.field);
      const std::vector<long> digits = map.expand_digits(x, c.digits);
      AlgReal rest = x;
      for (std::size_t k = 0; k < c.digits; ++k) rest = map.step(rest);
      return json{{"command", "expand"}, {"point", exact(x, prec)}, {"digits", digits}, {"remainder", exact(rest, prec)}};
    }
    case Command::render:
      break;
  }
  throw std::logic_error("render has no JSON report");
}

void print_text(const json& r, std::ostream& out) {
  const std::string cmd = r.at("command");
  if (r.contains("base"))
    out << "base: " << r["base"]["minpoly"].get<std::string>() << ", beta ~ "
        << r["base"]["beta"]["decimal"].get<std::string>() << "\n";
  auto values = [&out](const json& list, const std::string& label_key) {
    for (const json& v : list) {
      out << "  ";
      if (v.contains(label_key)) out << v[label_key].get<std::string>() << " = ";
      out << v["exact"].get<std::string>() << " ~ " << v["decimal"].get<std::string>() << "\n";
    }
  };
  if (r.contains("orbit")) {
    const json& o = r["orbit"];
    out << "orbit (" << o["kind"].get<std::string>() << "): " << o["status"].get<std::string>();
    if (o.contains("period")) out << ", preperiod " << o["preperiod"] << ", period " << o["period"];
    out << "\n";
    values(o["values"], "name");
  }
  if (r.contains("yrrap")) out << "yrrap: " << r["yrrap"].get<std::string>() << "\n";
  for (const char* key : {"psi", "hat_psi", "phi_beta"})
    if (r.contains(key)) out << key << ": " << r[key]["table"].get<std::string>() << "\n";
  for (const char* key : {"return_words", "hat_return_words"})
    if (r.contains(key)) {
      out << key << ": " << r[key]["table"].get<std::string>() << "\n";
      for (const json& d : r[key]["diagnostics"]) out << "  note: " << d.get<std::string>() << "\n";
    }
  if (r.contains("distances")) {
    out << "distances:\n";
    values(r["distances"], "label");
  }
  if (cmd == "distances") {
    out << "distances (" << r["side"].get<std::string>() << "):\n";
    values(r["values"], "label");
  }
  for (const char* key : {"closed_form_window", "integers"})
    if (r.contains(key)) {
      const json& e = r[key];
      out << key << ":";
      if (e.contains("count")) out << " " << e["count"] << " points";
      if (e.contains("note")) out << " " << e["note"].get<std::string>();
      out << "\n";
      values(e["points"], "");
      if (e.contains("gap_labels") && !e["gap_labels"].empty()) {
        bool wide = false;
        for (const json& l : e["gap_labels"]) wide = wide || l.get<std::string>().size() > 1;
        out << "  labels:";
        for (std::size_t i = 0; i < e["gap_labels"].size(); ++i)
          out << (wide || i == 0 ? " " : "") << e["gap_labels"][i].get<std::string>();
        out << "\n";
      }
    }
  if (cmd == "expand") {
    out << "digits:";
    for (const json& d : r["digits"]) out << " " << d.get<long>();
    out << "\nremainder: " << r["remainder"]["exact"].get<std::string>() << "\n";
  }
}

std::string fixed2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

}  // namespace

std::string render_text(const IntegerEnumeration& e, int precision) {
  std::string line = "|";
  for (std::size_t i = 0; i < e.gap_labels.size(); ++i) {
    const AlgReal d = (e.points[i + 1] - e.points[i]) * Rational(8);
    const std::size_t width = std::max<std::size_t>(3, static_cast<std::size_t>(d.floor().get_si()));
    const std::string& label = e.gap_labels[i];
    const std::size_t pad = width > label.size() ? width - label.size() : 0;
    line += std::string(pad / 2, '-') + label + std::string(pad - pad / 2, '-') + "|";
  }
  if (e.points.empty()) line = "";
  std::string out = line + "\n";
  for (std::size_t i = 0; i < e.points.size(); ++i) out += (i ? " " : "") + e.points[i].to_decimal(precision);
  return out + "\n";
}

std::string render_svg(const IntegerEnumeration& e, int precision) {
  const double scale = 60.0;
  const double margin = 40.0;
  const double first = e.points.empty() ? 0.0 : e.points.front().to_double();
  const double last = e.points.empty() ? 0.0 : e.points.back().to_double();
  const double width = 2 * margin + (last - first) * scale;
  std::ostringstream s;
  s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fixed2(width)
    << "\" height=\"80\" viewBox=\"0 0 " << fixed2(width) << " 80\">\n"
    << "<line x1=\"" << fixed2(margin) << "\" y1=\"40.00\" x2=\"" << fixed2(width - margin)
    << "\" y2=\"40.00\" stroke=\"black\" stroke-width=\"1\"/>\n";
  std::vector<double> xs;
  for (const AlgReal& p : e.points) xs.push_back(margin + (p.to_double() - first) * scale);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    s << "<line class=\"tick\" x1=\"" << fixed2(xs[i]) << "\" y1=\"34.00\" x2=\"" << fixed2(xs[i])
      << "\" y2=\"46.00\" stroke=\"black\" stroke-width=\"1\"/>\n"
      << "<text class=\"value\" x=\"" << fixed2(xs[i]) << "\" y=\"62.00\" font-size=\"9\" text-anchor=\"middle\">"
      << xml_escape(e.points[i].to_decimal(precision)) << "</text>\n";
  }
  for (std::size_t i = 0; i < e.gap_labels.size(); ++i) {
    s << "<text class=\"label\" x=\"" << fixed2((xs[i] + xs[i + 1]) / 2)
      << "\" y=\"30.00\" font-size=\"12\" text-anchor=\"middle\">" << xml_escape(e.gap_labels[i]) << "</text>\n";
  }
  s << "</svg>\n";
  return s.str();
}

std::optional<RunConfig> parse_spec(const std::vector<std::string>& args, std::ostream& out) {
  RunConfig cfg;
  if (const char* env = std::getenv("NEGABASE_ORBIT_CAP"); env && *env)
    cfg.orbit_cap = positive(env, "NEGABASE_ORBIT_CAP");

  CLI::App app{"Exact (-beta)-integers, return words and derived anti-morphisms", "negabase"};
  std::string command, interval, window, format, side, orbit_cap, word_cap;
  app.add_option("command", command, "analyze | orbit | morphism | integers | distances | expand | render")
      ->required();
  app.add_option("polynomial", cfg.polynomial, "minimal polynomial in x, e.g. \"x^2-x-1\"")->required();
  app.add_option("--interval", interval, "isolating interval \"lo,hi\" (rationals)");
  app.add_option("--window", window, "window \"lo,hi\" as expressions in b (default \"-b^3,b^4\")");
  app.add_option("--point", cfg.point, "point for expand, an expression in b");
  app.add_option("--digits", cfg.digits, "number of digits for expand");
  app.add_option("--count", cfg.count, "number of beta-integers for --side=beta");
  app.add_option("--orbit-cap", orbit_cap, "orbit cap (env NEGABASE_ORBIT_CAP)");
  app.add_option("--word-cap", word_cap, "letters allowed in the return-word closure");
  app.add_option("--precision", cfg.precision, "significant digits of decimals");
  app.add_option("--format", format, "json | text | svg");
  app.add_option("--side", side, "minus | beta");

  std::vector<std::string> storage{"negabase"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& a : storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw Error(ErrorCode::invalid_input, e.what());
  }

  const auto it = kCommands.find(command);
  if (it == kCommands.end()) throw Error(ErrorCode::invalid_input, "unknown command \"" + command + "\"");
  cfg.command = it->second;
  parse_polynomial(cfg.polynomial);
  if (!interval.empty()) {
    cfg.interval = split_pair(interval, "--interval");
    parse_rational(cfg.interval->first);
    parse_rational(cfg.interval->second);
  }
  if (!window.empty()) cfg.window = split_pair(window, "--window");
  if (!orbit_cap.empty()) cfg.orbit_cap = positive(orbit_cap, "--orbit-cap");
  if (!word_cap.empty()) cfg.word_cap = positive(word_cap, "--word-cap");
  if (cfg.precision < 1) throw Error(ErrorCode::invalid_input, "--precision must be positive");
  if (cfg.count == 0) throw Error(ErrorCode::invalid_input, "--count must be positive");

  if (format.empty()) cfg.format = cfg.command == Command::render ? Format::svg : Format::json;
  else if (format == "json") cfg.format = Format::json;
  else if (format == "text") cfg.format = Format::text;
  else if (format == "svg") cfg.format = Format::svg;
  else throw Error(ErrorCode::invalid_input, "unknown format \"" + format + "\"");
  if (cfg.format == Format::svg && cfg.command != Command::render)
    throw Error(ErrorCode::invalid_input, "svg output is only available for render");
  if (cfg.command == Command::render && cfg.format == Format::json)
    throw Error(ErrorCode::invalid_input, "render writes text or svg");

  if (side.empty() || side == "minus") cfg.side = Side::minus_beta;
  else if (side == "beta") cfg.side = Side::beta;
  else throw Error(ErrorCode::invalid_input, "unknown side \"" + side + "\"");
  return cfg;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    Session s(config);
    if (config.command == Command::render) {
      const IntegerEnumeration e = config.side == Side::beta ? enumerate_beta(s.beta_substitution(), config.count)
                                                             : s.minus_integers();
      out << (config.format == Format::svg ? render_svg(e, config.precision) : render_text(e, config.precision));
      return kExitOk;
    }
    const json report = build_report(s);
    if (config.format == Format::json) out << report.dump(2) << "\n";
    else print_text(report, out);
    if (config.command == Command::orbit && report["orbit"]["status"] == "cap_exceeded") return kExitCap;
    return kExitOk;
  } catch (const Error& e) {
    if (config.format == Format::json)
      out << json{{"error", {{"code", to_string(e.code())}, {"message", e.what()}}}}.dump(2) << "\n";
    else
      err << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitFailure;
  }
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::optional<RunConfig> cfg;
  try {
    cfg = parse_spec(args, out);
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return exit_code(e.code());
  }
  if (!cfg) return kExitOk;
  return run(*cfg, out, err);
}

}  // namespace negabase::cli
