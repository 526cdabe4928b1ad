#include "support.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <stdexcept>

#include "cremona/bn.hpp"
#include "cremona/expr.hpp"
#include "cremona/quadfield.hpp"
#include "cremona_cli/commands.hpp"

namespace cremona::testing {

std::filesystem::path golden_dir() { return CREMONA_GOLDEN_DIR; }

Json load_json(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw std::runtime_error("cannot open " + p.string());
  return Json::parse(in);
}

std::vector<GoldenCase> golden_cases() {
  std::vector<GoldenCase> out;
  for (const auto& c : load_json(golden_dir() / "cli_cases.json"))
    out.push_back({c.at("name").get<std::string>(), c.at("command").get<std::string>(),
                   c.at("args").get<std::vector<std::string>>()});
  return out;
}

std::filesystem::path golden_path(const GoldenCase& c) { return golden_dir() / "cli" / (c.name + ".json"); }

Json golden_report(const GoldenCase& c) { return cli::run_safe(c.command, c.args).to_json(); }

namespace {

using Checker = std::function<void(const std::string&, RoundTripStats&)>;

template <class Parse, class Print>
Checker checker(Parse parse, Print print) {
  return [parse, print](const std::string& s, RoundTripStats& st) {
    ++st.checked;
    try {
      auto v = parse(s);
      const std::string printed = print(v);
      if (!(parse(printed) == v)) st.failures.push_back(s + " -> " + printed);
      if (printed == s) ++st.canonical;
      else st.non_canonical.push_back(s + " -> " + printed);
    } catch (const std::exception& e) {
      st.failures.push_back(s + ": " + e.what());
    }
  };
}

struct Extended {
  bool infinite = false;
  Rational value;
  friend bool operator==(const Extended& a, const Extended& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
};

Extended parse_extended(const std::string& s) {
  if (s == "inf") return {true, 0};
  return {false, parse_rational_expr(s)};
}

std::string print_extended(const Extended& e) { return e.infinite ? "inf" : to_string(e.value); }

int triangular_arity(const std::string& s) {
  int depth = 0, commas = 0;
  for (char ch : s) {
    if (ch == '(' || ch == '[') ++depth;
    else if (ch == ')' || ch == ']') --depth;
    else if (ch == ',' && depth == 1) ++commas;
  }
  return commas + 1;
}

const Checker& lookup(const std::string& key, const std::string& command, const Json& report,
                      const std::string& value, bool& found) {
  static const Checker config = checker([](const std::string& s) { return parse_configuration(s); },
                                        [](const Configuration& c) { return c.to_string(); });
  static const Checker ratfunc = checker([](const std::string& s) { return parse_ratfunc(s); },
                                         [](const RatFunc& f) { return f.to_string(); });
  static const Checker projmat = checker([](const std::string& s) { return parse_projmat(s); },
                                         [](const ProjMatK& m) { return m.to_string(); });
  static const Checker moebius = checker([](const std::string& s) { return parse_moebius(s); },
                                         [](const Moebius& m) { return m.to_string(); });
  static const Checker jonq = checker([](const std::string& s) { return parse_jonq(s); },
                                      [](const JonqElem& j) { return j.to_string(); });
  static const Checker plane = checker([](const std::string& s) { return parse_plane_map(s); },
                                       [](const PlaneMap& p) { return p.to_string(); });
  static const Checker extended = checker(parse_extended, print_extended);
  static const Checker triangular = checker(
      [](const std::string& s) { return parse_triangular(s, triangular_arity(s)); },
      [](const TriangularElem& t) { return t.to_string(); });
  static std::map<std::string, Checker> quad;
  static const Checker none;

  found = true;
  const bool qf = command.rfind("qf-", 0) == 0 || command.rfind("quadfield-", 0) == 0;
  if (qf && (key == "generator" || key == "powers" || key == "element" || key == "hilbert90")) {
    const std::string f = report.at("args").at(0).get<std::string>();
    auto it = quad.find(f);
    if (it == quad.end()) {
      const Integer fz(f);
      it = quad.emplace(f, checker([fz](const std::string& s) { return parse_quad(s, fz); },
                                   [](const QuadElem& q) { return q.to_string(); }))
               .first;
    }
    return it->second;
  }
  if (command.rfind("bn-", 0) == 0 && (key == "lhs" || key == "rhs" || key == "final" || key == "element"))
    return triangular;
  if (key == "odd_support" || key == "f_canonical" || key == "configuration" || key == "c1" || key == "c2")
    return config;
  if (key == "f" || key == "g" || key == "h" || key == "bb") return ratfunc;
  if (key == "matrix" || key == "representative" || key == "B" || key == "t") return projmat;
  if (key == "conjugator") return value.rfind("jonq(", 0) == 0 ? jonq : projmat;
  if (key == "mu" || key == "elements" || key == "base_stabilizer" || key == "witness") return moebius;
  if (key == "result") return jonq;
  if (key == "plane_map") return plane;
  if (key == "c" || key == "y0" || key == "j" || key == "norm" || key == "rational_points") return extended;
  found = false;
  return none;
}

void walk(const Json& node, const std::string& key, const std::string& command, const Json& report,
          RoundTripStats& st) {
  if (node.is_object()) {
    for (const auto& [k, v] : node.items()) walk(v, k, command, report, st);
  } else if (node.is_array()) {
    for (const auto& v : node) walk(v, key, command, report, st);
  } else if (node.is_string()) {
    bool found = false;
    const std::string s = node.get<std::string>();
    const Checker& c = lookup(key, command, report, s, found);
    if (found) c(s, st);
  }
}

}  // namespace

void roundtrip_report(const Json& report, RoundTripStats& stats) {
  if (report.value("verdict", "") == "Error") return;
  walk(report.at("result"), "", report.at("command").get<std::string>(), report, stats);
}

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Rational random_rational(Rng& rng, int bound, bool nonzero) {
  for (;;) {
    Rational q(uniform(rng, -bound, bound), uniform(rng, 1, 4));
    q.canonicalize();
    if (!nonzero || sgn(q) != 0) return q;
  }
}

Poly random_poly(Rng& rng, int degree, int bound) {
  std::vector<Rational> c;
  for (int i = 0; i <= degree; ++i) c.push_back(uniform(rng, -bound, bound));
  while (sgn(c.back()) == 0) c.back() = uniform(rng, -bound, bound);
  return Poly(c);
}

RatFunc random_ratfunc(Rng& rng, int max_degree, bool nonzero) {
  for (;;) {
    Poly num = random_poly(rng, uniform(rng, 0, max_degree));
    Poly den = random_poly(rng, uniform(rng, 0, max_degree)).monic();
    RatFunc f = RatFunc::normalize(num, den);
    if (!nonzero || !f.is_zero()) return f;
  }
}

Moebius random_moebius(Rng& rng, int bound) {
  for (;;) {
    Rational a = uniform(rng, -bound, bound), b = uniform(rng, -bound, bound);
    Rational c = uniform(rng, -bound, bound), d = uniform(rng, -bound, bound);
    if (a * d - b * c != 0) return Moebius(a, b, c, d);
  }
}

Poly random_squarefree(Rng& rng, int degree, int bound) {
  for (;;) {
    Poly p = random_poly(rng, degree, bound);
    if (gcd(p, p.derivative()).is_constant()) return p;
  }
}

RatFunc random_nonsquare(Rng& rng) {
  for (;;) {
    RatFunc f = random_ratfunc(rng, 4);
    if (!is_square_in_Cy(f)) return f;
  }
}

}  // namespace cremona::testing
