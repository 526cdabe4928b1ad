// Values computed independently with sympy (tests/oracle/oracle.py).
#include <doctest.h>

#include "cremona/bn.hpp"
#include "cremona/expr.hpp"
#include "cremona/jonq.hpp"
#include "cremona/moebius.hpp"
#include "cremona/quadfield.hpp"
#include "support.hpp"

using namespace cremona;
using cremona::testing::Json;

namespace {
const Json& oracle() {
  static const Json j = cremona::testing::load_json(cremona::testing::golden_dir() / "oracle_values.json");
  return j;
}

std::string config_text(const Json& points) {
  std::string s = "{";
  for (std::size_t i = 0; i < points.size(); ++i) s += (i ? ", " : "") + points[i].get<std::string>();
  return s + "}";
}

TriangularElem triangular(const Json& comps) {
  std::string s = "(";
  for (std::size_t i = 0; i < comps.size(); ++i) s += (i ? ", " : "") + comps[i].get<std::string>();
  return parse_triangular(s + ")", static_cast<int>(comps.size()));
}
}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("odd supports and genera") {
  for (const auto& r : oracle()["odd_support"]) {
    CAPTURE(r["f"].get<std::string>());
    const RatFunc f = parse_ratfunc(r["f"].get<std::string>());
    const Configuration c = odd_support(f);
    CHECK(c.finite_part() == parse_poly(r["finite"].get<std::string>()));
    CHECK(c.at_infinity() == r["inf"].get<bool>());
    CHECK(c.size() == r["size"].get<int>());
    if (r["genus"].is_null()) CHECK(is_square_in_Cy(f));
    else CHECK(genus(f) == r["genus"].get<int>());
  }
}

TEST_CASE("j-invariants") {
  for (const auto& r : oracle()["j_rational"]) {
    const Configuration c = parse_configuration(config_text(r["points"]));
    CHECK(quartic_j_invariant(c).to_string() == r["j"].get<std::string>());
  }
  for (const auto& r : oracle()["j_forms"]) {
    const Configuration c(parse_poly(r["finite"].get<std::string>()), r["inf"].get<bool>());
    CHECK(quartic_j_invariant(c).to_string() == r["j"].get<std::string>());
  }
}

TEST_CASE("stabilizer orders") {
  for (const auto& r : oracle()["stabilizer_order"])
    CHECK(stabilizer(parse_configuration(config_text(r["points"]))).size() == r["order"].get<std::size_t>());
}

TEST_CASE("degree sequences") {
  const Json& d = oracle()["degseq"];
  auto seq = [](const char* text, const Json& expected) {
    CHECK(degree_sequence(parse_jonq(text), static_cast<int>(expected.size())) ==
          expected.get<std::vector<int>>());
  };
  seq("(y/x, y)", d["iota_y"]);
  seq("((x + y)/(x + 1), y)", d["Ty_1_1"]);
  seq("(x, 2*y)", d["x_2y"]);
  seq("((x + y)/(x + 1), y + 1)", d["twist_base"]);
}

TEST_CASE("worked cocycle example") {
  const Json& e = oracle()["cocycle_example"];
  CHECK(e["identity_holds"].get<bool>());
  const std::string b = "[[" + e["B"][0][0].get<std::string>() + ", " + e["B"][0][1].get<std::string>() + "], [" +
                        e["B"][1][0].get<std::string>() + ", " + e["B"][1][1].get<std::string>() + "]]";
  CHECK(parse_projmat(b) == parse_projmat("[[1+y, y], [0, 1-y]]"));
}

TEST_CASE("triangular commutators") {
  const Json& b = oracle()["bn"];
  CHECK(derived_witness(1).final_element() == triangular(b["witness_n1"]));
  CHECK(derived_witness(2).final_element() == triangular(b["witness_n2"]));
  const TriangularElem d = dilatation(2, 1, xvar(2));
  CHECK(commutator(d, elementary(2, 1, 1)) == triangular(b["de_x2_1"]));
  CHECK(commutator(d, elementary(2, 2, 1)) == triangular(b["dd_x2_1"]));
  const TriangularElem e21 = commutator(dilatation(2, 2, 2), elementary(2, 2, 1));
  const TriangularElem d1 = commutator(dilatation(2, 1, xvar(2)), elementary(2, 2, 1));
  CHECK(commutator(d1, e21) == triangular(b["n2_levels"]["d1_level2"]));
}

TEST_CASE("quadratic torsion") {
  const Json& q = oracle()["quadfield"];
  for (const char* f : {"-1", "-3", "2", "5"}) {
    const Json& r = q[f];
    const QuadElem g(r["generator"][0].get<int>(), r["generator"][1].get<int>(), Integer(f));
    CHECK(torsion_order(g) == r["order"].get<int>());
    CHECK(torsion_group(Integer(f)).order == r["order"].get<int>());
  }
  CHECK(q["1+sqrt2_rational_power_below_7"].get<bool>() == torsion_order(QuadElem(1, 1, 2)).has_value());
}

}  // TEST_SUITE
