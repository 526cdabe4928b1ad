#include <doctest.h>

#include "cremona/expr.hpp"
#include "cremona/torus.hpp"
#include "support.hpp"

using namespace cremona;
using cremona::testing::Rng;
using cremona::testing::throws_code;

namespace {
RatFunc rf(const char* s) { return parse_ratfunc(s); }

void check_conjugator(const RatFunc& f, const RatFunc& g, const ConjWitness& w) {
  const auto phi = w.conjugator();
  if (!phi) return;
  for (int b = 1; b <= 3; ++b) {
    const JonqElem e(ProjMatK::from_ratfuncs(b - 2, b * f, b, b - 2), Moebius::identity());
    const JonqElem image = compose(compose(*phi, e), inverse(*phi));
    CHECK(image.base().is_identity());
    CHECK(membership_in_torus(image.fiber(), g).has_value());
  }
}
}  // namespace

TEST_SUITE("torus") {

TEST_CASE("construction") {
  CHECK(Torus(rf("4*y")) == Torus(rf("y")));
  CHECK(Torus(rf("y*(y-1)^2")) == Torus(rf("y")));
  CHECK(Torus(rf("y^3-1")).genus() == 1);
  CHECK(Torus(rf("y^3-1")).to_string() == "T_{y^3 - 1}");
  CHECK(throws_code([] { Torus(rf("(y+1)^2")); }, ErrorCode::SquareInput));
  const Torus t(rf("y"));
  CHECK(throws_code([&t] { element(t, 0, 0); }, ErrorCode::BothZero));
  CHECK(involution(t) == parse_jonq("(y/x, y)"));
  CHECK(involution(t).fiber() == element(t, 0, 1));
}

TEST_CASE("only id and the involution are algebraic") {
  Rng rng(cremona::testing::kSeed + 30);
  const Torus t(rf("y^3-1"));
  for (int i = 0; i < 20; ++i) {
    const RatFunc a = cremona::testing::random_ratfunc(rng, 2), b = cremona::testing::random_ratfunc(rng, 2);
    CHECK_FALSE(is_algebraic(element(t, a, b)));
    CHECK(is_algebraic(element(t, a, 0)));
    CHECK(is_algebraic(element(t, 0, b)));
  }
}

TEST_CASE("conjugacy of tori") {
  auto d = conjugate_tori(rf("y"), rf("y*(y-1)"));
  CHECK(d.verdict == Verdict::Yes);
  REQUIRE(d.witness);
  CHECK(verify_witness(rf("y"), rf("y*(y-1)"), *d.witness));
  check_conjugator(rf("y"), rf("y*(y-1)"), *d.witness);

  d = conjugate_tori(Torus(rf("y")), Torus(rf("y^3-1")));
  CHECK(d.verdict == Verdict::No);
  CHECK(d.certificate == "genus: 0 != 1");

  d = conjugate_tori(rf("y^3-1"), rf("y-y^4"));
  CHECK(d.verdict == Verdict::Yes);
  REQUIRE(d.witness);
  CHECK(verify_witness(rf("y^3-1"), rf("y-y^4"), *d.witness));

  d = conjugate_tori(Torus(rf("y^3-y")), Torus(rf("y^3-1")));
  CHECK(d.verdict == Verdict::No);

  d = conjugate_tori(Torus(rf("y^5-y+1")), Torus(rf("y^5-y+2")));
  CHECK(d.verdict == Verdict::Unknown);
}

TEST_CASE("conjugation moves T_f to T_{(lambda^2 f) o mu^-1}") {
  Rng rng(cremona::testing::kSeed + 31);
  for (int i = 0; i < 10; ++i) {
    const RatFunc f = cremona::testing::random_nonsquare(rng);
    const RatFunc lambda = cremona::testing::random_ratfunc(rng, 2);
    const Moebius mu = cremona::testing::random_moebius(rng, 3);
    const RatFunc g = compose_moebius(scale_square(f, lambda), mu.inverse());
    const JonqElem phi(ProjMatK::from_ratfuncs(lambda, 0, 0, 1), mu);
    const RatFunc a = cremona::testing::random_ratfunc(rng, 2), b = cremona::testing::random_ratfunc(rng, 2);
    const JonqElem e(ProjMatK::from_ratfuncs(a, b * f, b, a), Moebius::identity());
    const JonqElem image = compose(compose(phi, e), inverse(phi));
    CHECK(image.base().is_identity());
    CHECK(membership_in_torus(image.fiber(), g).has_value());
  }
}

TEST_CASE("Borel classification") {
  auto b = classify_borel(AffineLineSeed{});
  CHECK(b.kind == BorelClass::Kind::FullB2);
  CHECK(b.derived_length == 4);
  CHECK(b.rank == 2);
  b = classify_borel(Torus(rf("y^2+1")));
  CHECK(b.kind == BorelClass::Kind::RankOne);
  CHECK(b.model == "T_y x| T_{1,2}");
  CHECK(b.derived_length == 2);
  CHECK(b.rank == 1);
  b = classify_borel(Torus(rf("y*(y-1)")));
  REQUIRE(b.witness_to_Ty);
  CHECK(verify_witness(rf("y*(y-1)"), rf("y"), *b.witness_to_Ty));
  b = classify_borel(Torus(rf("y^5-y+1")));
  CHECK(b.kind == BorelClass::Kind::RankZero);
  CHECK(b.model == "T_f");
  CHECK(b.derived_length == 1);
  CHECK(b.rank == 0);
  CHECK(b.genus == 2);
}

TEST_CASE("normalizers") {
  const Torus t(rf("y^3-1"));
  CHECK(in_normalizer_pgl2k(parse_projmat("[[1, 0], [0, -1]]"), t));
  CHECK(in_normalizer_pgl2k(element(t, rf("y"), 1), t));
  CHECK_FALSE(in_normalizer_pgl2k(parse_projmat("[[1, 1], [0, 1]]"), t));
  auto n = normalizer_jonq_neutral(t);
  CHECK(n.is_torus_itself);
  CHECK(n.group == "T_f");
  n = normalizer_jonq_neutral(Torus(rf("y")));
  CHECK_FALSE(n.is_torus_itself);
  CHECK(n.group == "T_y x| T_{1,2}");
  n = normalizer_jonq_neutral(Torus(rf("y^3-y")));
  REQUIRE(n.base_stabilizer);
  CHECK(n.base_stabilizer->size() == 8);
}

TEST_CASE("equivalence modulo squares") {
  CHECK(equivalent_mod_squares(rf("y"), rf("4*y^3/(y+1)^2")));
  CHECK(equivalent_mod_squares(rf("y"), rf("-y")));
  CHECK_FALSE(equivalent_mod_squares(rf("y"), rf("y-1")));
  CHECK(throws_code([] { equivalent_mod_squares(RatFunc(), rf("y")); }, ErrorCode::ZeroInput));
}

}  // TEST_SUITE
