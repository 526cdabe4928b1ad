#include <doctest.h>

#include "cremona/expr.hpp"
#include "cremona/moebius.hpp"
#include "support.hpp"

using namespace cremona;
using cremona::testing::Rng;
using cremona::testing::throws_code;

namespace {
Configuration cfg(const char* s) { return parse_configuration(s); }
ProjPoint pt(long v) { return ProjPoint::finite(v); }
}  // namespace

TEST_SUITE("moebius") {

TEST_CASE("class normalization") {
  CHECK(Moebius(2, 0, 0, 2) == Moebius::identity());
  CHECK(Moebius(-1, 0, 0, 1) == Moebius(1, 0, 0, -1));
  CHECK(Moebius(Rational(1, 2), 1, 0, 3) == Moebius(1, 2, 0, 6));
  CHECK(Moebius(0, -2, 4, 0).to_string() == "(0, 1, -2, 0)");
  CHECK(throws_code([] { Moebius(1, 2, 2, 4); }, ErrorCode::InvalidArgument));
}

TEST_CASE("action on P1") {
  const Moebius m(1, 0, 1, -1);  // y / (y - 1)
  CHECK(m.apply(pt(1)) == ProjPoint::infinity());
  CHECK(m.apply(ProjPoint::infinity()) == pt(1));
  CHECK(m.apply(pt(2)) == pt(2));
  CHECK((m * m).is_identity());
  const Moebius s = Moebius::scaling(3) * Moebius::translation(1);
  CHECK(s.apply(pt(1)) == pt(6));
}

TEST_CASE("from triples") {
  const Moebius m = from_triples(pt(0), pt(1), ProjPoint::infinity(), pt(2), pt(3), pt(5));
  CHECK(m.apply(pt(0)) == pt(2));
  CHECK(m.apply(pt(1)) == pt(3));
  CHECK(m.apply(ProjPoint::infinity()) == pt(5));
  CHECK(throws_code([] { from_triples(pt(0), pt(0), pt(1), pt(1), pt(2), pt(3)); }, ErrorCode::DegenerateTriple));
}

TEST_CASE("configuration images") {
  const Moebius inv(0, 1, 1, 0);
  CHECK(transform_configuration(inv, cfg("{inf, roots(y^3 - 1)}")) == cfg("{0, roots(y^3 - 1)}"));
  CHECK(transform_configuration(Moebius::translation(1), cfg("{0, roots(y^2 - 2)}")) ==
        cfg("{1, roots(y^2 - 2*y - 1)}"));
}

TEST_CASE("stabilizers") {
  CHECK(stabilizer(cfg("{0, 1, inf}")).size() == 6);
  CHECK(stabilizer(cfg("{0, 1, inf, -1}")).size() == 8);
  CHECK(stabilizer(cfg("{0, 1, inf, 3}")).size() == 4);
  CHECK(throws_code([] { stabilizer(cfg("{0, inf}")); }, ErrorCode::TooSmallConfiguration));
  CHECK(throws_code([] { stabilizer(cfg("{0, inf, roots(y^2+1)}")); }, ErrorCode::IrrationalPoints));
  for (const auto& m : stabilizer(cfg("{0, 1, 2, 3, inf}")))
    CHECK(transform_configuration(m, cfg("{0, 1, 2, 3, inf}")) == cfg("{0, 1, 2, 3, inf}"));
}

TEST_CASE("j-invariant") {
  CHECK(quartic_j_invariant(cfg("{0, 1, inf, -1}")).to_string() == "1728");
  CHECK(quartic_j_invariant(cfg("{inf, roots(y^3 - 1)}")).to_string() == "0");
  CHECK(quartic_j_invariant(cfg("{0, 1, 2, 3}")).value == Rational(35152, 9));
  CHECK(throws_code([] { quartic_j_invariant(cfg("{0, 1, inf}")); }, ErrorCode::WrongSize));
}

TEST_CASE("j-invariant is PGL2 invariant") {
  Rng rng(cremona::testing::kSeed + 2);
  for (int i = 0; i < 20; ++i) {
    const Configuration c(cremona::testing::random_squarefree(rng, 4), false);
    const Moebius m = cremona::testing::random_moebius(rng);
    CHECK(quartic_j_invariant(transform_configuration(m, c)) == quartic_j_invariant(c));
  }
}

TEST_CASE("equivalence decisions") {
  auto d = configurations_equivalent(cfg("{0, 1}"), cfg("{0, 1, 2}"));
  CHECK(d.verdict == Verdict::No);
  CHECK(d.certificate == "size: 2 != 3");
  d = configurations_equivalent(cfg("{0, 1, inf, -1}"), cfg("{0, 1, 2, 3}"));
  CHECK(d.verdict == Verdict::No);
  CHECK(d.certificate.rfind("j-invariant", 0) == 0);
  d = configurations_equivalent(cfg("{0, 1, inf, 2}"), cfg("{0, 1, inf, -1}"));
  CHECK(d.verdict == Verdict::Yes);
  REQUIRE(d.witness);
  CHECK(transform_configuration(*d.witness, cfg("{0, 1, inf, 2}")) == cfg("{0, 1, inf, -1}"));
  // rational witness between irrational sets, recovered numerically then verified
  d = configurations_equivalent(cfg("{inf, roots(y^3 - 1)}"), cfg("{0, roots(y^3 - 1)}"));
  CHECK(d.verdict == Verdict::Yes);
  REQUIRE(d.witness);
  CHECK(transform_configuration(*d.witness, cfg("{inf, roots(y^3 - 1)}")) == cfg("{0, roots(y^3 - 1)}"));
  // five rational points, not equivalent
  d = configurations_equivalent(cfg("{0, 1, 2, 3, inf}"), cfg("{0, 1, 2, 5, inf}"));
  CHECK(d.verdict == Verdict::No);
  // genus 2, irrational, no rational map: Unknown rather than a guess
  d = configurations_equivalent(cfg("{inf, roots(y^5 - y + 1)}"), cfg("{inf, roots(y^5 - y + 2)}"));
  CHECK(d.verdict == Verdict::Unknown);
  CHECK_FALSE(d.reason.empty());
}

TEST_CASE("equivalence finds random rational witnesses") {
  Rng rng(cremona::testing::kSeed + 3);
  for (int i = 0; i < 15; ++i) {
    const Configuration c(cremona::testing::random_squarefree(rng, cremona::testing::uniform(rng, 3, 6)),
                          cremona::testing::uniform(rng, 0, 1) == 1);
    const Moebius m = cremona::testing::random_moebius(rng);
    const Configuration image = transform_configuration(m, c);
    const auto d = configurations_equivalent(c, image);
    CHECK(d.verdict == Verdict::Yes);
    REQUIRE(d.witness);
    CHECK(transform_configuration(*d.witness, c) == image);
  }
}

}  // TEST_SUITE
