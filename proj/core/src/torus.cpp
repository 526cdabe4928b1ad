#include "cremona/torus.hpp"

#include "cremona/error.hpp"

namespace cremona {

Torus::Torus(const RatFunc& f) : support_(odd_support(f)) {
  if (support_.empty()) throw Error(ErrorCode::SquareInput, "f is a square in C(y)");
  genus_ = (support_.size() - 2) / 2;
}

ProjMatK element(const Torus& t, const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::BothZero, "a and b are both zero");
  const RatFunc f = t.f();
  return ProjMatK::from_ratfuncs(a, b * f, b, a);
}

JonqElem involution(const Torus& t) { return {element(t, 0, 1), Moebius::identity()}; }

std::optional<JonqElem> ConjWitness::conjugator() const {
  Rational s;
  if (!rational_sqrt(c, s)) return std::nullopt;
  const RatFunc lambda = compose_moebius(h, mu) * RatFunc(s);
  return JonqElem(ProjMatK::from_ratfuncs(lambda, 0, 0, 1), mu);
}

bool verify_witness(const RatFunc& f, const RatFunc& g, const ConjWitness& w) {
  if (sgn(w.c) == 0 || w.h.is_zero()) return false;
  return g == RatFunc(w.c) * w.h * w.h * compose_moebius(f, w.mu.inverse());
}

TorusConjDecision conjugate_tori(const Torus& t1, const Torus& t2, const EquivOptions& opts) {
  TorusConjDecision out;
  if (t1.genus() != t2.genus()) {
    out.verdict = Verdict::No;
    out.certificate = "genus: " + std::to_string(t1.genus()) + " != " + std::to_string(t2.genus());
    return out;
  }
  const EquivDecision d = configurations_equivalent(t1.f_canonical(), t2.f_canonical(), opts);
  out.verdict = d.verdict;
  out.certificate = d.certificate;
  out.reason = d.reason;
  out.notes = d.notes;
  if (d.verdict != Verdict::Yes || !d.witness) return out;
  const RatFunc f = t1.f(), g = t2.f();
  const auto root = square_root_up_to_constant(g / compose_moebius(f, d.witness->inverse()));
  if (!root) throw Error(ErrorCode::InvalidArgument, "internal: witness does not map odd supports");
  out.witness = ConjWitness{*d.witness, root->h, root->c};
  return out;
}

TorusConjDecision conjugate_tori(const RatFunc& f, const RatFunc& g, const EquivOptions& opts) {
  TorusConjDecision out = conjugate_tori(Torus(f), Torus(g), opts);
  if (!out.witness) return out;
  // Same mu; h and c now relate the given functions rather than their representatives.
  const auto root = square_root_up_to_constant(g / compose_moebius(f, out.witness->mu.inverse()));
  if (!root) throw Error(ErrorCode::InvalidArgument, "internal: witness does not map odd supports");
  out.witness->h = root->h;
  out.witness->c = root->c;
  return out;
}

std::string_view to_string(BorelClass::Kind k) {
  switch (k) {
    case BorelClass::Kind::FullB2: return "FullB2";
    case BorelClass::Kind::RankOne: return "RankOne";
    case BorelClass::Kind::RankZero: return "RankZero";
  }
  return "";
}

BorelClass classify_borel(const BorelSeed& seed) {
  BorelClass out;
  if (std::holds_alternative<AffineLineSeed>(seed)) {
    out.kind = BorelClass::Kind::FullB2;
    out.model = "B_2 = Aff1(C(y)) x| Aff1";
    out.generators = "(a(y) x + b(y), c y + d), a in C(y)*, b in C(y), c in C*, d in C";
    out.derived_length = 4;
    out.rank = 2;
    return out;
  }
  const Torus& t = std::get<Torus>(seed);
  out.genus = t.genus();
  out.f_canonical = t.f_canonical();
  if (t.genus() == 0) {
    out.kind = BorelClass::Kind::RankOne;
    out.model = "T_y x| T_{1,2}";
    out.generators = "(a, b y; b, a) with (t x, t^2 y), t in C*";
    out.derived_length = 2;
    out.rank = 1;
    const TorusConjDecision d = conjugate_tori(t, Torus(RatFunc::y()));
    if (d.witness) out.witness_to_Ty = d.witness;
  } else {
    out.kind = BorelClass::Kind::RankZero;
    out.model = "T_f";
    out.generators = "(a, b f; b, a), f = " + t.f().to_string();
    out.derived_length = 1;
    out.rank = 0;
  }
  return out;
}

bool in_normalizer_pgl2k(const ProjMatK& m, const Torus& t) {
  const ProjMatK iota = element(t, 0, 1);
  return m * iota == iota * m;
}

NormalizerDescription normalizer_jonq_neutral(const Torus& t) {
  NormalizerDescription out;
  if (t.genus() == 0) {
    out.group = "T_y x| T_{1,2}";
    out.stabilizer_note = "genus 0: conjugate to T_y; the base stabilizer of {0, inf} is infinite";
    return out;
  }
  out.group = "T_f";
  out.is_torus_itself = true;
  if (t.f_canonical().all_rational()) {
    out.base_stabilizer = stabilizer(t.f_canonical());
  } else {
    out.stabilizer_note = "odd support has irrational points";
  }
  return out;
}

bool equivalent_mod_squares(const RatFunc& f, const RatFunc& g) {
  if (f.is_zero() || g.is_zero()) throw Error(ErrorCode::ZeroInput, "zero input");
  return odd_support(f / g).empty();
}

}  // namespace cremona
