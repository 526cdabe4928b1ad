#include "cremona/jonq.hpp"

#include <algorithm>

#include "cremona/error.hpp"

namespace cremona {

namespace {

// X is the most significant variable in the lex order, so it prints first.
constexpr int kX = 2, kY = 1, kZ = 0;

// Z^D p(Y/Z) for a polynomial in y.
MPoly homogenize(const Poly& p, int D) {
  MPoly out;
  for (int k = 0; k <= p.degree(); ++k) {
    if (sgn(p.coeff(k)) == 0) continue;
    Monomial m{static_cast<unsigned>(D - k), static_cast<unsigned>(k)};
    out += MPoly::monomial(p.coeff(k), m);
  }
  return out;
}

}  // namespace

std::string JonqElem::to_string() const {
  return "jonq(A = " + fiber_.to_string() + ", m = " + base_.to_string() + ")";
}

JonqElem compose(const JonqElem& j1, const JonqElem& j2) {
  return {j1.fiber().substitute(j2.base()) * j2.fiber(), j1.base() * j2.base()};
}

JonqElem inverse(const JonqElem& j) {
  const Moebius minv = j.base().inverse();
  return {j.fiber().inverse().substitute(minv), minv};
}

JonqElem power(const JonqElem& j, unsigned k) {
  JonqElem result, base = j;
  while (k) {
    if (k & 1u) result = compose(result, base);
    k >>= 1u;
    if (k) base = compose(base, base);
  }
  return result;
}

Moebius base_action(const JonqElem& j) { return j.base(); }

int PlaneMap::degree() const { return std::max({f1.total_degree(), f2.total_degree(), f3.total_degree()}); }

std::string PlaneMap::to_string() const {
  const std::vector<std::string> names{"Z", "Y", "X"};
  return "[" + f1.to_string(names) + " : " + f2.to_string(names) + " : " + f3.to_string(names) + "]";
}

PlaneMap to_plane_map(const JonqElem& j) {
  const ProjMatK& a = j.fiber();
  const int D = std::max({a.alpha().degree(), a.beta().degree(), a.gamma().degree(), a.delta().degree(), 0});
  const MPoly X = MPoly::variable(kX), Y = MPoly::variable(kY), Z = MPoly::variable(kZ);
  const MPoly nx = homogenize(a.alpha(), D) * X + homogenize(a.beta(), D) * Z;
  const MPoly dx = homogenize(a.gamma(), D) * X + homogenize(a.delta(), D) * Z;
  const Moebius& m = j.base();
  const MPoly ny = m.a() * Y + m.b() * Z;
  const MPoly dy = m.c() * Y + m.d() * Z;
  PlaneMap out{nx * dy, ny * dx, dx * dy};
  const MPoly g = gcd(gcd(out.f1, out.f2), out.f3);
  out.f1 = *exact_div(out.f1, g);
  out.f2 = *exact_div(out.f2, g);
  out.f3 = *exact_div(out.f3, g);
  for (const MPoly* f : {&out.f1, &out.f2, &out.f3})
    if (!f->is_zero()) {
      const Rational s = 1 / f->leading_coefficient();
      out.f1 *= s;
      out.f2 *= s;
      out.f3 *= s;
      break;
    }
  return out;
}

int cremona_degree(const JonqElem& j) { return to_plane_map(j).degree(); }

std::vector<int> degree_sequence(const JonqElem& j, int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "degree sequence needs n >= 1");
  std::vector<int> out;
  JonqElem p = j;
  for (int k = 1; k <= n; ++k) {
    out.push_back(cremona_degree(p));
    if (k < n) p = compose(p, j);
  }
  return out;
}

std::string_view to_string(TwistStatus s) {
  switch (s) {
    case TwistStatus::Algebraic: return "Algebraic";
    case TwistStatus::Twist: return "Twist";
    case TwistStatus::Unknown: return "Unknown";
  }
  return "Unknown";
}

TwistReport twist_status(const JonqElem& j, int bound) {
  TwistReport out;
  const ProjMatK& a = j.fiber();
  if (j.base().is_identity()) {
    const bool alg = is_algebraic(a);
    out.status = alg ? TwistStatus::Algebraic : TwistStatus::Twist;
    out.basis = std::string("trivial base; Baum-Bott index ") + baum_bott(a).to_string() +
                (alg ? " is constant" : " is not constant");
    return out;
  }
  if (a.is_identity()) {
    out.status = TwistStatus::Algebraic;
    out.basis = "fiber part is the identity: a Moebius map of the base";
    return out;
  }
  if (a.alpha().degree() <= 0 && a.beta().degree() <= 0 && a.gamma().degree() <= 0 && a.delta().degree() <= 0) {
    out.status = TwistStatus::Algebraic;
    out.basis = "constant fiber: element of PGL2 x PGL2";
    return out;
  }
  JonqElem p = j;
  int best = 0, since_new_max = 0;
  bool growth = true;
  for (int k = 1; k <= bound; ++k) {
    if (p.is_identity()) {
      out.status = TwistStatus::Algebraic;
      out.basis = "finite order " + std::to_string(k);
      return out;
    }
    const int d = cremona_degree(p);
    out.degrees.push_back(d);
    if (d > best) {
      best = d;
      since_new_max = 0;
    } else if (++since_new_max >= 2) {
      growth = false;
    }
    p = compose(p, j);
  }
  out.exact = false;
  if (growth && out.degrees.size() >= 2 && out.degrees.back() > out.degrees.front()) {
    out.status = TwistStatus::Twist;
    out.basis = "heuristic: a new degree maximum at least every second iterate through " + std::to_string(bound);
  } else {
    out.status = TwistStatus::Unknown;
    out.basis = "degree sequence through " + std::to_string(bound) + " is not conclusive";
  }
  return out;
}

}  // namespace cremona
