#include "cremona/pgl2k.hpp"

#include "cremona/error.hpp"

namespace cremona {

ProjMatK::ProjMatK(const Poly& alpha, const Poly& beta, const Poly& gamma, const Poly& delta)
    : alpha_(alpha), beta_(beta), gamma_(gamma), delta_(delta) {
  if (det().is_zero()) throw Error(ErrorCode::InvalidArgument, "singular matrix in PGL2(Q(y))");
  Poly g = gcd(gcd(alpha_, beta_), gcd(gamma_, delta_));
  if (g.degree() > 0) {
    alpha_ = exact_div(alpha_, g);
    beta_ = exact_div(beta_, g);
    gamma_ = exact_div(gamma_, g);
    delta_ = exact_div(delta_, g);
  }
  Rational scale = 1 / joint_content({&alpha_, &beta_, &gamma_, &delta_});
  for (const Poly* p : {&alpha_, &beta_, &gamma_, &delta_})
    if (!p->is_zero()) {
      if (sgn(p->leading()) < 0) scale = -scale;
      break;
    }
  alpha_ *= scale;
  beta_ *= scale;
  gamma_ *= scale;
  delta_ *= scale;
}

ProjMatK ProjMatK::from_ratfuncs(const RatFunc& alpha, const RatFunc& beta, const RatFunc& gamma,
                                 const RatFunc& delta) {
  Poly l = alpha.den();
  for (const RatFunc* r : {&beta, &gamma, &delta}) l = exact_div(l * r->den(), gcd(l, r->den()));
  auto lift = [&](const RatFunc& r) { return r.num() * exact_div(l, r.den()); };
  return {lift(alpha), lift(beta), lift(gamma), lift(delta)};
}

bool ProjMatK::is_identity() const { return beta_.is_zero() && gamma_.is_zero() && alpha_ == delta_; }

ProjMatK ProjMatK::inverse() const { return {delta_, -beta_, -gamma_, alpha_}; }

ProjMatK ProjMatK::substitute(const Moebius& m) const {
  const int D = std::max({alpha_.degree(), beta_.degree(), gamma_.degree(), delta_.degree(), 0});
  Poly num(std::vector<Rational>{m.b(), m.a()});
  Poly den(std::vector<Rational>{m.d(), m.c()});
  auto sub = [&](const Poly& p) { return p.homogeneous_substitute(num, den, D); };
  return {sub(alpha_), sub(beta_), sub(gamma_), sub(delta_)};
}

ProjMatK operator*(const ProjMatK& x, const ProjMatK& y) {
  return {x.alpha_ * y.alpha_ + x.beta_ * y.gamma_, x.alpha_ * y.beta_ + x.beta_ * y.delta_,
          x.gamma_ * y.alpha_ + x.delta_ * y.gamma_, x.gamma_ * y.beta_ + x.delta_ * y.delta_};
}

std::string ProjMatK::to_string() const {
  return "[[" + alpha_.to_string() + ", " + beta_.to_string() + "], [" + gamma_.to_string() + ", " +
         delta_.to_string() + "]]";
}

RatFunc baum_bott(const ProjMatK& a) {
  Poly t = a.trace();
  return RatFunc::normalize(t * t, a.det());
}

bool is_algebraic(const ProjMatK& a) { return baum_bott(a).is_constant(); }

std::string_view to_string(CanonicalForm::Kind k) {
  switch (k) {
    case CanonicalForm::Kind::Identity: return "Identity";
    case CanonicalForm::Kind::Diagonal: return "Diagonal";
    case CanonicalForm::Kind::Unipotent: return "Unipotent";
    case CanonicalForm::Kind::AntiDiagonal: return "AntiDiagonal";
  }
  return "?";
}

namespace {

// Eigenvector matrix when the eigenvalues lie in Q(y); columns for (tr + s)/2
// and (tr - s)/2 where s^2 = tr^2 - 4 det.
std::optional<ProjMatK> diagonalizer(const ProjMatK& a) {
  if (a.beta().is_zero() && a.gamma().is_zero()) return ProjMatK::identity();
  const Poly t = a.trace();
  const Poly disc = t * t - Rational(4) * a.det();
  auto root = square_root_up_to_constant(RatFunc(disc));
  if (!root) return std::nullopt;
  Rational r;
  if (!rational_sqrt(root->c, r)) return std::nullopt;
  // disc is a polynomial, so its square root is too.
  const Poly s = root->h.num() * r;
  const Poly lp = (t + s) * Rational(1, 2), lm = (t - s) * Rational(1, 2);
  auto eigvec = [&](const Poly& lambda, Poly& x, Poly& y) {
    if (!a.beta().is_zero()) {
      x = a.beta();
      y = lambda - a.alpha();
    } else {
      x = lambda - a.delta();
      y = a.gamma();
    }
  };
  Poly x1, y1, x2, y2;
  eigvec(lp, x1, y1);
  eigvec(lm, x2, y2);
  return ProjMatK(x1, x2, y1, y2);
}

ProjMatK diagonal_representative(const ProjMatK& a, const ProjMatK& q) {
  return q.inverse() * a * q;
}

}  // namespace

CanonicalForm classify_algebraic(const ProjMatK& a) {
  const RatFunc bb = baum_bott(a);
  if (!bb.is_constant()) throw Error(ErrorCode::NotAlgebraic, "Baum-Bott index " + bb.to_string() + " is not constant");
  CanonicalForm out;
  if (a.is_identity()) {
    out.kind = CanonicalForm::Kind::Identity;
    out.representative = ProjMatK::identity();
    out.conjugator = ProjMatK::identity();
    return out;
  }
  const Rational b = bb.constant_value();
  out.bb = b;
  if (sgn(b) == 0) {
    // Companion form (0, -det; 1, 0) via a cyclic vector u: columns u, A u.
    const Poly f = -a.det();
    if (is_square_in_Cy(RatFunc(f))) {
      out.kind = CanonicalForm::Kind::Diagonal;
      out.representative = ProjMatK(-1, 0, 0, 1);
      if (auto q = diagonalizer(a)) out.conjugator = *q;
      return out;
    }
    std::optional<ProjMatK> p;
    const std::pair<Rational, Rational> candidates[] = {{1, 0}, {0, 1}, {1, 1}};
    for (const auto& [u1, u2] : candidates) {
      Poly au1 = a.alpha() * u1 + a.beta() * u2;
      Poly au2 = a.gamma() * u1 + a.delta() * u2;
      Poly d = Poly(u1) * au2 - Poly(u2) * au1;
      if (!d.is_zero()) {
        p = ProjMatK(Poly(u1), au1, Poly(u2), au2);
        break;
      }
    }
    Configuration fc = odd_support(RatFunc(f));
    out.kind = CanonicalForm::Kind::AntiDiagonal;
    out.f_canonical = fc;
    const Poly fcan = fc.representative().num();
    out.representative = ProjMatK(0, fcan, 1, 0);
    auto root = square_root_up_to_constant(RatFunc::normalize(f, fcan));
    Rational r;
    if (p && root && rational_sqrt(root->c, r)) {
      // diag(s, 1) with s^2 = f / fcan rescales (0, f; 1, 0) to (0, fcan; 1, 0).
      const RatFunc s = root->h * RatFunc(r);
      out.conjugator = *p * ProjMatK(s.num(), 0, 0, s.den());
    }
    return out;
  }
  if (b == 4) {
    out.kind = CanonicalForm::Kind::Unipotent;
    out.representative = ProjMatK(1, 1, 0, 1);
    // N = A - (tr/2) I is nilpotent; columns N v, v, then diag(1, tr/2).
    const Poly half = a.trace() * Rational(1, 2);
    const Poly n11 = a.alpha() - half, n12 = a.beta(), n21 = a.gamma(), n22 = a.delta() - half;
    Poly v1 = 1, v2 = 0;
    if (n11.is_zero() && n21.is_zero()) {
      v1 = 0;
      v2 = 1;
    }
    const Poly nv1 = n11 * v1 + n12 * v2, nv2 = n21 * v1 + n22 * v2;
    out.conjugator = ProjMatK(nv1, v1, nv2, v2) * ProjMatK(1, 0, 0, half);
    return out;
  }
  out.kind = CanonicalForm::Kind::Diagonal;
  // a + 1/a = bb - 2; rational iff bb (bb - 4) is a rational square.
  Rational r;
  if (rational_sqrt(b * (b - 4), r)) {
    const Rational ratio = (b - 2 + r) / 2;
    out.representative = ProjMatK(ratio, 0, 0, 1);
  }
  if (auto q = diagonalizer(a)) {
    out.conjugator = *q;
    out.representative = diagonal_representative(a, *q);
  }
  return out;
}

Configuration recover_torus(const ProjMatK& a) {
  const Poly t = a.trace();
  const Poly disc = t * t - Rational(4) * a.det();
  if (disc.is_zero() || is_square_in_Cy(RatFunc(disc)))
    throw Error(ErrorCode::NotInAnisotropicTorus,
                "discriminant " + disc.to_string() + " is a square: A lies in a split or unipotent group");
  return odd_support(RatFunc(disc));
}

std::optional<std::pair<RatFunc, RatFunc>> membership_in_torus(const ProjMatK& a, const RatFunc& f) {
  if (f.is_zero() || is_square_in_Cy(f)) throw Error(ErrorCode::SquareF, "T_f needs f nonsquare in C(y)");
  if (!(a.alpha() == a.delta())) return std::nullopt;
  if (a.gamma().is_zero()) {
    if (!a.beta().is_zero()) return std::nullopt;
    return std::make_pair(RatFunc(1), RatFunc(0));
  }
  if (!(RatFunc(a.beta()) == RatFunc(a.gamma()) * f)) return std::nullopt;
  return std::make_pair(RatFunc::normalize(a.alpha(), a.gamma()), RatFunc(1));
}

}  // namespace cremona
