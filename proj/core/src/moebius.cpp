#include "cremona/moebius.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <sstream>

#include "cremona/error.hpp"

namespace cremona {

namespace {

using Vec2 = std::array<Rational, 2>;

Vec2 homogeneous(const ProjPoint& p) {
  if (p.infinite) return {Rational(1), Rational(0)};
  return {p.value, Rational(1)};
}

// Matrix with columns s*p1, t*p2 where s*p1 + t*p2 = p3, so that
// (1:0) -> p1, (0:1) -> p2, (1:1) -> p3.
std::array<Rational, 4> frame(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3) {
  Vec2 u = homogeneous(p1), v = homogeneous(p2), w = homogeneous(p3);
  Rational det = u[0] * v[1] - v[0] * u[1];
  if (sgn(det) == 0) throw Error(ErrorCode::DegenerateTriple, "triple has repeated points");
  Rational s = (w[0] * v[1] - v[0] * w[1]) / det;
  Rational t = (u[0] * w[1] - w[0] * u[1]) / det;
  if (sgn(s) == 0 || sgn(t) == 0) throw Error(ErrorCode::DegenerateTriple, "triple has repeated points");
  return {s * u[0], t * v[0], s * u[1], t * v[1]};
}

}  // namespace

Moebius::Moebius(const Rational& a, const Rational& b, const Rational& c, const Rational& d)
    : a_(a), b_(b), c_(c), d_(d) {
  if (sgn(a_ * d_ - b_ * c_) == 0) throw Error(ErrorCode::InvalidArgument, "singular Moebius matrix");
  Integer g = 0, l = 1;
  for (const Rational* x : {&a_, &b_, &c_, &d_}) {
    if (sgn(*x) == 0) continue;
    g = gcd(g, Integer(x->get_num()));
    l = lcm(l, Integer(x->get_den()));
  }
  Rational scale(l, g);
  scale.canonicalize();
  for (const Rational* x : {&a_, &b_, &c_, &d_})
    if (sgn(*x) != 0) {
      if (sgn(*x) < 0) scale = -scale;
      break;
    }
  a_ *= scale;
  b_ *= scale;
  c_ *= scale;
  d_ *= scale;
}

ProjPoint Moebius::apply(const ProjPoint& p) const {
  Vec2 v = homogeneous(p);
  Rational x = a_ * v[0] + b_ * v[1];
  Rational z = c_ * v[0] + d_ * v[1];
  if (sgn(z) == 0) return ProjPoint::infinity();
  return ProjPoint::finite(x / z);
}

ProjPoint apply(const Moebius& mu, const ProjPoint& p) { return mu.apply(p); }

RatFunc Moebius::as_ratfunc() const {
  return RatFunc::normalize(Poly(std::vector<Rational>{b_, a_}), Poly(std::vector<Rational>{d_, c_}));
}

Moebius operator*(const Moebius& m1, const Moebius& m2) {
  return {m1.a_ * m2.a_ + m1.b_ * m2.c_, m1.a_ * m2.b_ + m1.b_ * m2.d_,
          m1.c_ * m2.a_ + m1.d_ * m2.c_, m1.c_ * m2.b_ + m1.d_ * m2.d_};
}

std::string Moebius::to_string() const {
  std::ostringstream os;
  os << "(" << cremona::to_string(a_) << ", " << cremona::to_string(b_) << ", "
     << cremona::to_string(c_) << ", " << cremona::to_string(d_) << ")";
  return os.str();
}

Moebius from_triples(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3,
                     const ProjPoint& q1, const ProjPoint& q2, const ProjPoint& q3) {
  auto fp = frame(p1, p2, p3);
  auto fq = frame(q1, q2, q3);
  Moebius from_p(fp[0], fp[1], fp[2], fp[3]);
  Moebius from_q(fq[0], fq[1], fq[2], fq[3]);
  return from_q * from_p.inverse();
}

Configuration transform_configuration(const Moebius& mu, const Configuration& c) {
  const int n = c.size();
  if (n == 0) return c;
  // G(Y, Z) = F(adj(mu) (Y, Z)), dehomogenized at Z = 1.
  Poly y_part(std::vector<Rational>{-mu.b(), mu.d()});
  Poly z_part(std::vector<Rational>{mu.a(), -mu.c()});
  Poly g = c.finite_part().homogeneous_substitute(y_part, z_part, n);
  return Configuration(g, g.degree() < n);
}

std::optional<std::vector<ProjPoint>> rational_point_list(const Configuration& c) {
  auto roots = c.rational_points();
  if (static_cast<int>(roots.size()) != c.finite_part().degree()) return std::nullopt;
  std::vector<ProjPoint> pts;
  for (const auto& r : roots) pts.push_back(ProjPoint::finite(r));
  if (c.at_infinity()) pts.push_back(ProjPoint::infinity());
  return pts;
}

std::vector<Moebius> stabilizer(const Configuration& c) {
  if (c.size() <= 2)
    throw Error(ErrorCode::TooSmallConfiguration, "stabilizer of at most two points is infinite");
  auto pts = rational_point_list(c);
  if (!pts) throw Error(ErrorCode::IrrationalPoints, "stabilizer enumeration needs rational points");
  const auto& p = *pts;
  std::vector<Moebius> out;
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (i == j || j == k || i == k) continue;
        Moebius mu = from_triples(p[0], p[1], p[2], p[i], p[j], p[k]);
        if (transform_configuration(mu, c) == c) out.push_back(mu);
      }
  return out;
}

JInvariant quartic_j_invariant(const Configuration& c) {
  if (c.size() != 4) throw Error(ErrorCode::WrongSize, "j-invariant needs exactly four points");
  const Poly& f = c.finite_part();
  // Coefficients of Y^4, Y^3 Z, ..., Z^4.
  const Rational a = f.coeff(4), b = f.coeff(3), cc = f.coeff(2), d = f.coeff(1), e = f.coeff(0);
  const Rational I = 12 * a * e - 3 * b * d + cc * cc;
  const Rational J = 72 * a * cc * e + 9 * b * cc * d - 27 * a * d * d - 27 * e * b * b - 2 * cc * cc * cc;
  const Rational den = 4 * I * I * I - J * J;
  if (sgn(den) == 0) return {true, 0};
  return {false, 6912 * I * I * I / den};
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "Yes";
    case Verdict::No: return "No";
    case Verdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

namespace {

// Canonical auxiliary points 0, 1, inf, -1, 2, -2, ... not in `avoid`.
std::vector<ProjPoint> fresh_points(const std::vector<ProjPoint>& avoid, std::size_t count) {
  std::vector<ProjPoint> out;
  auto taken = [&](const ProjPoint& p) {
    for (const auto& a : avoid)
      if (a == p) return true;
    for (const auto& a : out)
      if (a == p) return true;
    return false;
  };
  std::vector<ProjPoint> seq{ProjPoint::finite(0), ProjPoint::finite(1), ProjPoint::infinity()};
  for (long k = 1; seq.size() < avoid.size() + count + 3; ++k) {
    seq.push_back(ProjPoint::finite(-k));
    seq.push_back(ProjPoint::finite(k + 1));
  }
  for (const auto& p : seq) {
    if (out.size() == count) break;
    if (!taken(p)) out.push_back(p);
  }
  return out;
}

using Cplx = std::complex<long double>;

struct SpherePoint {
  bool infinite;
  Cplx z;
};

// Rational to long double without the detour through double precision.
long double to_long_double(const Integer& z) {
  const double hi = z.get_d();
  const Integer rest = z - Integer(hi);
  return static_cast<long double>(hi) + static_cast<long double>(rest.get_d());
}

long double to_long_double(const Rational& q) {
  return to_long_double(q.get_num()) / to_long_double(q.get_den());
}

std::vector<SpherePoint> numeric_points(const Configuration& c) {
  std::vector<SpherePoint> out;
  const Poly& f = c.finite_part();
  const int n = f.degree();
  if (n > 0) {
    std::vector<Cplx> coef(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) coef[static_cast<std::size_t>(k)] = Cplx(to_long_double(f.coeff(k)), 0);
    // Durand-Kerner on the monic polynomial.
    std::vector<Cplx> roots(static_cast<std::size_t>(n));
    const Cplx seed(0.4L, 0.9L);
    for (int k = 0; k < n; ++k) roots[static_cast<std::size_t>(k)] = std::pow(seed, k);
    auto eval = [&](Cplx x) {
      Cplx acc = 0;
      for (int k = n; k >= 0; --k) acc = acc * x + coef[static_cast<std::size_t>(k)];
      return acc;
    };
    for (int iter = 0; iter < 2000; ++iter) {
      long double delta = 0;
      for (std::size_t i = 0; i < roots.size(); ++i) {
        Cplx den = 1;
        for (std::size_t j = 0; j < roots.size(); ++j)
          if (i != j) den *= roots[i] - roots[j];
        Cplx step = eval(roots[i]) / den;
        roots[i] -= step;
        delta = std::max(delta, std::abs(step));
      }
      if (delta < 1e-30L) break;
    }
    // Newton polish; the polynomial is squarefree so every root is simple.
    auto deriv = [&](Cplx x) {
      Cplx acc = 0;
      for (int k = n; k >= 1; --k) acc = acc * x + coef[static_cast<std::size_t>(k)] * static_cast<long double>(k);
      return acc;
    };
    for (auto& r : roots)
      for (int it = 0; it < 4; ++it) {
        const Cplx d = deriv(r);
        if (std::abs(d) == 0) break;
        r -= eval(r) / d;
      }
    for (auto r : roots) out.push_back({false, r});
  }
  if (c.at_infinity()) out.push_back({true, 0});
  return out;
}

long double chordal(const SpherePoint& p, const SpherePoint& q) {
  if (p.infinite && q.infinite) return 0;
  if (p.infinite) return 1 / std::sqrt(1 + std::norm(q.z));
  if (q.infinite) return 1 / std::sqrt(1 + std::norm(p.z));
  return std::abs(p.z - q.z) / (std::sqrt(1 + std::norm(p.z)) * std::sqrt(1 + std::norm(q.z)));
}

struct CMat {
  Cplx a, b, c, d;
};

CMat cframe(const SpherePoint& p1, const SpherePoint& p2, const SpherePoint& p3) {
  auto h = [](const SpherePoint& p) { return p.infinite ? std::array<Cplx, 2>{1, 0} : std::array<Cplx, 2>{p.z, 1}; };
  auto u = h(p1), v = h(p2), w = h(p3);
  Cplx det = u[0] * v[1] - v[0] * u[1];
  Cplx s = (w[0] * v[1] - v[0] * w[1]) / det;
  Cplx t = (u[0] * w[1] - w[0] * u[1]) / det;
  return {s * u[0], t * v[0], s * u[1], t * v[1]};
}

SpherePoint capply(const CMat& m, const SpherePoint& p) {
  Cplx x = p.infinite ? m.a : m.a * p.z + m.b;
  Cplx z = p.infinite ? m.c : m.c * p.z + m.d;
  if (std::abs(z) <= 1e-300L * std::abs(x) || (std::abs(z) == 0)) return {true, 0};
  return {false, x / z};
}

// True when some ordered triple of c2 yields a Moebius map sending every point
// of c1 within tol of a point of c2.
bool numeric_screen(const Configuration& c1, const Configuration& c2, double tol) {
  auto p = numeric_points(c1), q = numeric_points(c2);
  if (p.size() < 3 || p.size() != q.size()) return p.size() == q.size();
  CMat fp = cframe(p[0], p[1], p[2]);
  CMat fp_inv{fp.d, -fp.b, -fp.c, fp.a};
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j)
      for (std::size_t k = 0; k < q.size(); ++k) {
        if (i == j || j == k || i == k) continue;
        CMat fq = cframe(q[i], q[j], q[k]);
        CMat m{fq.a * fp_inv.a + fq.b * fp_inv.c, fq.a * fp_inv.b + fq.b * fp_inv.d,
               fq.c * fp_inv.a + fq.d * fp_inv.c, fq.c * fp_inv.b + fq.d * fp_inv.d};
        bool ok = true;
        for (const auto& pt : p) {
          SpherePoint img = capply(m, pt);
          long double best = 10;
          for (const auto& t : q) best = std::min(best, chordal(img, t));
          if (best > tol) {
            ok = false;
            break;
          }
        }
        if (ok) return true;
      }
  return false;
}

// Continued-fraction convergent within 1e-7 of x, or nullopt. Callers verify
// the result exactly, so a loose tolerance only costs time.
std::optional<Rational> recognize_rational(long double x) {
  long double r = x;
  Integer h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  for (int step = 0; step < 40; ++step) {
    long double fl = std::floor(r);
    if (std::fabs(fl) > 1e15L) return std::nullopt;
    Integer a(static_cast<long>(fl));
    Integer h2 = a * h1 + h0, k2 = a * k1 + k0;
    h0 = h1; h1 = h2; k0 = k1; k1 = k2;
    if (k1 > 100000000) return std::nullopt;
    Rational q(h1, k1);
    q.canonicalize();
    if (std::fabs(static_cast<long double>(q.get_d()) - x) < 1e-7L) return q;
    long double frac = r - fl;
    if (frac < 1e-18L) return std::nullopt;
    r = 1 / frac;
  }
  return std::nullopt;
}

// Maps found numerically between the point sets, rounded to rational
// matrices and kept only when they verify exactly.
std::optional<Moebius> search_numeric_witness(const Configuration& c1, const Configuration& c2) {
  auto p = numeric_points(c1), q = numeric_points(c2);
  if (p.size() < 3 || p.size() != q.size()) return std::nullopt;
  CMat fp = cframe(p[0], p[1], p[2]);
  CMat fp_inv{fp.d, -fp.b, -fp.c, fp.a};
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j)
      for (std::size_t k = 0; k < q.size(); ++k) {
        if (i == j || j == k || i == k) continue;
        CMat fq = cframe(q[i], q[j], q[k]);
        CMat m{fq.a * fp_inv.a + fq.b * fp_inv.c, fq.a * fp_inv.b + fq.b * fp_inv.d,
               fq.c * fp_inv.a + fq.d * fp_inv.c, fq.c * fp_inv.b + fq.d * fp_inv.d};
        std::array<Cplx, 4> e{m.a, m.b, m.c, m.d};
        Cplx pivot = e[0];
        for (const auto& v : e)
          if (std::abs(v) > std::abs(pivot)) pivot = v;
        if (std::abs(pivot) == 0) continue;
        std::array<Rational, 4> r;
        bool ok = true;
        for (std::size_t t = 0; t < 4 && ok; ++t) {
          Cplx v = e[t] / pivot;
          if (std::fabs(v.imag()) > 1e-7L) ok = false;
          else if (auto q = recognize_rational(v.real())) r[t] = *q;
          else ok = false;
        }
        if (!ok || r[0] * r[3] - r[1] * r[2] == 0) continue;
        Moebius mu(r[0], r[1], r[2], r[3]);
        if (transform_configuration(mu, c1) == c2) return mu;
      }
  return std::nullopt;
}

std::optional<Moebius> search_rational_witness(const Configuration& c1, const Configuration& c2) {
  auto rp = [](const Configuration& c) {
    std::vector<ProjPoint> pts;
    for (const auto& r : c.rational_points()) pts.push_back(ProjPoint::finite(r));
    if (c.at_infinity()) pts.push_back(ProjPoint::infinity());
    return pts;
  };
  auto p = rp(c1), q = rp(c2);
  const int n = c1.size();
  if (n == 2 && p.empty() && q.empty()) {
    // Conjugate pairs a +- sqrt(D): y -> c + k (y - a) with k^2 = D' / D.
    const Poly& f1 = c1.finite_part();
    const Poly& f2 = c2.finite_part();
    const Rational a1 = -f1.coeff(1) / 2, a2 = -f2.coeff(1) / 2;
    const Rational d1 = a1 * a1 - f1.coeff(0), d2 = a2 * a2 - f2.coeff(0);
    Rational k;
    if (!rational_sqrt(d2 / d1, k)) return std::nullopt;
    Moebius mu(k, a2 - k * a1, 0, 1);
    if (transform_configuration(mu, c1) == c2) return mu;
    return std::nullopt;
  }
  if (n <= 2) {
    if (static_cast<int>(p.size()) != n || static_cast<int>(q.size()) != n) return std::nullopt;
    auto extra_p = fresh_points(p, static_cast<std::size_t>(3 - n));
    auto extra_q = fresh_points(q, static_cast<std::size_t>(3 - n));
    p.insert(p.end(), extra_p.begin(), extra_p.end());
    q.insert(q.end(), extra_q.begin(), extra_q.end());
    Moebius mu = from_triples(p[0], p[1], p[2], q[0], q[1], q[2]);
    if (transform_configuration(mu, c1) == c2) return mu;
    return std::nullopt;
  }
  if (p.size() < 3 || q.size() < 3) return std::nullopt;
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j)
      for (std::size_t k = 0; k < q.size(); ++k) {
        if (i == j || j == k || i == k) continue;
        Moebius mu = from_triples(p[0], p[1], p[2], q[i], q[j], q[k]);
        if (transform_configuration(mu, c1) == c2) return mu;
      }
  return std::nullopt;
}

}  // namespace

EquivDecision configurations_equivalent(const Configuration& c1, const Configuration& c2,
                                        const EquivOptions& opts) {
  EquivDecision out;
  if (c1.size() != c2.size()) {
    out.verdict = Verdict::No;
    out.certificate = "size: " + std::to_string(c1.size()) + " != " + std::to_string(c2.size());
    return out;
  }
  const int n = c1.size();
  if (n == 0) {
    out.verdict = Verdict::Yes;
    out.witness = Moebius::identity();
    return out;
  }
  if (n == 4) {
    JInvariant j1 = quartic_j_invariant(c1), j2 = quartic_j_invariant(c2);
    if (!(j1 == j2)) {
      out.verdict = Verdict::No;
      out.certificate = "j-invariant: " + j1.to_string() + " != " + j2.to_string();
      return out;
    }
    out.notes.push_back("j-invariant " + j1.to_string() + " on both sides");
  }
  if (c1 == c2) {
    out.verdict = Verdict::Yes;
    out.witness = Moebius::identity();
    return out;
  }
  if (auto mu = search_rational_witness(c1, c2)) {
    out.verdict = Verdict::Yes;
    out.witness = *mu;
    return out;
  }
  if (!(c1.all_rational() && c2.all_rational())) {
    if (auto mu = search_numeric_witness(c1, c2)) {
      out.verdict = Verdict::Yes;
      out.witness = *mu;
      return out;
    }
  }
  if (n <= 3) {
    out.verdict = Verdict::Yes;
    out.reason = "PGL2(C) acts 3-transitively on P1; no witness with rational entries";
    return out;
  }
  if (n == 4) {
    out.verdict = Verdict::Yes;
    out.reason = "equal j-invariants classify 4-point sets over C; no witness with rational entries";
    return out;
  }
  if (c1.all_rational() && c2.all_rational()) {
    // Any map between them sends three rational points to rational points,
    // so it would have rational entries and been found above.
    out.verdict = Verdict::No;
    out.certificate = "rational-triple enumeration: no Moebius map sends one onto the other";
    return out;
  }
  out.verdict = Verdict::Unknown;
  out.reason = "irrational points and |C| >= 5: no exact invariant available";
  std::ostringstream note;
  note << "floating-point screening (tol=" << opts.tol << "): "
       << (numeric_screen(c1, c2, opts.tol) ? "a candidate map exists numerically"
                                            : "no candidate map within tolerance");
  out.notes.push_back(note.str());
  return out;
}

}  // namespace cremona
