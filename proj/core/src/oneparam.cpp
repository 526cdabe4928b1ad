#include "cremona/oneparam.hpp"

#include "cremona/error.hpp"

namespace cremona {

namespace {

constexpr int kVarU = 2;

MPoly var(int v) { return MPoly::variable(v); }

// 0, 1, -1, 2, -2, ...
Rational nth_point(int n, bool skip_zero) {
  if (skip_zero) ++n;
  const int m = (n + 1) / 2;
  return n % 2 ? Rational(m) : Rational(-m);
}

// gcd over Q[param] of the y-coefficients of p
Poly param_content(const MPoly& p) {
  Poly g;
  for (const MPoly& c : p.as_univariate(kVarY)) g = gcd(g, c.to_poly(kVarParam));
  return g;
}

ProjMatK to_projmat(const Mat2& m) {
  return {m.e[0].to_poly(kVarY), m.e[1].to_poly(kVarY), m.e[2].to_poly(kVarY), m.e[3].to_poly(kVarY)};
}

}  // namespace

Mat2 Mat2::substitute(const std::map<int, MPoly>& values) const {
  Mat2 out;
  for (int i = 0; i < 4; ++i) out.e[i] = e[i].substitute(values);
  return out;
}

bool Mat2::is_zero() const {
  for (const MPoly& x : e)
    if (!x.is_zero()) return false;
  return true;
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return {{x.e[0] * y.e[0] + x.e[1] * y.e[2], x.e[0] * y.e[1] + x.e[1] * y.e[3], x.e[2] * y.e[0] + x.e[3] * y.e[2],
           x.e[2] * y.e[1] + x.e[3] * y.e[3]}};
}

bool Mat2::proportional(const Mat2& o) const {
  if (is_zero() || o.is_zero()) return false;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (!(e[i] * o.e[j] - e[j] * o.e[i]).is_zero()) return false;
  return true;
}

std::string Mat2::to_string(const std::vector<std::string>& names) const {
  return "[[" + e[0].to_string(names) + ", " + e[1].to_string(names) + "], [" + e[2].to_string(names) + ", " +
         e[3].to_string(names) + "]]";
}

AdditiveFamily::AdditiveFamily(Mat2 matrix, bool translate) : a(std::move(matrix)), translate_base(translate) {
  for (const MPoly& x : a.e)
    if (x.max_var() > kVarParam) throw Error(ErrorCode::InvalidArgument, "family entries may only involve t and y");
  if (!a.substitute({{kVarParam, MPoly(0)}}).proportional(Mat2{}))
    throw Error(ErrorCode::InvalidArgument, "A_0 is not the identity");
  const MPoly delta = a.det();
  if (delta.is_zero() || param_content(delta).degree() > 0)
    throw Error(ErrorCode::InvalidArgument, "det A_t vanishes identically for some t");
}

MultiplicativeFamily::MultiplicativeFamily(const std::array<MRat, 4>& entries, int base_exponent) : k(base_exponent) {
  unsigned shift = 0;
  for (const MRat& x : entries) {
    if (x.num().max_var() > kVarParam || x.den().max_var() > kVarParam)
      throw Error(ErrorCode::InvalidArgument, "family entries may only involve lambda and y");
    const auto& terms = x.den().terms();
    if (terms.size() != 1 || terms.begin()->first.size() > 2 || (!terms.begin()->first.empty() && terms.begin()->first[0] != 0))
      throw Error(ErrorCode::InvalidArgument, "denominators must be powers of lambda");
    shift = std::max(shift, static_cast<unsigned>(x.den().degree_in(kVarParam) < 0 ? 0 : x.den().degree_in(kVarParam)));
  }
  const MPoly scale = var(kVarParam).pow(shift);
  for (int i = 0; i < 4; ++i) s.e[i] = *exact_div(entries[i].num() * scale, entries[i].den());
  if (!s.substitute({{kVarParam, MPoly(1)}}).proportional(Mat2{}))
    throw Error(ErrorCode::InvalidArgument, "s_1 is not the identity");
  const MPoly delta = s.det();
  if (delta.is_zero()) throw Error(ErrorCode::InvalidArgument, "det s_lambda vanishes identically");
  Poly content = param_content(delta);
  while (sgn(content.coeff(0)) == 0) content = exact_div(content, Poly::y());
  if (content.degree() > 0) throw Error(ErrorCode::InvalidArgument, "det s_lambda vanishes identically at some lambda != 0");
}

bool check_additive_cocycle(const AdditiveFamily& f) {
  const MPoly y = var(kVarY), t = var(kVarParam), u = var(kVarU);
  const Mat2 lhs = f.a.substitute({{kVarParam, t + u}});
  const Mat2 at = f.translate_base ? f.a.substitute({{kVarY, y + u}}) : f.a;
  const Mat2 au = f.a.substitute({{kVarParam, u}});
  return lhs.proportional(at * au);
}

AdditiveTrivialization trivialize_additive(const AdditiveFamily& f) {
  if (!check_additive_cocycle(f)) throw Error(ErrorCode::CocycleViolation, "A_{t+u} != A_t(y+u) A_u(y)");
  AdditiveTrivialization out;
  if (!f.translate_base) return out;
  out.kind = AdditiveTrivialization::Kind::U2;
  const MPoly delta0 = f.a.det().substitute(kVarParam, MPoly(0));
  const MPoly y = var(kVarY), t = var(kVarParam);
  const int bound = 2 * std::max(delta0.degree_in(kVarY), 0) + 2;
  for (int n = 0; n <= bound; ++n) {
    const Rational y0 = nth_point(n, false);
    if (sgn(delta0.evaluate({{kVarY, y0}})) == 0) continue;
    // B(u) = A_{u - y0}(y0), written in the variable y.
    const Mat2 b = f.a.substitute({{kVarParam, y - MPoly(y0)}, {kVarY, MPoly(y0)}});
    const Mat2 check = b.substitute({{kVarY, y + t}}) * b.adjugate();
    if (!check.proportional(f.a)) throw Error(ErrorCode::CocycleViolation, "A_c(y) != B(y+c) B(y)^-1");
    out.b = to_projmat(b);
    out.y0 = y0;
    return out;
  }
  throw Error(ErrorCode::NoGoodBasePoint, "Delta(0, y0) vanishes at every tried y0");
}

MultiplicativeTrivialization trivialize_multiplicative(const MultiplicativeFamily& f) {
  if (f.k != 1 && f.k != -1)
    throw Error(ErrorCode::NotInjectiveOnBase, "base lambda^" + std::to_string(f.k) + " y is not injective in lambda");
  const MPoly y = var(kVarY), lam = var(kVarParam);
  const MPoly delta = f.s.det();
  for (int n = 0; n < 64; ++n) {
    const Rational y0 = nth_point(n, true);
    if (delta.substitute(kVarY, MPoly(y0)).is_zero()) continue;
    // k = 1: t(y) = s_{y / y0}(y0); k = -1: t(y) = s_{y0 / y}(y0). Both are
    // cleared of denominators by a power of y.
    const int dl = std::max({f.s.e[0].degree_in(kVarParam), f.s.e[1].degree_in(kVarParam),
                             f.s.e[2].degree_in(kVarParam), f.s.e[3].degree_in(kVarParam), 0});
    Mat2 tm;
    for (int i = 0; i < 4; ++i) {
      const MPoly at_y0 = f.s.e[i].substitute(kVarY, MPoly(y0));
      MPoly acc;
      for (int j = 0; j <= at_y0.degree_in(kVarParam); ++j) {
        const Rational c = at_y0.coeff_in(kVarParam, j).constant_value();
        if (sgn(c) == 0) continue;
        Rational scale = 1;
        for (int r = 0; r < j; ++r) scale *= f.k == 1 ? 1 / y0 : y0;
        acc += MPoly::monomial(c * scale, {static_cast<unsigned>(f.k == 1 ? j : dl - j)});
      }
      tm.e[i] = acc;
    }
    // Check t(lambda^k y) t(y)^-1 = s_lambda(y), after clearing lambda^-1.
    Mat2 lhs;
    if (f.k == 1) {
      lhs = tm.substitute({{kVarY, lam * y}}) * tm.adjugate();
    } else {
      Mat2 shifted;
      const int dy = std::max({tm.e[0].degree_in(kVarY), tm.e[1].degree_in(kVarY), tm.e[2].degree_in(kVarY),
                               tm.e[3].degree_in(kVarY), 0});
      for (int i = 0; i < 4; ++i) {
        MPoly acc;
        for (int j = 0; j <= tm.e[i].degree_in(kVarY); ++j)
          acc += tm.e[i].coeff_in(kVarY, j) * y.pow(static_cast<unsigned>(j)) * lam.pow(static_cast<unsigned>(dy - j));
        shifted.e[i] = acc;
      }
      lhs = shifted * tm.adjugate();
    }
    if (!lhs.proportional(f.s)) throw Error(ErrorCode::CocycleViolation, "s_lambda(y) != t(lambda^k y) t(y)^-1");
    return {to_projmat(tm), y0};
  }
  throw Error(ErrorCode::NoGoodBasePoint, "det s_lambda(y0) vanishes at every tried y0");
}

}  // namespace cremona
