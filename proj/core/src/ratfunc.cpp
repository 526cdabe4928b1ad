#include "cremona/ratfunc.hpp"

#include <algorithm>
#include <sstream>

#include "cremona/error.hpp"
#include "cremona/moebius.hpp"

namespace cremona {

RatFunc RatFunc::normalize(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw Error(ErrorCode::ZeroDenominator, "rational function with zero denominator");
  if (num.is_zero()) return RatFunc();
  Poly g = gcd(num, den);
  Poly n = exact_div(num, g), d = exact_div(den, g);
  Rational lc = d.leading();
  n *= 1 / lc;
  d *= 1 / lc;
  return RatFunc(std::move(n), std::move(d), Raw{});
}

Rational RatFunc::operator()(const Rational& x) const {
  Rational d = den_(x);
  if (sgn(d) == 0) throw Error(ErrorCode::ZeroDenominator, "evaluation at a pole");
  return num_(x) / d;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw Error(ErrorCode::ZeroDenominator, "inverse of zero");
  return normalize(den_, num_);
}

RatFunc RatFunc::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  return RatFunc(num_.pow(static_cast<unsigned>(k)), den_.pow(static_cast<unsigned>(k)), Raw{});
}

RatFunc RatFunc::compose(const RatFunc& g) const {
  const int D = std::max(num_.degree(), den_.degree());
  if (D <= 0) return *this;
  return normalize(num_.homogeneous_substitute(g.num(), g.den(), D),
                   den_.homogeneous_substitute(g.num(), g.den(), D));
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc::normalize(a.num_ + b.num_, a.den_);
  return RatFunc::normalize(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  // Cross-cancel before multiplying to keep the gcd small.
  Poly g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
  Poly n = exact_div(a.num_, g1) * exact_div(b.num_, g2);
  Poly d = exact_div(a.den_, g2) * exact_div(b.den_, g1);
  Rational lc = d.leading();
  return RatFunc(n * (1 / lc), d * (1 / lc), RatFunc::Raw{});
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

std::string RatFunc::to_string(std::string_view var) const {
  if (den_ == Poly(1)) return num_.to_string(var);
  auto terms = [](const Poly& p) {
    return std::count_if(p.coefficients().begin(), p.coefficients().end(),
                         [](const Rational& c) { return sgn(c) != 0; });
  };
  std::string n = num_.to_string(var);
  if (terms(num_) > 1 || (num_.degree() == 0 && num_.leading().get_den() != 1)) n = "(" + n + ")";
  std::string d = den_.to_string(var);
  if (terms(den_) > 1) d = "(" + d + ")";
  return n + "/" + d;
}

SquarefreeDecomposition squarefree_decomposition(const Poly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroInput, "squarefree decomposition of zero");
  SquarefreeDecomposition out{p.leading(), {}};
  if (p.degree() == 0) return out;
  Poly f = p.monic();
  Poly fp = f.derivative();
  Poly a = gcd(f, fp);
  Poly b = exact_div(f, a);
  Poly c = exact_div(fp, a);
  Poly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    Poly ai = gcd(b, d);
    b = exact_div(b, ai);
    c = exact_div(d, ai);
    d = c - b.derivative();
    if (ai.degree() > 0) out.factors.push_back({ai, i});
    ++i;
  }
  return out;
}

Configuration::Configuration(const Poly& finite_part, bool at_infinity)
    : finite_(finite_part.monic()), at_infinity_(at_infinity) {
  if (finite_part.is_zero()) throw Error(ErrorCode::InvalidArgument, "configuration from zero polynomial");
  if (gcd(finite_, finite_.derivative()).degree() > 0)
    throw Error(ErrorCode::InvalidArgument, "configuration polynomial is not squarefree");
}

Configuration Configuration::from_points(const std::vector<Rational>& finite, bool at_infinity) {
  Poly p(1);
  for (const auto& r : finite) p *= Poly::linear_root(r);
  return Configuration(p, at_infinity);
}

std::vector<Rational> Configuration::rational_points() const { return rational_roots(finite_); }

bool Configuration::all_rational() const {
  return static_cast<int>(rational_points().size()) == finite_.degree();
}

Poly Configuration::irrational_part() const {
  Poly p = finite_;
  for (const auto& r : rational_points()) p = exact_div(p, Poly::linear_root(r));
  return p;
}

RatFunc Configuration::representative() const {
  if ((finite_.degree() % 2 == 1) != at_infinity_)
    throw Error(ErrorCode::InvalidArgument, "odd-sized configuration has no square-class representative");
  return RatFunc(finite_);
}

std::string Configuration::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  auto sep = [&] {
    if (!first) os << ", ";
    first = false;
  };
  for (const auto& r : rational_points()) {
    sep();
    os << cremona::to_string(r);
  }
  Poly rest = irrational_part();
  if (rest.degree() > 0) {
    sep();
    os << "roots(" << rest.to_string() << ")";
  }
  if (at_infinity_) {
    sep();
    os << "inf";
  }
  os << "}";
  return os.str();
}

DegreeResult geometric_degree_checked(const RatFunc& f) {
  if (f.is_zero()) return {0, true};
  return {std::max(f.num().degree(), f.den().degree()), false};
}

int geometric_degree(const RatFunc& f) { return geometric_degree_checked(f).degree; }

namespace {

Poly odd_layers(const Poly& p) {
  Poly acc(1);
  for (const auto& [factor, mult] : squarefree_decomposition(p).factors)
    if (mult % 2 == 1) acc *= factor;
  return acc;
}

}  // namespace

Configuration odd_support(const RatFunc& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroInput, "odd support of zero");
  // num and den are coprime, so their odd layers are disjoint.
  Poly finite = odd_layers(f.num()) * odd_layers(f.den());
  const bool inf = ((f.num().degree() - f.den().degree()) % 2) != 0;
  return Configuration(finite, inf);
}

bool is_square_in_Cy(const RatFunc& f) { return odd_support(f).empty(); }

int genus(const RatFunc& f) {
  Configuration s = odd_support(f);
  if (s.empty()) throw Error(ErrorCode::SquareInput, "genus of a square in C(y)");
  return (s.size() - 2) / 2;
}

RatFunc compose_moebius(const RatFunc& f, const Moebius& mu) { return f.compose(mu.as_ratfunc()); }

RatFunc scale_square(const RatFunc& f, const RatFunc& lambda) {
  if (lambda.is_zero()) throw Error(ErrorCode::ZeroScale, "zero scale factor");
  return lambda * lambda * f;
}

std::optional<SquareRoot> square_root_up_to_constant(const RatFunc& f) {
  if (f.is_zero()) return std::nullopt;
  auto half = [](const Poly& p, Poly& out) {
    out = Poly(1);
    for (const auto& [factor, mult] : squarefree_decomposition(p).factors) {
      if (mult % 2 != 0) return false;
      out *= factor.pow(static_cast<unsigned>(mult / 2));
    }
    return true;
  };
  Poly hn, hd;
  if (!half(f.num(), hn) || !half(f.den(), hd)) return std::nullopt;
  return SquareRoot{f.num().leading(), RatFunc::normalize(hn, hd)};
}

}  // namespace cremona
