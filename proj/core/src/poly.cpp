#include "cremona/poly.hpp"

#include <algorithm>
#include <sstream>

#include "cremona/error.hpp"

namespace cremona {

namespace {
const Rational kZero(0);
}

Poly::Poly(const Rational& c) {
  if (sgn(c) != 0) coeffs_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::y() { return monomial(1, 1); }

Poly Poly::monomial(const Rational& c, int k) {
  if (sgn(c) == 0) return {};
  std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
  v[static_cast<std::size_t>(k)] = c;
  return Poly(std::move(v));
}

Poly Poly::linear_root(const Rational& r) { return Poly(std::vector<Rational>{-r, 1}); }

void Poly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

const Rational& Poly::coeff(int k) const {
  if (k < 0 || k > degree()) return kZero;
  return coeffs_[static_cast<std::size_t>(k)];
}

const Rational& Poly::leading() const { return is_zero() ? kZero : coeffs_.back(); }

Rational Poly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Poly(std::move(v));
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  Poly r = *this;
  Rational inv = 1 / leading();
  return r *= inv;
}

Poly Poly::pow(unsigned k) const {
  Poly result(1), base = *this;
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return result;
}

Poly Poly::compose(const Poly& g) const {
  Poly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= g;
    acc += Poly(*it);
  }
  return acc;
}

Poly Poly::shifted(const Rational& c) const {
  return compose(Poly(std::vector<Rational>{c, 1}));
}

Poly Poly::homogeneous_substitute(const Poly& num, const Poly& den, int D) const {
  if (D < degree()) throw Error(ErrorCode::InvalidArgument, "homogeneous degree below polynomial degree");
  Poly acc;
  Poly num_pow(1);
  // den^(D-i) computed from the top down would need divisions; precompute powers instead.
  std::vector<Poly> den_pows(static_cast<std::size_t>(D) + 1);
  den_pows[0] = Poly(1);
  for (int i = 1; i <= D; ++i) den_pows[static_cast<std::size_t>(i)] = den_pows[static_cast<std::size_t>(i - 1)] * den;
  for (int i = 0; i <= degree(); ++i) {
    if (sgn(coeffs_[static_cast<std::size_t>(i)]) != 0)
      acc += coeffs_[static_cast<std::size_t>(i)] * (num_pow * den_pows[static_cast<std::size_t>(D - i)]);
    num_pow *= num;
  }
  return acc;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(v));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

std::string Poly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << cremona::to_string(mag);
      continue;
    }
    if (mag != 1) os << cremona::to_string(mag) << "*";
    os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

PolyDivision divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroDenominator, "polynomial division by zero");
  std::vector<Rational> r = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {Poly(), a};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db) + 1);
  Rational inv = 1 / b.leading();
  for (int k = a.degree(); k >= db; --k) {
    Rational c = r[static_cast<std::size_t>(k)] * inv;
    if (sgn(c) == 0) continue;
    q[static_cast<std::size_t>(k - db)] = c;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= c * b.coeff(j);
  }
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error(ErrorCode::InvalidArgument, "inexact polynomial division");
  return q;
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).remainder;
    x = std::move(y);
    // Keep intermediate remainders primitive to limit coefficient growth.
    y = r.is_zero() ? r : r * (1 / content(r));
  }
  return x.monic();
}

Rational content(const Poly& p) { return joint_content({&p}); }

Rational joint_content(const std::vector<const Poly*>& ps) {
  Integer g = 0, l = 1;
  for (const Poly* p : ps)
    for (const auto& c : p->coefficients()) {
      if (sgn(c) == 0) continue;
      g = gcd(g, Integer(c.get_num()));
      l = lcm(l, Integer(c.get_den()));
    }
  if (g == 0) return 1;
  Rational r(g, l);
  r.canonicalize();
  return abs(r);
}

namespace {

std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain{p, p.derivative()};
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    Poly r = divmod(chain[chain.size() - 2], chain.back()).remainder;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

int sign_variations(const std::vector<Poly>& chain, const Rational& x) {
  int prev = 0, count = 0;
  for (const auto& s : chain) {
    int sv = sgn(s(x));
    if (sv == 0) continue;
    if (prev != 0 && sv != prev) ++count;
    prev = sv;
  }
  return count;
}

Integer ceil_q(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer floor_q(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

}  // namespace

int count_real_roots(const Poly& squarefree, const Rational& lo, const Rational& hi) {
  auto chain = sturm_chain(squarefree);
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

std::vector<Rational> rational_roots(const Poly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroInput, "rational_roots of zero polynomial");
  std::vector<Rational> roots;
  if (p.degree() <= 0) return roots;
  Poly s = exact_div(p, gcd(p, p.derivative()));
  s *= 1 / content(s);
  // Rational roots of a primitive integer polynomial have denominators dividing its leading coefficient.
  const Integer lead = abs(Integer(s.leading().get_num()));
  Rational bound = 0;
  for (int k = 0; k < s.degree(); ++k) bound = std::max(bound, Rational(abs(s.coeff(k) / s.leading())));
  bound += 1;

  const auto chain = sturm_chain(s);
  struct Interval {
    Rational lo, hi;
    int vlo, vhi;
  };
  std::vector<Interval> stack{{-bound, bound, sign_variations(chain, -bound), sign_variations(chain, bound)}};
  while (!stack.empty()) {
    Interval iv = stack.back();
    stack.pop_back();
    if (iv.vlo - iv.vhi == 0) continue;
    Integer kmin = ceil_q(iv.lo * lead), kmax = floor_q(iv.hi * lead);
    if (kmin > kmax) continue;
    if (kmax - kmin <= 1) {
      for (Integer k = kmin; k <= kmax; ++k) {
        Rational cand(k, lead);
        cand.canonicalize();
        if (cand > iv.lo && sgn(s(cand)) == 0) roots.push_back(cand);
      }
      continue;
    }
    Rational mid = (iv.lo + iv.hi) / 2;
    int vmid = sign_variations(chain, mid);
    stack.push_back({iv.lo, mid, iv.vlo, vmid});
    stack.push_back({mid, iv.hi, vmid, iv.vhi});
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace cremona
