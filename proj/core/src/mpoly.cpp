#include "cremona/mpoly.hpp"

#include <algorithm>
#include <sstream>

#include "cremona/error.hpp"

namespace cremona {

namespace {

const Rational kZero(0);

void trim(Monomial& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

unsigned exponent(const Monomial& m, int v) {
  return static_cast<std::size_t>(v) < m.size() ? m[static_cast<std::size_t>(v)] : 0u;
}

Monomial with_exponent(Monomial m, int v, unsigned e) {
  if (m.size() <= static_cast<std::size_t>(v)) m.resize(static_cast<std::size_t>(v) + 1, 0);
  m[static_cast<std::size_t>(v)] = e;
  trim(m);
  return m;
}

Monomial product(const Monomial& a, const Monomial& b) {
  Monomial m(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) m[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) m[i] += b[i];
  return m;
}

std::optional<Monomial> quotient(const Monomial& a, const Monomial& b) {
  if (b.size() > a.size()) {
    for (std::size_t i = a.size(); i < b.size(); ++i)
      if (b[i] != 0) return std::nullopt;
  }
  Monomial m = a;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] > m[i]) return std::nullopt;
    m[i] -= b[i];
  }
  trim(m);
  return m;
}

MPoly pseudo_remainder(const MPoly& a, const MPoly& b, int v) {
  const int db = b.degree_in(v);
  const MPoly lcb = b.coeff_in(v, db);
  MPoly r = a;
  while (!r.is_zero() && r.degree_in(v) >= db) {
    const int dr = r.degree_in(v);
    MPoly lcr = r.coeff_in(v, dr);
    MPoly shift = MPoly::monomial(1, with_exponent({}, v, static_cast<unsigned>(dr - db)));
    r = lcb * r - lcr * shift * b;
  }
  return r;
}

// Integer coefficients without common factor.
MPoly numeric_primitive(MPoly p) {
  if (p.is_zero()) return p;
  Integer num_gcd = 0, den_lcm = 1;
  for (const auto& [m, c] : p.terms()) {
    num_gcd = gcd(num_gcd, Integer(c.get_num()));
    den_lcm = lcm(den_lcm, Integer(c.get_den()));
  }
  p *= Rational(den_lcm, num_gcd);
  return p;
}

MPoly primitive_part_in(const MPoly& p, int v) {
  if (p.is_zero()) return p;
  MPoly c = content_in(p, v);
  auto q = exact_div(p, c);
  if (!q) throw Error(ErrorCode::InvalidArgument, "content does not divide polynomial");
  return numeric_primitive(*q);
}

bool univariate_in(const MPoly& p, int v) {
  for (const auto& [m, c] : p.terms())
    for (std::size_t i = 0; i < m.size(); ++i)
      if (static_cast<int>(i) != v && m[i] != 0) return false;
  return true;
}

}  // namespace

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

MPoly::MPoly(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace(Monomial{}, c);
}

MPoly MPoly::variable(int v) { return monomial(1, with_exponent({}, v, 1)); }

MPoly MPoly::monomial(const Rational& c, Monomial m) {
  trim(m);
  MPoly p;
  if (sgn(c) != 0) p.terms_.emplace(std::move(m), c);
  return p;
}

MPoly MPoly::from_poly(const Poly& p, int v) {
  MPoly out;
  for (int k = 0; k <= p.degree(); ++k)
    if (sgn(p.coeff(k)) != 0) out.terms_.emplace(with_exponent({}, v, static_cast<unsigned>(k)), p.coeff(k));
  return out;
}

MPoly MPoly::from_univariate(int v, const std::vector<MPoly>& coeffs) {
  MPoly out;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    for (const auto& [m, c] : coeffs[k].terms_) out.add_term(with_exponent(m, v, static_cast<unsigned>(k)), c);
  return out;
}

void MPoly::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

bool MPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

Rational MPoly::constant_value() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

int MPoly::max_var() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.rbegin()->first.size()) - 1;
}

bool MPoly::depends_on(int v) const {
  for (const auto& [m, c] : terms_)
    if (exponent(m, v) > 0) return true;
  return false;
}

int MPoly::degree_in(int v) const {
  if (terms_.empty()) return -1;
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, exponent(m, v));
  return static_cast<int>(d);
}

int MPoly::total_degree() const {
  if (terms_.empty()) return -1;
  unsigned d = 0;
  for (const auto& [m, c] : terms_) {
    unsigned s = 0;
    for (auto e : m) s += e;
    d = std::max(d, s);
  }
  return static_cast<int>(d);
}

const Rational& MPoly::leading_coefficient() const {
  return terms_.empty() ? kZero : terms_.rbegin()->second;
}

MPoly MPoly::coeff_in(int v, int k) const {
  MPoly out;
  for (const auto& [m, c] : terms_)
    if (static_cast<int>(exponent(m, v)) == k) out.terms_.emplace(with_exponent(m, v, 0), c);
  return out;
}

std::vector<MPoly> MPoly::as_univariate(int v) const {
  std::vector<MPoly> out(static_cast<std::size_t>(std::max(degree_in(v), -1) + 1));
  for (const auto& [m, c] : terms_) out[exponent(m, v)].terms_.emplace(with_exponent(m, v, 0), c);
  return out;
}

Poly MPoly::to_poly(int v) const {
  std::vector<Rational> coeffs(static_cast<std::size_t>(std::max(degree_in(v), -1) + 1));
  for (const auto& [m, c] : terms_) {
    if (with_exponent(m, v, 0) != Monomial{})
      throw Error(ErrorCode::InvalidArgument, "polynomial depends on more than one variable");
    coeffs[exponent(m, v)] = c;
  }
  return Poly(std::move(coeffs));
}

MPoly MPoly::substitute(int v, const MPoly& value) const { return substitute(std::map<int, MPoly>{{v, value}}); }

MPoly MPoly::substitute(const std::map<int, MPoly>& values) const {
  // Powers of each substituted value, built on demand.
  std::map<int, std::vector<MPoly>> powers;
  auto power = [&](int v, unsigned e) -> const MPoly& {
    auto& table = powers[v];
    if (table.empty()) table.push_back(MPoly(1));
    while (table.size() <= e) table.push_back(table.back() * values.at(v));
    return table[e];
  };
  MPoly out;
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    MPoly factor(c);
    for (const auto& [v, val] : values) {
      unsigned e = exponent(m, v);
      if (e == 0) continue;
      rest = with_exponent(rest, v, 0);
      factor = factor * power(v, e);
    }
    out += factor * MPoly::monomial(1, rest);
  }
  return out;
}

Rational MPoly::evaluate(const std::map<int, Rational>& point) const {
  Rational acc = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (m[v] == 0) continue;
      auto it = point.find(static_cast<int>(v));
      if (it == point.end()) throw Error(ErrorCode::InvalidArgument, "evaluation point misses a variable");
      Rational p;
      mpz_pow_ui(p.get_num_mpz_t(), it->second.get_num_mpz_t(), m[v]);
      mpz_pow_ui(p.get_den_mpz_t(), it->second.get_den_mpz_t(), m[v]);
      t *= p;
    }
    acc += t;
  }
  return acc;
}

MPoly MPoly::pow(unsigned k) const {
  MPoly result(1), base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MPoly& MPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(product(ma, mb), ca * cb);
  return out;
}

MPoly MPoly::normalized() const {
  if (is_zero()) return *this;
  return *this * (1 / leading_coefficient());
}

std::string MPoly::to_string(const std::vector<std::string>& names) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (m.empty() || mag != 1) {
      os << cremona::to_string(mag);
      wrote = true;
    }
    for (std::size_t v = m.size(); v-- > 0;) {
      if (m[v] == 0) continue;
      if (wrote) os << "*";
      os << (v < names.size() ? names[v] : "x" + std::to_string(v));
      if (m[v] > 1) os << "^" << m[v];
      wrote = true;
    }
  }
  return os.str();
}

std::optional<MPoly> exact_div(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroDenominator, "multivariate division by zero");
  if (b.is_constant()) return a * (1 / b.constant_value());
  MPoly q, r = a;
  const auto& [lb, cb] = *b.terms().rbegin();
  while (!r.is_zero()) {
    const auto& [lr, cr] = *r.terms().rbegin();
    auto m = quotient(lr, lb);
    if (!m) return std::nullopt;
    MPoly t = MPoly::monomial(cr / cb, *m);
    q += t;
    r -= t * b;
  }
  return q;
}

MPoly content_in(const MPoly& p, int v) {
  MPoly g;
  for (const auto& c : p.as_univariate(v)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) return MPoly(1);
  }
  return g;
}

MPoly gcd(const MPoly& a, const MPoly& b) {
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  if (a.is_constant() || b.is_constant()) return MPoly(1);
  const int top = std::max(a.max_var(), b.max_var());
  // A variable present on one side only can be eliminated through the content.
  for (int w = top; w >= 0; --w) {
    if (a.depends_on(w) && !b.depends_on(w)) return gcd(content_in(a, w), b);
    if (b.depends_on(w) && !a.depends_on(w)) return gcd(a, content_in(b, w));
  }
  // Same variables on both sides; recurse on the one of least degree.
  int v = -1, best = 0;
  for (int w = 0; w <= top; ++w) {
    if (!a.depends_on(w)) continue;
    const int d = std::max(a.degree_in(w), b.degree_in(w));
    if (v < 0 || d < best) {
      v = w;
      best = d;
    }
  }
  if (univariate_in(a, v) && univariate_in(b, v)) return MPoly::from_poly(gcd(a.to_poly(v), b.to_poly(v)), v).normalized();
  if (a.terms().size() >= b.terms().size() && exact_div(a, b)) return b.normalized();
  if (b.terms().size() >= a.terms().size() && exact_div(b, a)) return a.normalized();

  const MPoly ca = content_in(a, v), cb = content_in(b, v);
  const MPoly c = gcd(ca, cb);
  MPoly p = numeric_primitive(*exact_div(a, ca)), q = numeric_primitive(*exact_div(b, cb));
  if (p.degree_in(v) < q.degree_in(v)) std::swap(p, q);
  while (true) {
    MPoly r = pseudo_remainder(p, q, v);
    if (r.is_zero()) break;
    if (r.degree_in(v) <= 0) return c.normalized();
    p = std::move(q);
    q = primitive_part_in(r, v);
  }
  return (c * primitive_part_in(q, v)).normalized();
}

MRat MRat::normalize(const MPoly& num, const MPoly& den) {
  if (den.is_zero()) throw Error(ErrorCode::ZeroDenominator, "rational function with zero denominator");
  if (num.is_zero()) return MRat();
  MPoly g = gcd(num, den);
  MPoly n = *exact_div(num, g), d = *exact_div(den, g);
  Rational lc = d.leading_coefficient();
  return MRat(n * (1 / lc), d * (1 / lc), true);
}

MRat MRat::normalize_lc(const MPoly& num, const MPoly& den) {
  const Rational lc = den.leading_coefficient();
  return MRat(num * (1 / lc), den * (1 / lc), true);
}

MRat MRat::inverse() const {
  if (is_zero()) throw Error(ErrorCode::ZeroDenominator, "inverse of zero");
  return normalize(den_, num_);
}

MRat MRat::substitute(const std::map<int, MRat>& values) const {
  // x_v -> p_v / q_v with both sides scaled by q_v^D_v, D_v the larger degree
  // in x_v; every monomial is expanded over all substituted variables at once.
  std::map<int, int> degs;
  for (const auto& [v, val] : values) {
    const int D = std::max(num_.degree_in(v), den_.degree_in(v));
    if (D > 0) degs[v] = D;
  }
  std::map<int, std::vector<MPoly>> npow, dpow;
  auto pw = [](std::vector<MPoly>& table, const MPoly& base, unsigned e) -> const MPoly& {
    if (table.empty()) table.push_back(MPoly(1));
    while (table.size() <= e) table.push_back(table.back() * base);
    return table[e];
  };
  auto expand = [&](const MPoly& p) {
    MPoly out;
    for (const auto& [m, c] : p.terms()) {
      MPoly factor(c);
      Monomial rest = m;
      for (const auto& [v, D] : degs) {
        const auto idx = static_cast<std::size_t>(v);
        const unsigned e = idx < m.size() ? m[idx] : 0u;
        if (idx < rest.size()) rest[idx] = 0;
        const MRat& val = values.at(v);
        factor = factor * pw(npow[v], val.num(), e) * pw(dpow[v], val.den(), static_cast<unsigned>(D) - e);
      }
      out += factor * MPoly::monomial(1, rest);
    }
    return out;
  };
  return normalize(expand(num_), expand(den_));
}

MRat MRat::operator-() const { return MRat(-num_, den_, true); }

MRat operator+(const MRat& a, const MRat& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return MRat::normalize(a.num_ + b.num_, a.den_);
  // Henrici: only the gcd of the denominators can cancel.
  const MPoly g = gcd(a.den_, b.den_);
  const MPoly da = *exact_div(a.den_, g), db = *exact_div(b.den_, g);
  const MPoly t = a.num_ * db + b.num_ * da;
  if (t.is_zero()) return MRat();
  if (g.is_constant()) return MRat::normalize_lc(t, da * b.den_);
  const MPoly g2 = gcd(t, g);
  return MRat::normalize_lc(*exact_div(t, g2), da * *exact_div(b.den_, g2));
}

MRat operator-(const MRat& a, const MRat& b) { return a + (-b); }

MRat operator*(const MRat& a, const MRat& b) {
  if (a.is_zero() || b.is_zero()) return MRat();
  const MPoly g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
  return MRat::normalize_lc(*exact_div(a.num_, g1) * *exact_div(b.num_, g2),
                            *exact_div(a.den_, g2) * *exact_div(b.den_, g1));
}

MRat operator/(const MRat& a, const MRat& b) { return a * b.inverse(); }

std::string MRat::to_string(const std::vector<std::string>& names) const {
  auto multi = [](const MPoly& p) { return p.terms().size() > 1; };
  if (den_ == MPoly(1)) return num_.to_string(names);
  std::string n = num_.to_string(names);
  if (multi(num_) || (num_.is_constant() && sgn(num_.constant_value()) < 0)) n = "(" + n + ")";
  std::string d = den_.to_string(names);
  if (multi(den_) || d.find('*') != std::string::npos) d = "(" + d + ")";
  return n + "/" + d;
}

}  // namespace cremona
