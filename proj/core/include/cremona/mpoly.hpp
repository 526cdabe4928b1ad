#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cremona/poly.hpp"

namespace cremona {

// Exponent vector with trailing zeros trimmed; entry v is the exponent of x_v.
using Monomial = std::vector<unsigned>;

// Lexicographic order with the highest-index variable most significant, so
// the leading term of a polynomial is its leading term in its main variable.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse multivariate polynomial over Q in variables x_0, x_1, ...
class MPoly {
 public:
  using Terms = std::map<Monomial, Rational, MonomialOrder>;

  MPoly() = default;
  MPoly(const Rational& c);  // NOLINT
  MPoly(long c) : MPoly(Rational(c)) {}  // NOLINT
  MPoly(int c) : MPoly(Rational(c)) {}  // NOLINT

  static MPoly variable(int v);
  static MPoly monomial(const Rational& c, Monomial m);
  // Univariate p read in variable v.
  static MPoly from_poly(const Poly& p, int v);
  static MPoly from_univariate(int v, const std::vector<MPoly>& coeffs);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;
  const Terms& terms() const { return terms_; }
  // Highest variable index present, -1 for constants.
  int max_var() const;
  bool depends_on(int v) const;
  int degree_in(int v) const;  // -1 for zero
  int total_degree() const;    // -1 for zero
  const Rational& leading_coefficient() const;

  MPoly coeff_in(int v, int k) const;
  std::vector<MPoly> as_univariate(int v) const;
  // Requires dependence on v alone.
  Poly to_poly(int v) const;

  MPoly substitute(int v, const MPoly& value) const;
  // Simultaneous substitution x_v -> values[v].
  MPoly substitute(const std::map<int, MPoly>& values) const;
  Rational evaluate(const std::map<int, Rational>& point) const;

  MPoly pow(unsigned k) const;
  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const Rational& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
  friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

  // Leading coefficient scaled to 1; zero stays zero.
  MPoly normalized() const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  Terms terms_;
};

std::optional<MPoly> exact_div(const MPoly& a, const MPoly& b);
// Normalized gcd (leading coefficient 1); gcd(0, 0) = 0.
MPoly gcd(const MPoly& a, const MPoly& b);
// gcd of the coefficients of p viewed as a polynomial in x_v.
MPoly content_in(const MPoly& p, int v);

// Element of Q(x_0, x_1, ...): coprime numerator and denominator, the
// denominator's leading coefficient is 1.
class MRat {
 public:
  MRat() : den_(1) {}
  MRat(const MPoly& p) : num_(p), den_(1) {}  // NOLINT
  MRat(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  MRat(long c) : MRat(Rational(c)) {}  // NOLINT
  MRat(int c) : MRat(Rational(c)) {}  // NOLINT

  static MRat normalize(const MPoly& num, const MPoly& den);
  static MRat variable(int v) { return MRat(MPoly::variable(v)); }

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rational constant_value() const { return num_.constant_value() / den_.constant_value(); }
  bool depends_on(int v) const { return num_.depends_on(v) || den_.depends_on(v); }
  int max_var() const { return std::max(num_.max_var(), den_.max_var()); }

  MRat inverse() const;
  // Simultaneous substitution x_v -> values[v].
  MRat substitute(const std::map<int, MRat>& values) const;

  MRat operator-() const;
  friend MRat operator+(const MRat& a, const MRat& b);
  friend MRat operator-(const MRat& a, const MRat& b);
  friend MRat operator*(const MRat& a, const MRat& b);
  friend MRat operator/(const MRat& a, const MRat& b);
  friend bool operator==(const MRat& a, const MRat& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  // num / den already coprime; only the leading coefficient is fixed.
  static MRat normalize_lc(const MPoly& num, const MPoly& den);
  MRat(MPoly n, MPoly d, bool) : num_(std::move(n)), den_(std::move(d)) {}
  MPoly num_;
  MPoly den_;
};

}  // namespace cremona
