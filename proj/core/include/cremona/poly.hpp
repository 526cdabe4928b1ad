#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cremona/rational.hpp"

namespace cremona {

// Dense univariate polynomial over Q, coefficients lowest degree first.
// The zero polynomial has no coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c);  // NOLINT: constants promote implicitly
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT
  Poly(int c) : Poly(Rational(c)) {}   // NOLINT
  explicit Poly(std::vector<Rational> coeffs);

  static Poly y();
  static Poly monomial(const Rational& c, int k);
  // (y - r)
  static Poly linear_root(const Rational& r);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const Rational& coeff(int k) const;
  const Rational& leading() const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational operator()(const Rational& x) const;
  Poly derivative() const;
  Poly monic() const;
  Poly pow(unsigned k) const;
  // p(g(y))
  Poly compose(const Poly& g) const;
  // p(y + c)
  Poly shifted(const Rational& c) const;
  // den^D * p(num/den), requires D >= degree().
  Poly homogeneous_substitute(const Poly& num, const Poly& den, int D) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(std::string_view var = "y") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct PolyDivision {
  Poly quotient;
  Poly remainder;
};

PolyDivision divmod(const Poly& a, const Poly& b);
// Throws if b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);
// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

// Positive rational c with p / c having coprime integer coefficients.
Rational content(const Poly& p);
// Same, taken jointly over several polynomials (zero polynomials ignored).
Rational joint_content(const std::vector<const Poly*>& ps);

// All rational roots of a nonzero polynomial, ascending, without multiplicity.
std::vector<Rational> rational_roots(const Poly& p);

// Number of distinct real roots in (lo, hi] via a Sturm chain.
int count_real_roots(const Poly& squarefree, const Rational& lo, const Rational& hi);

}  // namespace cremona
