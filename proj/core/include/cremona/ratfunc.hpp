#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cremona/poly.hpp"

namespace cremona {

class Moebius;

// Element of Q(y) in lowest terms: gcd(num, den) = 1, den monic, 0 = 0/1.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(const Poly& p) : num_(p), den_(1) {}  // NOLINT
  RatFunc(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  RatFunc(long c) : RatFunc(Rational(c)) {}  // NOLINT
  RatFunc(int c) : RatFunc(Rational(c)) {}  // NOLINT

  // Normalizing constructor; throws ZeroDenominator.
  static RatFunc normalize(const Poly& num, const Poly& den);
  static RatFunc y() { return RatFunc(Poly::y()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  // Only meaningful when is_constant().
  Rational constant_value() const { return num_.coeff(0); }

  Rational operator()(const Rational& x) const;
  RatFunc inverse() const;
  RatFunc pow(int k) const;
  // f(g(y)) for arbitrary rational g.
  RatFunc compose(const RatFunc& g) const;

  RatFunc operator-() const { return RatFunc(-num_, den_, Raw{}); }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string(std::string_view var = "y") const;

 private:
  struct Raw {};
  RatFunc(Poly n, Poly d, Raw) : num_(std::move(n)), den_(std::move(d)) {}
  Poly num_;
  Poly den_;
};

struct SquarefreeFactor {
  Poly factor;  // monic, squarefree
  int multiplicity;
};

// p = leading * prod factor^multiplicity, multiplicities strictly increasing,
// factors pairwise coprime. Throws ZeroInput on p = 0.
struct SquarefreeDecomposition {
  Rational leading;
  std::vector<SquarefreeFactor> factors;
};
SquarefreeDecomposition squarefree_decomposition(const Poly& p);

// A finite subset of P^1 over Q-bar, closed under Galois: the roots of a monic
// squarefree polynomial, plus possibly the point at infinity.
class Configuration {
 public:
  Configuration() : finite_(1) {}
  // Throws InvalidArgument unless finite_part is squarefree (it is made monic).
  Configuration(const Poly& finite_part, bool at_infinity);
  static Configuration from_points(const std::vector<Rational>& finite, bool at_infinity);

  const Poly& finite_part() const { return finite_; }
  bool at_infinity() const { return at_infinity_; }
  int size() const { return finite_.degree() + (at_infinity_ ? 1 : 0); }
  bool empty() const { return size() == 0; }

  // Rational finite points (ascending); all_rational() when nothing else remains.
  std::vector<Rational> rational_points() const;
  bool all_rational() const;
  // Finite part with all rational roots divided out.
  Poly irrational_part() const;

  // Canonical square-class representative: the finite part, whose degree
  // parity encodes membership of infinity. Requires an even-sized odd support.
  RatFunc representative() const;

  // "{0, 1, roots(y^2 + 1), inf}"
  std::string to_string() const;

  friend bool operator==(const Configuration& a, const Configuration& b) {
    return a.at_infinity_ == b.at_infinity_ && a.finite_ == b.finite_;
  }

 private:
  Poly finite_;
  bool at_infinity_ = false;
};

// d(f) = max(deg num, deg den). d(0) is reported as 0 with `zero_input` set.
struct DegreeResult {
  int degree;
  bool zero_input;
};
DegreeResult geometric_degree_checked(const RatFunc& f);
int geometric_degree(const RatFunc& f);

Configuration odd_support(const RatFunc& f);
// Square in C(y): every nonzero rational constant counts as a square.
bool is_square_in_Cy(const RatFunc& f);
// (|odd support| - 2) / 2; throws SquareInput when f is a square in C(y).
int genus(const RatFunc& f);

RatFunc compose_moebius(const RatFunc& f, const Moebius& mu);
// lambda^2 * f; throws ZeroScale.
RatFunc scale_square(const RatFunc& f, const RatFunc& lambda);

// f = c * h^2 with c in Q*, h in Q(y), when every multiplicity of f is even.
struct SquareRoot {
  Rational c;
  RatFunc h;
};
std::optional<SquareRoot> square_root_up_to_constant(const RatFunc& f);

}  // namespace cremona
