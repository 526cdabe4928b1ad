#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cremona/rational.hpp"

namespace cremona {

// Largest prime candidate tried when certifying that f is squarefree.
inline constexpr long kDefaultTrialBound = 10'000'000;

// Throws BadF when f is 0, 1, not squarefree, or too large to certify.
void check_field_tag(const Integer& f, long trial_bound = kDefaultTrialBound);

// p + q sqrt(f) in Q(sqrt f)
class QuadElem {
 public:
  QuadElem() : p_(1), q_(0), f_(-1) {}
  QuadElem(Rational p, Rational q, Integer f);
  static QuadElem rational(const Rational& r, const Integer& f) { return {r, 0, f}; }
  static QuadElem sqrt_f(const Integer& f) { return {0, 1, f}; }

  const Rational& p() const { return p_; }
  const Rational& q() const { return q_; }
  const Integer& f() const { return f_; }
  bool is_zero() const { return sgn(p_) == 0 && sgn(q_) == 0; }
  bool is_rational() const { return sgn(q_) == 0; }

  QuadElem conj() const { return {p_, -q_, f_, Unchecked{}}; }
  QuadElem inverse() const;
  QuadElem pow(unsigned k) const;

  friend QuadElem operator+(const QuadElem& a, const QuadElem& b);
  friend QuadElem operator-(const QuadElem& a, const QuadElem& b);
  friend QuadElem operator*(const QuadElem& a, const QuadElem& b);
  friend QuadElem operator/(const QuadElem& a, const QuadElem& b) { return a * b.inverse(); }
  friend bool operator==(const QuadElem& a, const QuadElem& b) {
    return a.f_ == b.f_ && a.p_ == b.p_ && a.q_ == b.q_;
  }

  // "1 + sqrt(-1)", "-1/2*sqrt(5)"
  std::string to_string() const;

 private:
  struct Unchecked {};
  QuadElem(Rational p, Rational q, Integer f, Unchecked) : p_(std::move(p)), q_(std::move(q)), f_(std::move(f)) {}
  Rational p_, q_;
  Integer f_;
};

Rational norm(const QuadElem& x);
// x / sigma(x), of norm 1. Throws ZeroInput.
QuadElem hilbert90(const QuadElem& x);
// Least k <= 6 with x^k rational; nullopt means infinite order in L*/Q*. Throws ZeroInput.
std::optional<int> torsion_order(const QuadElem& x);

struct TorsionGroup {
  int order = 2;
  QuadElem generator;
  // generator^1 .. generator^order, the last one rational
  std::vector<QuadElem> powers;
  std::string label() const { return "Z" + std::to_string(order); }
  std::string structure() const { return label() + " x Z^(Z)"; }
};

// Torsion of Q(sqrt f)*/Q*. Throws BadF.
TorsionGroup torsion_group(const Integer& f, long trial_bound = kDefaultTrialBound);

}  // namespace cremona
