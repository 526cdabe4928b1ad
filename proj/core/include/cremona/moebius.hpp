#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cremona/ratfunc.hpp"

namespace cremona {

// A point of P^1(Q): a rational value or infinity.
struct ProjPoint {
  bool infinite = false;
  Rational value = 0;

  static ProjPoint finite(const Rational& v) { return {false, v}; }
  static ProjPoint infinity() { return {true, 0}; }

  std::string to_string() const { return infinite ? "inf" : cremona::to_string(value); }
  friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
};

// Element of PGL_2(Q), y -> (a y + b) / (c y + d). Stored as a primitive
// integer matrix whose first nonzero entry is positive, so == is class equality.
class Moebius {
 public:
  Moebius() : a_(1), b_(0), c_(0), d_(1) {}
  // Throws InvalidArgument when ad - bc = 0.
  Moebius(const Rational& a, const Rational& b, const Rational& c, const Rational& d);

  static Moebius identity() { return {}; }
  static Moebius translation(const Rational& t) { return {1, t, 0, 1}; }
  static Moebius scaling(const Rational& s) { return {s, 0, 0, 1}; }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  const Rational& d() const { return d_; }
  bool is_identity() const { return *this == Moebius(); }

  ProjPoint apply(const ProjPoint& p) const;
  Rational determinant() const { return a_ * d_ - b_ * c_; }
  Moebius inverse() const { return {d_, -b_, -c_, a_}; }
  RatFunc as_ratfunc() const;

  // (m1 * m2)(p) = m1(m2(p))
  friend Moebius operator*(const Moebius& m1, const Moebius& m2);
  friend bool operator==(const Moebius& x, const Moebius& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }

  // "(a, b, c, d)", the CLI grammar for base actions.
  std::string to_string() const;

 private:
  Rational a_, b_, c_, d_;
};

ProjPoint apply(const Moebius& mu, const ProjPoint& p);

// The unique mu with mu(p_i) = q_i. Throws DegenerateTriple.
Moebius from_triples(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3,
                     const ProjPoint& q1, const ProjPoint& q2, const ProjPoint& q3);

// Exact image mu(C) through the binary form of degree |C|.
Configuration transform_configuration(const Moebius& mu, const Configuration& c);

// Points of C as projective points when every point is rational.
std::optional<std::vector<ProjPoint>> rational_point_list(const Configuration& c);

// Finite subgroup of PGL_2(Q) preserving C. Throws TooSmallConfiguration
// (|C| <= 2) or IrrationalPoints.
std::vector<Moebius> stabilizer(const Configuration& c);

struct JInvariant {
  bool infinite = false;
  Rational value = 0;
  std::string to_string() const { return infinite ? "inf" : cremona::to_string(value); }
  friend bool operator==(const JInvariant& x, const JInvariant& y) {
    return x.infinite == y.infinite && (x.infinite || x.value == y.value);
  }
};

// j = 6912 I^3 / (4 I^3 - J^2) of the binary quartic with root set C. Throws WrongSize.
JInvariant quartic_j_invariant(const Configuration& c);

enum class Verdict { Yes, No, Unknown };
std::string_view to_string(Verdict v);

struct EquivDecision {
  Verdict verdict = Verdict::Unknown;
  // Present on Yes whenever a witness with rational entries exists.
  std::optional<Moebius> witness;
  // On No: the invariant that differs, e.g. "size: 2 != 4".
  std::string certificate;
  // On Unknown, or on Yes without witness: why.
  std::string reason;
  std::vector<std::string> notes;
};

struct EquivOptions {
  // Chordal-distance tolerance of the floating-point screening that annotates
  // Unknown verdicts; never changes a verdict.
  double tol = 1e-10;
};

EquivDecision configurations_equivalent(const Configuration& c1, const Configuration& c2,
                                        const EquivOptions& opts = {});

}  // namespace cremona
