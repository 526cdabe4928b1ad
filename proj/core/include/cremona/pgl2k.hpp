#pragma once

#include <optional>
#include <string>
#include <utility>

#include "cremona/moebius.hpp"
#include "cremona/ratfunc.hpp"

namespace cremona {

// Element of PGL_2(Q(y)) held as a polynomial matrix (alpha, beta; gamma, delta)
// whose entries have no common polynomial factor and jointly coprime integer
// coefficients; the leading coefficient of the first nonzero entry is positive.
// Equal classes therefore compare equal with ==.
class ProjMatK {
 public:
  ProjMatK() : ProjMatK(1, 0, 0, 1) {}
  // Throws InvalidArgument when the determinant vanishes.
  ProjMatK(const Poly& alpha, const Poly& beta, const Poly& gamma, const Poly& delta);
  // Clears denominators; the class is unchanged.
  static ProjMatK from_ratfuncs(const RatFunc& alpha, const RatFunc& beta, const RatFunc& gamma,
                                const RatFunc& delta);
  static ProjMatK identity() { return {}; }

  const Poly& alpha() const { return alpha_; }
  const Poly& beta() const { return beta_; }
  const Poly& gamma() const { return gamma_; }
  const Poly& delta() const { return delta_; }

  Poly trace() const { return alpha_ + delta_; }
  Poly det() const { return alpha_ * delta_ - beta_ * gamma_; }
  bool is_identity() const;
  ProjMatK inverse() const;
  // A(m(y)): substitute the Moebius map into every entry.
  ProjMatK substitute(const Moebius& m) const;

  friend ProjMatK operator*(const ProjMatK& x, const ProjMatK& y);
  friend bool operator==(const ProjMatK& x, const ProjMatK& y) {
    return x.alpha_ == y.alpha_ && x.beta_ == y.beta_ && x.gamma_ == y.gamma_ && x.delta_ == y.delta_;
  }

  // "[[alpha, beta], [gamma, delta]]"
  std::string to_string() const;

 private:
  Poly alpha_, beta_, gamma_, delta_;
};

inline ProjMatK mul(const ProjMatK& x, const ProjMatK& y) { return x * y; }
inline ProjMatK inv(const ProjMatK& x) { return x.inverse(); }
inline bool is_identity(const ProjMatK& x) { return x.is_identity(); }

// tr^2 / det, independent of the lift.
RatFunc baum_bott(const ProjMatK& a);
// The class has bounded degree growth iff its Baum-Bott index is constant.
bool is_algebraic(const ProjMatK& a);

struct CanonicalForm {
  enum class Kind { Identity, Diagonal, Unipotent, AntiDiagonal };
  Kind kind = Kind::Identity;
  // Diagonal: Baum-Bott value, which identifies diag(a, 1) up to a <-> 1/a.
  Rational bb = 4;
  // AntiDiagonal: square class of f in (0, f; 1, 0).
  std::optional<Configuration> f_canonical;
  // Normal-form matrix when it has rational entries.
  std::optional<ProjMatK> representative;
  // conjugator^-1 * A * conjugator == representative, when one exists over Q(y).
  std::optional<ProjMatK> conjugator;
};

std::string_view to_string(CanonicalForm::Kind k);

// Throws NotAlgebraic.
CanonicalForm classify_algebraic(const ProjMatK& a);

// Square class of tr^2 - 4 det, naming the unique torus T_f through A.
// Throws NotInAnisotropicTorus when that discriminant is a square in C(y).
Configuration recover_torus(const ProjMatK& a);

// (a : b) with A = a I + b (0, f; 1, 0) projectively, scaled so that b = 1,
// or (1, 0) for the identity. Throws SquareF.
std::optional<std::pair<RatFunc, RatFunc>> membership_in_torus(const ProjMatK& a, const RatFunc& f);

}  // namespace cremona
