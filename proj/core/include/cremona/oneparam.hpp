#pragma once

#include <array>
#include <optional>
#include <string>

#include "cremona/mpoly.hpp"
#include "cremona/pgl2k.hpp"

namespace cremona {

// Variable indices of the families below.
inline constexpr int kVarY = 0;
inline constexpr int kVarParam = 1;  // t, or lambda

// 2x2 matrix over Q[y, param], row major.
struct Mat2 {
  std::array<MPoly, 4> e{MPoly(1), MPoly(0), MPoly(0), MPoly(1)};

  MPoly det() const { return e[0] * e[3] - e[1] * e[2]; }
  Mat2 adjugate() const { return {{e[3], -e[1], -e[2], e[0]}}; }
  Mat2 substitute(const std::map<int, MPoly>& values) const;
  bool is_zero() const;
  friend Mat2 operator*(const Mat2& x, const Mat2& y);
  // Equal up to a nonzero scalar of the fraction field.
  bool proportional(const Mat2& o) const;
  std::string to_string(const std::vector<std::string>& names) const;
};

// t -> (A_t(y), m_t) with m_t = y or y + t.
struct AdditiveFamily {
  Mat2 a;
  bool translate_base = false;

  // Throws InvalidArgument unless A_0 is the identity projectively and
  // det A_{t0} is nonzero for every complex t0.
  AdditiveFamily(Mat2 matrix, bool translate);
};

// lambda -> (s_lambda(y), lambda^k y); negative powers of lambda are cleared
// by a common power of lambda, which leaves the projective class unchanged.
struct MultiplicativeFamily {
  Mat2 s;
  int k = 1;

  // Entries in Q[lambda, lambda^-1, y]. Throws InvalidArgument when a
  // denominator is not a power of lambda, s_1 is not the identity, or det
  // vanishes identically at some lambda0 != 0.
  MultiplicativeFamily(const std::array<MRat, 4>& entries, int base_exponent);
};

// A_{t+u}(y) = A_t(y + u) A_u(y) projectively (base y + t), or
// A_{t+u}(y) = A_t(y) A_u(y) (trivial base).
bool check_additive_cocycle(const AdditiveFamily& f);

struct AdditiveTrivialization {
  enum class Kind { U1, U2 };
  Kind kind = Kind::U1;
  // U2: the conjugator (B(y) x, y) and the base point used.
  std::optional<ProjMatK> b;
  std::optional<Rational> y0;
};

// Throws CocycleViolation, NoGoodBasePoint.
AdditiveTrivialization trivialize_additive(const AdditiveFamily& f);

struct MultiplicativeTrivialization {
  ProjMatK t;
  Rational y0;
};

// t(lambda^k y) t(y)^-1 = s_lambda(y). Throws NotInjectiveOnBase,
// CocycleViolation, NoGoodBasePoint.
MultiplicativeTrivialization trivialize_multiplicative(const MultiplicativeFamily& f);

}  // namespace cremona
