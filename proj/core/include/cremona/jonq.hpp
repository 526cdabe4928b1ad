#pragma once

#include <string>
#include <vector>

#include "cremona/moebius.hpp"
#include "cremona/mpoly.hpp"
#include "cremona/pgl2k.hpp"

namespace cremona {

// (x, y) -> ((alpha(y) x + beta(y)) / (gamma(y) x + delta(y)), m(y)),
// an element of PGL_2(Q(y)) x| PGL_2.
class JonqElem {
 public:
  JonqElem() = default;
  JonqElem(ProjMatK fiber, Moebius base) : fiber_(std::move(fiber)), base_(std::move(base)) {}
  static JonqElem identity() { return {}; }

  const ProjMatK& fiber() const { return fiber_; }
  const Moebius& base() const { return base_; }
  bool is_identity() const { return fiber_.is_identity() && base_.is_identity(); }

  friend bool operator==(const JonqElem& a, const JonqElem& b) {
    return a.fiber_ == b.fiber_ && a.base_ == b.base_;
  }

  // "jonq(A = [[..], [..]], m = (a, b, c, d))", the CLI grammar.
  std::string to_string() const;

 private:
  ProjMatK fiber_;
  Moebius base_;
};

// j1 o j2, the right factor acting first.
JonqElem compose(const JonqElem& j1, const JonqElem& j2);
JonqElem inverse(const JonqElem& j);
JonqElem power(const JonqElem& j, unsigned k);
Moebius base_action(const JonqElem& j);

// [F1 : F2 : F3] in variables Z = x_0, Y = x_1, X = x_2, without common factor.
struct PlaneMap {
  MPoly f1, f2, f3;
  int degree() const;
  std::string to_string() const;
  friend bool operator==(const PlaneMap& a, const PlaneMap& b) {
    return a.f1 == b.f1 && a.f2 == b.f2 && a.f3 == b.f3;
  }
};

PlaneMap to_plane_map(const JonqElem& j);
int cremona_degree(const JonqElem& j);
// Degrees of j, j^2, ..., j^n.
std::vector<int> degree_sequence(const JonqElem& j, int n);

enum class TwistStatus { Algebraic, Twist, Unknown };
std::string_view to_string(TwistStatus s);

struct TwistReport {
  TwistStatus status = TwistStatus::Unknown;
  // false when the verdict rests on the degree-growth heuristic.
  bool exact = true;
  std::string basis;
  std::vector<int> degrees;
};

// Exact for trivial base (Baum-Bott), for base-only elements, for constant
// fibers and for elements of finite order <= bound; otherwise Twist only when
// new degree maxima keep appearing at least every second iterate.
TwistReport twist_status(const JonqElem& j, int bound);

}  // namespace cremona
