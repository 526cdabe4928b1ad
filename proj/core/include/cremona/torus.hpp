#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cremona/jonq.hpp"
#include "cremona/moebius.hpp"
#include "cremona/pgl2k.hpp"
#include "cremona/ratfunc.hpp"

namespace cremona {

// T_f = {(a, b f; b, a)}, keyed by the square class of f.
class Torus {
 public:
  // Throws SquareInput.
  explicit Torus(const RatFunc& f);

  const Configuration& f_canonical() const { return support_; }
  RatFunc f() const { return support_.representative(); }
  int genus() const { return genus_; }
  std::string to_string() const { return "T_{" + f().to_string() + "}"; }

  friend bool operator==(const Torus& a, const Torus& b) { return a.support_ == b.support_; }

 private:
  Configuration support_;
  int genus_ = 0;
};

inline Torus make_torus(const RatFunc& f) { return Torus(f); }

// a I + b (0, f; 1, 0). Throws BothZero.
ProjMatK element(const Torus& t, const RatFunc& a, const RatFunc& b);
// (f(y)/x, y)
JonqElem involution(const Torus& t);

// g = c h^2 (f o mu^-1)
struct ConjWitness {
  Moebius mu;
  RatFunc h;
  Rational c = 1;
  // (lambda(y) x, mu(y)) with lambda = h o mu, available when c is a rational
  // square; it conjugates T_f onto T_g inside Jonq.
  std::optional<JonqElem> conjugator() const;
};

bool verify_witness(const RatFunc& f, const RatFunc& g, const ConjWitness& w);

struct TorusConjDecision {
  Verdict verdict = Verdict::Unknown;
  std::optional<ConjWitness> witness;
  std::string certificate;
  std::string reason;
  std::vector<std::string> notes;
};

TorusConjDecision conjugate_tori(const Torus& t1, const Torus& t2, const EquivOptions& opts = {});
// As above, with the witness relating f and g themselves. Throws SquareInput.
TorusConjDecision conjugate_tori(const RatFunc& f, const RatFunc& g, const EquivOptions& opts = {});

struct AffineLineSeed {};
using BorelSeed = std::variant<Torus, AffineLineSeed>;

struct BorelClass {
  enum class Kind { FullB2, RankOne, RankZero };
  Kind kind = Kind::FullB2;
  std::string model;
  std::string generators;
  int derived_length = 4;
  int rank = 2;
  std::optional<int> genus;
  std::optional<Configuration> f_canonical;
  std::optional<ConjWitness> witness_to_Ty;
};

std::string_view to_string(BorelClass::Kind k);
BorelClass classify_borel(const BorelSeed& seed);

// M commutes with (0, f; 1, 0) projectively.
bool in_normalizer_pgl2k(const ProjMatK& m, const Torus& t);

struct NormalizerDescription {
  std::string group;
  bool is_torus_itself = false;
  // Finite stabilizer of the odd support; absent when that is not computable.
  std::optional<std::vector<Moebius>> base_stabilizer;
  std::string stabilizer_note;
};

NormalizerDescription normalizer_jonq_neutral(const Torus& t);

// f / g is a square in C(y). Throws ZeroInput.
bool equivalent_mod_squares(const RatFunc& f, const RatFunc& g);

}  // namespace cremona
