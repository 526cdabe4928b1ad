#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cremona/mpoly.hpp"

namespace cremona {

// Rational function in x_1..x_n; x_i is MPoly variable i.
using MultiRat = MRat;

inline MultiRat xvar(int i) { return MRat::variable(i); }

// (a_1 x_1 + b_1, ..., a_n x_n + b_n) with a_i, b_i in Q(x_{i+1}, ..., x_n).
class TriangularElem {
 public:
  // Throws BadDependence (or InvalidArgument for a_i = 0 and size mismatch).
  TriangularElem(std::vector<MultiRat> a, std::vector<MultiRat> b);
  static TriangularElem identity(int n);

  int arity() const { return static_cast<int>(a_.size()); }
  // 1-based
  const MultiRat& a(int i) const { return a_[static_cast<std::size_t>(i - 1)]; }
  const MultiRat& b(int i) const { return b_[static_cast<std::size_t>(i - 1)]; }
  MultiRat component(int i) const { return a(i) * xvar(i) + b(i); }
  bool is_identity() const;

  friend bool operator==(const TriangularElem& f, const TriangularElem& g) { return f.a_ == g.a_ && f.b_ == g.b_; }

  // "(x2*x1 + 1, x2)"
  std::string to_string() const;

 private:
  std::vector<MultiRat> a_, b_;
};

std::vector<std::string> bn_names(int n);

// f o g. Throws ArityMismatch.
TriangularElem compose(const TriangularElem& f, const TriangularElem& g);
TriangularElem inverse(const TriangularElem& f);
// f g f^-1 g^-1
TriangularElem commutator(const TriangularElem& f, const TriangularElem& g);

// x_k -> a x_k, resp. x_k -> x_k + b. Throws BadDependence.
TriangularElem dilatation(int n, int k, const MultiRat& a);
TriangularElem elementary(int n, int k, const MultiRat& b);

// [d(i, a), e(i, b)] == e(i, b (a - 1))
bool verify_identity_de(int n, int i, const MultiRat& a, const MultiRat& b);
// [d(i, a), e(i+1, c)] == d(i, a(x_{i+1}) / a(x_{i+1} - c)); a in Q(x_{i+1}).
bool verify_identity_dd(int n, int i, const MultiRat& a, const Rational& c);

// f_i = x_i for i > k
bool in_Uk_shape(const TriangularElem& f, int k);
// additionally f_k = x_k + b_k
bool in_Vk_shape(const TriangularElem& f, int k);

struct WitnessStep {
  int level = 0;  // depth in the derived series
  std::string label;
  TriangularElem element = TriangularElem::identity(1);
  bool matches_formula = false;
  bool shape_ok = false;
};

struct DerivedWitness {
  int n = 0;
  std::vector<WitnessStep> steps;  // post-order, the last one is the witness
  const TriangularElem& final_element() const { return steps.back().element; }
  // final element != id and every step checked out
  bool ok() const;
  int derived_length_lower_bound() const { return 2 * n; }
};

// Throws UnsupportedArity for n outside 1..3.
DerivedWitness derived_witness(int n);

struct ShapeClosureReport {
  int samples = 0;
  int failures = 0;
  std::vector<std::string> messages;
};

// Consistency check, not a proof: commutators of random U_k (resp. V_k)
// shaped elements must be V_k (resp. U_{k-1}) shaped.
ShapeClosureReport check_shape_closure(int n, int samples, std::uint64_t seed);

// Random element of Q(x_{lo}, ..., x_n): a ratio of small linear forms.
MultiRat random_multirat(int n, int lo, std::mt19937_64& rng, bool nonzero);

}  // namespace cremona
