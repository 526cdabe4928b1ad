#include "cremona/bn.hpp"

#include <map>

#include "cremona/error.hpp"

namespace cremona {

namespace {

void check_dependence(const MultiRat& r, int k, int n, const char* what) {
  for (int v = 0; v <= k; ++v)
    if (r.depends_on(v)) throw Error(ErrorCode::BadDependence, std::string(what) + " depends on x_" + std::to_string(v));
  if (r.max_var() > n) throw Error(ErrorCode::BadDependence, std::string(what) + " uses a variable beyond x_" + std::to_string(n));
}

std::map<int, MRat> components(const TriangularElem& g) {
  std::map<int, MRat> out;
  for (int j = 1; j <= g.arity(); ++j) out.emplace(j, g.component(j));
  return out;
}

}  // namespace

TriangularElem::TriangularElem(std::vector<MultiRat> av, std::vector<MultiRat> bv) : a_(std::move(av)), b_(std::move(bv)) {
  if (a_.size() != b_.size() || a_.empty()) throw Error(ErrorCode::InvalidArgument, "need n >= 1 pairs (a_i, b_i)");
  const int n = arity();
  for (int i = 1; i <= n; ++i) {
    if (a(i).is_zero()) throw Error(ErrorCode::InvalidArgument, "a_" + std::to_string(i) + " is zero");
    check_dependence(a(i), i, n, ("a_" + std::to_string(i)).c_str());
    check_dependence(b(i), i, n, ("b_" + std::to_string(i)).c_str());
  }
}

TriangularElem TriangularElem::identity(int n) {
  return {std::vector<MultiRat>(static_cast<std::size_t>(n), MRat(1)), std::vector<MultiRat>(static_cast<std::size_t>(n), MRat(0))};
}

bool TriangularElem::is_identity() const { return *this == identity(arity()); }

std::vector<std::string> bn_names(int n) {
  std::vector<std::string> names{"x0"};
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

std::string TriangularElem::to_string() const {
  const auto names = bn_names(arity());
  std::string out = "(";
  for (int i = 1; i <= arity(); ++i) {
    if (i > 1) out += ", ";
    out += component(i).to_string(names);
  }
  return out + ")";
}

TriangularElem compose(const TriangularElem& f, const TriangularElem& g) {
  if (f.arity() != g.arity()) throw Error(ErrorCode::ArityMismatch, "arities differ");
  const auto sub = components(g);
  std::vector<MultiRat> a, b;
  for (int i = 1; i <= f.arity(); ++i) {
    const MRat ai = f.a(i).substitute(sub);
    a.push_back(ai * g.a(i));
    b.push_back(ai * g.b(i) + f.b(i).substitute(sub));
  }
  return {a, b};
}

TriangularElem inverse(const TriangularElem& f) {
  const int n = f.arity();
  std::vector<MultiRat> a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
  std::map<int, MRat> h;
  for (int i = n; i >= 1; --i) {
    const MRat ai = f.a(i).substitute(h);
    const MRat inv = ai.inverse();
    a[static_cast<std::size_t>(i - 1)] = inv;
    b[static_cast<std::size_t>(i - 1)] = -(f.b(i).substitute(h) * inv);
    h.emplace(i, inv * xvar(i) + b[static_cast<std::size_t>(i - 1)]);
  }
  return {a, b};
}

TriangularElem commutator(const TriangularElem& f, const TriangularElem& g) {
  return compose(compose(f, g), compose(inverse(f), inverse(g)));
}

TriangularElem dilatation(int n, int k, const MultiRat& a) {
  if (k < 1 || k > n) throw Error(ErrorCode::BadDependence, "index out of range");
  std::vector<MultiRat> av, bv;
  for (int i = 1; i <= n; ++i) {
    av.push_back(i == k ? a : MRat(1));
    bv.push_back(MRat(0));
  }
  return {av, bv};
}

TriangularElem elementary(int n, int k, const MultiRat& b) {
  if (k < 1 || k > n) throw Error(ErrorCode::BadDependence, "index out of range");
  std::vector<MultiRat> av, bv;
  for (int i = 1; i <= n; ++i) {
    av.push_back(MRat(1));
    bv.push_back(i == k ? b : MRat(0));
  }
  return {av, bv};
}

bool verify_identity_de(int n, int i, const MultiRat& a, const MultiRat& b) {
  return commutator(dilatation(n, i, a), elementary(n, i, b)) == elementary(n, i, b * (a - MRat(1)));
}

bool verify_identity_dd(int n, int i, const MultiRat& a, const Rational& c) {
  if (i < 1 || i >= n) throw Error(ErrorCode::BadDependence, "need 1 <= i <= n - 1");
  if (a.max_var() > i + 1) throw Error(ErrorCode::BadDependence, "a must depend on x_{i+1} only");
  const MRat shifted = a.substitute({{i + 1, xvar(i + 1) - MRat(c)}});
  return commutator(dilatation(n, i, a), elementary(n, i + 1, MRat(c))) == dilatation(n, i, a / shifted);
}

bool in_Uk_shape(const TriangularElem& f, int k) {
  for (int i = std::max(k + 1, 1); i <= f.arity(); ++i)
    if (!(f.a(i) == MRat(1)) || !f.b(i).is_zero()) return false;
  return true;
}

bool in_Vk_shape(const TriangularElem& f, int k) {
  if (!in_Uk_shape(f, k)) return false;
  return k < 1 || k > f.arity() || f.a(k) == MRat(1);
}

bool DerivedWitness::ok() const {
  if (steps.empty() || final_element().is_identity()) return false;
  for (const auto& s : steps)
    if (!s.matches_formula || !s.shape_ok) return false;
  return true;
}

namespace {

// Level L of the derived series: L = 2(n-k) is U_k shaped, L = 2(n-k)+1 is V_k shaped.
class WitnessBuilder {
 public:
  explicit WitnessBuilder(int n) : n_(n) {}

  bool shape_at(const TriangularElem& f, int level) const {
    const int k = n_ - level / 2;
    return level % 2 == 0 ? in_Uk_shape(f, k) : in_Vk_shape(f, k);
  }

  // Coefficient of the dilatation D_i reachable at this level.
  MRat dil_coeff(int i, int level) const {
    if (level == 0) return i == n_ ? MRat(2) : xvar(i + 1);
    const MRat a = dil_coeff(i, level - 1);
    return a / a.substitute({{i + 1, xvar(i + 1) - MRat(1)}});
  }

  TriangularElem dil(int i, int level) {
    const MRat a = dil_coeff(i, level);
    const TriangularElem expected = dilatation(n_, i, a);
    if (level == 0) return record(level, "d(" + std::to_string(i) + ", " + a.to_string(bn_names(n_)) + ")", expected, expected);
    const TriangularElem f = dil(i, level - 1);
    const TriangularElem g = elem(i + 1, MRat(1), level - 1);
    return record(level, "[D_" + std::to_string(i) + ", E_" + std::to_string(i + 1) + "]", commutator(f, g), expected);
  }

  TriangularElem elem(int i, const MRat& b, int level) {
    const TriangularElem expected = elementary(n_, i, b);
    if (level == 0) return record(level, "e(" + std::to_string(i) + ", " + b.to_string(bn_names(n_)) + ")", expected, expected);
    const MRat a = dil_coeff(i, level - 1);
    const TriangularElem f = dil(i, level - 1);
    const TriangularElem g = elem(i, b / (a - MRat(1)), level - 1);
    return record(level, "[D_" + std::to_string(i) + ", E_" + std::to_string(i) + "]", commutator(f, g), expected);
  }

  std::vector<WitnessStep> steps;

 private:
  TriangularElem record(int level, std::string label, const TriangularElem& got, const TriangularElem& expected) {
    steps.push_back({level, std::move(label), got, got == expected, shape_at(got, level)});
    return got;
  }
  int n_;
};

}  // namespace

DerivedWitness derived_witness(int n) {
  if (n < 1 || n > 3) throw Error(ErrorCode::UnsupportedArity, "derived witnesses are built for n = 1, 2, 3");
  WitnessBuilder builder(n);
  builder.elem(1, MRat(1), 2 * n - 1);
  return {n, std::move(builder.steps)};
}

MultiRat random_multirat(int n, int lo, std::mt19937_64& rng, bool nonzero) {
  std::uniform_int_distribution<int> coef(-3, 3);
  auto linear = [&](bool avoid_zero) {
    for (;;) {
      MPoly p(coef(rng));
      for (int v = lo; v <= n; ++v) p += MPoly(coef(rng)) * MPoly::variable(v);
      if (!avoid_zero || !p.is_zero()) return p;
    }
  };
  for (;;) {
    const MRat r = MRat::normalize(linear(nonzero), linear(true));
    if (!nonzero || !r.is_zero()) return r;
  }
}

ShapeClosureReport check_shape_closure(int n, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ShapeClosureReport out;
  std::uniform_int_distribution<int> pick_k(1, n);
  auto random_shaped = [&](int k, bool v_shape) {
    std::vector<MultiRat> a, b;
    for (int i = 1; i <= n; ++i) {
      if (i > k || (v_shape && i == k)) {
        a.push_back(MRat(1));
      } else {
        a.push_back(random_multirat(n, i + 1, rng, true));
      }
      b.push_back(i > k ? MRat(0) : random_multirat(n, i + 1, rng, false));
    }
    return TriangularElem(a, b);
  };
  for (int s = 0; s < samples; ++s) {
    const int k = pick_k(rng);
    const bool v_shape = s % 2 == 1;
    const TriangularElem c = commutator(random_shaped(k, v_shape), random_shaped(k, v_shape));
    const bool ok = v_shape ? in_Uk_shape(c, k - 1) : in_Vk_shape(c, k);
    ++out.samples;
    if (!ok) {
      ++out.failures;
      out.messages.push_back(std::string(v_shape ? "V_" : "U_") + std::to_string(k) + " commutator " + c.to_string());
    }
  }
  return out;
}

}  // namespace cremona
