#include "cremona/quadfield.hpp"

#include "cremona/error.hpp"

namespace cremona {

void check_field_tag(const Integer& f, long trial_bound) {
  if (f == 0 || f == 1) throw Error(ErrorCode::BadF, "f must not be 0 or 1");
  Integer m = abs(f);
  for (long d = 2; Integer(d) * d <= m; ++d) {
    if (d > trial_bound) throw Error(ErrorCode::BadF, "cannot certify squarefreeness beyond the trial-division bound");
    if (m % d != 0) continue;
    m /= d;
    if (m % d == 0) throw Error(ErrorCode::BadF, to_string(f) + " is not squarefree");
  }
}

QuadElem::QuadElem(Rational p, Rational q, Integer f) : p_(std::move(p)), q_(std::move(q)), f_(std::move(f)) {
  check_field_tag(f_);
}

QuadElem operator+(const QuadElem& a, const QuadElem& b) {
  if (a.f_ != b.f_) throw Error(ErrorCode::InvalidArgument, "elements of different fields");
  return {a.p_ + b.p_, a.q_ + b.q_, a.f_, QuadElem::Unchecked{}};
}

QuadElem operator-(const QuadElem& a, const QuadElem& b) {
  if (a.f_ != b.f_) throw Error(ErrorCode::InvalidArgument, "elements of different fields");
  return {a.p_ - b.p_, a.q_ - b.q_, a.f_, QuadElem::Unchecked{}};
}

QuadElem operator*(const QuadElem& a, const QuadElem& b) {
  if (a.f_ != b.f_) throw Error(ErrorCode::InvalidArgument, "elements of different fields");
  return {a.p_ * b.p_ + Rational(a.f_) * a.q_ * b.q_, a.p_ * b.q_ + a.q_ * b.p_, a.f_, QuadElem::Unchecked{}};
}

QuadElem QuadElem::inverse() const {
  if (is_zero()) throw Error(ErrorCode::ZeroInput, "inverse of zero");
  const Rational n = norm(*this);
  return {p_ / n, -q_ / n, f_, Unchecked{}};
}

QuadElem QuadElem::pow(unsigned k) const {
  QuadElem result{1, 0, f_, Unchecked{}}, base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

std::string QuadElem::to_string() const {
  const std::string root = "sqrt(" + cremona::to_string(f_) + ")";
  if (is_rational()) return cremona::to_string(p_);
  std::string irr;
  if (q_ == 1) irr = root;
  else if (q_ == -1) irr = "-" + root;
  else irr = cremona::to_string(q_) + "*" + root;
  if (sgn(p_) == 0) return irr;
  if (irr[0] == '-') return cremona::to_string(p_) + " - " + irr.substr(1);
  return cremona::to_string(p_) + " + " + irr;
}

Rational norm(const QuadElem& x) { return x.p() * x.p() - Rational(x.f()) * x.q() * x.q(); }

QuadElem hilbert90(const QuadElem& x) {
  if (x.is_zero()) throw Error(ErrorCode::ZeroInput, "hilbert90 of zero");
  return x / x.conj();
}

std::optional<int> torsion_order(const QuadElem& x) {
  if (x.is_zero()) throw Error(ErrorCode::ZeroInput, "torsion order of zero");
  QuadElem power = x;
  for (int k = 1; k <= 6; ++k) {
    if (power.is_rational()) return k;
    power = power * x;
  }
  return std::nullopt;
}

TorsionGroup torsion_group(const Integer& f, long trial_bound) {
  check_field_tag(f, trial_bound);
  TorsionGroup out;
  if (f == -1) {
    out.order = 4;
    out.generator = QuadElem(1, 1, f);
  } else if (f == -3) {
    out.order = 6;
    out.generator = QuadElem(3, 1, f);
  } else {
    out.order = 2;
    out.generator = QuadElem::sqrt_f(f);
  }
  for (int k = 1; k <= out.order; ++k) out.powers.push_back(out.generator.pow(static_cast<unsigned>(k)));
  if (torsion_order(out.generator) != out.order)
    throw Error(ErrorCode::InvalidArgument, "internal: generator order does not match");
  return out;
}

}  // namespace cremona
