#include "cremona/rational.hpp"

#include "cremona/error.hpp"

namespace cremona {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::SquareInput: return "SquareInput";
    case ErrorCode::ZeroScale: return "ZeroScale";
    case ErrorCode::DegenerateTriple: return "DegenerateTriple";
    case ErrorCode::TooSmallConfiguration: return "TooSmallConfiguration";
    case ErrorCode::IrrationalPoints: return "IrrationalPoints";
    case ErrorCode::WrongSize: return "WrongSize";
    case ErrorCode::NotAlgebraic: return "NotAlgebraic";
    case ErrorCode::NotInAnisotropicTorus: return "NotInAnisotropicTorus";
    case ErrorCode::SquareF: return "SquareF";
    case ErrorCode::BothZero: return "BothZero";
    case ErrorCode::CocycleViolation: return "CocycleViolation";
    case ErrorCode::NoGoodBasePoint: return "NoGoodBasePoint";
    case ErrorCode::NotInjectiveOnBase: return "NotInjectiveOnBase";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::BadDependence: return "BadDependence";
    case ErrorCode::UnsupportedArity: return "UnsupportedArity";
    case ErrorCode::BadF: return "BadF";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownCommand: return "UnknownCommand";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto strip_plus = [](std::string t) {
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    return t;
  };
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw SyntaxError(0, "malformed rational '" + s + "'");
    return Rational(Integer(strip_plus(s)));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw SyntaxError(0, "malformed rational '" + s + "'");
  Integer d(den);
  if (d == 0) throw Error(ErrorCode::ZeroDenominator, "zero denominator in '" + s + "'");
  Rational q(Integer(strip_plus(num)), d);
  q.canonicalize();
  return q;
}

bool rational_sqrt(const Rational& q, Rational& root) {
  if (sgn(q) < 0) return false;
  if (sgn(q) == 0) {
    root = 0;
    return true;
  }
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
    return false;
  Integer n = sqrt(Integer(q.get_num()));
  Integer d = sqrt(Integer(q.get_den()));
  root = Rational(n, d);
  root.canonicalize();
  return true;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace cremona
