#include "cremona/expr.hpp"

#include <cctype>

#include "cremona/error.hpp"

namespace cremona {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const VarTable& vars) : s_(text), vars_(vars) {}

  std::size_t pos() const { return pos_; }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip();
    return pos_ >= s_.size();
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  void expect_end() {
    if (!at_end()) fail("unexpected trailing input");
  }

  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(pos_, msg); }

  // Identifier at the cursor without consuming it; "" if none.
  std::string peek_identifier() {
    skip();
    const std::size_t save = pos_;
    std::string id = identifier();
    pos_ = save;
    return id;
  }

  std::string identifier() {
    skip();
    if (s_.substr(pos_, 2) == "\xCE\xBB") {
      pos_ += 2;
      return "lambda";
    }
    std::size_t end = pos_;
    if (end < s_.size() && std::isalpha(static_cast<unsigned char>(s_[end]))) {
      while (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_')) ++end;
    }
    std::string id(s_.substr(pos_, end - pos_));
    pos_ = end;
    return id;
  }

  void keyword(const std::string& kw) {
    const std::size_t at = pos_;
    if (identifier() != kw) {
      pos_ = at;
      fail("expected '" + kw + "'");
    }
  }

  Integer integer() {
    skip();
    std::size_t end = pos_;
    while (end < s_.size() && std::isdigit(static_cast<unsigned char>(s_[end]))) ++end;
    if (end == pos_) fail("expected an integer");
    Integer v(std::string(s_.substr(pos_, end - pos_)));
    pos_ = end;
    return v;
  }

  MRat expr() {
    MRat acc = term();
    for (;;) {
      if (accept('+')) acc = acc + term();
      else if (accept('-')) acc = acc - term();
      else return acc;
    }
  }

  MRat term() {
    MRat acc = factor();
    for (;;) {
      if (accept('*')) {
        acc = acc * factor();
      } else if (peek('/')) {
        const std::size_t at = pos_;
        ++pos_;
        const MRat d = factor();
        if (d.is_zero()) throw Error(ErrorCode::ZeroDenominator, "division by zero at offset " + std::to_string(at));
        acc = acc / d;
      } else {
        return acc;
      }
    }
  }

  MRat factor() {
    if (accept('-')) return -factor();
    return power();
  }

  MRat power() {
    MRat base = atom();
    if (!accept('^')) return base;
    const bool negative = accept('-');
    const Integer e = integer();
    if (!e.fits_uint_p() || e > 100000) fail("exponent too large");
    unsigned k = static_cast<unsigned>(e.get_ui());
    if (negative) {
      if (base.is_zero()) throw Error(ErrorCode::ZeroDenominator, "negative power of zero");
      base = base.inverse();
    }
    MRat out(1);
    while (k) {
      if (k & 1u) out = out * base;
      k >>= 1u;
      if (k) base = base * base;
    }
    return out;
  }

  MRat atom() {
    skip();
    if (accept('(')) {
      MRat e = expr();
      expect(')');
      return e;
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) return MRat(Rational(integer()));
    const std::size_t at = pos_;
    const std::string id = identifier();
    if (id.empty()) fail(pos_ >= s_.size() ? "unexpected end of input" : "unexpected character");
    auto it = vars_.find(id);
    if (it == vars_.end()) {
      pos_ = at;
      fail("unknown identifier '" + id + "'");
    }
    return MRat::variable(it->second);
  }

  // '(' e (',' e)* ')' of expressions
  std::vector<MRat> tuple() {
    expect('(');
    std::vector<MRat> out{expr()};
    while (accept(',')) out.push_back(expr());
    expect(')');
    return out;
  }

  std::array<MRat, 4> matrix() {
    expect('[');
    expect('[');
    MRat a = expr();
    expect(',');
    MRat b = expr();
    expect(']');
    expect(',');
    expect('[');
    MRat c = expr();
    expect(',');
    MRat d = expr();
    expect(']');
    expect(']');
    return {a, b, c, d};
  }

 private:
  std::string_view s_;
  const VarTable& vars_;
  std::size_t pos_ = 0;
};

constexpr int kY = 0;

RatFunc to_ratfunc(const MRat& r) { return RatFunc::normalize(r.num().to_poly(kY), r.den().to_poly(kY)); }

Rational to_rational(const MRat& r, std::size_t pos) {
  if (!r.is_constant()) throw SyntaxError(pos, "expected a rational constant");
  return r.constant_value();
}

ProjMatK projmat_of(const std::array<MRat, 4>& m) {
  return ProjMatK::from_ratfuncs(to_ratfunc(m[0]), to_ratfunc(m[1]), to_ratfunc(m[2]), to_ratfunc(m[3]));
}

Moebius moebius_of_ratfunc(const RatFunc& f, std::size_t pos) {
  if (f.num().degree() > 1 || f.den().degree() > 1 || f.is_constant())
    throw SyntaxError(pos, "expected a Moebius transformation of degree one");
  return Moebius(f.num().coeff(1), f.num().coeff(0), f.den().coeff(1), f.den().coeff(0));
}

Moebius moebius_tuple(Parser& p) {
  const std::size_t at = p.pos();
  const auto t = p.tuple();
  if (t.size() != 4) throw SyntaxError(at, "expected (a, b, c, d)");
  return Moebius(to_rational(t[0], at), to_rational(t[1], at), to_rational(t[2], at), to_rational(t[3], at));
}

}  // namespace

VarTable y_vars() { return {{"y", kY}}; }

VarTable bn_vars(int n) {
  VarTable v;
  for (int i = 1; i <= n; ++i) v.emplace("x" + std::to_string(i), i);
  if (n == 1) v.emplace("x", 1);
  return v;
}

MRat parse_multirat(std::string_view text, const VarTable& vars) {
  Parser p(text, vars);
  MRat r = p.expr();
  p.expect_end();
  return r;
}

Rational parse_rational_expr(std::string_view text) {
  const VarTable none;
  return to_rational(parse_multirat(text, none), 0);
}

RatFunc parse_ratfunc(std::string_view text) { return to_ratfunc(parse_multirat(text, y_vars())); }

Poly parse_poly(std::string_view text) {
  const RatFunc f = parse_ratfunc(text);
  if (!f.den().is_constant()) throw SyntaxError(0, "expected a polynomial");
  return f.num();
}

std::array<MRat, 4> parse_matrix(std::string_view text, const VarTable& vars) {
  Parser p(text, vars);
  auto m = p.matrix();
  p.expect_end();
  return m;
}

ProjMatK parse_projmat(std::string_view text) { return projmat_of(parse_matrix(text, y_vars())); }

Moebius parse_moebius(std::string_view text) {
  const VarTable vars = y_vars();
  Parser p(text, vars);
  // A 4-tuple, otherwise an expression in y.
  {
    Parser probe(text, vars);
    try {
      Moebius m = moebius_tuple(probe);
      probe.expect_end();
      return m;
    } catch (const SyntaxError&) {
    }
  }
  MRat r = p.expr();
  p.expect_end();
  return moebius_of_ratfunc(to_ratfunc(r), 0);
}

JonqElem parse_jonq(std::string_view text) {
  const VarTable vars{{"y", kY}, {"x", 1}};
  Parser p(text, vars);
  if (p.peek_identifier() == "jonq") {
    p.keyword("jonq");
    p.expect('(');
    p.keyword("A");
    p.expect('=');
    const ProjMatK a = projmat_of(p.matrix());
    p.expect(',');
    p.keyword("m");
    p.expect('=');
    const Moebius m = moebius_tuple(p);
    p.expect(')');
    p.expect_end();
    return {a, m};
  }
  p.expect('(');
  const std::size_t xat = p.pos();
  const MRat xe = p.expr();
  p.expect(',');
  const std::size_t yat = p.pos();
  const MRat ye = p.expr();
  p.expect(')');
  p.expect_end();
  if (ye.depends_on(1)) throw SyntaxError(yat, "second coordinate must depend on y only");
  const Moebius m = moebius_of_ratfunc(to_ratfunc(ye), yat);
  if (xe.num().degree_in(1) > 1 || xe.den().degree_in(1) > 1 || !xe.depends_on(1))
    throw SyntaxError(xat, "first coordinate must be a Moebius transformation in x");
  auto coeff = [](const MPoly& p, int k) { return p.coeff_in(1, k).to_poly(kY); };
  return {ProjMatK(coeff(xe.num(), 1), coeff(xe.num(), 0), coeff(xe.den(), 1), coeff(xe.den(), 0)), m};
}

PlaneMap parse_plane_map(std::string_view text) {
  const VarTable vars{{"Z", 0}, {"Y", 1}, {"X", 2}};
  Parser p(text, vars);
  p.expect('[');
  std::array<MPoly, 3> f;
  for (int i = 0; i < 3; ++i) {
    if (i) p.expect(':');
    const std::size_t at = p.pos();
    const MRat e = p.expr();
    if (!e.den().is_constant()) throw SyntaxError(at, "expected a polynomial");
    f[static_cast<std::size_t>(i)] = e.num() * (1 / e.den().constant_value());
  }
  p.expect(']');
  p.expect_end();
  return {f[0], f[1], f[2]};
}

Configuration parse_configuration(std::string_view text) {
  const VarTable vars = y_vars();
  Parser p(text, vars);
  p.expect('{');
  Poly finite(1);
  bool inf = false;
  if (!p.accept('}')) {
    do {
      const std::size_t at = p.pos();
      const std::string id = p.peek_identifier();
      if (id == "inf") {
        p.keyword("inf");
        if (inf) throw SyntaxError(at, "inf listed twice");
        inf = true;
      } else if (id == "roots") {
        p.keyword("roots");
        p.expect('(');
        const MRat r = p.expr();
        p.expect(')');
        if (!r.den().is_constant() || r.num().total_degree() < 1) throw SyntaxError(at, "roots() needs a nonconstant polynomial");
        finite = finite * r.num().to_poly(kY);
      } else {
        const MRat r = p.expr();
        finite = finite * Poly::linear_root(to_rational(r, at));
      }
    } while (p.accept(','));
    p.expect('}');
  }
  p.expect_end();
  return Configuration(finite, inf);
}

TriangularElem parse_triangular(std::string_view text, int n) {
  const VarTable vars = bn_vars(n);
  Parser p(text, vars);
  const std::size_t at = p.pos();
  std::vector<MRat> comps;
  if (n > 1) {
    comps = p.tuple();
  } else {
    comps.push_back(p.expr());
  }
  p.expect_end();
  if (static_cast<int>(comps.size()) != n) throw Error(ErrorCode::ArityMismatch, "expected " + std::to_string(n) + " coordinates");
  std::vector<MultiRat> a, b;
  for (int i = 1; i <= n; ++i) {
    const MRat& c = comps[static_cast<std::size_t>(i - 1)];
    if (c.num().degree_in(i) > 1 || c.den().depends_on(i))
      throw SyntaxError(at, "coordinate " + std::to_string(i) + " must be affine in x" + std::to_string(i));
    const MRat den = MRat(c.den());
    a.push_back(MRat(c.num().coeff_in(i, 1)) / den);
    b.push_back(MRat(c.num().coeff_in(i, 0)) / den);
  }
  return {a, b};
}

QuadElem parse_quad(std::string_view text, const Integer& f) {
  // Each sqrt(..) becomes the variable s, padded so error offsets still match.
  std::string src(text);
  for (std::size_t pos = src.find("sqrt("); pos != std::string::npos; pos = src.find("sqrt(", pos)) {
    const std::size_t close = src.find(')', pos);
    if (close == std::string::npos) throw SyntaxError(pos, "unclosed sqrt(");
    const Rational inner = parse_rational_expr(std::string_view(src).substr(pos + 5, close - pos - 5));
    if (inner != Rational(f)) throw SyntaxError(pos + 5, "expected sqrt(" + to_string(f) + ")");
    src.replace(pos, close - pos + 1, "s" + std::string(close - pos, ' '));
  }
  const MRat v = parse_multirat(src, {{"s", 0}});
  if (!v.den().is_constant() || v.num().degree_in(0) > 1)
    throw SyntaxError(0, "expected p + q*sqrt(f)");
  const Rational d = v.den().constant_value();
  return QuadElem(v.num().coeff_in(0, 0).constant_value() / d, v.num().coeff_in(0, 1).constant_value() / d, f);
}

}  // namespace cremona
