#include "cremona_cli/commands.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "cremona/bn.hpp"
#include "cremona/error.hpp"
#include "cremona/expr.hpp"
#include "cremona/jonq.hpp"
#include "cremona/moebius.hpp"
#include "cremona/oneparam.hpp"
#include "cremona/pgl2k.hpp"
#include "cremona/quadfield.hpp"
#include "cremona/ratfunc.hpp"
#include "cremona/torus.hpp"

namespace cremona::cli {

namespace {

using Args = std::vector<std::string>;
using Handler = std::function<void(const Args&, const Options&, Report&)>;

struct Command {
  std::size_t min_args;
  std::size_t max_args;
  std::string usage;
  Handler handler;
};

std::string str(const Rational& q) { return to_string(q); }

void need_check(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::InvalidArgument, "self-check failed: " + what);
}

void set_verdict(Report& r, bool yes) { r.verdict = yes ? "Yes" : "No"; }

// A configuration literal "{...}" or the odd support of an expression in y.
Configuration config_arg(const std::string& s) {
  if (!s.empty() && s.front() == '{') return parse_configuration(s);
  return odd_support(parse_ratfunc(s));
}

Json moebius_list(const std::vector<Moebius>& ms) {
  Json out = Json::array();
  for (const auto& m : ms) out.push_back(m.to_string());
  return out;
}

void cmd_degree(const Args& a, const Options&, Report& r) {
  const auto d = geometric_degree_checked(parse_ratfunc(a[0]));
  r.result["degree"] = d.degree;
  r.result["zero_input"] = d.zero_input;
}

void cmd_odd_support(const Args& a, const Options&, Report& r) {
  const Configuration c = odd_support(parse_ratfunc(a[0]));
  r.result["odd_support"] = c.to_string();
  r.result["size"] = c.size();
  r.result["rational_points"] = Json::array();
  for (const auto& q : c.rational_points()) r.result["rational_points"].push_back(str(q));
  if (c.at_infinity()) r.result["rational_points"].push_back("inf");
}

void cmd_genus(const Args& a, const Options&, Report& r) {
  const RatFunc f = parse_ratfunc(a[0]);
  r.result["genus"] = genus(f);
  r.result["odd_support"] = odd_support(f).to_string();
}

void cmd_square(const Args& a, const Options&, Report& r) {
  const RatFunc f = parse_ratfunc(a[0]);
  const bool sq = is_square_in_Cy(f);
  set_verdict(r, sq);
  if (sq) {
    const auto root = square_root_up_to_constant(f);
    need_check(root && f == RatFunc(root->c) * root->h * root->h, "f = c h^2");
    r.result["c"] = str(root->c);
    r.result["h"] = root->h.to_string();
    r.self_check = true;
  } else {
    r.result["odd_support"] = odd_support(f).to_string();
  }
}

void cmd_bb(const Args& a, const Options&, Report& r) {
  const ProjMatK m = parse_projmat(a[0]);
  const RatFunc bb = baum_bott(m);
  r.result["matrix"] = m.to_string();
  r.result["bb"] = bb.to_string();
  r.result["constant"] = bb.is_constant();
}

void cmd_algebraic(const Args& a, const Options&, Report& r) {
  const ProjMatK m = parse_projmat(a[0]);
  set_verdict(r, is_algebraic(m));
  r.result["bb"] = baum_bott(m).to_string();
}

void cmd_classify(const Args& a, const Options&, Report& r) {
  const ProjMatK m = parse_projmat(a[0]);
  const CanonicalForm cf = classify_algebraic(m);
  r.result["kind"] = std::string(to_string(cf.kind));
  r.result["bb"] = str(cf.bb);
  r.result["f_canonical"] = cf.f_canonical ? Json(cf.f_canonical->to_string()) : Json(nullptr);
  r.result["representative"] = cf.representative ? Json(cf.representative->to_string()) : Json(nullptr);
  r.result["conjugator"] = cf.conjugator ? Json(cf.conjugator->to_string()) : Json(nullptr);
  if (cf.conjugator && cf.representative) {
    need_check(cf.conjugator->inverse() * m * *cf.conjugator == *cf.representative, "Q^-1 A Q = representative");
    r.self_check = true;
  } else if (!cf.conjugator) {
    r.notes.push_back("no conjugator with entries in Q(y); the normal form holds over C(y)");
  }
}

void cmd_recover_torus(const Args& a, const Options&, Report& r) {
  const Configuration c = recover_torus(parse_projmat(a[0]));
  const Torus t(c.representative());
  r.result["f"] = t.f().to_string();
  r.result["f_canonical"] = c.to_string();
  r.result["genus"] = t.genus();
}

void cmd_compose(const Args& a, const Options&, Report& r) {
  r.result["result"] = compose(parse_jonq(a[0]), parse_jonq(a[1])).to_string();
}

void cmd_cremona_degree(const Args& a, const Options&, Report& r) {
  const PlaneMap pm = to_plane_map(parse_jonq(a[0]));
  r.result["degree"] = pm.degree();
  r.result["plane_map"] = pm.to_string();
}

void cmd_degseq(const Args& a, const Options& o, Report& r) {
  r.result["degrees"] = degree_sequence(parse_jonq(a[0]), o.max_iter);
}

void cmd_twist(const Args& a, const Options& o, Report& r) {
  const TwistReport t = twist_status(parse_jonq(a[0]), o.max_iter);
  r.verdict = t.status == TwistStatus::Unknown ? "Unknown" : "Value";
  r.exact = t.exact;
  r.result["status"] = std::string(to_string(t.status));
  r.result["basis"] = t.basis;
  r.result["degrees"] = t.degrees;
}

void cmd_torus_conj(const Args& a, const Options& o, Report& r) {
  const RatFunc f = parse_ratfunc(a[0]), g = parse_ratfunc(a[1]);
  const Torus t1(f), t2(g);
  const TorusConjDecision d = conjugate_tori(f, g, EquivOptions{o.tol});
  r.verdict = std::string(to_string(d.verdict));
  r.result["f"] = f.to_string();
  r.result["g"] = g.to_string();
  r.result["genus"] = Json::array({t1.genus(), t2.genus()});
  if (d.verdict == Verdict::No) r.result["certificate"] = d.certificate;
  if (!d.reason.empty()) r.result["reason"] = d.reason;
  r.notes = d.notes;
  if (d.verdict == Verdict::Unknown) {
    std::ostringstream tol;
    tol << o.tol;
    r.notes.push_back("numeric screening tolerance " + tol.str());
  }
  if (d.verdict != Verdict::Yes) return;
  if (!d.witness) {
    // Yes from invariants alone: recheck them.
    const int s = t1.f_canonical().size();
    need_check(s == t2.f_canonical().size() &&
                   (s <= 3 || (s == 4 && quartic_j_invariant(t1.f_canonical()) == quartic_j_invariant(t2.f_canonical()))),
               "invariants");
    r.result["witness"] = nullptr;
    r.self_check = true;
    return;
  }
  const ConjWitness& w = *d.witness;
  need_check(verify_witness(f, g, w), "g = c h^2 (f o mu^-1)");
  Json wj;
  wj["mu"] = w.mu.to_string();
  wj["h"] = w.h.to_string();
  wj["c"] = str(w.c);
  if (auto phi = w.conjugator()) {
    // phi T_f phi^-1 must land in T_g; checked on (1, 1).
    const JonqElem e(ProjMatK::from_ratfuncs(1, f, 1, 1), Moebius::identity());
    const JonqElem image = compose(compose(*phi, e), inverse(*phi));
    need_check(image.base().is_identity() && membership_in_torus(image.fiber(), g).has_value(), "phi T_f phi^-1 in T_g");
    wj["conjugator"] = phi->to_string();
  } else {
    wj["conjugator"] = nullptr;
    r.notes.push_back("c is not a rational square; the conjugator (sqrt(c) h(mu(y)) x, mu(y)) is defined over Q(sqrt c)");
  }
  r.result["witness"] = wj;
  r.self_check = true;
}

void cmd_borel(const Args& a, const Options&, Report& r) {
  const BorelClass b = a[0] == "aff" ? classify_borel(AffineLineSeed{}) : classify_borel(Torus(parse_ratfunc(a[0])));
  r.result["kind"] = std::string(to_string(b.kind));
  r.result["model"] = b.model;
  r.result["derived_length"] = b.derived_length;
  r.result["rank"] = b.rank;
  r.result["generators"] = b.generators;
  r.result["genus"] = b.genus ? Json(*b.genus) : Json(nullptr);
  r.result["f_canonical"] = b.f_canonical ? Json(b.f_canonical->to_string()) : Json(nullptr);
  if (b.witness_to_Ty) {
    need_check(verify_witness(b.f_canonical->representative(), RatFunc::y(), *b.witness_to_Ty), "witness onto T_y");
    r.result["witness_to_Ty"] = {{"mu", b.witness_to_Ty->mu.to_string()},
                                 {"h", b.witness_to_Ty->h.to_string()},
                                 {"c", str(b.witness_to_Ty->c)}};
    r.self_check = true;
  }
}

void cmd_normalizer(const Args& a, const Options&, Report& r) {
  const Torus t(parse_ratfunc(a[0]));
  if (a.size() == 2) {
    set_verdict(r, in_normalizer_pgl2k(parse_projmat(a[1]), t));
    r.result["torus"] = t.to_string();
    return;
  }
  const NormalizerDescription n = normalizer_jonq_neutral(t);
  r.result["f"] = t.f().to_string();
  r.result["group"] = n.group;
  r.result["is_torus_itself"] = n.is_torus_itself;
  if (n.base_stabilizer) {
    r.result["base_stabilizer_order"] = n.base_stabilizer->size();
    r.result["base_stabilizer"] = moebius_list(*n.base_stabilizer);
  } else {
    r.result["base_stabilizer"] = nullptr;
    r.result["stabilizer_note"] = n.stabilizer_note;
  }
}

void cmd_stab(const Args& a, const Options&, Report& r) {
  const Configuration c = config_arg(a[0]);
  const auto s = stabilizer(c);
  r.result["configuration"] = c.to_string();
  r.result["order"] = s.size();
  r.result["elements"] = moebius_list(s);
}

void cmd_config_equiv(const Args& a, const Options& o, Report& r) {
  const Configuration c1 = config_arg(a[0]), c2 = config_arg(a[1]);
  const EquivDecision d = configurations_equivalent(c1, c2, EquivOptions{o.tol});
  r.verdict = std::string(to_string(d.verdict));
  r.result["c1"] = c1.to_string();
  r.result["c2"] = c2.to_string();
  if (d.verdict == Verdict::No) r.result["certificate"] = d.certificate;
  if (!d.reason.empty()) r.result["reason"] = d.reason;
  r.notes = d.notes;
  if (d.witness) {
    need_check(transform_configuration(*d.witness, c1) == c2, "mu(C1) = C2");
    r.result["witness"] = d.witness->to_string();
    r.self_check = true;
  }
}

void cmd_j_invariant(const Args& a, const Options&, Report& r) {
  const Configuration c = config_arg(a[0]);
  r.result["configuration"] = c.to_string();
  r.result["j"] = quartic_j_invariant(c).to_string();
}

Mat2 polynomial_matrix(const std::array<MRat, 4>& m) {
  Mat2 out;
  for (std::size_t i = 0; i < 4; ++i) {
    if (!m[i].den().is_constant()) throw Error(ErrorCode::InvalidArgument, "family entries must be polynomials");
    out.e[i] = m[i].num() * (1 / m[i].den().constant_value());
  }
  return out;
}

AdditiveFamily additive_arg(const Args& a) {
  const VarTable vars{{"y", kVarY}, {"t", kVarParam}};
  const Mat2 m = polynomial_matrix(parse_matrix(a[0], vars));
  const MRat base = parse_multirat(a[1], vars);
  const MRat y = MRat::variable(kVarY), t = MRat::variable(kVarParam);
  if (!(base == y) && !(base == y + t)) throw Error(ErrorCode::InvalidArgument, "base must be y or y + t");
  return AdditiveFamily(m, base == y + t);
}

void cmd_cocycle_check(const Args& a, const Options&, Report& r) {
  set_verdict(r, check_additive_cocycle(additive_arg(a)));
}

void cmd_cocycle_trivialize(const Args& a, const Options&, Report& r) {
  const AdditiveFamily fam = additive_arg(a);
  const AdditiveTrivialization t = trivialize_additive(fam);
  r.result["kind"] = t.kind == AdditiveTrivialization::Kind::U1 ? "U1" : "U2";
  if (t.b) {
    r.result["B"] = t.b->to_string();
    r.result["y0"] = str(*t.y0);
    r.result["conjugator"] = JonqElem(*t.b, Moebius::identity()).to_string();
    r.self_check = true;  // trivialize_additive verifies A_c(y) = B(y+c) B(y)^-1
  } else {
    r.result["model"] = "U1 = {(x + c, y)}";
  }
}

void cmd_mult_trivialize(const Args& a, const Options&, Report& r) {
  const VarTable vars{{"y", kVarY}, {"lambda", kVarParam}};
  const auto entries = parse_matrix(a[0], vars);
  const MRat base = parse_multirat(a[1], vars);
  const MRat y = MRat::variable(kVarY), lam = MRat::variable(kVarParam);
  int k = 0;
  bool found = false;
  for (int e = -16; e <= 16 && !found; ++e) {
    MRat p(1);
    for (int i = 0; i < std::abs(e); ++i) p = p * lam;
    if (e < 0) p = p.inverse();
    if (base == p * y) {
      k = e;
      found = true;
    }
  }
  if (!found) throw Error(ErrorCode::InvalidArgument, "base must be lambda^k * y");
  const MultiplicativeTrivialization t = trivialize_multiplicative(MultiplicativeFamily(entries, k));
  r.result["k"] = k;
  r.result["t"] = t.t.to_string();
  r.result["y0"] = str(t.y0);
  r.self_check = true;  // trivialize_multiplicative verifies s_lambda(y) = t(lambda^k y) t(y)^-1
}

int small_int(const std::string& s, const char* what) {
  const Rational q = parse_rational_expr(s);
  if (q.get_den() != 1 || !q.get_num().fits_sint_p()) throw Error(ErrorCode::InvalidArgument, std::string(what) + " must be an integer");
  return static_cast<int>(q.get_num().get_si());
}

void cmd_bn_identity(const Args& a, const Options&, Report& r) {
  const std::string& kind = a[0];
  const int n = small_int(a[1], "n"), i = small_int(a[2], "i");
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  const VarTable vars = bn_vars(n);
  const MRat av = parse_multirat(a[3], vars);
  const auto names = bn_names(n);
  if (kind == "de") {
    const MRat bv = parse_multirat(a[4], vars);
    set_verdict(r, verify_identity_de(n, i, av, bv));
    r.result["lhs"] = commutator(dilatation(n, i, av), elementary(n, i, bv)).to_string();
    r.result["rhs"] = elementary(n, i, bv * (av - MRat(1))).to_string();
  } else if (kind == "dd") {
    const Rational c = parse_rational_expr(a[4]);
    set_verdict(r, verify_identity_dd(n, i, av, c));
    r.result["lhs"] = commutator(dilatation(n, i, av), elementary(n, i + 1, MRat(c))).to_string();
  } else {
    throw Error(ErrorCode::InvalidArgument, "identity kind must be de or dd");
  }
}

void cmd_bn_witness(const Args& a, const Options& o, Report& r) {
  const int n = small_int(a[0], "n");
  const DerivedWitness w = derived_witness(n);
  Json steps = Json::array();
  for (const auto& s : w.steps)
    steps.push_back({{"level", s.level}, {"label", s.label}, {"element", s.element.to_string()},
                     {"formula_ok", s.matches_formula}, {"shape_ok", s.shape_ok}});
  need_check(w.ok(), "derived witness chain");
  r.result["n"] = n;
  r.result["depth"] = 2 * n - 1;
  r.result["final"] = w.final_element().to_string();
  r.result["derived_length_at_least"] = w.derived_length_lower_bound();
  r.result["steps"] = steps;
  const ShapeClosureReport sc = check_shape_closure(n, 20, o.seed);
  r.result["consistency_check"] = {{"kind", "sampled shape closure, not a proof"},
                                   {"seed", o.seed},
                                   {"samples", sc.samples},
                                   {"failures", sc.failures}};
  r.self_check = true;
}

Integer integer_arg(const std::string& s) {
  const Rational q = parse_rational_expr(s);
  if (q.get_den() != 1) throw Error(ErrorCode::BadF, "f must be an integer");
  return q.get_num();
}

void cmd_qf_norm(const Args& a, const Options&, Report& r) {
  const QuadElem x(parse_rational_expr(a[1]), parse_rational_expr(a[2]), integer_arg(a[0]));
  r.result["element"] = x.to_string();
  r.result["norm"] = str(norm(x));
  if (!x.is_zero()) {
    const QuadElem h = hilbert90(x);
    need_check(norm(h) == 1, "norm(x / sigma(x)) = 1");
    r.result["hilbert90"] = h.to_string();
    const auto ord = torsion_order(x);
    r.result["torsion_order"] = ord ? Json(*ord) : Json("infinite");
    r.self_check = true;
  }
}

void cmd_qf_torsion(const Args& a, const Options&, Report& r) {
  const Integer f = integer_arg(a[0]);
  if (a.size() == 3) {
    const QuadElem x(parse_rational_expr(a[1]), parse_rational_expr(a[2]), f);
    const auto ord = torsion_order(x);
    r.result["element"] = x.to_string();
    r.result["order"] = ord ? Json(*ord) : Json("infinite");
    return;
  }
  const TorsionGroup g = torsion_group(f);
  r.result["group"] = g.label();
  r.result["structure"] = g.structure();
  r.result["generator"] = g.generator.to_string();
  Json powers = Json::array();
  for (const auto& p : g.powers) powers.push_back(p.to_string());
  r.result["powers"] = powers;
  r.self_check = true;  // torsion_group checks the generator order
}

const std::map<std::string, Command>& table() {
  static const std::map<std::string, Command> t{
      {"degree", {1, 1, "F", cmd_degree}},
      {"odd-support", {1, 1, "F", cmd_odd_support}},
      {"genus", {1, 1, "F", cmd_genus}},
      {"square", {1, 1, "F", cmd_square}},
      {"bb", {1, 1, "MATRIX", cmd_bb}},
      {"algebraic", {1, 1, "MATRIX", cmd_algebraic}},
      {"classify", {1, 1, "MATRIX", cmd_classify}},
      {"recover-torus", {1, 1, "MATRIX", cmd_recover_torus}},
      {"compose", {2, 2, "J1 J2", cmd_compose}},
      {"cremona-degree", {1, 1, "J", cmd_cremona_degree}},
      {"degseq", {1, 1, "J", cmd_degseq}},
      {"twist", {1, 1, "J", cmd_twist}},
      {"torus-conj", {2, 2, "F G", cmd_torus_conj}},
      {"borel", {1, 1, "F|aff", cmd_borel}},
      {"normalizer", {1, 2, "F [MATRIX]", cmd_normalizer}},
      {"stab", {1, 1, "CONFIG|F", cmd_stab}},
      {"config-equiv", {2, 2, "CONFIG1 CONFIG2", cmd_config_equiv}},
      {"j-invariant", {1, 1, "CONFIG|F", cmd_j_invariant}},
      {"cocycle-check", {2, 2, "FAMILY BASE", cmd_cocycle_check}},
      {"cocycle-trivialize", {2, 2, "FAMILY BASE", cmd_cocycle_trivialize}},
      {"mult-trivialize", {2, 2, "FAMILY BASE", cmd_mult_trivialize}},
      {"bn-identity", {5, 5, "de|dd n i a b|c", cmd_bn_identity}},
      {"bn-witness", {1, 1, "n", cmd_bn_witness}},
      {"qf-norm", {3, 3, "f p q", cmd_qf_norm}},
      {"qf-torsion", {1, 3, "f [p q]", cmd_qf_torsion}},
      {"quadfield-norm", {3, 3, "f p q", cmd_qf_norm}},
      {"quadfield-torsion", {1, 3, "f [p q]", cmd_qf_torsion}},
  };
  return t;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, c] : table()) v.push_back(k);
    return v;
  }();
  return names;
}

std::string usage(const std::string& command) {
  auto it = table().find(command);
  return it == table().end() ? "" : it->second.usage;
}

Report run(const std::string& command, const std::vector<std::string>& args, const Options& opts) {
  auto it = table().find(command);
  if (it == table().end()) throw Error(ErrorCode::UnknownCommand, "unknown command '" + command + "'");
  const Command& c = it->second;
  if (args.size() < c.min_args || args.size() > c.max_args)
    throw Error(ErrorCode::InvalidArgument, "usage: " + command + " " + c.usage);
  if (command == "qf-torsion" || command == "quadfield-torsion") {
    if (args.size() == 2) throw Error(ErrorCode::InvalidArgument, "usage: " + command + " " + c.usage);
  }
  Report r;
  r.command = command;
  r.args = args;
  const auto start = std::chrono::steady_clock::now();
  c.handler(args, opts, r);
  if (opts.timing)
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

Report run_safe(const std::string& command, const std::vector<std::string>& args, const Options& opts) {
  try {
    return run(command, args, opts);
  } catch (const Error& e) {
    Report r;
    r.command = command;
    r.args = args;
    r.verdict = "Error";
    r.error_code = std::string(to_string(e.code()));
    r.error_message = e.what();
    return r;
  }
}

}  // namespace cremona::cli
