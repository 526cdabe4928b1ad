#include <doctest.h>

#include <algorithm>

#include "cremona_cli/commands.hpp"
#include "support.hpp"

using namespace cremona;
using namespace cremona::cli;
using cremona::testing::throws_code;

TEST_SUITE("cli") {

TEST_CASE("every listed subcommand exists") {
  const auto& names = command_names();
  for (const char* c : {"degree", "odd-support", "genus", "square", "bb", "algebraic", "classify", "recover-torus",
                        "compose", "cremona-degree", "degseq", "twist", "torus-conj", "borel", "normalizer", "stab",
                        "cocycle-check", "cocycle-trivialize", "mult-trivialize", "bn-identity", "bn-witness",
                        "qf-norm", "qf-torsion", "quadfield-torsion"}) {
    CHECK(std::find(names.begin(), names.end(), c) != names.end());
    CHECK_FALSE(usage(c).empty());
  }
}

TEST_CASE("dispatch errors") {
  CHECK(throws_code([] { run("nope", {}); }, ErrorCode::UnknownCommand));
  CHECK(throws_code([] { run("genus", {}); }, ErrorCode::InvalidArgument));
  CHECK(throws_code([] { run("genus", {"y^2"}); }, ErrorCode::SquareInput));
  const Report r = run_safe("genus", {"y^2"});
  CHECK(r.verdict == "Error");
  CHECK(r.error_code == "SquareInput");
  CHECK(r.exit_code() == 1);
}

TEST_CASE("verdicts and exit codes") {
  Report r = run("genus", {"y^3-1"});
  CHECK(r.verdict == "Value");
  CHECK(r.result["genus"] == 1);
  CHECK(r.exit_code() == 0);
  r = run("torus-conj", {"y", "y*(y-1)"});
  CHECK(r.verdict == "Yes");
  CHECK(r.self_check == true);
  CHECK(r.result["witness"]["mu"] == "(1, 0, 1, -1)");
  r = run("torus-conj", {"y", "y^3-1"});
  CHECK(r.verdict == "No");
  CHECK(r.result["certificate"] == "genus: 0 != 1");
  r = run("torus-conj", {"y^5-y+1", "y^5-y+2"});
  CHECK(r.verdict == "Unknown");
  CHECK(r.exit_code() == 2);
  r = run("quadfield-torsion", {"-3"});
  CHECK(r.result["group"] == "Z6");
  CHECK(r.result["generator"] == "3 + sqrt(-3)");
}

TEST_CASE("every Yes carries a re-verified witness") {
  const std::vector<std::pair<std::string, std::vector<std::string>>> yes = {
      {"square", {"9*y^2"}},
      {"torus-conj", {"y^3-1", "y-y^4"}},
      {"config-equiv", {"{0, 1, inf, 2}", "{0, 1, inf, -1}"}},
      {"normalizer", {"y", "[[1, 0], [0, -1]]"}},
  };
  for (const auto& [cmd, args] : yes) {
    const Report r = run(cmd, args);
    CHECK(r.verdict == "Yes");
    if (cmd != "normalizer") CHECK(r.self_check == true);
  }
}

TEST_CASE("options") {
  Options o;
  o.max_iter = 5;
  Report r = run("degseq", {"(y/x, y)"}, o);
  CHECK(r.result["degrees"].size() == 5);
  o.timing = true;
  r = run("genus", {"y"}, o);
  CHECK(r.elapsed_ms.has_value());
  o.tol = 1e-6;
  r = run("torus-conj", {"y^5-y+1", "y^5-y+2"}, o);
  bool noted = false;
  for (const auto& n : r.notes) noted = noted || n.find("1e-06") != std::string::npos;
  CHECK(noted);
}

TEST_CASE("reports round-trip through JSON") {
  for (const auto& c : {std::pair<std::string, std::vector<std::string>>{"torus-conj", {"y", "y*(y-1)"}},
                        {"bn-witness", {"1"}},
                        {"genus", {"oops("}}}) {
    const Report r = run_safe(c.first, c.second);
    CHECK(Report::from_json(r.to_json()) == r);
    CHECK(Report::from_json(r.to_json()).to_json() == r.to_json());
    CHECK_FALSE(r.to_text().empty());
  }
  // exact rationals are strings
  const Report q = run("qf-norm", {"-3", "3", "1"});
  CHECK(q.result["norm"].is_string());
}

}  // TEST_SUITE
