#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "cremona/error.hpp"
#include "cremona/moebius.hpp"
#include "cremona/poly.hpp"
#include "cremona/ratfunc.hpp"
#include "cremona_cli/report.hpp"

namespace cremona::testing {

using Json = nlohmann::ordered_json;
using Rng = std::mt19937_64;

inline constexpr std::uint64_t kSeed = 20261016;

std::filesystem::path golden_dir();
Json load_json(const std::filesystem::path& p);

struct GoldenCase {
  std::string name;
  std::string command;
  std::vector<std::string> args;
};
std::vector<GoldenCase> golden_cases();
std::filesystem::path golden_path(const GoldenCase& c);
// The report as stored in the golden file (no timing).
Json golden_report(const GoldenCase& c);

// Walks a report and, for every emitted value with a known grammar, checks
// that parse(print(parse(s))) == parse(s).
struct RoundTripStats {
  int checked = 0;
  int canonical = 0;  // print(parse(s)) == s
  std::vector<std::string> failures;
  std::vector<std::string> non_canonical;
};
void roundtrip_report(const Json& report, RoundTripStats& stats);

template <class F>
bool throws_code(F&& f, ErrorCode code) {
  try {
    f();
  } catch (const Error& e) {
    return e.code() == code;
  } catch (...) {
    return false;
  }
  return false;
}

// Small random objects; every generator is deterministic for a given rng state.
int uniform(Rng& rng, int lo, int hi);
Rational random_rational(Rng& rng, int bound = 9, bool nonzero = false);
Poly random_poly(Rng& rng, int degree, int bound = 5);
RatFunc random_ratfunc(Rng& rng, int max_degree = 3, bool nonzero = true);
Moebius random_moebius(Rng& rng, int bound = 5);
// Nonconstant squarefree polynomial of the given degree with integer coefficients.
Poly random_squarefree(Rng& rng, int degree, int bound = 5);
// f with nonempty odd support
RatFunc random_nonsquare(Rng& rng);

}  // namespace cremona::testing
