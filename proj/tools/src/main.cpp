#include <iostream>

#include <CLI11.hpp>

#include "cremona/error.hpp"
#include "cremona_cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace cremona::cli;
  CLI::App app{"Decision procedures for tori and Borel subgroups of the plane Cremona group"};
  app.require_subcommand(1);
  Options opts;
  // Accepted before and after the subcommand name.
  auto add_flags = [&opts](CLI::App* a) {
    a->add_flag("--json", opts.json, "structured output");
    a->add_option("--max-iter", opts.max_iter, "iterates for degseq and twist (default 16)")->check(CLI::Range(1, 100000));
    a->add_option("--tol", opts.tol, "tolerance of the numeric screen for irrational configurations (default 1e-10)");
    a->add_option("--seed", opts.seed, "seed of sampled consistency checks");
    a->add_flag("--timing", opts.timing, "report elapsed time");
  };
  add_flags(&app);
  for (const auto& name : command_names()) {
    // Arguments are kept verbatim since expressions may start with '-' or '['.
    auto* sub = app.add_subcommand(name, name + " " + usage(name));
    add_flags(sub);
    sub->allow_extras();
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help still exits 0; every other parse failure is an ordinary error.
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  const CLI::App* sub = app.get_subcommands().front();
  const Report r = run_safe(sub->get_name(), sub->remaining(), opts);
  if (opts.json) {
    std::cout << r.to_json().dump(2) << "\n";
  } else if (r.verdict == "Error") {
    std::cerr << r.to_text();
  } else {
    std::cout << r.to_text();
  }
  return r.exit_code();
}
