#include <cstdlib>
#include <iostream>
#include <string>

#include "assocform/checks.hpp"
#include "assocform/cli.hpp"
#include "assocform/sampling.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = assocform::kDefaultSeed;
  if (const char* env = std::getenv("ASSOCFORM_SEED")) seed = std::stoull(env);
  if (argc > 1) seed = std::stoull(argv[1]);

  const assocform::checks::CliRunner runner =
      [](const std::vector<std::string>& args, std::istream& in, std::ostream& out,
         std::ostream& err) { return assocform::cli::run(args, in, out, err); };
  const auto results = assocform::checks::run_acceptance(seed, runner);
  const bool ok = assocform::checks::print_report(results, std::cout, std::cerr);
  return ok ? 0 : 1;
}
