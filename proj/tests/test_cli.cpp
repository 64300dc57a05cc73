#include "doctest.h"

#include <sstream>

#include "assocform/cli.hpp"
#include "json.hpp"

namespace {

struct CliOutcome {
  int code = 0;
  std::string out;
  std::string err;
};

CliOutcome run_cli(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  CliOutcome outcome;
  outcome.code = assocform::cli::run(args, in, out, err);
  outcome.out = out.str();
  outcome.err = err.str();
  return outcome;
}

}  // namespace

TEST_CASE("assoc command") {
  const CliOutcome ok = run_cli({"assoc", "--n", "2", "x1^4+x2^4"});
  CHECK(ok.code == 0);
  CHECK(ok.out == "z1^2*z2^2\n");

  const CliOutcome json = run_cli({"assoc", "--n", "2", "--output", "json", "x1^4+x2^4"});
  CHECK(json.code == 0);
  const auto doc = nlohmann::json::parse(json.out);
  CHECK(doc["schema"] == "assocform/1");
  CHECK(doc["associated_form"] == "z1^2*z2^2");
  CHECK(doc["normalized"] == true);
  CHECK(doc["socle_degree"] == 4);
}

TEST_CASE("domain errors exit with code 2 and stable error JSON") {
  const CliOutcome degenerate = run_cli({"assoc", "--n", "2", "x1^4"});
  CHECK(degenerate.code == 2);
  const auto doc = nlohmann::json::parse(degenerate.err);
  CHECK(doc["error"]["code"] == "degenerate_form");
  CHECK(std::string(doc["error"]["message"]).find("discriminant") != std::string::npos);

  const CliOutcome not_regular = run_cli({"assoc-seq", "--n", "2", "x1^2*x2", "x1*x2^2"});
  CHECK(not_regular.code == 2);
  CHECK(nlohmann::json::parse(not_regular.err)["error"]["code"] == "resultant_divisor");

  const CliOutcome outside =
      run_cli({"agr", "--n", "2", "x1^4", "x1^3*x2"});
  CHECK(outside.code == 2);
  CHECK(nlohmann::json::parse(outside.err)["error"]["code"] == "agr_domain");
}

TEST_CASE("parse errors exit with code 1") {
  const CliOutcome inhomogeneous = run_cli({"assoc", "--n", "2", "x1+x2^2"});
  CHECK(inhomogeneous.code == 1);
  CHECK(nlohmann::json::parse(inhomogeneous.err)["error"]["code"] == "parse_error");

  const CliOutcome unknown_flag = run_cli({"assoc", "--does-not-exist"});
  CHECK(unknown_flag.code == 1);

  const CliOutcome no_command = run_cli({});
  CHECK(no_command.code == 1);
}

TEST_CASE("stdin payloads and piping") {
  const CliOutcome piped = run_cli({"assoc", "--n", "2"}, "x1^4+x2^4\n");
  CHECK(piped.code == 0);
  CHECK(piped.out == "z1^2*z2^2\n");

  // example | agr --partials reproduces the dual power span of the nodal form.
  const CliOutcome example = run_cli({"example", "nodal", "--n", "2", "--d", "3"});
  CHECK(example.code == 0);
  CHECK(example.out == "4*x1^2*x2^2\n");
  const CliOutcome piped_agr =
      run_cli({"agr", "--n", "2", "--partials"}, example.out);
  CHECK(piped_agr.code == 0);
  CHECK(piped_agr.out == "z1^3\nz2^3\n");

  // The nodal form itself is degenerate, so assoc must reject it.
  const CliOutcome assoc_nodal = run_cli({"assoc", "--n", "2"}, example.out);
  CHECK(assoc_nodal.code == 2);

  const CliOutcome gens_via_stdin = run_cli({"hilb", "--n", "2", "--tmax", "5"},
                                            "x1^3\nx2^3\n");
  CHECK(gens_via_stdin.code == 0);
  CHECK(gens_via_stdin.out == "1 2 3 2 1 0\n");
}

TEST_CASE("subcommand outputs") {
  CHECK(run_cli({"smooth", "--n", "2", "x1^4+x2^4"}).out == "true\n");
  CHECK(run_cli({"stab", "--n", "2", "x1^4"}).out == "false\n");

  const CliOutcome mult =
      run_cli({"mult", "--n", "2", "--point", "1,0", "4*x1^2*x2^2"});
  CHECK(mult.out == "multiplicity: 2\nordinary_double_point: true\n");

  const CliOutcome limit =
      run_cli({"limit", "--n", "2", "--lambda", "1,-1", "x1^2*x2^2+x1^3*x2"});
  CHECK(limit.out == "weight: 0\ninit: x1^2*x2^2\nlimit: x1^2*x2^2\n");

  const CliOutcome no_limit =
      run_cli({"limit", "--n", "2", "--lambda", "-1,1", "x1^3*x2"});
  CHECK(no_limit.out == "weight: -2\ninit: x1^3*x2\nlimit: none\n");

  const CliOutcome gradient =
      run_cli({"gradient", "--n", "2", "--p", "1", "z1^2*z2^2"});
  CHECK(gradient.out == "z1^2*z2\nz1*z2^2\n");

  const CliOutcome dual = run_cli({"dual-check", "--n", "2", "--p", "1", "x1^3", "x2^3"});
  CHECK(dual.out == "true\n");

  const CliOutcome ds =
      run_cli({"ds-detect", "--n", "3", "--output", "json", "x1^4+x2^4+x3^4"});
  const auto doc = nlohmann::json::parse(ds.out);
  CHECK(doc["kernel_dim"] == 3);
  CHECK(doc["is_direct_sum"] == true);
  CHECK(doc["torus_dim"] == 2);

  const CliOutcome zk = run_cli({"zk-verify", "--n", "2", "--points", "1,0;0,1",
                                 "--output", "json", "x1^2*x2", "x1*x2^2"});
  const auto zdoc = nlohmann::json::parse(zk.out);
  CHECK(zdoc["verified"] == true);
  CHECK(zdoc["status"] == "EXACT");
}

TEST_CASE("determinism of repeated invocations") {
  const std::vector<std::string> args{"ds-detect", "--n", "3", "x1^4+x2^4+x2*x3^3"};
  const CliOutcome first = run_cli(args);
  const CliOutcome second = run_cli(args);
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
  CHECK(first.err == second.err);
}
