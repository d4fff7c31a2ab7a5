#include "umcert/cli.hpp"

#include <doctest.h>

using namespace umcert;

namespace {
Json payload_of(const CommandResult& r) {
  Json envelope = Json::parse(r.output);
  REQUIRE(envelope["status"] == "ok");
  return envelope["payload"];
}
}  // namespace

TEST_CASE("symbol subcommand") {
  CommandResult r = run_command(
      {"symbol", "--ring", "gaussian", "--num", "12", "--den", "1+4i", "--m", "2"});
  CHECK(r.exit_code == 0);
  Json p = payload_of(r);
  CHECK(p["order"] == 2);
  CHECK(p["exponent"] == 1);
  CHECK(p["embed"] == "-1");
}

TEST_CASE("factor subcommand") {
  CommandResult r = run_command({"factor", "--ring", "integer", "--value", "12"});
  Json p = payload_of(r);
  CHECK(p["sign"] == 1);
  CHECK(p["factors"][0]["prime"] == "2");
  CHECK(p["factors"][0]["exponent"] == 2);

  CommandResult g = run_command({"factor", "--ring", "gaussian", "--value", "17"});
  Json gp = payload_of(g);
  CHECK(gp["unit"]["text"] == "-i");
  CHECK(gp["factors"][0]["prime"]["text"] == "1+4i");
  CHECK(gp["factors"][1]["prime"]["text"] == "4+i");
}

TEST_CASE("bms-r, complete and sk1 subcommands") {
  Json r4 = payload_of(run_command({"bms-r", "--ring", "gaussian", "--ideal", "4"}));
  CHECK(r4["r"] == 2);
  CHECK(r4["m"] == 4);

  Json comp = payload_of(
      run_command({"complete", "--a", "1+4i", "--b", "12", "--ideal", "4"}));
  CHECK(comp["in_sl2_rel"] == true);
  CHECK(comp["det"] == "1");
  CHECK(comp["matrix"]["rows"][0][0] == "1+4i");

  Json sk1 = payload_of(run_command(
      {"sk1", "--matrix", "[[1+4i,12],[24,17-68i]]", "--ideal", "4"}));
  CHECK(sk1["r"] == 2);
  CHECK(sk1["value"]["embed"] == "-1");
}

TEST_CASE("unimodular subcommand") {
  Json cert = payload_of(run_command({"unimodular", "--row", "1+x,12,x^2+16"}));
  CHECK(cert["unimodular"] == true);
  CHECK(cert["verified"] == true);

  CommandResult obs = run_command({"unimodular", "--row", "x,2"});
  CHECK(obs.exit_code == 0);  // a decision, not an error
  Json p = payload_of(obs);
  CHECK(p["unimodular"] == false);
  CHECK(p["kind"] == "mod_p");
  CHECK(p["p"] == "2");
}

TEST_CASE("stability subcommands") {
  Json rep = payload_of(run_command({"stability", "--row", "1+x,12,x^2+16",
                                     "--ring", "gaussian", "--theta", "4i",
                                     "--conductor", "4"}));
  CHECK(rep["verdict"] == "not_stable");
  CHECK(rep["value"]["embed"] == "-1");
  CHECK(rep["verified"] == true);

  // conductor defaults to the content of theta's coordinates
  Json rep2 = payload_of(run_command(
      {"stability", "--row", "1+x,12,x^2+16", "--theta", "4i"}));
  CHECK(rep2["conductor"] == "4");

  CommandResult open_row =
      run_command({"stability", "--row", "21+2x,12,x^2+20"});
  CHECK(open_row.exit_code == 1);
  Json env = Json::parse(open_row.output);
  CHECK(env["status"] == "error");
  CHECK(env["error"] == "no root in supported rings");

  Json found = payload_of(run_command(
      {"stability-search", "--row", "x,0,1", "--deg", "1", "--coeff", "3"}));
  CHECK(found["found"] == true);
  CHECK(found["s2"]["text"] == "-1");

  Json not_found = payload_of(run_command({"stability-search", "--row",
                                           "1+x,12,x^2+16", "--deg", "1",
                                           "--coeff", "3"}));
  CHECK(not_found["found"] == false);
  CHECK(not_found["search_space"] == 2401);
}

TEST_CASE("finite ring subcommands") {
  Json sr = payload_of(run_command({"sr", "--modulus", "4"}));
  CHECK(sr["stable_rank"] == 1);

  Json lift = payload_of(run_command(
      {"sl2-lift", "--modulus", "7", "--matrix", "[[0,6],[1,0]]"}));
  CHECK(lift["det"] == "1");

  Json ge2 = payload_of(run_command({"ge2", "--modulus", "8", "--exhaustive"}));
  CHECK(ge2["count"] == 384);
  CHECK(ge2["all_recompose"] == true);

  Json ge2_one = payload_of(run_command(
      {"ge2", "--modulus", "8", "--matrix", "[[1,5],[0,1]]"}));
  CHECK(ge2_one["recomposes"] == true);

  Json lemma = payload_of(run_command({"lemma-check", "--modulus", "6"}));
  CHECK(lemma["holds"] == true);
}

TEST_CASE("eisenstein paths through the CLI") {
  // (2/7)_3 = zeta_3 * zeta_3^2 = 1 across the two primes over 7
  Json sym = payload_of(run_command({"symbol", "--ring", "eisenstein", "--num",
                                     "2", "--den", "7", "--m", "3"}));
  CHECK(sym["order"] == 3);
  CHECK(sym["exponent"] == 0);
  // degree 3 with a denominator over 3 is undefined
  CHECK(run_command({"symbol", "--ring", "eisenstein", "--num", "2", "--den",
                     "2+w", "--m", "3"})
            .exit_code == 1);

  Json fac = payload_of(
      run_command({"factor", "--ring", "eisenstein", "--value", "3"}));
  CHECK(fac["factors"][0]["prime"]["text"] == "2+w");
  CHECK(fac["factors"][0]["exponent"] == 2);

  Json r3 = payload_of(
      run_command({"bms-r", "--ring", "eisenstein", "--ideal", "3"}));
  CHECK(r3["m"] == 6);
  CHECK(r3["r"] == 1);
}

TEST_CASE("malformed matrix and element strings are domain errors") {
  CHECK(run_command({"sk1", "--matrix", "[1,2],[3,4]", "--ideal", "4"})
            .exit_code == 1);
  CHECK(run_command({"sk1", "--matrix", "[[1,2],[3]]", "--ideal", "4"})
            .exit_code == 1);
  CHECK(run_command({"symbol", "--num", "1+4w", "--den", "3", "--m", "2"})
            .exit_code == 1);
  CHECK(run_command({"unimodular", "--row", "x,,1"}).exit_code == 1);
}

TEST_CASE("usage and domain errors map to exit codes 2 and 1") {
  CommandResult unknown = run_command({"frobnicate"});
  CHECK(unknown.exit_code == 2);
  CHECK(Json::parse(unknown.output)["status"] == "error");

  CommandResult missing = run_command({"symbol", "--ring", "gaussian"});
  CHECK(missing.exit_code == 2);

  CommandResult bad_input =
      run_command({"symbol", "--num", "2", "--den", "1+i", "--m", "2"});
  CHECK(bad_input.exit_code == 1);
  Json env = Json::parse(bad_input.output);
  CHECK(env["status"] == "error");

  CommandResult none = run_command({});
  CHECK(none.exit_code == 2);
}

TEST_CASE("reproduce-paper is deterministic and complete") {
  CommandResult r1 = run_command({"reproduce-paper"});
  CommandResult r2 = run_command({"reproduce-paper"});
  CHECK(r1.exit_code == 0);
  CHECK(r1.output == r2.output);  // byte-for-byte
  Json p = payload_of(r1);
  CHECK(p["all_ok"] == true);
  CHECK(p["divisor"]["r"] == 2);
  CHECK(p["report"]["verdict"] == "not_stable");
  CHECK(p["certificate"]["verified"] == true);
  REQUIRE(p["summary"].is_array());
  CHECK(p["summary"].size() == 4);
}

TEST_CASE("payloads round-trip through their JSON encoding") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"symbol", "--num", "12", "--den", "1+4i", "--m", "2"},
           {"factor", "--ring", "gaussian", "--value", "-60"},
           {"bms-r", "--ideal", "8"},
           {"unimodular", "--row", "1+x,12,x^2+16"},
           {"sr", "--modulus", "30"},
           {"lemma-check", "--modulus", "4"},
           {"reproduce-paper"}}) {
    CommandResult r = run_command(args);
    Json parsed = Json::parse(r.output);
    Json reparsed = Json::parse(parsed.dump());
    CHECK(parsed == reparsed);
    CHECK(parsed.dump() == reparsed.dump());
  }
}

TEST_CASE("pretty output renders the summary table") {
  CommandResult r = run_command({"reproduce-paper", "--pretty"});
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("summary:") != std::string::npos);
  CHECK(r.output.find("verdict not_stable") != std::string::npos);
}
