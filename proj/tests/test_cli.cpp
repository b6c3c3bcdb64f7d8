#include <doctest.h>

#include <sstream>

#include <skein/catalog.hpp>
#include <skein/poly.hpp>

#include "cli.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = skein::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& rel) { return (skein::Catalog::default_directory() / rel).string(); }

}  // namespace

TEST_CASE("bracket") {
  CHECK(run({"bracket", "@unknot"}).out == "1\n");
  CHECK(run({"bracket", "@3_1"}).out == "A^-7 - A^-3 - A^5\n");
  CHECK(run({"bracket", "--eval", fixture("inputs/kinked_double_point.json")}).out == "-A^-2 - 1 - A^2\n");
  CHECK(run({"bracket", fixture("inputs/kinked_double_point.json")}).out == "C - A^-2*B - A^2*B\n");
  CHECK(run({"--method", "naive", "bracket", "@6_3"}).out == run({"--method", "contraction", "bracket", "@6_3"}).out);
  const auto j = json::parse(run({"--json", "bracket", "@4_1"}).out);
  CHECK(skein::parse_laurent(j.at("value").get<std::string>()) == skein::laurent_from_json(j.at("terms")));
}

TEST_CASE("jones and vs") {
  CHECK(run({"jones", "@kink+"}).out == "1\n");
  CHECK(run({"vs", "@kink+"}).out == "1\n");
  CHECK(run({"jones", "@3_1"}).code == 0);
}

TEST_CASE("cross") {
  const auto r = run({"cross", "--audit", "scenarios/trefoil_unknotting.json"});
  CHECK(r.code == 0);
  CHECK(r.out.substr(r.out.rfind('\n', r.out.size() - 2) + 1) == "A^-6 + A^-4 + A^4\n");
  CHECK(r.out.find("# event 0") != std::string::npos);
  CHECK(run({"cross", "empty-path"}).out == "0\n");
  CHECK(run({"cross", "@fig8_unknotting_neg"}).out == "A^-7 - A^-3 - A^-1 - A^5 - A^7\n");
  CHECK(run({"cross", "--generic", "@trefoil_unknotting"}).code == 0);

  const auto notloop = run({"--json", "cross", "--loop", "@trefoil_unknotting"});
  CHECK(notloop.code == 1);
  CHECK(json::parse(notloop.out).at("error").at("kind") == "NotALoop");

  const auto loop = run({"--json", "cross", "--loop", "--audit", "@loop_41_63"});
  CHECK(loop.code == 0);
  CHECK(json::parse(loop.out).at("contributions").size() == 4);
}

TEST_CASE("verify") {
  const auto ok = run({"verify", "meridians"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("meridians: PASS") != std::string::npos);
  const auto bad = run({"verify", "meridians", "--set", "C=B"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("FAIL double_pair") != std::string::npos);
  CHECK(bad.out.find("D2") != std::string::npos);
  CHECK(run({"verify", "moves", "--seed", "42", "--count", "50"}).code == 0);
  CHECK(run({"verify", "framing", "--count", "20"}).code == 0);
  CHECK(run({"verify", "oracle", "--count", "20"}).code == 0);
  CHECK(run({"verify", "meridians", "--set", "D=1"}).code == 1);
}

TEST_CASE("catalog") {
  const auto l = run({"catalog", "list"});
  CHECK(l.code == 0);
  CHECK(l.out.find("4_1#6_3") != std::string::npos);
  CHECK(run({"catalog", "show", "@3_1"}).out.find("writhe: 3") != std::string::npos);
  CHECK(run({"catalog", "show", "loop_41_63"}).code == 0);
  CHECK(json::parse(run({"--json", "catalog", "show", "6_3"}).out).at("name") == "6_3");
}

TEST_CASE("exit codes and errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"bracket"}).code == 2);
  CHECK(run({"verify", "everything"}).code == 2);
  CHECK(run({"--threads", "0", "bracket", "@3_1"}).code == 2);
  const auto missing = run({"--json", "bracket", "@5_2"});
  CHECK(missing.code == 1);
  CHECK(json::parse(missing.out).at("error").at("kind") == "UnknownName");
  CHECK(run({"bracket", "/nonexistent.json"}).code == 1);
  CHECK(run({"jones", fixture("inputs/kinked_double_point.json")}).code == 1);
}

TEST_CASE("deterministic output") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"--json", "cross", "--audit", "@loop_41_63"},
           {"--json", "verify", "moves", "--count", "30"},
           {"--json", "verify", "meridians"},
           {"--json", "bracket", "@4_1#6_3"}}) {
    CHECK(run(args).out == run(args).out);
  }
  CHECK(run({"--threads", "4", "--method", "naive", "bracket", "@4_1#6_3"}).out ==
        run({"--threads", "1", "--method", "naive", "bracket", "@4_1#6_3"}).out);
}
