#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <regex>
#include <string>

#include "json.hpp"
#include "ringkit/cli.hpp"
#include "ringkit/corpus.hpp"

using ringkit::run_command;
using nlohmann::json;

namespace {

std::string write_tmp(const std::string& content) {
  static int counter = 0;
  auto path = std::filesystem::temp_directory_path() /
              ("ringcheck_cli_" + std::to_string(counter++) + ".ring");
  std::ofstream out(path);
  out << content;
  return path.string();
}

json parse_out(const ringkit::CliResult& res) {
  return json::parse(res.out);
}

const std::string kCorpusDir = std::string(RINGKIT_SOURCE_DIR) + "/corpus";

std::string scrub(std::string s) {
  s = std::regex_replace(s, std::regex("\"timing_ms\": \\d+"),
                         "\"timing_ms\": 0");
  s = std::regex_replace(s, std::regex("\"generated_at\": \"[^\"]*\""),
                         "\"generated_at\": \"\"");
  return s;
}

}  // namespace

TEST_CASE("argument errors exit with code 1") {
  CHECK(run_command({}).exit_code == 1);
  CHECK(run_command({"frobnicate"}).exit_code == 1);
  CHECK(run_command({"gb"}).exit_code == 1);  // missing file argument
  auto help = run_command({"--help"});
  CHECK(help.exit_code == 0);
  CHECK(help.out.find("corpus") != std::string::npos);
  CHECK(help.out.find("classify") != std::string::npos);
}

TEST_CASE("unreadable and ill-formed files exit with code 1") {
  auto missing = run_command({"gb", "/nonexistent/nowhere.ring"});
  CHECK(missing.exit_code == 1);
  CHECK(missing.err.find("cannot read") != std::string::npos);

  auto bad = write_tmp("ring A = QQ[x];\nring B = QQ[x, x];\n");
  auto res = run_command({"dim", bad});
  CHECK(res.exit_code == 1);
  CHECK(res.err.find("line 2") != std::string::npos);

  auto gf4 = write_tmp("ring A = GF(4)[x];\n");
  CHECK(run_command({"dim", gf4}).exit_code == 1);
}

TEST_CASE("gb prints one basis element per line") {
  auto f = write_tmp("ring A = QQ[x, y];\nideal I in A = (x - y, x + y);\n");
  auto res = run_command({"gb", f});
  REQUIRE(res.exit_code == 0);
  CHECK(res.out == "y\nx\n");

  auto g = write_tmp("ring A = QQ[x, y] / (x^2 - 1, y - x);\n");
  auto res2 = run_command({"gb", g});
  REQUIRE(res2.exit_code == 0);
  CHECK(res2.out == "x - y\ny^2 - 1\n");
}

TEST_CASE("dim reports per ring") {
  auto f = write_tmp(
      "ring A = QQ[x, y] / (x*y);\n"
      "ring B = GF(5)[t];\n");
  auto res = run_command({"dim", f});
  REQUIRE(res.exit_code == 0);
  json r = parse_out(res);
  CHECK(r["schema"] == 1);
  CHECK(r["command"] == "dim");
  REQUIRE(r["results"].size() == 2);
  CHECK(r["results"][0]["ring"] == "A");
  CHECK(r["results"][0]["dim"] == 1);
  CHECK(r["results"][1]["dim"] == 1);
}

TEST_CASE("colon wants exactly two ideals") {
  auto f = write_tmp(
      "ring A = QQ[x, y];\n"
      "ideal I in A = (x^2, x*y);\n"
      "ideal J in A = (x);\n");
  auto res = run_command({"colon", f});
  REQUIRE(res.exit_code == 0);
  json r = parse_out(res);
  CHECK(r["results"][0]["lhs"] == "I");
  CHECK(r["results"][0]["basis"] == json::array({"y", "x"}));

  auto one = write_tmp("ring A = QQ[x];\nideal I in A = (x);\n");
  CHECK(run_command({"colon", one}).exit_code == 1);
}

TEST_CASE("prime listings for monomial presentations") {
  auto f = write_tmp(
      "ring A = QQ[x, y, z];\n"
      "ideal I in A = (x*y, y*z, z^2);\n");
  auto res = run_command({"minprimes", f});
  REQUIRE(res.exit_code == 0);
  CHECK(parse_out(res)["results"][0]["primes"] ==
        json::array({"(x, z)", "(y, z)"}));

  auto g = write_tmp(
      "ring A = QQ[x, y];\n"
      "ideal I in A = (x^2, x*y);\n");
  auto ass = run_command({"assprimes", g});
  REQUIRE(ass.exit_code == 0);
  CHECK(parse_out(ass)["results"][0]["primes"] ==
        json::array({"(x)", "(x, y)"}));

  // rings without ideals fall back to their zero ideals
  auto h = write_tmp("ring A = QQ[x, y] / (x*y);\n");
  auto res2 = run_command({"minprimes", h});
  REQUIRE(res2.exit_code == 0);
  CHECK(parse_out(res2)["results"][0]["primes"] ==
        json::array({"(x)", "(y)"}));
}

TEST_CASE("isprime surfaces witnesses") {
  auto f = write_tmp(
      "ring A = QQ[x, y];\n"
      "ideal I in A = (x*y);\n"
      "ideal J in A = (y^2 - x^3);\n");
  auto res = run_command({"isprime", f});
  REQUIRE(res.exit_code == 0);
  json r = parse_out(res);
  CHECK(r["results"][0]["result"]["verdict"] == "false");
  CHECK(r["results"][0]["result"].contains("witness_a"));
  CHECK(r["results"][1]["result"]["verdict"] == "true");

  auto none = write_tmp("ring A = QQ[x];\n");
  CHECK(run_command({"isprime", none}).exit_code == 1);
}

TEST_CASE("check executes the statements in order") {
  auto f = write_tmp(
      "ring A = QQ[x, y] / (x^2, x*y) local;\n"
      "ideal P in A = (x);\n"
      "module M over A = coker [[y]];\n"
      "check reduced A;\n"
      "check tq_dim A;\n"
      "check prime P;\n"
      "check torsion_free M;\n"
      "check torsion_free M at P;\n"
      "check flat M;\n");
  auto res = run_command({"check", f});
  REQUIRE(res.exit_code == 0);
  json r = parse_out(res);
  REQUIRE(r["results"].size() == 6);
  CHECK(r["results"][0]["property"] == "reduced");
  CHECK(r["results"][0]["result"]["verdict"] == "false");
  CHECK(r["results"][0]["result"].contains("witness"));
  CHECK(r["results"][1]["result"]["known"] == "true");
  CHECK(r["results"][1]["result"]["dim"] == 1);
  CHECK(r["results"][2]["result"]["verdict"] == "true");
  CHECK(r["results"][3]["result"]["verdict"] == "true");
  CHECK(r["results"][4]["at"] == "P");
  CHECK(r["results"][4]["result"]["verdict"] == "true");
  CHECK(r["results"][4]["result"]["ill_posed"] == false);
  CHECK(r["results"][5]["property"] == "flat");
}

TEST_CASE("split statements run and refuse with witnesses") {
  auto f = write_tmp(
      "ring A = QQ[x, y] / (x^2 - x);\n"
      "ideal P in A = (x);\n"
      "split A at P;\n");
  auto res = run_command({"split", f});
  REQUIRE(res.exit_code == 0);
  json r = parse_out(res);
  auto& sp = r["results"][0]["result"];
  CHECK(sp["refused"] == false);
  CHECK(sp["certificate"]["e"] == "x");
  CHECK(sp["components"] == json::array({{"x"}, {"x - 1"}}));

  auto g = write_tmp(
      "ring B = QQ[x, y] / (x*y);\n"
      "ideal Q in B = (x);\n"
      "split B at Q;\n");
  auto ref = run_command({"split", g});
  REQUIRE(ref.exit_code == 0);
  json rp = parse_out(ref)["results"][0]["result"];
  CHECK(rp["refused"] == true);
  CHECK(rp["witness"] == "x");

  auto none = write_tmp("ring A = QQ[x];\n");
  CHECK(run_command({"split", none}).exit_code == 1);
}

TEST_CASE("decompose and classify fall back to all rings") {
  auto f = write_tmp("ring A = QQ[x, y] / (x^2 - x);\n");
  auto res = run_command({"decompose", f});
  REQUIRE(res.exit_code == 0);
  json r = parse_out(res);
  CHECK(r["results"][0]["leaves"].size() == 2);
  CHECK(r["results"][0]["tree"]["e"] == "x");

  auto cls = run_command({"classify", f});
  REQUIRE(cls.exit_code == 0);
  CHECK(parse_out(cls)["results"][0]["result"]["verdict"] == "true");

  auto g = write_tmp(
      "ring C = QQ[x, y] / (y^2 - x^3);\nclassify C;\n");
  auto cls2 = run_command({"classify", g});
  REQUIRE(cls2.exit_code == 0);
  CHECK(parse_out(cls2)["results"][0]["result"]["verdict"] == "false");
}

TEST_CASE("frobenius requires prime fields") {
  auto f = write_tmp("ring A = GF(3)[x];\nring B = GF(2)[x, y];\n");
  auto res = run_command({"frobenius", f});
  REQUIRE(res.exit_code == 0);
  json r = parse_out(res);
  CHECK(r["results"][0]["flat"] == "true");
  CHECK(r["results"][1]["flat"] == "true");

  auto q = write_tmp("ring A = QQ[x];\n");
  CHECK(run_command({"frobenius", q}).exit_code == 1);
}

TEST_CASE("serial flag gives the same answers") {
  auto f = write_tmp(
      "ring A = QQ[x, y, z] / (x*y, y*z, z^2) local;\n"
      "check reduced A;\ncheck tq_dim A;\n");
  auto par = run_command({"check", f});
  auto ser = run_command({"--serial", "check", f});
  REQUIRE(par.exit_code == 0);
  REQUIRE(ser.exit_code == 0);
  CHECK(scrub(par.out) == scrub(ser.out));
}

TEST_CASE("corpus reconciles every recorded claim") {
  auto res = run_command({"corpus", "--dir", kCorpusDir});
  REQUIRE(res.exit_code == 0);
  json r = parse_out(res);
  CHECK(r["ok"] == true);
  auto ids = ringkit::corpus_item_ids();
  REQUIRE(r["items"].size() == ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    CHECK(r["items"][i]["item"] == ids[i]);
    CHECK(r["items"][i]["expected"] == true);
    for (const auto& claim : r["items"][i]["claims"])
      CHECK((claim["status"] == "match" || claim["status"] == "mismatch-flag" ||
             claim["status"] == "ill-posed"));
  }
  // two runs agree byte for byte once the timestamps are scrubbed
  auto res2 = run_command({"corpus", "--dir", kCorpusDir});
  REQUIRE(res2.exit_code == 0);
  CHECK(scrub(res.out) == scrub(res2.out));

  // a missing directory is an input problem
  CHECK(run_command({"corpus", "--dir", "/nonexistent"}).exit_code == 1);
}
