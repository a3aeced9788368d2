#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "rankproj/cli.hpp"

using namespace rankproj;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string data = RANKPROJ_DATA_DIR;

}  // namespace

TEST_CASE("degree") {
  CHECK(run({"degree", "--n", "7", "--r", "2", "--corners", "3"}).out == "13395\n");
  CHECK(run({"degree", "--n", "7", "--r", "4", "--rows", "3,2,1,1"}).out == "35\n");
  auto r = run({"degree", "--n", "7", "--r", "1", "--cells", ""});
  CHECK(r.code == 0);
  CHECK(r.out == "924\n");
}

TEST_CASE("table") {
  auto r = run({"table", "--n", "7", "--squares", "1", "--format", "csv"});
  CHECK(r.out == "r,d\n1,887\n2,14701\n3,9478\n4,371\n5,1\n6,0\n7,0\n");
  r = run({"table", "--n", "6", "--rows", "2,2", "--cols", "2,2", "--format", "csv"});
  CHECK(r.out == "r,d\n1,228\n2,734\n3,8\n4,0\n5,0\n6,0\n");
  r = run({"table", "--n", "3", "--cells", "1,1"});
  CHECK(r.code == 0);
  CHECK(r.out.substr(r.out.size() - 5) == "3  0\n");
}

TEST_CASE("text tables align columns") {
  auto r = run({"table", "--n", "7", "--rows", "3"});
  CHECK(r.out.substr(0, 12) == "1    896\n2  ");
}

TEST_CASE("class") {
  CHECK(run({"class", "--n", "3", "--r", "1", "--rows", "2"}).out == "σ[1]\n");
  CHECK(run({"class", "--n", "3", "--r", "1", "--cols", "2"}).out == "3·σ[1,1]\n");
  CHECK(run({"class", "--n", "3", "--r", "1", "--cells", ""}).out == "0\n");
  auto j = nlohmann::json::parse(run({"class", "--n", "3", "--r", "1", "--cols", "2", "--format",
                                      "json"}).out);
  CHECK(j["class"][0]["c"] == "3");
}

TEST_CASE("equivalent pattern sources give the same table") {
  const auto grid = run({"table", "--n", "7", "--pattern", data + "/ladder.txt"});
  const auto cells = run({"table", "--n", "7", "--cells", "1,1;2,1;2,2;3,3;4,3;4,4;5,5;6,5;6,6"});
  const auto shorthand = run({"table", "--n", "7", "--corners", "3"});
  CHECK(grid.code == 0);
  CHECK(grid.out == cells.out);
  CHECK(grid.out == shorthand.out);
  CHECK(grid.out.find("13395") != std::string::npos);
  CHECK(run({"table", "--n", "7", "--pattern", data + "/mixed_886.txt", "--format", "csv"}).out ==
        "r,d\n1,886\n2,12967\n3,3102\n4,0\n5,0\n6,0\n7,0\n");
  CHECK(run({"table", "--n", "7", "--pattern", data + "/mixed_861.txt", "--format", "csv"}).out ==
        "r,d\n1,861\n2,10701\n3,1424\n4,0\n5,0\n6,0\n7,0\n");
}

TEST_CASE("json round-trips and is deterministic") {
  const std::vector<std::string> args = {"table", "--n", "5", "--rows", "2", "--format", "json"};
  const auto a = run(args), b = run(args);
  CHECK(a.out == b.out);
  auto doc = nlohmann::ordered_json::parse(a.out);
  CHECK(doc.dump(2) + "\n" == a.out);
  CHECK(doc["n"] == 5);
  CHECK(doc["pattern"]["cells"][1][1] == 2);
  CHECK(doc["degrees"][0]["r"] == 1);
  CHECK(doc["degrees"][0]["d"].is_string());
}

TEST_CASE("usage and input errors exit 2") {
  CHECK(run({"degree", "--n", "7", "--r", "9", "--rows", "2"}).code == 2);
  CHECK(run({"degree", "--n", "7", "--r", "0", "--rows", "2"}).code == 2);
  CHECK(run({"degree", "--n", "2", "--r", "1", "--cells", "3,1"}).code == 2);
  CHECK(run({"degree", "--n", "4", "--r", "1", "--cells", "1,1;1,2;2,2;2,3"}).code == 2);
  CHECK(run({"degree", "--n", "4", "--r", "1", "--cells", "x"}).code == 2);
  CHECK(run({"degree", "--n", "4", "--r", "1"}).code == 2);
  CHECK(run({"degree", "--n", "4", "--r", "1", "--cells", "1,1", "--rows", "2"}).code == 2);
  CHECK(run({"table", "--n", "3", "--corners", "2"}).code == 2);
  CHECK(run({"table", "--n", "3", "--rows", "2,x"}).code == 2);
  CHECK(run({"verify", "--bogus"}).code == 2);
  CHECK(run({}).code == 2);
  auto r = run({"table", "--n", "3", "--pattern", "/nonexistent/grid.txt"});
  CHECK(r.code == 2);
  CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("verify") {
  auto r = run({"verify", "--max-n", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS: ") != std::string::npos);
  auto j = run({"verify", "--max-n", "4", "--format", "json"});
  CHECK(nlohmann::json::parse(j.out)["passed"] == true);
  CHECK(run({"verify", "--max-n", "5"}).out.find("published values") != std::string::npos);
}
