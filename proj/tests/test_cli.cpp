#include <cstdio>
#include <fstream>
#include <sstream>

#include "catch_amalgamated.hpp"
#include "json.hpp"
#include "zfkit/cli.hpp"

using namespace zfkit;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args, const std::string& input = "") {
  std::ostringstream out, err;
  std::istringstream in(input);
  const int code = cli::run(args, out, err, in);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("fzf and zf print scalars") {
  auto r = invoke({"fzf", "--named", "path:6"});
  CHECK(r.code == 0);
  CHECK(r.out == "2\n");
  CHECK(invoke({"zf", "--named", "cycle:5"}).out == "2\n");
  CHECK(invoke({"fzf", "--graph6", "Bw"}).out == "1\n");
  CHECK(invoke({"fzf", "--pretty", "--graph6", "Bw"}).out == "F = 1\n");
}

TEST_CASE("closure output") {
  auto r = invoke({"closure", "--graph6", "Bw", "--blue", "0"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["final"] == nlohmann::json::array({0}));
  CHECK(j["stalled_immediately"] == true);
  CHECK(j["failed"] == true);

  r = invoke({"closure", "--named", "path:3", "--blue", "0"});
  const auto p = nlohmann::json::parse(r.out);
  CHECK(p["trace"] == nlohmann::json::parse("[[0,1,1],[1,2,2]]"));
  CHECK(p["failed"] == false);

  r = invoke({"closure", "--graph6", "Bw", "--blue", "0", "--pretty"});
  CHECK(r.out.find("final {0}") != std::string::npos);
  CHECK(r.out.find("stalled") != std::string::npos);
}

TEST_CASE("stream input gives one line per graph") {
  const auto r = invoke({"fzf", "--stream", "-"}, "A_\nBw\n\nCF\n");
  CHECK(r.code == 0);
  CHECK(r.out == "A_ 0\nBw 1\nCF 2\n");
}

TEST_CASE("edge-list input") {
  const std::string path = "test_cli_claw.txt";
  {
    std::ofstream f(path);
    f << "# claw\n4 3\n0 1\n0 2\n0 3\n";
  }
  CHECK(invoke({"fzf", "--edges", path}).out == "2\n");
  std::remove(path.c_str());
  CHECK(invoke({"fzf", "--edges", "no/such/file"}).code == 2);
}

TEST_CASE("fort, detect, classify, extend") {
  auto j = nlohmann::json::parse(invoke({"fort", "--named", "path:4"}).out);
  CHECK(j["size"] == 3);
  CHECK(j["F"] == 1);

  j = nlohmann::json::parse(invoke({"detect", "--named", "star:3"}).out);
  CHECK(j["cherry_count"] == 3);
  CHECK(j["module2_count"] == 3);
  CHECK(j["pendant_triangle"].is_null());
  CHECK(j["pendant_v"][0] == 0);
  CHECK(j["cut_vertices"] == nlohmann::json::array({0}));

  j = nlohmann::json::parse(invoke({"classify", "--named", "cycle:7", "--exact"}).out);
  CHECK(j["prediction"] == "lower_bound");
  CHECK(j["F"] == 3);
  CHECK(j["holds"] == true);

  j = nlohmann::json::parse(invoke({"extend", "--named", "cycle:5", "--connected"}).out);
  CHECK(j["count"] == 7);
}

TEST_CASE("per-graph output is label invariant") {
  // two labelings of the bull
  const std::string a = to_graph6(catalog::bull());
  const std::string b = to_graph6(catalog::bull().relabeled(std::vector<Vertex>{4, 2, 0, 3, 1}));
  REQUIRE(a != b);
  for (const char* cmd : {"fzf", "zf"}) CHECK(invoke({cmd, "--graph6", a}).out == invoke({cmd, "--graph6", b}).out);
  const auto da = nlohmann::json::parse(invoke({"detect", "--graph6", a}).out);
  const auto db = nlohmann::json::parse(invoke({"detect", "--graph6", b}).out);
  CHECK(da["cherry_count"] == db["cherry_count"]);
  CHECK(da["module2_count"] == db["module2_count"]);
  CHECK(nlohmann::json::parse(invoke({"fort", "--graph6", a}).out)["size"] ==
        nlohmann::json::parse(invoke({"fort", "--graph6", b}).out)["size"]);
}

TEST_CASE("verify exit codes") {
  auto r = invoke({"verify", "f0f1", "--max-n", "5"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["ok"] == true);

  r = invoke({"verify", "exceptions16"});
  CHECK(r.code == 1);
  CHECK(nlohmann::json::parse(r.out)["discrepancies"].size() > 0);

  r = invoke({"verify", "nosuch"});
  CHECK(r.code == 2);
  CHECK(invoke({"verify", "figure1", "--max-n", "0"}).code == 2);
}

TEST_CASE("verify figure1 with --pretty and --output") {
  const std::string path = "test_cli_report.json";
  auto r = invoke({"verify", "figure1", "--max-n", "6", "--output", path, "--timing"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  const auto j = nlohmann::json::parse(f);
  CHECK(j["matches"] == 15);
  CHECK(j.contains("runtime_seconds"));
  std::remove(path.c_str());
  r = invoke({"verify", "figure1", "--max-n", "6", "--pretty"});
  CHECK(r.out.find("status        ok") != std::string::npos);
}

TEST_CASE("gap and enumerate") {
  auto j = nlohmann::json::parse(invoke({"gap", "--n", "8"}).out);
  CHECK(j["counts"]["F_G"] == 6);
  CHECK(j["counts"]["F_H"] == 4);
  CHECK(invoke({"gap", "--n", "5"}).code == 2);

  auto r = invoke({"enumerate", "--n", "4"});
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 11);
  r = invoke({"enumerate", "--n", "4", "--connected"});
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 6);
  CHECK(invoke({"enumerate", "--n", "12"}).code == 2);
}

TEST_CASE("enumerate piped into verify matches the in-process report") {
  std::string stream;
  for (int n = 1; n <= 6; ++n) stream += invoke({"enumerate", "--n", std::to_string(n)}).out;
  const auto piped = invoke({"verify", "fort_duality", "--stream", "-"}, stream);
  const auto direct = invoke({"verify", "fort_duality"});
  CHECK(piped.code == 0);
  CHECK(piped.out == direct.out);
}

TEST_CASE("usage errors exit 2") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"bogus"}).code == 2);
  CHECK(invoke({"fzf"}).code == 2);
  CHECK(invoke({"fzf", "--graph6", "Bw", "--named", "path:3"}).code == 2);
  CHECK(invoke({"fzf", "--graph6", "B"}).code == 2);
  CHECK(invoke({"fzf", "--named", "nosuch"}).code == 2);
  CHECK(invoke({"closure", "--graph6", "Bw", "--blue", "7"}).code == 2);
  CHECK(invoke({"closure", "--graph6", "Bw", "--blue", "x"}).code == 2);
  CHECK(invoke({"gap"}).code == 2);
  const auto r = invoke({"fzf", "--graph6", "B"});
  CHECK(r.err.find("graph6") != std::string::npos);
  CHECK(invoke({"--help"}).code == 0);
}
