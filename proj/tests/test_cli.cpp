#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "rooks/io.hpp"

using namespace rooks;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

Run rookctl(const std::string& args) {
  const std::string command = std::string(ROOKCTL_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buffer[4096];
  while (std::size_t got = std::fread(buffer, 1, sizeof buffer, pipe)) out.append(buffer, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string write_file(const std::string& name, const std::string& text) {
  fs::create_directories(CLI_WORKDIR);
  const fs::path path = fs::path(CLI_WORKDIR) / name;
  std::ofstream(path) << text;
  return path.string();
}

std::string eight_board() { return write_file("eight_board.json", R"({"n":8,"rooks":[[3,1],[6,2],[7,3],[5,4],[8,6]]})"); }

bool contains(const std::string& text, const std::string& part) { return text.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("analyze") {
  const Run r = rookctl("analyze " + eight_board());
  CHECK(r.code == 0);
  CHECK(contains(r.out, "w = [3,6,7,5,4,8,1,2], l(w) = 17"));
  CHECK(contains(r.out, "cycles: (1,3,7) (2,6,8) (4,5)"));
  CHECK(contains(r.out, "M_2 = {(6,4),(6,5)}"));
  CHECK(contains(r.out, "dim Theta = 2|M| = 12"));
  CHECK(contains(r.out, "dim Omega = 2|M| + |D| = 17"));
  CHECK(contains(r.out, "sigma_D = [4,2,10,1,12,6,8,7,9,3,14,5,13,11]"));
  CHECK(contains(r.out, "   5  0  1  2  3  0  0  0  0"));

  const Run j = rookctl("analyze --json " + eight_board());
  CHECK(j.code == 0);
  const Json out = Json::parse(j.out);
  CHECK(out["length"] == 17);
  CHECK(out["dimensions"]["dim_omega"] == 17);
  CHECK(out["rank_matrix"][4].dump() == "[0,1,2,3,0,0,0,0]");
  CHECK(placement_from_json(out["placement"]) == placement_from_json(Json::parse(R"({"n":8,"rooks":[[3,1],[6,2],[7,3],[5,4],[8,6]]})")));
}

TEST_CASE("covers") {
  const Run r = rookctl("covers --brute-force " + eight_board());
  CHECK(r.code == 0);
  CHECK(contains(r.out, "lower covers of {(3,1),(6,2),(7,3),(5,4),(8,6)}: 5"));
  CHECK(contains(r.out, "brute-force oracle: agrees"));

  const Json out = Json::parse(rookctl("covers --json --brute-force " + eight_board()).out);
  CHECK(out["covers"].size() == 5);
  CHECK(out["brute_force"]["agree"] == true);
  for (const auto& move : out["covers"]) CHECK_NOTHROW(placement_from_json(move["result"]));

  const Json plain = Json::parse(rookctl("covers --json " + eight_board()).out);
  CHECK_FALSE(plain.contains("brute_force"));
}

TEST_CASE("verify") {
  const Run r = rookctl("verify --n 3 --suite thm33");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "thm33 n=3: PASS (5 checked"));

  const Run j = rookctl("verify --n 4 --suite thm15 --seed 5 --samples 3 --json");
  CHECK(j.code == 0);
  const Json report = Json::parse(j.out);
  CHECK(report["suite"] == "thm15");
  CHECK(report["n"] == 4);
  CHECK(report["seed"] == 5);
  CHECK(report["failures"].empty());
  CHECK(report.contains("millis"));

  const Json all = Json::parse(rookctl("verify --n 3 --suite all --samples 2 --json").out);
  CHECK(all.size() == 7);

  // a failing suite still prints its report and exits 1
  const Run failing = rookctl("verify --n 4 --suite cor18");
  CHECK(failing.code == 1);
  CHECK(contains(failing.out, "cor18 n=4: FAIL"));
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> commands{"verify --n 5 --suite thm24 --seed 3 --samples 2", "analyze " + eight_board(),
                                         "covers --brute-force " + eight_board(), "enumerate --n 5"};
  for (const std::string& args : commands) {
    CHECK(rookctl(args).out == rookctl(args).out);
  }
}

TEST_CASE("enumerate") {
  const Run r = rookctl("enumerate --n 4 --count-only");
  CHECK(r.code == 0);
  CHECK(r.out == "15\n");
  CHECK(Json::parse(rookctl("enumerate --n 6 --count-only --json").out)["count"] == 203);

  const Json list = Json::parse(rookctl("enumerate --n 3 --json").out);
  REQUIRE(list.size() == 5);
  for (const auto& d : list) CHECK_NOTHROW(placement_from_json(d));
  CHECK(rookctl("enumerate --n 2").out == "{}\n(2,1)\n");
}

TEST_CASE("hasse") {
  const std::string path = (fs::path(CLI_WORKDIR) / "h2.dot").string();
  fs::create_directories(CLI_WORKDIR);
  const Run r = rookctl("hasse --n 2 -o " + path);
  CHECK(r.code == 0);
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(text.str() == "digraph hasse {\n  node [shape=box];\n  \"{}\";\n  \"(2,1)\";\n  \"(2,1)\" -> \"{}\";\n}\n");
}

TEST_CASE("usage and input errors exit 2") {
  CHECK(rookctl("").code == 2);
  CHECK(rookctl("frobnicate").code == 2);
  CHECK(rookctl("verify --n 3 --suite nope").code == 2);
  CHECK(rookctl("verify --n 0 --suite thm33").code == 2);
  CHECK(rookctl("verify --suite thm33").code == 2);
  CHECK(rookctl("enumerate --n 4 --bogus").code == 2);
  CHECK(rookctl("hasse --n 9 -o /dev/null").code == 2);
  CHECK(rookctl("analyze /nonexistent/file.json").code == 2);
  CHECK(rookctl("analyze " + write_file("broken.json", "{\"n\": 4, \"rooks\": [")).code == 2);
  CHECK(rookctl("analyze " + write_file("attacking.json", R"({"n":4,"rooks":[[3,1],[3,2]]})")).code == 2);
  CHECK(rookctl("covers " + write_file("offboard.json", R"({"n":4,"rooks":[[2,3]]})")).code == 2);
}
