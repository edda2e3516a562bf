#include "fixtures.hpp"

#include "groot/cli.hpp"
#include "groot/graph6.hpp"
#include "groot/metrics.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace groot;
using namespace fixtures;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("groot_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

std::string g6(const Graph& g) { return emit_graph6(g); }

}  // namespace

TEST_CASE("power and girth commands") {
  auto r = run({"power", "-r", "2"}, g6(cycle(5)) + "\n");
  CHECK(r.code == 0);
  CHECK(r.out == g6(complete(5)) + "\n");

  r = run({"girth"}, g6(cycle(6)) + "\n\n" + g6(path(4)) + "\n" + g6(petersen()) + "\n");
  CHECK(r.code == 0);
  CHECK(r.out == "6\ninf\n5\n");
}

TEST_CASE("sqrt command") {
  auto r = run({"sqrt", "--seed", "0,1,2"}, g6(power(path(5), 2)) + "\n");
  CHECK(r.code == 0);
  CHECK(r.out == g6(path(5)) + "\n");

  r = run({"sqrt", "--seed", "0,1,3"}, g6(octahedron()) + "\n");
  CHECK(r.code == 2);
  CHECK(r.out.starts_with("contradiction "));

  r = run({"sqrt", "--seed", "0,1,9"}, g6(octahedron()) + "\n");
  CHECK(r.code == 4);
}

TEST_CASE("roots command") {
  auto r = run({"roots", "--girth-min", "6"}, g6(octahedron()) + "\n");
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::vector<std::string> got;
  for (std::string line; std::getline(lines, line);) got.push_back(line);
  REQUIRE(got.size() == 5);
  CHECK(got.back() == "count: 4");
  for (std::size_t k = 0; k < 4; ++k) CHECK(power(parse_graph6(got[k]), 2) == octahedron());

  r = run({"roots", "--girth-min", "5"}, g6(complete(5)) + "\n");
  CHECK(r.out.ends_with("count: 17\n"));

  r = run({"roots", "--girth-min", "6"}, g6(Graph(2)) + "\n");
  CHECK(r.code == 4);
}

TEST_CASE("iso command") {
  const auto h1 = temp_file("h1", g6(cycle(6)) + "\n");
  const auto h2 = temp_file("h2", g6(Graph::from_edges(6, {{0, 2}, {2, 1}, {1, 3}, {3, 5}, {5, 4}, {4, 0}})) + "\n");
  const auto sq = temp_file("sq", g6(octahedron()) + "\n");
  auto r = run({"iso", h1, h2, "--square", sq});
  CHECK(r.code == 0);
  CHECK(r.out == "(1 2)(4 5)\n");

  r = run({"iso", h1, h1, "--square", sq});
  CHECK(r.out == "EQUAL\n");

  // Squares isomorphic but not equal: the printed map must still carry the
  // first root onto the second.
  std::mt19937 rng(41);
  const auto perm = random_permutation(rng, 6);
  const Graph moved = Graph::from_edges(6, {{0, 2}, {2, 1}, {1, 3}, {3, 5}, {5, 4}, {4, 0}}).relabeled(perm);
  const auto h3 = temp_file("h3", g6(moved) + "\n");
  r = run({"iso", h1, h3, "--square", sq});
  REQUIRE(r.code == 0);
  CHECK(r.out != "EQUAL\n");

  const auto c5 = temp_file("c5", g6(cycle(5)) + "\n");
  const auto k14 = temp_file("k14", g6(star(5)) + "\n");
  r = run({"iso", c5, k14});
  CHECK(r.code == 4);
}

TEST_CASE("verify-thm, mine and tree-powers commands") {
  auto r = run({"verify-thm", "--n-max", "6"});
  CHECK(r.code == 0);
  CHECK(r.out.ends_with("PASS\n"));

  r = run({"mine", "--n", "5", "--girth-min", "5", "--min-degree", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.ends_with("pairs: 1\n"));
  CHECK(r.out.find("girths=") != std::string::npos);

  r = run({"mine", "--n", "8", "--girth-min", "5", "--min-degree", "2"});
  CHECK(r.out == "pairs: 0\n");

  const auto pairs = temp_file("pairs", g6(cycle(5)) + " " + g6(star(5)) + "\n");
  r = run({"mine", "--check", pairs});
  CHECK(r.code == 0);
  CHECK(r.out.find("evidence=degree-sequence") != std::string::npos);

  r = run({"tree-powers", "-r", "3", "--n", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.ends_with("count: 1\n"));
}

TEST_CASE("mine writes and honours checkpoints") {
  const auto ckpt = (std::filesystem::temp_directory_path() / "groot_test_ckpt").string();
  std::filesystem::remove(ckpt);
  const std::vector<std::string> base = {"mine", "--n", "6", "--girth-min", "4", "--min-degree", "1"};

  auto args = base;
  args.insert(args.end(), {"--checkpoint", ckpt});
  auto r = run(args);
  REQUIRE(r.code == 0);
  REQUIRE(std::filesystem::exists(ckpt));

  // Resuming from the final checkpoint leaves nothing to report.
  args = base;
  args.insert(args.end(), {"--resume", ckpt});
  r = run(args);
  CHECK(r.code == 0);
  CHECK(r.out == "pairs: 0\n");

  r = run({"mine", "--n", "7", "--girth-min", "4", "--min-degree", "1", "--resume", ckpt});
  CHECK(r.code == 4);
  CHECK(r.err.find("signature") != std::string::npos);
}

TEST_CASE("error exit codes") {
  CHECK(run({"girth"}, "A_\nzz\n").code == 3);
  const auto r = run({"girth"}, "A_\nA_?\n");
  CHECK(r.code == 3);
  CHECK(r.err.find("line 2") != std::string::npos);
  CHECK(run({}).code == 64);
  CHECK(run({"bogus"}).code == 64);
  CHECK(run({"power"}).code == 64);
  CHECK(run({"power", "-r", "0"}).code == 64);
  CHECK(run({"tree-powers", "-r", "2", "--n", "5"}).code == 64);
  CHECK(run({"sqrt", "--seed", "0,1"}, "A_\n").code == 64);
  CHECK(run({"mine", "--n", "5", "--girth-min", "x"}).code == 64);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("identical invocations give identical output") {
  const std::vector<std::string> args = {"mine", "--n", "7", "--girth-min", "4", "--min-degree", "1"};
  CHECK(run(args).out == run(args).out);
}
