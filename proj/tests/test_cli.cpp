#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "bcast/cli.hpp"
#include "bcast/io.hpp"
#include "bcast/serialize.hpp"
#include "support.hpp"

using namespace bcast;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "bcast");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

std::string write_tree(const std::string& name, const LabeledTree& t) {
  const auto dir = std::filesystem::temp_directory_path() / "bcast-cli-tests";
  std::filesystem::create_directories(dir);
  const auto path = (dir / name).string();
  std::ofstream(path) << format_edge_list(t);
  return path;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("upper-gamma-b on P_6") {
  const auto p6 = write_tree("p6.txt", make_path(6));
  auto r = run({"upper-gamma-b", p6});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("upper_gamma_b: 5") != std::string::npos);
  auto j = run({"upper-gamma-b", p6, "--json"});
  CHECK(Json::parse(j.out)["value"] == 5);
}

TEST_CASE("diametrical modes and exit statuses") {
  const auto chair = write_tree("chair.txt", fixtures::chair());
  auto r = run({"diametrical", "--mode", "theorem", chair, "--json"});
  CHECK(r.code == kExitOk);
  auto j = Json::parse(r.out);
  CHECK(j["isDiametrical"] == true);
  CHECK(j["theoremVerdict"]["failedCondition"] == "none");

  auto def = Json::parse(run({"diametrical", chair, "--json"}).out);
  CHECK(def["provenance"] == "crosscheck");
  auto big = write_tree("p13.txt", make_path(13));
  CHECK(Json::parse(run({"diametrical", big, "--json"}).out)["provenance"] == "theorem");

  const auto spider = write_tree("spider.txt", fixtures::spider3());
  auto s = run({"diametrical", "--mode", "theorem", spider});
  CHECK(s.code == kExitDomain);
  CHECK(s.err.find("not a caterpillar") != std::string::npos);
  CHECK(run({"upper-gamma-b", big}).code == kExitDomain);
}

TEST_CASE("input errors exit with status 2") {
  CHECK(run({"metrics", "/nonexistent/tree.txt"}).code == kExitInput);
  CHECK(run({"metrics", "-"}, "4\n0 1\n1 2\n2 0\n").code == kExitInput);
  CHECK(run({"metrics", "-", "--bogus"}, "2\n0 1\n").code == kExitInput);
  CHECK(run({}).code == kExitInput);
  CHECK(run({"check-broadcast", "-", "--broadcast", "0:9"}, "2\n0 1\n").code == kExitInput);
  CHECK(run({"--upper-gamma-b-cap", "0", "metrics", "-"}, "2\n0 1\n").code == kExitInput);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("graph6 input and stdin") {
  auto r = run({"--format", "graph6", "metrics", "-", "--json"}, "Ch\n");
  REQUIRE(r.code == kExitOk);
  CHECK(Json::parse(r.out)["metrics"]["diameter"] == 3);
}

TEST_CASE("every command's JSON re-parses and is stable") {
  const auto ds = write_tree("ds.txt", fixtures::double_star());
  const std::vector<std::vector<std::string>> commands{
      {"metrics", ds},
      {"check-broadcast", ds, "--broadcast", "0:2,3:2"},
      {"gamma-b", ds},
      {"upper-gamma-b", ds},
      {"diametrical", ds},
      {"witness", ds},
      {"witness", ds, "--lemma", "L1"},
      {"sweep", "--max-n", "5"},
      {"probe-isometric", "--max-n", "5"},
      {"enumerate", "--n", "6"},
  };
  for (auto args : commands) {
    args.push_back("--json");
    auto a = run(args), b = run(args);
    INFO(args.front());
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
    auto j = Json::parse(a.out);
    CHECK(Json::parse(j.dump(2)) == j);
  }
}

TEST_CASE("witness output") {
  const auto ds = write_tree("ds2.txt", fixtures::double_star());
  auto j = Json::parse(run({"witness", ds, "--json", "--lemma", "L1"}).out);
  REQUIRE(j.size() == 1);
  CHECK(j[0]["applicable"] == true);
  CHECK(j[0]["certificate"]["witness"] == "0:2,3:2");
  auto text = run({"witness", ds});
  CHECK(text.out.find("L1: witness 0:2,3:2") != std::string::npos);
}

TEST_CASE("enumerate and export-dot") {
  auto r = run({"enumerate", "--n", "6", "--caterpillars-only"});
  int lines = 0;
  std::istringstream is(r.out);
  for (std::string line; std::getline(is, line);) {
    CHECK(parse_graph6(line).order() == 6);
    ++lines;
  }
  CHECK(lines == 6);
  auto e = run({"enumerate", "--n", "4", "--emit", "edgelist"});
  CHECK(e.out.find("\n\n") != std::string::npos);

  const auto p3 = write_tree("p3.txt", make_path(3));
  auto d = run({"export-dot", p3, "--broadcast", "1:1"});
  CHECK(d.out.find("1:1") != std::string::npos);
}

TEST_CASE("sweep writes JSONL and CSV") {
  const auto dir = std::filesystem::temp_directory_path() / "bcast-cli-tests";
  std::filesystem::create_directories(dir);
  const auto jsonl = (dir / "sweep.jsonl").string(), csv = (dir / "sweep.csv").string();
  auto r = run({"sweep", "--max-n", "6", "--out", jsonl, "--csv", csv});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("invariant violations    0") != std::string::npos);
  std::ifstream in(jsonl);
  int records = 0;
  for (std::string line; std::getline(in, line); ++records) CHECK(Json::parse(line).contains("canonicalCode"));
  CHECK(records == 1 + 1 + 2 + 3 + 6);
  std::ifstream c(csv);
  int rows = 0;
  for (std::string line; std::getline(c, line);) ++rows;
  CHECK(rows == records + 1);
  CHECK(run({"sweep", "--max-n", "5", "--out", "/nonexistent/dir/x.jsonl"}).code == kExitInput);
}

}  // TEST_SUITE
