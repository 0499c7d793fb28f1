#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <pmt/io.hpp>

namespace fs = std::filesystem;

namespace {

const fs::path& scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("pmt_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(const std::string& args) {
  const fs::path out = scratch() / "stdout.txt", err = scratch() / "stderr.txt";
  const std::string cmd =
      std::string(PMT_CLI_PATH) + " " + args + " >" + out.string() + " 2>" + err.string();
  const int raw = std::system(cmd.c_str());
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, pmt::read_file(out.string()),
          pmt::read_file(err.string())};
}

std::string path(const std::string& name) { return (scratch() / name).string(); }

}  // namespace

TEST_CASE("cli: generate, solve, validate") {
  const char* kinds[] = {"pmt", "unlabeled", "motion", "gather"};
  for (int i = 0; i < 8; ++i) {
    const std::string variant = i % 2 ? "ts" : "plain";
    const std::string inst = path("inst.txt"), plan = path("plan.txt");
    auto g = run("generate --seed " + std::to_string(100 + i) + " --n 25 --pebbles 4 --variant " +
                 variant + " --kind " + kinds[i / 2] + " --out " + inst);
    REQUIRE(g.status == 0);
    auto s = run("solve " + inst + " --out " + plan);
    REQUIRE(s.status == 0);
    auto v = run("validate " + inst + " " + plan);
    CHECK(v.status == 0);
    CHECK(v.out.rfind("OK", 0) == 0);
  }
}

TEST_CASE("cli: corrupted plan is rejected with its index") {
  const std::string inst = path("small.txt"), plan = path("bad.txt");
  pmt::write_file(inst,
                  "vertices 4\nedges 0-1 0-2 0-3\nkind pmt\nstart 1 2\ntarget 2 1\n");
  REQUIRE(run("solve " + inst + " --out " + plan).status == 0);
  auto moves = pmt::parse_plan(pmt::read_file(plan));
  REQUIRE(moves.size() > 2);
  // second move now jumps across the star
  pmt::Plan bad;
  for (std::size_t i = 0; i < moves.size(); ++i) {
    if (i == 1)
      bad.push_back(1, 2);
    else
      bad.push_back(moves.moves[i].from, moves.moves[i].to);
  }
  pmt::write_file(plan, pmt::serialize_plan(bad));
  auto v = run("validate " + inst + " " + plan);
  CHECK(v.status != 0);
  CHECK(v.out.find("move 1") != std::string::npos);
}

TEST_CASE("cli: exit codes") {
  const std::string inst = path("swap.txt");
  pmt::write_file(inst, "vertices 3\nedges 0-1 1-2\nkind pmt\nstart 0 2\ntarget 2 0\n");
  CHECK(run("solve " + inst).status == 2);
  auto o = run("oracle " + inst);
  CHECK(o.status == 2);
  CHECK(o.out.find("INFEASIBLE") != std::string::npos);

  pmt::write_file(inst, "vertices 3\nedges 0-1 1-2\nkind motion\nstart 0\nmarked 0\ngoal 2\n");
  o = run("oracle " + inst);
  CHECK(o.status == 0);
  CHECK(o.out.find("OPTIMAL 2") != std::string::npos);

  pmt::write_file(inst, "vertices 3\nedges 0-1 1-2\nkind motion\nstart 0\nmarked 0\ngoal two\n");
  auto s = run("solve " + inst);
  CHECK(s.status == 1);
  CHECK(s.err.find("line 6") != std::string::npos);

  pmt::write_file(inst, "vertices 9\nedges 0-1 1-2 2-3 3-4 4-5 5-6 6-7 7-8\nkind pmt\n"
                        "start 0 1 2\ntarget 6 7 8\n");
  CHECK(run("oracle " + inst + " --limits 10").status == 3);
}

TEST_CASE("cli: bench writes CSV") {
  const std::string csv = path("bench.csv");
  auto b = run("bench --problem motion --seeds 2 --n-min 10 --n-max 10 --n-step 10 --threads 1 --out " + csv);
  REQUIRE(b.status == 0);
  std::istringstream in(pmt::read_file(csv));
  std::string header, row;
  std::getline(in, header);
  CHECK(header == "n,p,c,bound,mean_moves,max_moves,max_crossing,mean_runtime_ms");
  int rows = 0;
  while (std::getline(in, row)) ++rows;
  // grid has p = 2..8; p = 8 leaves two holes and never satisfies the assumption
  CHECK(rows == 6);
  fs::remove_all(scratch());
}
