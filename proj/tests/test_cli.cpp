#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/io.hpp"

namespace fs = std::filesystem;
using namespace rainbow;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run rb(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "rainbow_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("generate") {
  const auto a = scratch("tri.inst");
  const Run r = rb({"generate", "triangle-extremal", "--n", "4", "--out", a.string()});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "min_cover=9"));
  CHECK(parse_instance(read_file(a)) == gen_triangle_extremal(4));

  const Run r1 = rb({"generate", "random", "--n", "4", "--v", "10", "--max-mult", "4", "--seed", "7"});
  const Run r2 = rb({"generate", "random", "--n", "4", "--v", "10", "--max-mult", "4", "--seed", "7"});
  CHECK(r1.code == 0);
  CHECK(r1.out == r2.out);

  const auto sq = scratch("two.txt");
  write_file(sq, "0 1\n1 0\n");
  const Run lb = rb({"generate", "latin-bridge", "--square", sq.string(), "--c", "2", "--out", scratch("lb.inst").string()});
  CHECK(lb.code == 0);
  CHECK(contains(lb.out, "min_cover=6"));

  CHECK(rb({"generate", "random", "--n", "4", "--v", "10"}).code == 1);  // no seed
  CHECK(rb({"generate", "random", "--n", "4", "--v", "50", "--vertex-count", "20", "--seed", "1"}).code == 1);
  CHECK(rb({"generate", "bogus"}).code == 1);
  CHECK(rb({"generate", "double-k4", "--frobnicate"}).code == 1);
}

TEST_CASE("solve and verify") {
  const auto a = scratch("tri4.inst");
  write_file(a, serialize_instance(gen_triangle_extremal(4)));
  const auto res = scratch("tri4.result");
  const Run r = rb({"solve", a.string(), "--method", "exact", "--out", res.string()});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "size=3 optimal=true"));

  const Run v = rb({"verify", a.string(), res.string()});
  CHECK(v.code == 0);
  CHECK(contains(v.out, "valid=true maximal=true"));

  const auto dup = scratch("dup.json");
  write_file(dup, R"({"pairs": [[0,1],[3,4]], "colours": [1,1]})");
  const Run bad = rb({"verify", a.string(), dup.string()});
  CHECK(bad.code == 1);
  CHECK(contains(bad.out, "valid=false: duplicate colour"));

  const auto g = scratch("g413.inst");
  write_file(g, serialize_instance(gen_random(RandomSpec{4, 13, 4, 0.5, 2, 0})));
  CHECK(contains(rb({"solve", g.string(), "--method", "greedy"}).out, "size=4"));
  CHECK(contains(rb({"solve", g.string(), "--method", "local"}).out, "size=4"));

  const auto hard = scratch("tri6.inst");
  write_file(hard, serialize_instance(gen_triangle_extremal(6)));
  CHECK(rb({"solve", hard.string(), "--node-limit", "1"}).code == 3);

  const auto broken = scratch("broken.inst");
  write_file(broken, R"({"n": 1, "vertex_count": 3, "classes": [{"colour": 0, "cliques": [[0, "x"]]}]})");
  const Run pe = rb({"solve", broken.string()});
  CHECK(pe.code == 1);
  CHECK(contains(pe.err, "classes[0].cliques[0][1]"));

  const Run lem = rb({"verify", a.string(), "--lemmas", "--seed", "3"});
  CHECK(lem.code == 0);
  CHECK(contains(lem.out, "lemmas=pass"));
}

TEST_CASE("stress") {
  const Run ok = rb({"stress", "--n", "4", "--v", "10", "--trials", "40", "--seed", "1"});
  CHECK(ok.code == 0);
  CHECK(contains(ok.out, "failures=0"));

  const auto dir = scratch("replays");
  fs::remove_all(dir);
  const Run ex = rb({"stress", "--n", "4", "--v", "9", "--trials", "10", "--include-extremal", "--seed", "1",
                     "--replay-dir", dir.string()});
  CHECK(ex.code == 2);
  CHECK(fs::exists(dir / "failure-0.json"));

  const Run j1 = rb({"stress", "--n", "4", "--v", "9", "--trials", "20", "--seed", "4", "--jobs", "1"});
  const Run j8 = rb({"stress", "--n", "4", "--v", "9", "--trials", "20", "--seed", "4", "--jobs", "8"});
  CHECK(j1.out == j8.out);
  CHECK(rb({"stress", "--n", "4", "--trials", "3"}).code == 1);  // no seed
}

TEST_CASE("sample") {
  const auto g = scratch("sample.inst");
  write_file(g, serialize_instance(gen_random(RandomSpec{16, 46, 16, 0.5, 1, 0})));
  const Run a = rb({"sample", g.string(), "--seed", "9", "--runs", "2"});
  const Run b = rb({"sample", g.string(), "--seed", "9", "--runs", "2"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(contains(a.out, "chernoff_rate="));
  CHECK(contains(a.out, "\"p\":1.0"));
}

TEST_CASE("latin") {
  const auto three = scratch("three.txt");
  write_file(three, "1 2 3\n2 3 1\n3 1 2\n");
  const Run r = rb({"latin", three.string(), "--solve"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "transversal size=3 cells=3 star_edges=0"));
  CHECK(contains(r.err, "1..n"));

  const auto two = scratch("two2.txt");
  write_file(two, "0 1\n1 0\n");
  CHECK(contains(rb({"latin", two.string(), "--solve"}).out, "transversal size=1"));
  const Run star = rb({"latin", two.string(), "--c", "2", "--solve"});
  CHECK(contains(star.out, "transversal size=2 cells=1 star_edges=1"));
  CHECK(contains(star.out, "star 0"));

  const auto bad = scratch("bad.txt");
  write_file(bad, "0 1\n0 1\n");
  CHECK(rb({"latin", bad.string()}).code == 1);
}

TEST_CASE("exit codes and help") {
  CHECK(rb({}).code == 1);
  CHECK(rb({"--help"}).code == 0);
  CHECK(rb({"solve", "--help"}).code == 0);
  CHECK(rb({"solve", "/nonexistent/file"}).code == 1);
}
