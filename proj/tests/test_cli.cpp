#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const std::string kCli = DESSINS_CLI;
const fs::path kFixtureDir = DESSINS_FIXTURE_DIR;

struct Run {
  int status;
  std::string out, err;
};

Run run(const std::string& args, const std::string& redirect = "") {
  const fs::path err_file = fs::temp_directory_path() / "dessins_cli_stderr.txt";
  const std::string cmd = kCli + " " + args + " " + redirect + " 2>" + err_file.string();
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, pipe)) > 0;) out.append(buf, n);
  const int raw = pclose(pipe);
  std::ifstream in(err_file);
  std::stringstream err;
  err << in.rdbuf();
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out, err.str()};
}

std::string fixture(const std::string& name) { return (kFixtureDir / (name + ".json")).string(); }

}  // namespace

TEST_CASE("analyze and components") {
  const Run a = run("analyze " + fixture("two_octagons"));
  REQUIRE(a.status == 0);
  const json j = json::parse(a.out);
  CHECK(j["classification"]["genus"] == 2);
  CHECK(j["passport"]["passport"] == "(2^8; 4^4; 8^2)");
  CHECK(j["classification"]["monodromy_order"] == "43008");
  const Run c = run("components fixture:hexagon_pair");
  REQUIRE(c.status == 0);
  CHECK(json::parse(c.out)["r"] == 3);
  const Run s = run("components -", "< " + fixture("twelve_edge_6"));
  REQUIRE(s.status == 0);
  CHECK(json::parse(s.out)["r"] == 1);
}

TEST_CASE("minlength, dual and medial") {
  const Run m = run("minlength fixture:two_octagons");
  REQUIRE(m.status == 0);
  const json j = json::parse(m.out);
  CHECK(j["total"].get<double>() == doctest::Approx(12.228567355848).epsilon(1e-12));
  CHECK(j["edge_length"].get<double>() == doctest::Approx(0.764285459740499).epsilon(1e-12));
  const Run d = run("dual fixture:dual_source");
  REQUIRE(d.status == 0);
  CHECK(json::parse(d.out)["sigma1"] == json::parse("[[1,5,9,7,2,3],[4,8,12,10,11,6]]"));
  const Run me = run("medial fixture:hexagon_pair");
  REQUIRE(me.status == 0);
  CHECK(json::parse(me.out)["degree"] == 24);
}

TEST_CASE("surgery, seed and grow") {
  const Run s = run("surgery fixture:two_octagons --a 4 --b 13");
  REQUIRE(s.status == 0);
  const json j = json::parse(s.out);
  CHECK(j["case"] == "same_face");
  CHECK(j["genus"] == 3);
  const Run seed = run("seed --genus 4 --faces 3");
  REQUIRE(seed.status == 0);
  CHECK(json::parse(seed.out)["degree"] == 36);
  const Run g = run("grow fixture:seed_g2_n2 --genus 6 --faces 2 --trace");
  REQUIRE(g.status == 0);
  const json t = json::parse(g.out);
  REQUIRE(t.size() == 3);
  CHECK(t.back()["genus"] == 6);
  CHECK(t.back()["face_degree"] == 24);
}

TEST_CASE("enumerate is identical across worker counts") {
  const Run one = run("enumerate --type 2,4,8 --genus 2 --jobs 1");
  const Run four = run("enumerate --type 2,4,8 --genus 2 --jobs 4 --progress");
  REQUIRE(one.status == 0);
  REQUIRE(four.status == 0);
  CHECK(one.out == four.out);
  CHECK(four.err.find("subtrees") != std::string::npos);
  const json j = json::parse(one.out);
  CHECK(j["count"] == 19);
  CHECK(j["filling_count"] == 4);
}

TEST_CASE("word, pairings, render, verify") {
  const Run w = run("word z3xz fixture:two_octagons --type 2,4,8");
  REQUIRE(w.status == 0);
  const json j = json::parse(w.out);
  CHECK(j["in_K"] == true);
  CHECK(j["isometry"]["kind"] == "hyperbolic");
  const Run x = run("word x fixture:two_octagons");
  CHECK(json::parse(x.out)["in_K"] == false);
  const Run p = run("pairings fixture:two_octagons");
  REQUIRE(p.status == 0);
  CHECK(json::parse(p.out).size() == 25);
  const fs::path svg = fs::temp_directory_path() / "dessins_cli_test.svg";
  const Run r = run("render fixture:two_octagons --size 400 -o " + svg.string());
  REQUIRE(r.status == 0);
  CHECK(fs::file_size(svg) > 1000);
  fs::remove(svg);
  const Run v = run("verify " + fixture("seed_g4_n3"));
  REQUIRE(v.status == 0);
  CHECK(json::parse(v.out)["passed"] == true);
}

TEST_CASE("exit codes and error objects") {
  const Run none = run("");
  CHECK(none.status == 2);
  CHECK(json::parse(none.err)["error"] == "usage");
  const Run bad_flag = run("enumerate --type 2,4,8");
  CHECK(bad_flag.status == 2);
  const Run jobs = run("enumerate --type 2,4,8 --genus 2 --jobs 0");
  CHECK(jobs.status == 2);
  const Run pre = run("surgery fixture:two_octagons --a 1 --b 2");
  CHECK(pre.status == 1);
  CHECK(json::parse(pre.err)["error"] == "precondition");
  const Run io = run("analyze /nonexistent.json");
  CHECK(io.status == 1);
  CHECK(json::parse(io.err)["error"] == "io");
  const Run parse = run("word q fixture:two_octagons");
  CHECK(parse.status == 1);
  CHECK(json::parse(parse.err)["error"] == "parse_error");
  const Run integral = run("enumerate --type 2,4,7 --genus 2");
  CHECK(integral.status == 1);
  CHECK(json::parse(integral.err)["error"] == "non_integral");
  const Run fx = run("analyze fixture:nothing");
  CHECK(json::parse(fx.err)["error"] == "unknown_fixture");
  CHECK(run("--help").status == 0);
}

TEST_CASE("outputs are stable across runs") {
  for (const std::string args :
       {"analyze fixture:two_octagons", "components fixture:dual_source", "minlength fixture:hexagon_pair",
        "pairings fixture:two_octagons --tree face", "render fixture:two_octagons",
        "grow fixture:seed_g2_n1 --genus 5 --faces 1", "enumerate --type 2,4,12 --genus 2",
        "verify fixture:two_octagons"}) {
    CAPTURE(args);
    const Run a = run(args), b = run(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}
