#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "latspar/lattice.hpp"

namespace fs = std::filesystem;
using namespace latspar;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

std::string cli_path() {
  const char* p = std::getenv("LATSPAR_CLI");
  if (p) return p;
  // default: the CLI sits next to this test binary
  std::error_code ec;
  fs::path self = fs::read_symlink("/proc/self/exe", ec);
  if (!ec) return (self.parent_path() / "latspar").string();
  return "./latspar";
}

RunResult run(const std::string& args) {
  std::string cmd = cli_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

struct TempDir {
  fs::path dir;
  TempDir() {
    dir = fs::temp_directory_path() / "latspar_cli_test";
    fs::create_directories(dir);
  }
  std::string file(const std::string& name, const std::string& content) const {
    fs::path p = dir / name;
    std::ofstream(p) << content;
    return p.string();
  }
};

}  // namespace

TEST_CASE("cli: cvp-approx text output and point round trip") {
  TempDir tmp;
  std::string basis = tmp.file("b.txt", "2\n1 0\n0 1\n");
  std::string body = tmp.file("k.json", R"({"type":"lp","p":"inf","radius":"1"})");
  std::string target = tmp.file("t.txt", "1/4 1/4\n");
  RunResult r = run("cvp-approx --basis " + basis + " --body " + body + " --target " + target +
                    " --eps 1/2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("POINT 0 0 | 0 0\n") != std::string::npos);
  CHECK(r.out.find("BOUND ") != std::string::npos);

  // every POINT line round-trips through contains()
  Lattice lat = read_basis_file(basis);
  std::istringstream lines(r.out);
  std::string line;
  int points = 0;
  while (std::getline(lines, line)) {
    if (line.rfind("POINT ", 0) != 0) continue;
    ++points;
    std::istringstream ls(line.substr(6));
    QVec x;
    std::string tok;
    bool after_bar = false;
    while (ls >> tok) {
      if (tok == "|") {
        after_bar = true;
        continue;
      }
      if (after_bar) x.push_back(parse_rat(tok));
    }
    REQUIRE(static_cast<int>(x.size()) == lat.dim());
    CHECK(lat.contains(x));
  }
  CHECK(points >= 1);
}

TEST_CASE("cli: cvp-l2 tie") {
  TempDir tmp;
  std::string basis = tmp.file("b.txt", "2\n1 0\n0 1\n");
  std::string target = tmp.file("t.txt", "1/2 0\n");
  RunResult r = run("cvp-l2 --basis " + basis + " --target " + target);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "POINT 0 0 | 0 0\nPOINT 1 0 | 1 0\nBOUND 1/4\n");
}

TEST_CASE("cli: svp and enum") {
  TempDir tmp;
  std::string basis = tmp.file("b.txt", "2\n2 0\n0 3\n");
  std::string body = tmp.file("k.json", R"({"type":"lp","p":"inf","radius":"1"})");
  RunResult svp = run("svp --basis " + basis + " --body " + body);
  CHECK(svp.exit_code == 0);
  CHECK(svp.out == "POINT -1 0 | -2 0\nPOINT 1 0 | 2 0\nBOUND 2\n");

  std::string basis2 = tmp.file("b2.txt", "2\n1 0\n0 1\n");
  RunResult en = run("enum --basis " + basis2 + " --body " + body + " --scale 1");
  CHECK(en.exit_code == 0);
  CHECK(en.out.find("COUNT 9\n") != std::string::npos);
}

TEST_CASE("cli: sparsify emits a parseable HNF basis and a report") {
  TempDir tmp;
  std::string basis = tmp.file("b.txt", "2\n1 0\n0 1\n");
  std::string body = tmp.file("k.json", R"({"type":"lp","p":"inf","radius":"1"})");
  std::string report = (tmp.dir / "report.json").string();
  RunResult r = run("sparsify --basis " + basis + " --body " + body + " --t 120 --report " +
                    report);
  CHECK(r.exit_code == 0);
  std::istringstream out(r.out);
  Lattice sub = read_basis(out);
  CHECK(sub.det_abs() > 1);  // the N > 1000 branch restricted the lattice
  std::ifstream rep(report);
  std::stringstream buf;
  buf << rep.rdbuf();
  CHECK(buf.str().find("\"schema\": 1") != std::string::npos);
  CHECK(buf.str().find("\"levels\"") != std::string::npos);
}

TEST_CASE("cli: verify subcommands") {
  TempDir tmp;
  std::string basis = tmp.file("b.txt", "2\n1 0\n0 1\n");
  std::string body = tmp.file("k.json", R"({"type":"lp","p":"inf","radius":"1"})");

  RunResult bounds = run("verify bounds --basis " + basis + " --body " + body + " --d 3");
  CHECK(bounds.exit_code == 0);
  CHECK(bounds.out.find("max_count 49\n") != std::string::npos);
  CHECK(bounds.out.find("PASS\n") != std::string::npos);

  RunResult sumset = run("verify sumset --max-p 13 --families 100 --seed 5");
  CHECK(sumset.exit_code == 0);
  CHECK(sumset.out.find("failures 0\n") != std::string::npos);

  RunResult spars = run("verify sparsifier --basis " + basis + " --body " + body +
                        " --t 120 --grid 4");
  CHECK(spars.exit_code == 0);
  CHECK(spars.out.find("PASS\n") != std::string::npos);

  RunResult gap = run("verify primegap --from 1001 --to 3000");
  CHECK(gap.exit_code == 0);
  CHECK(gap.out.find("PASS\n") != std::string::npos);
}

TEST_CASE("cli: deterministic byte-identical reruns") {
  TempDir tmp;
  std::string basis = tmp.file("b.txt", "2\n3 1\n-2 2\n");
  std::string body = tmp.file("k.json",
                              R"({"type":"polytope","A":[["1","0"],["0","1"],["-1","-1"]],)"
                              R"("b":["1","1","1"],"gamma":"4/5"})");
  std::string target = tmp.file("t.txt", "5/7 -3/11\n");
  std::string cmd = "cvp-approx --basis " + basis + " --body " + body + " --target " + target +
                    " --eps 1/4 --json";
  RunResult a = run(cmd);
  RunResult b = run(cmd);
  RunResult c = run(cmd);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(b.out == c.out);

  std::string rand_cmd = "sparsify --basis " + basis + " --body " + body +
                         " --t 150 --randomized --seed 42";
  RunResult ra = run(rand_cmd);
  RunResult rb = run(rand_cmd);
  CHECK(ra.exit_code == 0);
  CHECK(ra.out == rb.out);
}

TEST_CASE("cli: exit codes") {
  TempDir tmp;
  RunResult usage = run("cvp-approx --nonsense");
  CHECK(usage.exit_code == 1);

  std::string bad = tmp.file("bad.txt", "2\n1 0\nx y\n");
  std::string body = tmp.file("k.json", R"({"type":"lp","p":"inf","radius":"1"})");
  std::string target = tmp.file("t.txt", "0 0\n");
  RunResult malformed =
      run("cvp-l2 --basis " + bad + " --target " + target);
  CHECK(malformed.exit_code == 1);

  std::string singular = tmp.file("sing.txt", "2\n1 2\n2 4\n");
  RunResult invalid = run("cvp-l2 --basis " + singular + " --target " + target);
  CHECK(invalid.exit_code == 2);

  RunResult nocmd = run("");
  CHECK(nocmd.exit_code == 1);
}

TEST_CASE("cli: enum with an off-origin center") {
  TempDir tmp;
  std::string basis = tmp.file("b.txt", "2\n1 0\n0 1\n");
  std::string body = tmp.file("k.json", R"({"type":"lp","p":"2","radius":"1"})");
  std::string center = tmp.file("c.txt", "1/2 1/2\n");
  RunResult r = run("enum --basis " + basis + " --body " + body + " --scale 2/5 --center " +
                    center);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "COUNT 0\n");  // nearest point is sqrt(2)/2 away

  RunResult moved = run("enum --basis " + basis + " --body " + body + " --scale 1 --center " +
                        center);
  CHECK(moved.exit_code == 0);
  CHECK(moved.out.find("COUNT 4\n") != std::string::npos);
}

TEST_CASE("cli: missing file and bad body json") {
  TempDir tmp;
  std::string basis = tmp.file("b.txt", "2\n1 0\n0 1\n");
  std::string target = tmp.file("t.txt", "0 0\n");
  RunResult missing = run("cvp-l2 --basis /nonexistent/b.txt --target " + target);
  CHECK(missing.exit_code == 2);

  std::string bad_body = tmp.file("bad.json", "{\"type\":\"lp\"");
  RunResult badjson = run("svp --basis " + basis + " --body " + bad_body);
  CHECK(badjson.exit_code == 1);  // malformed file

  std::string decimal = tmp.file("dec.json", R"({"type":"lp","p":"inf","radius":0.25})");
  RunResult dec = run("svp --basis " + basis + " --body " + decimal);
  CHECK(dec.exit_code == 2);  // decimals are invalid input, not a syntax error
}
