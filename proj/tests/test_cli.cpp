#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + "\"" EQSCHED_CLI "\" " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  for (std::size_t got; (got = std::fread(buf, 1, sizeof buf, pipe)) > 0;) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& path, const std::string& text) { std::ofstream(path) << text; }

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("eqsched-cli-" + std::to_string(::getpid()))) {
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

const char* kExample = "eqsched-instance v1\n3 2\n2\n0 0 1\n";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("gen is deterministic and round-trips") {
  TempDir dir;
  Run a = run("gen --n 3 --m 2 --p-max 2 --r-max 2 --seed 1 --out " + (dir / "a.txt"));
  Run b = run("gen --n 3 --m 2 --p-max 2 --r-max 2 --seed 1 --out " + (dir / "b.txt"));
  CHECK(a.code == 0);
  CHECK(b.code == 0);
  CHECK(slurp(dir / "a.txt") == slurp(dir / "b.txt"));
  CHECK(run("solve --in " + (dir / "a.txt")).code == 0);
  CHECK(run("gen --n 0 --m 2 --p-max 2 --r-max 2 --seed 1").code == 2);
  CHECK(run("gen --n 3").code == 2);
}

TEST_CASE("solve reports and writes a schedule that validates") {
  TempDir dir;
  spit(dir / "i.txt", kExample);
  Run s = run("solve --in " + (dir / "i.txt") + " --out-schedule " + (dir / "s.txt"));
  CHECK(s.code == 0);
  CHECK(s.out.find("objective 8\n") == 0);
  Run v = run("validate --in " + (dir / "i.txt") + " --schedule " + (dir / "s.txt") +
              " --check feasible --check normal --check irreducible --check left-adjusted");
  CHECK(v.code == 0);
  CHECK(v.out.find("fail") == std::string::npos);

  Run j = run("solve --in " + (dir / "i.txt") + " --report structured");
  CHECK(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["objective"] == "8");

  spit(dir / "one.txt", "eqsched-instance v1\n1 1\n5\n2\n");
  CHECK(run("solve --in " + (dir / "one.txt")).out.find("objective 7\n") == 0);
  CHECK(run("solve --in " + (dir / "one.txt") + " --float").out == "objective 7\n");
}

TEST_CASE("solve input errors") {
  TempDir dir;
  spit(dir / "bad.txt", "eqsched-instance v1\n1 1\n0\n0\n");
  CHECK(run("solve --in " + (dir / "bad.txt")).code == 2);
  CHECK(run("solve --in " + (dir / "missing.txt")).code == 2);
  CHECK(run("solve --in " + (dir / "bad.txt") + " --report yaml").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("oracle") {
  TempDir dir;
  spit(dir / "i.txt", kExample);
  Run o = run("oracle --in " + (dir / "i.txt"));
  CHECK(o.code == 0);
  CHECK(o.out.find("objective 8\n") == 0);
  CHECK(o.out.find("slot 0:") != std::string::npos);
  Run np = run("oracle --in " + (dir / "i.txt") + " --nonpreemptive --report structured");
  CHECK(np.code == 0);
  CHECK(nlohmann::json::parse(np.out)["objective"] == "8");
  spit(dir / "frac.txt", "eqsched-instance v1\n1 1\n1/2\n0\n");
  CHECK(run("oracle --in " + (dir / "frac.txt")).code == 2);
  CHECK(run("oracle --in " + (dir / "i.txt"), "EQSCHED_TRANSITION_CAP=5").code == 3);
  CHECK(run("oracle --in " + (dir / "i.txt"), "EQSCHED_TRANSITION_CAP=abc").code == 2);
}

TEST_CASE("validate reports failures with witnesses") {
  TempDir dir;
  spit(dir / "i.txt", "eqsched-instance v1\n2 1\n1\n0 0\n");
  spit(dir / "overlap.txt", "eqsched-schedule v1\n2 1\n1 1 0 1\n2 1 1/2 3/2\n");
  Run v = run("validate --in " + (dir / "i.txt") + " --schedule " + (dir / "overlap.txt") + " --check feasible");
  CHECK(v.code == 1);
  CHECK(v.out.find("check feasible/machine-disjoint fail") != std::string::npos);
  CHECK(v.out.find("1/2") != std::string::npos);

  spit(dir / "swapped.txt", "eqsched-schedule v1\n2 1\n2 1 0 1\n1 1 1 2\n");
  Run irr = run("validate --in " + (dir / "i.txt") + " --schedule " + (dir / "swapped.txt") +
                " --check irreducible");
  CHECK(irr.code == 1);
  CHECK(irr.out.find("check irreducible fail (") != std::string::npos);

  CHECK(run("validate --in " + (dir / "i.txt") + " --schedule " + (dir / "swapped.txt") + " --check feasible")
            .code == 0);
  CHECK(run("validate --in " + (dir / "i.txt") + " --schedule " + (dir / "nope.txt")).code == 2);
  spit(dir / "wrong-size.txt", "eqsched-schedule v1\n3 1\n1 1 0 1\n");
  CHECK(run("validate --in " + (dir / "i.txt") + " --schedule " + (dir / "wrong-size.txt")).code == 2);
  CHECK(run("validate --in " + (dir / "i.txt") + " --schedule " + (dir / "swapped.txt") + " --check bogus")
            .code == 2);
}

TEST_CASE("compare") {
  Run ex = run("compare --exhaustive --n-max 2 --m-max 2 --p-max 2 --r-max 2");
  CHECK(ex.code == 0);
  CHECK(ex.out.find("mismatches 0\n") != std::string::npos);
  Run rnd = run("compare --random --count 200 --seed 7 --n 5 --m 3 --p-max 3 --r-max 6 --threads 2");
  CHECK(rnd.code == 0);
  CHECK(rnd.out.find("instances checked 200\n") != std::string::npos);
  CHECK(rnd.out.find("mismatches 0\n") != std::string::npos);
  Run np = run("compare --exhaustive --n-max 2 --m-max 2 --p-max 2 --r-max 1 --nonpreemptive --verbose");
  CHECK(np.code == 0);
  CHECK(np.out.find("preemption strictly helps on") != std::string::npos);
  CHECK(run("compare --n-max 2").code == 2);
  CHECK(run("compare --exhaustive --random").code == 2);
}

TEST_CASE("gantt") {
  TempDir dir;
  spit(dir / "i.txt", kExample);
  REQUIRE(run("oracle --in " + (dir / "i.txt")).code == 0);
  REQUIRE(run("solve --in " + (dir / "i.txt") + " --out-schedule " + (dir / "s.txt")).code == 0);
  Run svg = run("gantt --in " + (dir / "i.txt") + " --schedule " + (dir / "s.txt") + " --out -");
  CHECK(svg.code == 0);
  CHECK(svg.out.find("<svg") != std::string::npos);
  CHECK(run("gantt --in " + (dir / "i.txt") + " --schedule " + (dir / "s.txt") + " --out " + (dir / "g.svg"))
            .code == 0);
  CHECK(slurp(dir / "g.svg") == svg.out);
  Run ascii = run("gantt --in " + (dir / "i.txt") + " --schedule " + (dir / "s.txt") + " --out - --ascii");
  CHECK(ascii.code == 0);
  CHECK(ascii.out.find("M1 |") == 0);

  spit(dir / "empty.txt", "");
  CHECK(run("gantt --in " + (dir / "i.txt") + " --schedule " + (dir / "empty.txt") + " --out -").code == 2);
  spit(dir / "frac.txt", "eqsched-schedule v1\n3 2\n1 1 0 1/2\n");
  CHECK(run("gantt --in " + (dir / "i.txt") + " --schedule " + (dir / "frac.txt") + " --out - --ascii").code ==
        2);
}

}  // TEST_SUITE
