// End-to-end checks of the qcert binary: exit codes, output formats and
// byte determinism. The binary path comes from the build system.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <doctest.h>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(QCERT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return RunResult{WEXITSTATUS(status), out};
}

std::string temp_path(const std::string& name) {
  const char* dir = std::getenv("TMPDIR");
  return std::string(dir ? dir : "/tmp") + "/" + name;
}

}  // namespace

TEST_CASE("peres rays reports 33 entries") {
  const RunResult r = run_cli("peres rays");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"count\":33") != std::string::npos);
}

TEST_CASE("peres bases reports the 40/57 counts") {
  const RunResult r = run_cli("peres bases");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"bases\":40") != std::string::npos);
  CHECK(r.out.find("\"rays\":57") != std::string::npos);
}

TEST_CASE("peres graph emits DOT on request") {
  const RunResult dot = run_cli("peres graph --format dot");
  CHECK(dot.exit_code == 0);
  CHECK(dot.out.rfind("graph", 0) == 0);

  const RunResult json = run_cli("peres graph");
  CHECK(json.exit_code == 0);
  CHECK(json.out.find("\"nodes\":57") != std::string::npos);
}

TEST_CASE("ks prove finds the Peres contradiction") {
  const RunResult r = run_cli("ks prove");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"result\":\"UNSAT\"") != std::string::npos);
}

TEST_CASE("ks prove on a single-basis file is SAT with exit 2") {
  const std::string path = temp_path("qcert_single_basis.txt");
  {
    std::ofstream f(path);
    f << "# one basis\n0 1 2\n";
  }
  const RunResult r = run_cli("ks prove --bases-file " + path);
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("\"result\":\"SAT\"") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("ks prove accepts a rays file and completes it") {
  const std::string path = temp_path("qcert_axes.rays");
  {
    std::ofstream f(path);
    f << "1 0 0\n0 1 0\n";
  }
  const RunResult r = run_cli("ks prove --rays-file " + path);
  CHECK(r.exit_code == 2);  // one completed basis, trivially colorable
  CHECK(r.out.find("\"result\":\"SAT\"") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("exported rays feed back into the prover") {
  const std::string path = temp_path("qcert_peres.rays");
  const RunResult exported =
      run_cli("peres rays --format text --output " + path);
  REQUIRE(exported.exit_code == 0);
  const RunResult proved = run_cli("ks prove --rays-file " + path);
  CHECK(proved.exit_code == 0);
  CHECK(proved.out.find("\"result\":\"UNSAT\"") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("ks prove rejects malformed rays files with exit 1") {
  const std::string path = temp_path("qcert_bad.rays");
  {
    std::ofstream f(path);
    f << "1 0\n";
  }
  const RunResult r = run_cli("ks prove --rays-file " + path);
  CHECK(r.exit_code == 1);
  CHECK(r.out.empty());
  std::remove(path.c_str());
}

TEST_CASE("stairs verify passes and honors --k") {
  const RunResult one = run_cli("stairs verify --k 1");
  CHECK(one.exit_code == 0);
  CHECK(one.out.find("\"all_certain\":true") != std::string::npos);
  CHECK(one.out.find("\"coloring\"") == std::string::npos);

  const RunResult bad = run_cli("stairs verify --k 99");
  CHECK(bad.exit_code == 1);
}

TEST_CASE("full stairs verify attaches the coloring verdict") {
  const RunResult r = run_cli("stairs verify");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"all_certain\":true") != std::string::npos);
  CHECK(r.out.find("\"coloring\":\"UNSAT\"") != std::string::npos);
}

TEST_CASE("prep demo circuit examples") {
  const RunResult a = run_cli("prep demo --circuit a --alpha 0.6 --beta 0.8");
  CHECK(a.exit_code == 0);
  CHECK(a.out.find("\"outcomes\":{\"0\":0.35999999999999999,"
                   "\"1\":0.64000000000000012}") != std::string::npos);
  CHECK(a.out.find("\"kind\":\"Deterministic\"") != std::string::npos);

  const RunResult c = run_cli("prep demo --circuit c --alpha 1 --beta 0");
  CHECK(c.exit_code == 0);
  // system_out = |1⟩⟨1|
  CHECK(c.out.find("\"system_out\":[[[0,0],[0,0]],[[0,0],[1,0]]]") !=
        std::string::npos);
}

TEST_CASE("prep demo rejects non-numeric amplitudes") {
  const RunResult r = run_cli("prep demo --circuit a --alpha fish --beta 0");
  CHECK(r.exit_code == 1);
}

TEST_CASE("unknown flags are rejected") {
  const RunResult r = run_cli("peres rays --frobnicate");
  CHECK(r.exit_code == 1);
}

TEST_CASE("tomo roundtrip passes its tolerance") {
  const RunResult r = run_cli("tomo roundtrip --dim 2 --trials 25 --seed 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"dim\":2") != std::string::npos);
  CHECK(r.out.find("\"trials\":25") != std::string::npos);

  const RunResult d3 = run_cli("tomo roundtrip --dim 3 --trials 100 --seed 0");
  CHECK(d3.exit_code == 0);
  CHECK(d3.out.find("\"all_positive\":true") != std::string::npos);
}

TEST_CASE("identical runs are byte-identical") {
  for (const std::string& args :
       {std::string("peres bases"), std::string("ks prove"),
        std::string("stairs verify --k 7"),
        std::string("tomo roundtrip --dim 3 --trials 10 --seed 42"),
        std::string("prep demo --circuit b --alpha 0.6 --beta=-0.8i")}) {
    const RunResult first = run_cli(args);
    const RunResult second = run_cli(args);
    CHECK(first.exit_code == second.exit_code);
    CHECK(first.out == second.out);
    CHECK_FALSE(first.out.empty());
  }
}

TEST_CASE("--output writes the same bytes to a file") {
  const std::string path = temp_path("qcert_out.json");
  const RunResult direct = run_cli("peres bases");
  const RunResult redirected = run_cli("peres bases --output " + path);
  CHECK(redirected.exit_code == 0);
  CHECK(redirected.out.empty());
  std::ifstream f(path, std::ios::binary);
  std::string file_content((std::istreambuf_iterator<char>(f)),
                           std::istreambuf_iterator<char>());
  CHECK(file_content == direct.out);
  std::remove(path.c_str());
}
