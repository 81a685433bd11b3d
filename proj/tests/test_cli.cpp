// Runs the bookramsey executable and checks exit codes and output.

#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(BR_CLI_PATH) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void spit(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("bookramsey_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("paley") {
  auto r = run("paley --q 5");
  CHECK(r.code == 0);
  CHECK(r.out.find("IhdLAgmco") != std::string::npos);
  CHECK(r.out.find("pass") != std::string::npos);

  r = run("paley --q 5 --json");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["report"]["vertices"] == 10);

  CHECK(run("paley --q 7").code == 2);
  CHECK(run("paley").code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run("frobnicate").code == 2);
  CHECK(run("paley --q 5 --bogus").code == 2);
  CHECK(run("check --graph /nonexistent --r 1 --s 1").code == 2);
  CHECK(run("--help").code == 0);
  CHECK(run("--version").code == 0);
}

TEST_CASE("verify-appendix") {
  auto r = run("verify-appendix");
  CHECK(r.code == 0);
  r = run("verify-appendix --json");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["entries"].size() == 28);
}

TEST_CASE("check on a witness and a corrupted witness") {
  TempDir dir;
  // C_5 as a matrix.
  spit(dir.path / "c5.txt", "0 1 0 0 1\n1 0 1 0 0\n0 1 0 1 0\n0 0 1 0 1\n1 0 0 1 0\n");
  CHECK(run("check --graph " + (dir.path / "c5.txt").string() + " --r 1 --s 1").code == 0);

  // Same graph plus chord 0-2, which closes the triangle 0-1-2.
  spit(dir.path / "bad.txt", "0 1 1 0 1\n1 0 1 0 0\n1 1 0 1 0\n0 0 1 0 1\n1 0 0 1 0\n");
  auto r = run("check --graph " + (dir.path / "bad.txt").string() + " --r 1 --s 1 --json");
  CHECK(r.code == 1);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["pass"] == false);
  CHECK(j["violation"]["side"] == "graph");
  CHECK(j["violation"]["pair"].size() == 2);

  spit(dir.path / "g6.txt", "Bw\n");
  CHECK(run("check --graph " + (dir.path / "g6.txt").string() + " --r 2 --s 1").code == 0);
  spit(dir.path / "junk.txt", "0 1\n0 0\n");
  CHECK(run("check --graph " + (dir.path / "junk.txt").string() + " --r 2 --s 1").code == 2);
}

TEST_CASE("spec-check") {
  TempDir dir;
  spit(dir.path / "s.txt", "12; D11={2,4,5,7,8,10}; D12={0,3,4,6,11}\n");
  CHECK(run("spec-check --spec " + (dir.path / "s.txt").string() + " --r 5 --s 7").code == 0);
  const auto r = run("spec-check --spec " + (dir.path / "s.txt").string() + " --r 4 --s 7 --json");
  CHECK(r.code == 1);
  CHECK(nlohmann::json::parse(r.out)["pass"] == false);
  spit(dir.path / "bad.txt", "12; D11={1}; D12={}\n");
  CHECK(run("spec-check --spec " + (dir.path / "bad.txt").string() + " --r 5 --s 7").code != 0);
}

TEST_CASE("encoders write byte-identical files") {
  TempDir dir;
  const auto a = dir.path / "a.cnf", b = dir.path / "b.cnf", m = dir.path / "a.map";
  CHECK(run("encode-sat --n 7 --r 2 --s 2 --symmetry --out " + a.string() + " --map " + m.string()).code == 0);
  CHECK(run("encode-sat --n 7 --r 2 --s 2 --symmetry --out " + b.string()).code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a).rfind("p cnf ", 0) == 0);
  CHECK(fs::file_size(m) > 0);

  const auto l1 = dir.path / "a.lp", l2 = dir.path / "b.lp";
  CHECK(run("encode-ip --m 12 --r 5 --s 7 --complement-ansatz --out " + l1.string()).code == 0);
  CHECK(run("encode-ip --m 12 --r 5 --s 7 --complement-ansatz --out " + l2.string()).code == 0);
  CHECK(slurp(l1) == slurp(l2));
  CHECK(slurp(l1) == slurp(fs::path(BR_GOLDEN_DIR) / "ip_m12_r5_s7_ca.lp"));
  CHECK(run("encode-ip --m 12 --r 5 --s 7 --pin 0 --out " + l2.string()).code == 2);
}

TEST_CASE("decode-ip") {
  TempDir dir;
  spit(dir.path / "sol.txt", "x_2 1\nx_4 1\nx_5 1\nx_7 1\nx_8 1\nx_10 1\nz_0 1\nz_3 1\nz_4 1\nz_6 1\nz_11 1\n");
  auto r = run("decode-ip --m 12 --complement-ansatz --solution " + (dir.path / "sol.txt").string() + " --r 5 --s 7");
  CHECK(r.code == 0);
  CHECK(r.out.find("12; D11={2,4,5,7,8,10}; D12={0,3,4,6,11}") != std::string::npos);
  r = run("decode-ip --m 12 --complement-ansatz --solution " + (dir.path / "sol.txt").string() + " --r 4 --s 7");
  CHECK(r.code == 1);
}

TEST_CASE("enumerate and ramsey-number") {
  auto r = run("enumerate --n 10 --r 2 --s 3");
  CHECK(r.code == 0);
  std::istringstream is(r.out);
  std::string line;
  int graphs = 0;
  while (std::getline(is, line) && !line.empty() && line[0] != '{') ++graphs;
  CHECK(graphs == 4);

  CHECK(run("enumerate --n 20 --r 4 --s 4 --budget 0.001").code == 3);
  r = run("ramsey-number --r 1 --s 1 --cap 10 --json");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["value"] == 6);
  CHECK(run("ramsey-number --r 2 --s 2 --cap 8").code == 3);
}

TEST_CASE("bounds") {
  auto r = run("bounds show 6 8 --json");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["lower"] == 29);
  CHECK(j["upper"] == 29);
  r = run("bounds show 5 7 --json");
  CHECK(nlohmann::json::parse(r.out)["upper"].is_null());

  CHECK(run("bounds verify-all").code == 0);

  TempDir dir;
  const auto out = dir.path / "reg.jsonl";
  CHECK(run("bounds export --out " + out.string()).code == 0);
  r = run("bounds --registry " + out.string() + " show 2 13 --json");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["lower"] == 29);

  // A tampered hash must fail verification.
  std::string text = slurp(out);
  const auto pos = text.find("\"sha256\":\"") + 10;
  text[pos] = text[pos] == '0' ? '1' : '0';
  spit(dir.path / "tampered.jsonl", text);
  CHECK(run("bounds --registry " + (dir.path / "tampered.jsonl").string() + " verify-all").code != 0);
}
