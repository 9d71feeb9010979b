// Spawns the installed CLI binary and checks output and exit codes.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <json.hpp>
#include <string>

#ifndef CLI_PATH
#error "CLI_PATH must point at the lie binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string command = std::string(CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buffer;
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), got);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("algebra command") {
  RunResult r = run("algebra su3");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("dim: 8") != std::string::npos);
  CHECK(r.output.find("rank: 2") != std::string::npos);
  CHECK(r.output.find("semisimple: true") != std::string::npos);
  CHECK(r.output.find("compact_type: true") != std::string::npos);

  RunResult u2 = run("algebra u2");
  CHECK(u2.exit_code == 0);
  CHECK(u2.output.find("dim: 4") != std::string::npos);
  CHECK(u2.output.find("semisimple: false") != std::string::npos);

  CHECK(run("algebra zz9").exit_code == 2);
  CHECK(run("nonsense").exit_code == 2);

  RunResult json = run("algebra su2 --json");
  CHECK(json.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(json.output);
  CHECK(j["dim"] == 3);
  CHECK(j["semisimple"] == true);
}

TEST_CASE("roots command") {
  RunResult r = run("roots su3 --json");
  CHECK(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j["rank"] == 2);
  CHECK(j["roots"].size() == 6);
  CHECK(j["simple"].size() == 2);

  RunResult so7 = run("roots so7 --json");
  nlohmann::json j7 = nlohmann::json::parse(so7.output);
  CHECK(j7["roots"].size() == 18);
  CHECK(j7["simple"].size() == 3);

  CHECK(run("roots sl2_r").exit_code == 3);
  CHECK(run("roots u2").exit_code == 3);
}

TEST_CASE("dynkin command") {
  RunResult so7 = run("dynkin so7 --ascii");
  CHECK(so7.exit_code == 0);
  CHECK(so7.output.find("o - o => o") != std::string::npos);
  CHECK(so7.output.find("labels: B3") != std::string::npos);

  RunResult su4 = run("dynkin su4");
  CHECK(su4.output.find("o - o - o") != std::string::npos);
  CHECK(su4.output.find("labels: A3") != std::string::npos);

  RunResult so4 = run("dynkin so4");
  CHECK(so4.output.find("labels: A1,A1") != std::string::npos);

  RunResult json = run("dynkin so7 --json");
  nlohmann::json j = nlohmann::json::parse(json.output);
  CHECK(j["components"][0]["label"] == "B3");
}

TEST_CASE("weyl command") {
  CHECK(run("weyl su3").output == "6\n");
  CHECK(run("weyl so5 --order-only").output == "8\n");
  CHECK(run("weyl su2").output == "2\n");
  RunResult json = run("weyl su3 --json");
  nlohmann::json j = nlohmann::json::parse(json.output);
  CHECK(j["order"] == 6);
  CHECK(j["elements"].size() == 6);
}

TEST_CASE("orbit command") {
  RunResult r = run("orbit su3 --z 1.0 0.5 --n 1.0 0.5 --samples 3");
  CHECK(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j["parallel_check"] == "PASS");
  for (const auto& c : j["principal_curvatures"]) CHECK(c["value"] == -1.0);

  // singular base point: exit 4 and the vanishing root is named on stderr
  CHECK(run("orbit su3 --z 0 0 --n 1 1").exit_code == 4);

  // wrong coordinate count
  CHECK(run("orbit su3 --z 1 --n 1").exit_code == 2);
}

TEST_CASE("deterministic output under a fixed seed") {
  RunResult a = run("orbit so5 --seed 11 --z 0.9 0.4 --n 0.2 -0.3 --samples 4");
  RunResult b = run("orbit so5 --seed 11 --z 0.9 0.4 --n 0.2 -0.3 --samples 4");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);

  RunResult c = run("roots so7 --seed 3 --json");
  RunResult d = run("roots so7 --seed 3 --json");
  CHECK(c.output == d.output);

  RunResult e = run("weyl sp2 --json");
  RunResult f = run("weyl sp2 --json");
  CHECK(e.output == f.output);
}
