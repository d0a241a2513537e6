#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <json.hpp>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + STRANDALG_BIN + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string fixture(const std::string& name) {
  return std::string(STRANDALG_FIXTURE_DIR) + "/" + name + ".qz";
}

}  // namespace

TEST_CASE("nerve") {
  const Run r = run("nerve " + fixture("intro"));
  CHECK(r.code == 0);
  CHECK(r.out == "V[1]={1,2,3} V[2]={4}\n");
}

TEST_CASE("ideal --json lists the generators") {
  const Run r = run("ideal " + fixture("intro") + " --json");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["relations"].size() == 9);
  CHECK(j["v_generators"].size() == 4);
  CHECK(j["notv_generators"].size() == 6);
  CHECK(j["v_generators"][3]["s"] == "t");
  CHECK(j["v_generators"][3]["vertex"] == "4");
  CHECK(j["v_generators"][3]["sigma"] == nlohmann::json::array({"b"}));
}

TEST_CASE("verify exit codes") {
  CHECK(run("verify " + fixture("mathieu")).code == 0);
  const Run j = run("verify " + fixture("mathieu") + " --json");
  CHECK(nlohmann::json::parse(j.out)["string_algebra"] == true);
  CHECK(nlohmann::json::parse(j.out)["bounded_below"]["kind"] == "structural");
  CHECK(run("verify " + fixture("broken_nonbiserial")).code == 1);
  CHECK(run("verify " + fixture("broken_nonspecial")).code == 1);
}

TEST_CASE("input errors exit 2") {
  CHECK(run("verify /nonexistent.qz").code == 2);
  CHECK(run("primitives " + fixture("broken_nonspecial")).code == 2);
  CHECK(run("reduce " + fixture("intro") + " 'q*e(1)'").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("truncdim " + fixture("intro") + " 3").code == 2);
}

TEST_CASE("reduce") {
  const Run r = run("reduce " + fixture("intro") + " 'p*e(1) - path(a*y*x)'");
  CHECK(r.code == 0);
  CHECK(r.out == "y*x*a\n");
  const Run j = run("reduce " + fixture("intro") + " 't*e(4) - b' --json");
  CHECK(nlohmann::json::parse(j.out)["member"] == true);
}

TEST_CASE("caps precedence: flags over environment over file") {
  auto caps = [](const Run& r) {
    const auto j = nlohmann::json::parse(r.out)["caps"];
    return std::pair{j["L"].get<int>(), j["D"].get<int>()};
  };
  const std::string cmd = "reduce " + fixture("dvr_row2") + " a --json";
  CHECK(caps(run(cmd)) == std::pair{8, 8});
  CHECK(caps(run(cmd, "STRANDALG_CAPS=5,3")) == std::pair{5, 3});
  CHECK(caps(run(cmd + " -L 7", "STRANDALG_CAPS=5,3")) == std::pair{7, 3});
  CHECK(run(cmd, "STRANDALG_CAPS=junk").code == 2);
}

TEST_CASE("truncdim, primitives, check, report") {
  CHECK(run("truncdim " + fixture("dvr_row1") + " 4").out == "d=4 lhs=11 rhs=11 equal\n");
  CHECK(run("primitives " + fixture("dvr_row2")).out == "a\nb\n");
  CHECK(run("check " + fixture("broken_nonbiserial")).code == 1);
  const Run r = run("report " + fixture("intro") + " --json");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["pairs"].size() == 25);
  CHECK(run("--help").code == 0);
}
