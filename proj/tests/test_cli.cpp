#include "dias/commands.hpp"
#include "dias/format.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sys/wait.h>

using namespace dias;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(DIAS_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string temp_file(const std::string& name, const std::string& text) {
  const std::string path = std::string(DIAS_TEST_TMP) + "/" + name;
  std::ofstream(path) << text;
  return path;
}

std::size_t count_items(const Report& r) {
  std::size_t n = 0;
  for (const auto& s : r.sections) n += s.items.size();
  return n;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("report verdicts") {
  Report r;
  auto& s = r.section("a");
  s.item("x", ItemStatus::Pass);
  CHECK(r.verdict() == Verdict::Pass);
  s.item("y", ItemStatus::Info);
  CHECK(r.verdict() == Verdict::Pass);
  s.item("z", ItemStatus::Finding);
  CHECK(r.verdict() == Verdict::Findings);
  CHECK(exit_code(r.verdict()) == 0);
  r.section("b").item("w", ItemStatus::Fail);
  CHECK(r.verdict() == Verdict::Fail);
  CHECK(exit_code(r.verdict()) == 1);
  CHECK_THROWS_AS((s.value("k", "1"), s.value("k", "2")), std::logic_error);
}

TEST_CASE("machine and text renderings carry the same data") {
  for (const auto& r : {cmd_spaces("catalog:Dias2_1", OperatorKind::Diderivation), cmd_invariants("catalog:Dias2_4"),
                        cmd_bider("catalog:Dias2_2"), cmd_verify("catalog:Dias3_1")}) {
    const auto doc = nlohmann::json::parse(render_json(r));
    const std::string text = render_text(r);
    CHECK(doc["verdict"] == verdict_name(r.verdict()));
    CHECK(doc["sections"].size() == r.sections.size());
    std::size_t items = 0;
    for (const auto& s : doc["sections"]) {
      CHECK(text.find("== " + s["title"].get<std::string>() + " ==") != std::string::npos);
      for (const auto& [k, v] : s["values"].items())
        CHECK(text.find(k + ": " + v.get<std::string>()) != std::string::npos);
      for (const auto& i : s["items"]) {
        CHECK(text.find("] " + i["name"].get<std::string>()) != std::string::npos);
        ++items;
      }
    }
    CHECK(items == count_items(r));
  }
}

TEST_CASE("spaces: Dias2_1 diderivations") {
  const auto r = cmd_spaces("catalog:Dias2_1", OperatorKind::Diderivation);
  REQUIRE(r.sections.size() == 2);
  const auto& s = r.sections[1];
  CHECK(s.values.front() == std::pair<std::string, std::string>{"dim", "1"});
  REQUIRE(s.matrices.size() == 1);
  CHECK(s.matrices[0].rows == std::vector<std::vector<std::string>>{{"0", "0"}, {"1", "0"}});
  CHECK(r.verdict() == Verdict::Pass);
}

TEST_CASE("input selectors") {
  CHECK(load_input("catalog:Dias3_16?k=1,m=1/2,n=0,p=-1,q=3").dim() == 3);
  CHECK_THROWS_AS(load_input("catalog:Dias3_16?k=1"), InputError);
  CHECK_THROWS_AS(load_input("catalog:Dias2_3?lambda=1/0"), InputError);
  CHECK_THROWS_AS(load_input("catalog:Dias2_3?lambda"), InputError);
  CHECK_THROWS_AS(load_input("catalog:Dias2_3?lambda=1,lambda=2"), InputError);
  CHECK_THROWS_AS(load_input("/nonexistent/file.dias"), InputError);
  const auto path = temp_file("dias21.dias", serialize_dialgebra(load_input("catalog:Dias2_1")));
  CHECK(load_input(path) == load_input("catalog:Dias2_1"));
}

TEST_CASE("exit codes") {
  CHECK(run_cli("verify catalog:Dias2_1").status == 0);
  CHECK(run_cli("verify catalog:Dias3_1").status == 1);
  CHECK(run_cli("verify catalog:NoSuchEntry").status == 2);

  const auto bad = temp_file("bad_index.dias", "dialgebra v1\ndim 2\nvdash 1 5 -> 1:1\n");
  const std::string cmd = std::string(DIAS_CLI_PATH) + " verify " + bad + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string err;
  char buf[512];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) err.append(buf, n);
  const int raw = pclose(pipe);
  CHECK(WEXITSTATUS(raw) == 2);
  CHECK(err.find("line 3") != std::string::npos);

  CHECK(run_cli("spaces --which bogus catalog:Dias2_1").status != 0);
}

TEST_CASE("machine output is one JSON document") {
  const auto r = run_cli("spaces --which dider catalog:Dias2_1 --machine");
  CHECK(r.status == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["schema"] == "dias-report/1");
  CHECK(doc["command"] == "spaces dider");
  CHECK(doc["sections"][1]["matrices"][0]["rows"] == nlohmann::json::parse(R"([["0", "0"], ["1", "0"]])"));
}

TEST_CASE("findings exit 0") {
  // Dias3_9 and Dias3_11 are flagged entries: their table mismatches are findings.
  const auto r = cmd_catalog("Dias3_9", 1, 7);
  CHECK(r.verdict() == Verdict::Findings);
  CHECK(run_cli("catalog Dias3_9 --samples 1").status == 0);
}

TEST_CASE("output is deterministic") {
  const auto a = run_cli("catalog Dias2 --samples 2 --seed 3 --machine");
  const auto b = run_cli("catalog Dias2 --samples 2 --seed 3 --machine");
  CHECK(a.out == b.out);
  CHECK(run_cli("kxy --bound 4 --seed 1").out == run_cli("kxy --bound 4 --seed 1").out);
}

}
