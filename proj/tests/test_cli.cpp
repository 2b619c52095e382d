#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), {"--fixtures-dir", FIXTURES_DIR});
  std::ostringstream out, err;
  const int code = bikei::cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
  args.insert(args.begin(), "--json");
  const auto r = run(args);
  REQUIRE(r.code == 0);
  return nlohmann::json::parse(r.out);
}

std::string fixture(const char* file) { return std::string(FIXTURES_DIR) + "/" + file; }

std::string temp_file(const char* name, const std::string& text) {
  const auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << text;
  return p.string();
}

}  // namespace

TEST_CASE("cli check") {
  const auto ok = run({"check", fixture("hopf3.json")});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("valid") != std::string::npos);
  CHECK(run({"check", "trivial1"}).code == 0);
  CHECK(run({"check", fixture("hopf3.csv")}).code == 0);

  const auto bad = run({"check", "plus3_broken"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("ii.1") != std::string::npos);
  const auto j = nlohmann::json::parse(run({"--json", "check", "plus3_broken"}).out);
  CHECK(j["valid"] == false);
  bool ii1 = false;
  for (const auto& v : j["violations"]) ii1 = ii1 || v["axiom"] == "ii.1";
  CHECK(ii1);
}

TEST_CASE("cli color and count") {
  const auto j = run_json({"color", "-d", "hopf", "-t", "hopf3"});
  CHECK(j["count"] == 5);
  REQUIRE(j["colorings"].size() == 5);
  CHECK(j["colorings"][1] == nlohmann::json::parse(R"({"s1":1,"s2":2,"s3":1,"s4":2})"));

  // The text table carries the same rows.
  const auto text = run({"color", "-d", "hopf", "-t", "hopf3"}).out;
  for (const auto& c : j["colorings"]) {
    std::string row;
    for (const auto& [k, v] : c.items()) row += (row.empty() ? " " : "  ") + std::to_string(v.get<int>());
    CHECK(text.find(row + " |") != std::string::npos);
  }

  CHECK(run_json({"color", "-d", "unknot", "-t", "z2plus"})["count"] == 2);
  CHECK(run_json({"color", "-d", "unlink2", "-t", "z2plus"})["count"] == 4);
  CHECK(run_json({"count", "-d", "trefoil", "-t", "fox3"})["count"] == 9);
  CHECK(run({"count", "-d", fixture("trefoil.diagram"), "-t", fixture("fox3.json")}).out ==
        "count: 9\n");
  // Flags may follow the subcommand.
  CHECK(run({"count", "-d", "hopf", "-t", "hopf3", "--json"}).out.find("\"count\": 5") !=
        std::string::npos);
}

TEST_CASE("cli present") {
  const auto j = run_json({"present", "-d", "hopf"});
  CHECK(j["generators"].size() == 4);
  CHECK(j["relations"].size() == 8);
  CHECK(j["short_form"] == true);
  CHECK(run({"present", "-d", "unlink2"}).out.find("gen f1 f2") != std::string::npos);
}

TEST_CASE("cli move") {
  const auto j = run_json({"move", "-d", "unknot", "-t", "z2plus", "-s", "example2"});
  CHECK(j["count_before"] == 2);
  CHECK(j["count_after"] == 2);
  REQUIRE(j["elements"].size() == 2);
  CHECK(j["elements"][0]["base"]["f1"] == 1);
  CHECK(j["elements"][0]["current"]["f1"] == 2);
  CHECK(j["coincidences"].empty());
  CHECK(j["look_alikes"].size() == 2);
  const auto text = run({"move", "-d", "unknot", "-t", "z2plus", "-s", "example2"}).out;
  CHECK(text.find("distinct homset elements") != std::string::npos);

  const auto h = run_json({"move", "-d", "hopf", "-t", "hopf3", "-s", fixture("hopf_r1.moves"),
                           "--tietze"});
  CHECK(h["count_after"] == 5);
  CHECK(h["elements"].size() == 5);
  CHECK(h["steps"][0].contains("tietze"));

  const auto empty = temp_file("bikei_empty.moves", "# nothing\n");
  const auto e = run_json({"move", "-d", "hopf", "-t", "hopf3", "-s", empty});
  CHECK(e["steps"].empty());
  CHECK(e["elements"].size() == 5);
  for (const auto& el : e["elements"]) CHECK(el["base"] == el["current"]);

  const auto subset = temp_file("bikei_subset.json", R"([{"f1": 1}])");
  CHECK(run_json({"move", "-d", "unknot", "-t", "z2plus", "-s", "example2", "-c", subset})["elements"]
            .size() == 1);
  const auto invalid = temp_file("bikei_invalid.json", R"([{"s1": 1, "s2": 3, "s3": 1, "s4": 1}])");
  CHECK(run({"move", "-d", "hopf", "-t", "hopf3", "-s", empty, "-c", invalid}).code == 1);

  const auto broken = temp_file("bikei_broken.moves", "R1+ s=1 v=A\nR1- c=1 loop=1\n");
  const auto r = run({"move", "-d", "hopf", "-t", "hopf3", "-s", broken});
  CHECK(r.code != 0);
  CHECK(r.out.find("error: step 2") != std::string::npos);
}

TEST_CASE("cli sym") {
  const auto j = run_json({"sym", "-d", "trefoil", "-t", "fox3", "--reflect"});
  CHECK(j["group_order"] == 6);
  CHECK(j["orbits"] == nlohmann::json::parse("[[1],[2,3,4,6,7,8],[5],[9]]"));
  CHECK(run_json({"sym", "-d", "unknot", "-t", "z2plus"})["collisions"].empty());
  const auto u = run_json({"sym", "-d", "unlink2", "-t", "hopf3"});
  CHECK(u["collisions"].size() == 3);
  CHECK(run({"sym", "-d", "unlink2", "-t", "hopf3"}).out.find("{2,4}") != std::string::npos);
  CHECK(run_json({"sym", "-d", "trefoil", "-t", "fox3", "--reflect", "--mirror"})["group_order"] ==
        12);
}

TEST_CASE("cli homset") {
  CHECK(run_json({"homset", "-p", "trefoil2", "-t", "fox3"})["count"] == 9);
  CHECK(run_json({"homset", "-p", "trefoil2", "-t", "z2plus"})["assignments"] ==
        nlohmann::json::parse("[[1,1],[2,2]]"));
  CHECK(run_json({"homset", "-p", fixture("free1.pres"), "-t", "hopf3"})["count"] == 3);
}

TEST_CASE("cli fuzz") {
  const auto j = run_json({"fuzz", "-d", "trefoil", "-t", "fox3", "--moves", "50", "--seed", "7"});
  CHECK(j["pass"] == true);
  CHECK(j["trace"].size() == 50);
  for (const auto& s : j["trace"]) CHECK(s["count"] == 9);
  CHECK(run({"fuzz", "-d", "unknot", "-t", "z2plus", "--moves", "100", "--seed", "1"}).code == 0);
  const auto zero = run_json({"fuzz", "-d", "hopf", "-t", "hopf3", "--moves", "0"});
  CHECK(zero["pass"] == true);
  CHECK(zero["trace"].empty());
  // Same seed, same walk.
  CHECK(run({"fuzz", "-d", "hopf", "-t", "z2plus", "--moves", "20", "--seed", "3"}).out ==
        run({"fuzz", "-d", "hopf", "-t", "z2plus", "--moves", "20", "--seed", "3"}).out);
}

TEST_CASE("cli usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"color", "-d", "hopf"}).code == 2);
  CHECK(run({"color", "-d", "nowhere", "-t", "hopf3"}).code == 2);
  CHECK(run({"check", temp_file("bikei_bad.json", "{\"n\": 2")}).code == 2);
  CHECK(run({"fuzz", "-d", "hopf", "-t", "hopf3", "--moves", "-1"}).code == 2);
}
