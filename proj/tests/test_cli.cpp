#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "rankwb/cli.hpp"
#include "rankwb/corpus.hpp"
#include "rankwb/corpus_files.hpp"

using namespace rankwb;
using io::Json;

namespace {

const std::filesystem::path kCorpus = RANKWB_CORPUS_DIR;

std::string file(const std::string& name) { return (kCorpus / name).string(); }

struct Run {
  int code;
  std::string text;
  Json doc;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "rankwb");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out);
  const std::string text = out.str();
  return {code, text, text.empty() ? Json() : Json::parse(text)};
}

void check_error(const Run& r, const std::string& kind) {
  CHECK(r.code == cli::input_error);
  REQUIRE(r.doc.contains("error"));
  CHECK(r.doc["error"]["kind"] == kind);
  CHECK(r.doc["error"]["message"].is_string());
  CHECK(r.doc["error"].size() == 2);
}

std::filesystem::path scratch(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / ("rankwb_test_" + name);
  std::ofstream(path) << contents;
  return path;
}

}  // namespace

TEST_CASE("shipped corpus files match the in-code corpus") {
  for (const auto& [name, doc] : corpus::documents()) {
    CAPTURE(name);
    REQUIRE(std::filesystem::exists(kCorpus / name));
    CHECK(io::read_json_file(kCorpus / name) == doc);
  }
  const RationalField q;
  const auto doc = io::parse_rep(io::read_json_file(kCorpus / "unipotent.json"));
  const auto& rep = std::get<AlmostRep<Rational>>(doc.rep);
  const auto expected = corpus::unipotent();
  REQUIRE(rep.dim() == expected.dim());
  for (std::size_t g = 0; g < expected.table().size(); ++g) CHECK(equal(rep.matrices()[g], expected.matrices()[g]));
}

TEST_CASE("certify") {
  auto r = run({"certify", "--rep", file("z3.json")});
  CHECK(r.code == cli::ok);
  CHECK(r.doc["max_defect"] == "0");
  CHECK(r.doc["min_separation"] == "2/3");

  r = run({"certify", "--rep", file("z3_perms.json")});
  CHECK(r.code == cli::ok);
  CHECK(r.doc["min_separation"] == "2/3");
  CHECK(r.doc["sofic"]["all_hold"] == true);

  r = run({"certify", "--rep", file("z3.json"), "--field", "Fp:101"});
  CHECK(r.code == cli::ok);
  CHECK(r.doc["field"] == "Fp:101");
  CHECK(r.doc["min_separation"] == "2/3");

  r = run({"certify", "--window", "8"});
  CHECK(r.code == cli::ok);
  CHECK(r.doc["min_rho"] == "7/8");
  CHECK(r.doc["certified"] == true);

  r = run({"certify", "--patch", file("polynomial_patch_k8.json")});
  CHECK(r.code == cli::ok);
  CHECK(r.doc["certified"] == true);

  r = run({"certify", "--window", "2", "--epsilon", "0"});
  CHECK(r.code == cli::failed);
  CHECK(r.doc["certified"] == false);
}

TEST_CASE("witness") {
  auto r = run({"witness", "--n", "3", "--l", "1"});
  CHECK(r.code == cli::ok);
  CHECK(r.text.find("\"2/3\"") != std::string::npos);

  r = run({"witness", "--n", "10"});
  CHECK(r.code == cli::ok);
  CHECK(r.doc["min_distance"] == "3/5");

  check_error(run({"witness", "--n", "8", "--l", "2"}), "input");
}

TEST_CASE("reduce") {
  auto r = run({"reduce", "--rep", file("sign.json"), "--prime", "2"});
  CHECK(r.code == cli::failed);
  CHECK(r.doc.dump().find("rank_after") != std::string::npos);

  r = run({"reduce", "--rep", file("sign.json")});
  CHECK(r.code == cli::ok);

  r = run({"reduce", "--rep", file("gaussian.json")});
  CHECK(r.code == cli::ok);

  check_error(run({"reduce", "--rep", file("sign.json"), "--prime", "4"}), "input");
}

TEST_CASE("amplify, combine, jordan, extend, regular, align") {
  auto r = run({"amplify", "--matrix", file("tight.json")});
  CHECK(r.code == cli::ok);
  CHECK(r.doc["levels"][1]["m1"] == "5/9");

  r = run({"amplify", "--rep", file("unipotent.json"), "--level", "2"});
  CHECK(r.code == cli::ok);

  r = run({"combine", "--thetas", file("sign_thetas.json")});
  CHECK(r.code == cli::ok);
  CHECK(r.doc["lhs"] == "3/8");

  r = run({"combine", "--rep", file("sign.json"), "--element", "e:1,g:-1", "--depth", "2"});
  CHECK(r.code == cli::ok);
  CHECK(r.doc["lhs"] == "3/8");

  r = run({"combine", "--eliminate", file("eliminate.json")});
  CHECK(r.code == cli::ok);
  CHECK(r.doc["rho"] == "1/2");

  r = run({"jordan", "--s", "2", "--t", "3"});
  CHECK(r.code == cli::ok);
  CHECK(r.doc.dump().find("[4,2]") != std::string::npos);

  r = run({"extend", "--data", file("z2_extension.json")});
  CHECK(r.code == cli::ok);
  CHECK(r.doc["max_defect"] == "0");
  CHECK(r.doc.dump().find("\"3/4\"") != std::string::npos);

  r = run({"regular", "--cyclic", "2"});
  CHECK(r.code == cli::ok);
  CHECK(r.doc["matrices"]["g"] == Json::parse(R"([["0","1"],["1","0"]])"));

  r = run({"align", "--rep", file("z2.json")});
  CHECK(r.code == cli::ok);
  CHECK(r.doc["columns_agree"] == true);
}

TEST_CASE("global options before or after the subcommand") {
  const auto before = run({"--field", "Fp:7", "regular", "--cyclic", "3"});
  const auto after = run({"regular", "--cyclic", "3", "--field", "Fp:7"});
  CHECK(before.code == cli::ok);
  CHECK(before.text == after.text);
  CHECK(before.doc["field"] == "Fp:7");
}

TEST_CASE("budget: flag wins over environment") {
  const auto b = boost_separation(corpus::z3_regular(), 3, kDefaultBudget);
  CHECK(b.output_dim > 64);
  check_error(run({"amplify", "--rep", file("z3.json"), "--level", "3", "--budget", "64"}), "budget_exceeded");

  setenv("RANKWB_BUDGET", "64", 1);
  check_error(run({"amplify", "--rep", file("z3.json"), "--level", "3"}), "budget_exceeded");
  CHECK(run({"amplify", "--rep", file("z3.json"), "--level", "3", "--budget", "100000"}).code == cli::ok);
  setenv("RANKWB_BUDGET", "lots", 1);
  check_error(run({"amplify", "--rep", file("z3.json"), "--level", "2"}), "input");
  unsetenv("RANKWB_BUDGET");
}

TEST_CASE("input errors") {
  check_error(run({"frobnicate"}), "usage");
  check_error(run({}), "usage");
  check_error(run({"certify"}), "input");
  check_error(run({"certify", "--rep", "/nonexistent/rep.json"}), "input");
  check_error(run({"certify", "--rep", scratch("bad.json", "{\"group\": [").string()}), "input");
  check_error(run({"regular", "--cyclic", "2", "--field", "Fp:4"}), "input");
  check_error(run({"regular", "--cyclic", "2", "--field", "NF:1,0,-2,0,1"}), "input");
  const auto bad_table = scratch("table.json", R"({"group": {"elements": ["e","g"], "identity": "e",
      "product": {"g,g": "g"}, "inverse": {"g": "g"}}, "matrices": {"e": [["1"]], "g": [["1"]]}})");
  check_error(run({"certify", "--rep", bad_table.string()}), "input");
  const auto mixed = scratch("mixed.json", R"({"field": "Fp:5", "group": {"cyclic": 2},
      "matrices": {"e": [["1"]], "g": [["1/5"]]}})");
  check_error(run({"certify", "--rep", mixed.string()}), "input");
}

TEST_CASE("output is deterministic and round-trips") {
  const auto a = run({"certify", "--rep", file("den6.json")});
  const auto b = run({"certify", "--rep", file("den6.json")});
  CHECK(a.text == b.text);
  CHECK(a.doc.dump(2) + "\n" == a.text);

  const auto rep = run({"regular", "--cyclic", "4"});
  const auto path = scratch("z4.json", rep.text);
  const auto again = run({"regular", "--cyclic", "4"});
  CHECK(rep.text == again.text);
  const auto cert = run({"certify", "--rep", path.string()});
  CHECK(cert.doc["min_separation"] == "1/2");

  const auto out = std::filesystem::temp_directory_path() / "rankwb_test_out.json";
  std::filesystem::remove(out);
  const auto to_file = run({"witness", "--n", "9", "--output", out.string()});
  CHECK(to_file.code == cli::ok);
  CHECK(to_file.text.empty());
  std::ifstream in(out);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(text.str() == run({"witness", "--n", "9"}).text);
}

TEST_CASE("demo") {
  auto r = run({"demo"});
  CHECK(r.code == cli::ok);
  CHECK(r.doc["all_pass"] == true);
  for (const auto& row : r.doc["rows"]) {
    CAPTURE(row.dump());
    CHECK(row["status"] == "PASS");
  }

  r = run({"demo", "--budget", "64"});
  CHECK(r.code == cli::ok);
  bool skipped = false;
  for (const auto& row : r.doc["rows"]) {
    if (row["status"] == "SKIPPED") {
      skipped = true;
      CHECK(row["note"] == "budget");
      CHECK(std::string(row["id"]).rfind("boost.", 0) == 0);
    } else {
      CHECK(row["status"] == "PASS");
    }
  }
  CHECK(skipped);

  r = run({"demo", "--field", "Fp:101"});
  CHECK(r.code == cli::ok);
  CHECK(r.doc["all_pass"] == true);
}
