#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "catgal/cli.hpp"
#include "support.hpp"

using namespace catgal;

static int run_cli(std::vector<std::string> args, std::string* out_text = nullptr) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  if (out_text) *out_text = out.str();
  INFO(err.str());
  return code;
}

static io::json run_json(std::vector<std::string> args, int expect_code) {
  std::string text;
  int code = run_cli(std::move(args), &text);
  CHECK(code == expect_code);
  REQUIRE(!text.empty());
  return io::json::parse(text);
}

TEST_CASE("group subcommand") {
  auto j = run_json({"group", testsup::fixture("groups/q8.json"), "--no-timing"}, 0);
  CHECK(j["order"] == 8);
  CHECK(j["center_order"] == 2);
  CHECK(j["pass"] == true);
}

TEST_CASE("ext subcommand classification report") {
  auto j = run_json({"ext", testsup::fixture("exts/q8_to_v4.json"), "--no-timing"}, 0);
  CHECK(j["fibration"] == true);
  CHECK(j["trivial_covering"] == false);
  CHECK(j["central"] == true);
  CHECK(j["normal"] == true);

  auto k = run_json({"ext", testsup::fixture("homs/a4_into_a5.json"), "--no-timing"}, 0);
  CHECK(k["fibration"] == false);
}

TEST_CASE("gal subcommand") {
  auto j = run_json({"gal", testsup::fixture("exts/q8_to_v4.json"), "--no-timing"}, 0);
  CHECK(j["galois_invariants"] == io::json::parse("[2]"));
  // non-normal input is a check failure, exit 1
  auto k = run_json({"gal", testsup::fixture("exts/s3_to_z2.json"), "--no-timing"}, 1);
  CHECK(k["pass"] == false);
}

TEST_CASE("pi1 subcommand") {
  auto j = run_json({"pi1", testsup::fixture("pi1/pi1_a5.json"), "--no-timing"}, 0);
  CHECK(j["pi1_invariants"] == io::json::parse("[2]"));
  CHECK(j["stem"] == true);
  CHECK(j["family"].size() == 5);

  auto z = run_json({"pi1", testsup::fixture("pi1/pi1_z2.json"), "--no-timing"}, 0);
  CHECK(z["pi1_invariants"] == io::json::parse("[]"));
}

TEST_CASE("kan subcommand") {
  auto j = run_json({"kan", testsup::scenario("a5_kan.json"), "--no-timing"}, 0);
  CHECK(j["factorization_ok"] == true);
  CHECK(j["uniqueness_ok"] == true);

  auto m = run_json({"kan", testsup::scenario("mutated/a5_kan_mutated.json"), "--no-timing"}, 1);
  CHECK(m["factorization_ok"] == false);
  CHECK(m["witnesses"].size() >= 1);

  auto e = run_json({"kan", testsup::scenario("mutated/z2_ker_escape.json"), "--no-timing"}, 1);
  CHECK(e["pass"] == false);

  auto k = run_json({"kan", testsup::scenario("a5_ker.json"), "--no-timing"}, 0);
  CHECK(k["kind"] == "ker");
}

TEST_CASE("h2 subcommand") {
  auto j = run_json({"h2", testsup::fixture("groups/v4.json"), "--no-timing"}, 0);
  CHECK(j["H1"] == io::json::parse("[2,2]"));
  CHECK(j["H2"] == io::json::parse("[2]"));
  CHECK(j["dims"]["C2"] == 9);
}

TEST_CASE("graph subcommands") {
  auto j = run_json(
      {"graph", "exactseq", testsup::fixture("graphs/c6_to_c3.json"), "--max-word-len", "8",
       "--no-timing"},
      0);
  CHECK(j["rank_base"] == 1);
  CHECK(j["sheets"] == 2);

  auto d = run_json({"graph", "deck", testsup::fixture("graphs/fig8_irr3_cover.json"),
                     "--no-timing"},
                    0);
  CHECK(d["deck_order"] == 1);
  CHECK(d["regular"] == false);

  auto g = run_json({"graph", "galois", testsup::fixture("graphs/fig8_double_cover.json"),
                     "--no-timing"},
                    0);
  CHECK(g["galois_order"] == 2);
  auto ng = run_json({"graph", "galois", testsup::fixture("graphs/fig8_irr3_cover.json"),
                      "--no-timing"},
                     1);
  CHECK(ng["pass"] == false);
}

TEST_CASE("usage errors exit with 2") {
  std::ostringstream out, err;
  CHECK(cli::run({"frobnicate"}, out, err) == 2);
  CHECK(cli::run({"group"}, out, err) == 2);
  CHECK(cli::run({"group", "/nonexistent.json"}, out, err) == 2);
  CHECK(cli::run({"suite", "/nonexistent-dir"}, out, err) == 2);
}

TEST_CASE("suite over the shipped corpus directories passes") {
  for (const char* d : {"groups", "exts", "homs", "pi1", "graphs"}) {
    auto j = run_json({"suite", testsup::fixture(d), "--no-timing"}, 0);
    CHECK(j["pass"] == true);
    CHECK(j["count"].get<int>() > 0);
  }
  auto j = run_json({"suite", std::string(SCENARIO_DIR), "--no-timing"}, 0);
  CHECK(j["pass"] == true);
  CHECK(j["count"] == 3);
}

TEST_CASE("suite flags a mutated fixture with a named witness") {
  namespace fs = std::filesystem;
  auto tmp = fs::temp_directory_path() / "catgal_suite_mut";
  fs::remove_all(tmp);
  fs::create_directories(tmp);
  // healthy file plus a mutated extension (one table entry corrupted)
  fs::copy_file(testsup::fixture("groups/v4.json"), tmp / "v4.json");
  auto j = io::load_json(testsup::fixture("groups/s3.json"));
  j["table"][1][2] = 0;
  std::ofstream(tmp / "s3_mutated.json") << j;
  auto rep = run_json({"suite", tmp.string(), "--no-timing"}, 1);
  CHECK(rep["pass"] == false);
  bool found = false;
  for (const auto& f : rep["files"])
    if (f["file"] == "s3_mutated.json") {
      found = true;
      CHECK(f["pass"] == false);
    }
  CHECK(found);
}

TEST_CASE("reports are byte-identical across runs with --no-timing") {
  std::string a, b;
  run_cli({"gal", testsup::fixture("exts/sl25_to_a5.json"), "--no-timing"}, &a);
  run_cli({"gal", testsup::fixture("exts/sl25_to_a5.json"), "--no-timing"}, &b);
  CHECK(a == b);
  CHECK(!a.empty());
}
