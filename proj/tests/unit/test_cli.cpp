#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <functional>

#include "catcheck/cli/cli.hpp"

using namespace catcheck::cli;
using nlohmann::json;

namespace {

  Outcome run_one(std::string command, std::vector<std::string> inputs, Options o = {}) {
    o.corpus = CATCHECK_CORPUS_DIR;
    return run({std::move(command), std::move(inputs), o});
  }

  bool has_witness(json const& report) {
    for (auto const& c : report["checks"]) {
      if (c["status"] != "pass" && c.contains("witness") && !c["witness"].is_null()) {
        return true;
      }
    }
    return false;
  }

  std::string temp_file(std::string const& name, std::string const& text) {
    auto const p = std::filesystem::temp_directory_path() / name;
    std::ofstream(p) << text;
    return p.string();
  }

}  // namespace

TEST(Cli, HopfPositiveEmitsAntipode) {
  auto const out = run_one("check-hopf", {"f2_c2.json"});
  EXPECT_EQ(out.exit_code, kExitPass);
  EXPECT_EQ(out.report["status"], "pass");
  EXPECT_EQ(out.report["results"]["antipode"]["matrix"], json::parse("[[1,0],[0,1]]"));
  EXPECT_EQ(out.report["inputs"][0]["sha256"].get<std::string>().size(), 64u);
}

TEST(Cli, HopfNegativeCarriesKernelWitness) {
  auto const out = run_one("check-hopf", {"f2_idempotent.json"});
  EXPECT_EQ(out.exit_code, kExitFail);
  ASSERT_TRUE(has_witness(out.report));
  auto const& checks = out.report["checks"];
  auto const  it     = std::find_if(checks.begin(), checks.end(),
                                    [](json const& c) { return c["status"] == "fail"; });
  EXPECT_EQ((*it)["witness"]["kind"], "kernel_vector");
}

TEST(Cli, EmptyFileIsMalformed) {
  auto const path = temp_file("catcheck_empty.json", "");
  for (auto const& command : commands()) {
    if (command == "operators-audit") {
      continue;
    }
    auto const out = run_one(command, {path});
    EXPECT_EQ(out.exit_code, kExitMalformed) << command;
    EXPECT_EQ(out.report["status"], "malformed");
    EXPECT_EQ(out.report["error"]["line"], 1);
  }
}

TEST(Cli, BadOptionsAreMalformed) {
  Options o;
  o.prime = 4;
  EXPECT_EQ(run_one("check-hopf", {"f2_c2.json"}, o).exit_code, kExitMalformed);
  o       = {};
  o.arity_bound = 5;
  EXPECT_EQ(run_one("segal", {}, o).exit_code, kExitMalformed);
  o           = {};
  o.dim_bound = 0;
  EXPECT_EQ(run_one("nerve", {"arrow.json"}, o).exit_code, kExitMalformed);
  EXPECT_EQ(run_one("check-hopf", {"no_such_file.json"}).exit_code, kExitMalformed);
  EXPECT_EQ(run_one("check-hopf", {}).exit_code, kExitMalformed);
  EXPECT_EQ(run_one("frobnicate", {}).exit_code, kExitMalformed);
  EXPECT_EQ(run_one("check-bialgebra", {"f2_upper_triangular.json"}).exit_code, kExitMalformed);
}

TEST(Cli, PrimeOverrideChangesTheRing) {
  Options o;
  o.prime        = 3;
  auto const out = run_one("check-hopf", {"f2_c3.json"}, o);
  EXPECT_EQ(out.exit_code, kExitPass);
  EXPECT_EQ(out.report["results"]["category"], "Mat(F_3)");
}

TEST(Cli, EveryFailureHasAWitness) {
  Options o;
  o.arity_bound = 2;
  o.dim_bound   = 2;
  std::vector<std::pair<std::string, std::string>> const cases{
      {"check-hopf", "f2_idempotent.json"},
      {"check-hopf", "finset_truncated_naturals.json"},
      {"derive-antipode", "f2_idempotent.json"},
      {"shear", "f2_idempotent.json"},
      {"shear", "finset_truncated_naturals.json"},
      {"coproduct-audit", "f2_s3.json"},
      {"coproduct-audit", "f2_upper_triangular.json"},
  };
  for (auto const& [command, input] : cases) {
    auto const out = run_one(command, {input}, o);
    EXPECT_EQ(out.exit_code, kExitFail) << command << " " << input;
    EXPECT_TRUE(has_witness(out.report)) << command << " " << input;
  }
  o.horns        = "all";
  auto const out = run_one("horn-audit", {"arrow.json"}, o);
  EXPECT_EQ(out.exit_code, kExitFail);
  EXPECT_TRUE(has_witness(out.report));
}

TEST(Cli, ReportsAreDeterministicOutsideTiming) {
  Options o;
  o.arity_bound = 2;
  for (auto const& [command, input] :
       std::vector<std::pair<std::string, std::string>>{{"check-monoidal", "f2_instance.json"},
                                                        {"hc-nerve", "three_objects.json"},
                                                        {"interchange-audit", "f2_c2.json"}}) {
    auto const a = run_one(command, {input}, o).report;
    auto const b = run_one(command, {input}, o).report;
    EXPECT_TRUE(a.contains("timing"));
    EXPECT_EQ(without_timing(a).dump(), without_timing(b).dump()) << command;
    EXPECT_EQ(render(without_timing(a), Format::text), render(without_timing(b), Format::text));
  }
}

TEST(Cli, Sha256KnownAnswers) {
  EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Cli, TextRendering) {
  auto const out  = run_one("check-hopf", {"f2_idempotent.json"});
  auto const text = render(out.report, Format::text);
  EXPECT_NE(text.find("FAIL    hopf/right shear invertible"), std::string::npos) << text;
  EXPECT_NE(text.find("witness: {\"kind\":\"kernel_vector\""), std::string::npos);
  EXPECT_NE(text.find("status  fail"), std::string::npos);
  EXPECT_NE(text.find("[timing]"), std::string::npos);
}
