#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "nearcube/constructions.hpp"
#include "nearcube/json_io.hpp"

using namespace nearcube;

namespace {

struct Run {
  int code = 0;
  json report;
  std::string text;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = cli::run(args, out, err);
  r.text = out.str();
  r.err = err.str();
  if (!r.text.empty() && r.text.front() == '{') r.report = json::parse(r.text);
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("nearcube_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string write(const std::string& name, const json& j) const {
    write_text_file(path(name), j.dump());
    return path(name);
  }

  std::filesystem::path dir_;
};

}  // namespace

TEST_F(CliTest, NoCommandIsUsageError) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"measure"}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
}

TEST_F(CliTest, MeasureReport) {
  const auto set = write("e.json", polybox_to_json(build_E_1d_example()));
  const auto r = run({"--no-timing", "measure", "--set", set});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.report.at("schema"), cli::kReportSchema);
  EXPECT_EQ(r.report.at("command"), "measure");
  EXPECT_EQ(r.report.at("status"), "verified");
  EXPECT_EQ(r.report.at("result").at("measure"), "1/1");
  EXPECT_FALSE(r.report.contains("timing"));
  EXPECT_EQ(r.report.at("inputs").size(), 1U);

  json body = r.report;
  body.erase("checksum");
  EXPECT_EQ(r.report.at("checksum"), cli::fnv1a_hex(body.dump()));
  EXPECT_EQ(run({"--no-timing", "measure", "--set", set}).text, r.text);
  EXPECT_TRUE(run({"measure", "--set", set}).report.contains("timing"));
}

TEST_F(CliTest, MissingAndMalformedInput) {
  const auto r = run({"measure", "--set", path("missing.json")});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.report.at("error").at("code"), "invalid-input");
  write_text_file(path("bad.json"), R"({"dim": 2, "boxes": [[["0","1"]]]})");
  EXPECT_EQ(run({"measure", "--set", path("bad.json")}).report.at("error").at("code"), "dimension-mismatch");
}

TEST_F(CliTest, TilingAndPackingChecks) {
  const auto set = write("e.json", polybox_to_json(build_E_1d_example()));
  const auto good = write("good.json", system_to_json(TranslationSystem(1, {{0}, {Rational(1, 2)}}, Lattice(Matrix{{Rational(2)}}))));
  const auto ints = write("z.json", system_to_json(TranslationSystem::lattice_only(Lattice::integer(1))));
  const auto ok = run({"tiling-check", "--set", set, "--system", good});
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.report.at("result").at("verdict"), "tiling");
  EXPECT_EQ(ok.report.at("result").at("window_covers_fundamental_domain"), true);

  const auto bad = run({"tiling-check", "--set", set, "--system", ints, "--window", "[0,3]"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(bad.report.at("result").at("verdict"), "not-packing");
  EXPECT_EQ(bad.report.at("result").at("witness").at("count"), 2);
  EXPECT_EQ(run({"packing-check", "--set", set, "--system", ints, "--window", "[0,3]"}).code, 1);
}

TEST_F(CliTest, BuildThenCheckRoundTrip) {
  const auto e = path("e3.json");
  const auto board = path("board.json");
  ASSERT_EQ(run({"build", "counterexample3d", "--epsilon", "1/10", "--out", e, "--manifest", path("m.json")}).code, 0);
  ASSERT_EQ(run({"build", "checkerboard", "--epsilon", "1/10", "--out", board}).code, 0);
  const auto r = run({"tiling-check", "--set", e, "--system", board, "--window", "[0,2]x[0,2]x[0,1]"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.report.at("result").at("checksum").at("conserved"), true);

  const auto cfg = path("cfg.json");
  ASSERT_EQ(run({"build", "lattice-configs", "--index", "1", "--out", cfg}).code, 0);
  EXPECT_EQ(run({"tiling-check", "--set", e, "--system", cfg}).code, 1);
  EXPECT_EQ(run({"verify-theorem3d", "--epsilon", "1/10"}).code, 0);
}

TEST_F(CliTest, OneDimensionalCommands) {
  const auto sharp = write("sharp.json", polybox_to_json(build_E_1d_example()));
  const auto unit = write("unit.json", polybox_to_json(PolyBox::from_box(Box({{0, 1}}))));

  const auto lemma = run({"overlap-lemma", "--set", unit});
  EXPECT_EQ(lemma.code, 0);
  const auto violated = run({"overlap-lemma", "--set", sharp});
  EXPECT_EQ(violated.code, 2);
  EXPECT_EQ(violated.report.at("error").at("code"), "hypothesis-violation");
  EXPECT_EQ(violated.report.at("result").at("zeros_in_unit_range").size(), 1U);

  const auto done = run({"complete-1d", "--set", sharp, "--window", "[0,4]"});
  EXPECT_EQ(done.code, 0);
  EXPECT_EQ(done.report.at("result").at("translations"), json::parse(R"(["0/1","1/2","2/1","5/2"])"));
  EXPECT_EQ(run({"complete-1d", "--set", sharp}).code, 2);

  EXPECT_EQ(run({"ft-zero", "--set", unit, "--xi", "1"}).code, 0);
  EXPECT_EQ(run({"ft-zero", "--set", unit, "--xi", "1/2"}).code, 1);

  const auto svg = path("g.svg");
  EXPECT_EQ(run({"autocorr", "--set", sharp, "--svg", svg}).code, 0);
  EXPECT_TRUE(std::filesystem::exists(svg));
}

TEST_F(CliTest, SpectralCommands) {
  const auto sharp = write("sharp.json", polybox_to_json(build_E_1d_example()));
  const auto spec = write("spec.json", spectrum_to_json(SpectrumCandidate({0, Rational(1, 2)}, 2)));
  const auto z = write("z.json", spectrum_to_json(SpectrumCandidate({0}, 1)));
  EXPECT_EQ(run({"spectrum-check", "--set", sharp, "--spectrum", spec, "--samples", "50"}).code, 0);
  EXPECT_EQ(run({"spectrum-check", "--set", sharp, "--spectrum", z, "--samples", "50"}).code, 1);
  const auto odd = write("odd.json", polybox_to_json(PolyBox::make(1, std::vector<std::vector<Interval>>{
                                                        {{0, Rational(1, 3)}}, {{Rational(1, 2), Rational(7, 6)}}})));
  const auto small = run({"spectrum-check", "--set", odd, "--spectrum", z, "--samples", "5", "--truncation", "2",
                          "--lo", "0", "--hi", "1"});
  EXPECT_EQ(small.code, 2);
  EXPECT_EQ(small.report.at("error").at("code"), "tail-bound-exceeded");
  EXPECT_EQ(run({"spectrum-check", "--set", sharp, "--spectrum", spec, "--truncation", "3"}).report.at("error").at("code"),
            "invalid-input");
  EXPECT_EQ(run({"fejer", "--delta", "1/10", "--samples", "20"}).code, 0);
}

TEST_F(CliTest, PlanarCommands) {
  const auto set = path("ns.json");
  const auto patch = path("patch.json");
  ASSERT_EQ(run({"build", "near-square", "--epsilon", "1/40", "--seed", "3", "--out", set, "--patch-out", patch}).code, 0);
  const auto r = run({"extract-lattice-2d", "--set", set, "--patch", patch});
  EXPECT_EQ(r.code, 0);
  const auto svg = path("s.svg");
  const auto e = path("e3.json");
  ASSERT_EQ(run({"build", "counterexample3d", "--out", e}).code, 0);
  EXPECT_EQ(run({"render-slice", "--set", e, "--level", "1/32", "--out", svg}).code, 0);
  EXPECT_TRUE(std::filesystem::exists(svg));
  EXPECT_EQ(run({"render-slice", "--set", e, "--level", "5", "--out", svg}).code, 2);
}
