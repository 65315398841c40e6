#include <gtest/gtest.h>

#include <filesystem>

#include "generators.hpp"
#include "nearcube/constructions.hpp"
#include "nearcube/error.hpp"
#include "nearcube/json_io.hpp"

using namespace nearcube;

TEST(JsonIo, RationalsAreStrings) {
  EXPECT_EQ(rational_to_json(Rational(3, 4)), json("3/4"));
  EXPECT_EQ(rational_to_json(Rational(2)), json("2/1"));
  EXPECT_EQ(rational_from_json(json("-5/10")), Rational(-1, 2));
  EXPECT_EQ(rational_from_json(json(7)), Rational(7));
  EXPECT_THROW((void)rational_from_json(json(0.5)), InvalidInput);
  EXPECT_THROW((void)rational_from_json(json("1/0")), InvalidInput);
  EXPECT_THROW((void)rational_from_json(json("x")), InvalidInput);
}

TEST(JsonIo, PolyBoxRoundTrip) {
  gen::Source g(151);
  for (std::size_t dim = 1; dim <= 3; ++dim) {
    for (int i = 0; i < 20; ++i) {
      const auto p = gen::random_polybox(g, dim, 4);
      const auto j = polybox_to_json(p);
      EXPECT_EQ(polybox_from_json(json::parse(j.dump())), p);
    }
  }
}

TEST(JsonIo, PolyBoxErrors) {
  EXPECT_THROW((void)polybox_from_json(json::parse(R"({"boxes": []})")), InvalidInput);
  EXPECT_THROW((void)polybox_from_json(json::parse(R"({"dim": 0, "boxes": []})")), InvalidInput);
  EXPECT_THROW((void)polybox_from_json(json::parse(R"({"dim": 1, "boxes": 3})")), InvalidInput);
  EXPECT_THROW((void)polybox_from_json(json::parse(R"({"dim": 2, "boxes": [[["0","1"]]]})")), DimensionMismatch);
  EXPECT_THROW((void)polybox_from_json(json::parse(R"({"dim": 1, "boxes": [[["1","1"]]]})")), DegenerateBox);
  EXPECT_TRUE(polybox_from_json(json::parse(R"({"dim": 1, "boxes": [[["1","1"]]]})"), DegeneratePolicy::drop).empty());
  EXPECT_THROW((void)polybox_from_json(json::parse(R"({"dim": 1, "boxes": [[["0"]]]})")), InvalidInput);
}

TEST(JsonIo, SystemRoundTrip) {
  const auto cb = build_checkerboard_tiling(NearCube3DParams(Rational(1, 10)), 1).system;
  EXPECT_EQ(system_from_json(json::parse(system_to_json(cb).dump())), cb);
  const TranslationSystem finite(1, {{0}, {Rational(1, 2)}});
  const auto j = system_to_json(finite);
  EXPECT_TRUE(j.at("lattice").is_null());
  EXPECT_EQ(system_from_json(j), finite);
  EXPECT_THROW((void)system_from_json(json::parse(R"({"dim": 2, "reps": [["0"]]})")), DimensionMismatch);
  EXPECT_THROW((void)system_from_json(json::parse(R"({"dim": 1, "reps": [["0"]], "lattice": {}})")), InvalidInput);
}

TEST(JsonIo, SpectrumAndPiecewiseRoundTrip) {
  const SpectrumCandidate s({0, Rational(1, 2)}, 2);
  const auto back = spectrum_from_json(spectrum_to_json(s));
  EXPECT_EQ(back.reps(), s.reps());
  EXPECT_EQ(back.period(), s.period());
  const PiecewiseLinear1D tent({-1, 0, 1}, {0, 1, 0});
  EXPECT_EQ(piecewise_from_json(piecewise_to_json(tent)), tent);
  EXPECT_THROW((void)spectrum_from_json(json::parse(R"({"reps": ["0"]})")), InvalidInput);
}

TEST(JsonIo, ManifestListsAllSegments) {
  const auto e = build_E_3d(NearCube3DParams(Rational(1, 10)));
  const auto j = manifest_to_json(e.manifest);
  EXPECT_EQ(j.at("segments").size(), 9U);
  EXPECT_EQ(j.at("total_measure"), json("1/1"));
}

TEST(JsonIo, Files) {
  const auto dir = std::filesystem::temp_directory_path() / "nearcube_json_io_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "set.json";
  write_text_file(path, polybox_to_json(build_E_1d_example()).dump());
  EXPECT_EQ(polybox_from_json(read_json_file(path)), build_E_1d_example());
  write_text_file(path, "{ not json");
  EXPECT_THROW((void)read_json_file(path), InvalidInput);
  EXPECT_THROW((void)read_json_file(dir / "missing.json"), InvalidInput);
  std::filesystem::remove_all(dir);
}
