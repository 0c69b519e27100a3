#include <doctest.h>

#include <string>
#include <vector>

#include "crscore/errors.hpp"
#include "crscore/io.hpp"
#include "test_util.hpp"

namespace io = crscore::io;
using crscore::Observation;

TEST_CASE("forecast files round-trip exactly") {
  const auto p = testutil::make_pstar();
  const std::string text = io::format_forecast(p, "pstar");
  const io::LoadedForecast back = io::parse_forecast(text);
  CHECK(back.dist == p);
  CHECK(back.name == "pstar");
  CHECK(io::format_forecast(back.dist, back.name) == text);

  // awkward decimals survive the trip bit-for-bit
  std::mt19937_64 rng(40);
  for (int rep = 0; rep < 50; ++rep) {
    const auto q = testutil::random_distribution(rng, 5, 3);
    CHECK(io::parse_forecast(io::format_forecast(q)).dist == q);
  }
}

TEST_CASE("censoring files round-trip exactly") {
  const auto g = testutil::make_gstar();
  const std::string text = io::format_censoring(g, "gstar");
  const io::LoadedCensoring back = io::parse_censoring(text);
  CHECK(back.dist.flat_mass() == g.flat_mass());
  CHECK(back.name == "gstar");
  CHECK(io::format_censoring(back.dist, back.name) == text);
}

TEST_CASE("forecast parsing rejects structural problems") {
  CHECK_THROWS_AS(io::parse_forecast("{"), crscore::ParseError);
  CHECK_THROWS_AS(io::parse_forecast("[1,2]"), crscore::ParseError);
  CHECK_THROWS_AS(
      io::parse_forecast(
          R"({"t_max":1,"causes":1,"mass":[[1.0]],"tail":0.0,"extra":1})"),
      crscore::ParseError);
  CHECK_THROWS_AS(
      io::parse_forecast(R"({"t_max":1,"causes":1,"mass":[[1.0]]})"),
      crscore::ParseError);
  CHECK_THROWS_AS(
      io::parse_forecast(
          R"({"t_max":1.5,"causes":1,"mass":[[1.0]],"tail":0.0})"),
      crscore::ParseError);
  CHECK_THROWS_AS(
      io::parse_forecast(
          R"({"t_max":1,"causes":1,"mass":[["x"]],"tail":0.0})"),
      crscore::ParseError);
}

TEST_CASE("forecast parsing surfaces domain violations as domain errors") {
  CHECK_THROWS_AS(
      io::parse_forecast(
          R"({"t_max":2,"causes":1,"mass":[[0.6,0.6]],"tail":0.0})"),
      crscore::NotNormalizedError);
  CHECK_THROWS_AS(
      io::parse_forecast(
          R"({"t_max":2,"causes":2,"mass":[[0.5,0.5]],"tail":0.0})"),
      crscore::DimensionMismatchError);
  CHECK_THROWS_AS(
      io::parse_forecast(
          R"({"t_max":1,"causes":1,"mass":[[-0.2]],"tail":1.2})"),
      crscore::NegativeMassError);
}

TEST_CASE("narrow observations parse and round-trip") {
  const io::ParsedObservations parsed =
      io::parse_observations("y,cause\n2,1\n1,0\n");
  CHECK(parsed.wide_num_causes == 0);
  REQUIRE(parsed.rows.size() == 2);
  CHECK(parsed.rows[0] == Observation{2, 1});
  CHECK(parsed.rows[1] == Observation{1, 0});
  CHECK(io::format_observations(parsed.rows) == "y,cause\n2,1\n1,0\n");
}

TEST_CASE("wide observations parse and round-trip") {
  const std::string text = "y,delta_1,delta_2\n2,1,0\n1,0,0\n3,0,1\n";
  const io::ParsedObservations parsed = io::parse_observations(text);
  CHECK(parsed.wide_num_causes == 2);
  REQUIRE(parsed.rows.size() == 3);
  CHECK(parsed.rows[0] == Observation{2, 1});
  CHECK(parsed.rows[1] == Observation{1, 0});
  CHECK(parsed.rows[2] == Observation{3, 2});
  CHECK(io::format_observations(parsed.rows, 2) == text);
}

TEST_CASE("the two observation encodings interconvert") {
  const io::ParsedObservations narrow =
      io::parse_observations("y,cause\n2,1\n1,0\n3,2\n");
  const std::string wide = io::format_observations(narrow.rows, 2);
  const io::ParsedObservations back = io::parse_observations(wide);
  CHECK(back.rows == narrow.rows);
  CHECK(io::format_observations(back.rows) == "y,cause\n2,1\n1,0\n3,2\n");
}

TEST_CASE("CRLF and blank lines are tolerated") {
  const io::ParsedObservations parsed =
      io::parse_observations("y,cause\r\n2,1\r\n\r\n1,0\r\n");
  REQUIRE(parsed.rows.size() == 2);
  CHECK(parsed.rows[0] == Observation{2, 1});
}

TEST_CASE("empty observation files hold zero observations") {
  CHECK(io::parse_observations("").rows.empty());
  CHECK(io::parse_observations("y,cause\n").rows.empty());
}

TEST_CASE("observation parsing rejects structural problems") {
  CHECK_THROWS_AS(io::parse_observations("time,cause\n1,1\n"),
                  crscore::ParseError);
  CHECK_THROWS_AS(io::parse_observations("y,cause\n1\n"), crscore::ParseError);
  CHECK_THROWS_AS(io::parse_observations("y,cause\n1,1,1\n"),
                  crscore::ParseError);
  CHECK_THROWS_AS(io::parse_observations("y,cause\nx,1\n"),
                  crscore::ParseError);
  CHECK_THROWS_AS(io::parse_observations("y,delta_1\n1,2\n"),
                  crscore::ParseError);
  CHECK_THROWS_AS(io::parse_observations("y,delta_1,delta_2\n1,1,1\n"),
                  crscore::ParseError);
  CHECK_THROWS_AS(io::parse_observations("y,delta_2\n1,1\n"),
                  crscore::ParseError);
}

TEST_CASE("observation values outside the domain are domain errors") {
  CHECK_THROWS_AS(io::parse_observations("y,cause\n0,1\n"),
                  crscore::IndexOutOfRangeError);
  CHECK_THROWS_AS(io::parse_observations("y,cause\n1,-1\n"),
                  crscore::CauseOutOfRangeError);
}

TEST_CASE("wide formatting refuses causes that do not fit") {
  std::vector<Observation> rows{Observation{1, 3}};
  CHECK_THROWS_AS(io::format_observations(rows, 2),
                  crscore::CauseOutOfRangeError);
}

TEST_CASE("classify distinguishes the three file kinds") {
  CHECK(io::classify(io::format_forecast(testutil::make_pstar())) ==
        "forecast");
  CHECK(io::classify(io::format_censoring(testutil::make_gstar())) ==
        "censoring");
  CHECK(io::classify("y,cause\n1,1\n") == "observations");
  CHECK(io::classify("") == "observations");
}

TEST_CASE("missing files raise IoError") {
  CHECK_THROWS_AS(io::load_forecast("/nonexistent/file.json"),
                  crscore::IoError);
}
