#pragma once

#include <string>
#include <vector>

#include "crscore/distribution.hpp"
#include "crscore/types.hpp"

namespace crscore::io {

// Forecast and censoring files are JSON objects with fixed key sets
// (unknown keys rejected); observations are CSV. Structural problems
// (malformed syntax, wrong types, unknown keys, bad headers) raise
// ParseError; files that parse but describe invalid values raise the
// matching domain error from the constructors. Serialization uses
// shortest round-trip decimals, so parse -> format -> parse is exact.

struct LoadedForecast {
  CompetingRisksDistribution dist;
  std::string name;  // "name" field if present, else empty
};

struct LoadedCensoring {
  CensoringDistribution dist;
  std::string name;
};

struct ParsedObservations {
  std::vector<Observation> rows;
  // Number of delta columns when the file used the wide encoding,
  // 0 for the narrow y,cause encoding.
  int wide_num_causes = 0;
};

LoadedForecast parse_forecast(const std::string& text);
LoadedCensoring parse_censoring(const std::string& text);
ParsedObservations parse_observations(const std::string& text);

LoadedForecast load_forecast(const std::string& path);
LoadedCensoring load_censoring(const std::string& path);
ParsedObservations load_observations(const std::string& path);

std::string format_forecast(const CompetingRisksDistribution& dist,
                            const std::string& name = "");
std::string format_censoring(const CensoringDistribution& dist,
                             const std::string& name = "");
// wide_num_causes = 0 writes the narrow encoding; > 0 writes that many
// delta columns (every row's cause must fit).
std::string format_observations(const std::vector<Observation>& rows,
                                int wide_num_causes = 0);

std::string read_text(const std::string& path);
void write_text(const std::string& path, const std::string& text);

// "forecast", "censoring", or "observations", decided by syntax: JSON
// objects with a "causes" key are forecasts, other JSON objects are
// censoring files, anything else is treated as observations CSV.
std::string classify(const std::string& text);

}  // namespace crscore::io
