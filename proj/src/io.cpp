#include "crscore/io.hpp"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "crscore/errors.hpp"

namespace crscore::io {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json parse_json(const std::string& text) {
  ordered_json j = ordered_json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    throw ParseError("not a JSON object");
  }
  return j;
}

void reject_unknown_keys(const ordered_json& j,
                         const std::vector<std::string>& allowed) {
  for (const auto& item : j.items()) {
    bool known = false;
    for (const std::string& k : allowed) {
      if (item.key() == k) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw ParseError("unknown field \"" + item.key() + "\"");
    }
  }
}

const ordered_json& require(const ordered_json& j, const std::string& key) {
  const auto it = j.find(key);
  if (it == j.end()) {
    throw ParseError("missing field \"" + key + "\"");
  }
  return *it;
}

int get_int(const ordered_json& j, const std::string& key) {
  const ordered_json& v = require(j, key);
  if (!v.is_number_integer()) {
    throw ParseError("field \"" + key + "\" must be an integer");
  }
  return v.get<int>();
}

double get_number(const ordered_json& v, const std::string& where) {
  if (!v.is_number()) {
    throw ParseError(where + " must be a number");
  }
  return v.get<double>();
}

std::string get_name(const ordered_json& j) {
  const auto it = j.find("name");
  if (it == j.end()) {
    return "";
  }
  if (!it->is_string()) {
    throw ParseError("field \"name\" must be a string");
  }
  return it->get<std::string>();
}

std::vector<double> get_flat_mass(const ordered_json& j) {
  const ordered_json& v = require(j, "mass");
  if (!v.is_array()) {
    throw ParseError("field \"mass\" must be an array");
  }
  std::vector<double> mass;
  mass.reserve(v.size());
  for (const ordered_json& entry : v) {
    mass.push_back(get_number(entry, "mass entry"));
  }
  return mass;
}

std::vector<std::vector<double>> get_nested_mass(const ordered_json& j) {
  const ordered_json& v = require(j, "mass");
  if (!v.is_array()) {
    throw ParseError("field \"mass\" must be an array of rows");
  }
  std::vector<std::vector<double>> rows;
  rows.reserve(v.size());
  for (const ordered_json& row : v) {
    if (!row.is_array()) {
      throw ParseError("field \"mass\" must be an array of rows");
    }
    std::vector<double> r;
    r.reserve(row.size());
    for (const ordered_json& entry : row) {
      r.push_back(get_number(entry, "mass entry"));
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

LoadedForecast parse_forecast(const std::string& text) {
  const ordered_json j = parse_json(text);
  reject_unknown_keys(j, {"t_max", "causes", "mass", "tail", "name"});
  const int t_max = get_int(j, "t_max");
  const int causes = get_int(j, "causes");
  const std::vector<std::vector<double>> mass = get_nested_mass(j);
  const double tail = get_number(require(j, "tail"), "field \"tail\"");
  return {CompetingRisksDistribution(TimeGrid(t_max), causes, mass, tail),
          get_name(j)};
}

LoadedCensoring parse_censoring(const std::string& text) {
  const ordered_json j = parse_json(text);
  reject_unknown_keys(j, {"t_max", "mass", "name"});
  const int t_max = get_int(j, "t_max");
  std::vector<double> mass = get_flat_mass(j);
  return {CensoringDistribution(TimeGrid(t_max), std::move(mass)),
          get_name(j)};
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  for (char c : line) {
    if (c == ',') {
      out.push_back(field);
      field.clear();
    } else {
      field.push_back(c);
    }
  }
  out.push_back(field);
  return out;
}

long parse_long(const std::string& field, std::size_t line_no) {
  errno = 0;
  char* end = nullptr;
  const long v = std::strtol(field.c_str(), &end, 10);
  if (field.empty() || end != field.c_str() + field.size() || errno != 0) {
    throw ParseError("line " + std::to_string(line_no) +
                     ": \"" + field + "\" is not an integer");
  }
  return v;
}

// Wide headers are y,delta_1,...,delta_M with consecutive indices.
int wide_causes_from_header(const std::vector<std::string>& header) {
  if (header.size() < 2 || header[0] != "y") {
    return -1;
  }
  for (std::size_t i = 1; i < header.size(); ++i) {
    if (header[i] != "delta_" + std::to_string(i)) {
      return -1;
    }
  }
  return static_cast<int>(header.size()) - 1;
}

}  // namespace

ParsedObservations parse_observations(const std::string& text) {
  ParsedObservations out;
  std::string normalized;
  normalized.reserve(text.size());
  for (char c : text) {
    if (c != '\r') {
      normalized.push_back(c);
    }
  }

  std::istringstream in(normalized);
  std::string line;
  std::size_t line_no = 0;
  bool saw_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) {
      continue;
    }
    const std::vector<std::string> fields = split_fields(line);
    if (!saw_header) {
      saw_header = true;
      if (fields.size() == 2 && fields[0] == "y" && fields[1] == "cause") {
        out.wide_num_causes = 0;
      } else {
        const int m = wide_causes_from_header(fields);
        if (m < 1) {
          throw ParseError("header must be y,cause or y,delta_1,...,delta_M");
        }
        out.wide_num_causes = m;
      }
      continue;
    }

    const std::size_t want =
        out.wide_num_causes == 0
            ? 2
            : static_cast<std::size_t>(out.wide_num_causes) + 1;
    if (fields.size() != want) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected " + std::to_string(want) + " fields, got " +
                       std::to_string(fields.size()));
    }

    Observation obs;
    const long y = parse_long(fields[0], line_no);
    if (y < 1) {
      throw IndexOutOfRangeError("line " + std::to_string(line_no) +
                                 ": observation time must be >= 1");
    }
    obs.y = static_cast<int>(y);

    if (out.wide_num_causes == 0) {
      const long cause = parse_long(fields[1], line_no);
      if (cause < 0) {
        throw CauseOutOfRangeError("line " + std::to_string(line_no) +
                                   ": cause must be >= 0");
      }
      obs.cause = static_cast<int>(cause);
    } else {
      int cause = 0;
      for (int j = 1; j <= out.wide_num_causes; ++j) {
        const long delta = parse_long(fields[static_cast<std::size_t>(j)],
                                      line_no);
        if (delta != 0 && delta != 1) {
          throw ParseError("line " + std::to_string(line_no) +
                           ": delta values must be 0 or 1");
        }
        if (delta == 1) {
          if (cause != 0) {
            throw ParseError("line " + std::to_string(line_no) +
                             ": at most one delta may be 1");
          }
          cause = j;
        }
      }
      obs.cause = cause;
    }
    out.rows.push_back(obs);
  }
  return out;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) {
    throw IoError("cannot read " + path);
  }
  return buf.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open " + path + " for writing");
  }
  out << text;
  out.flush();
  if (!out) {
    throw IoError("cannot write " + path);
  }
}

LoadedForecast load_forecast(const std::string& path) {
  return parse_forecast(read_text(path));
}

LoadedCensoring load_censoring(const std::string& path) {
  return parse_censoring(read_text(path));
}

ParsedObservations load_observations(const std::string& path) {
  return parse_observations(read_text(path));
}

std::string format_forecast(const CompetingRisksDistribution& dist,
                            const std::string& name) {
  const int t_max = dist.grid().t_max();
  ordered_json j;
  j["t_max"] = t_max;
  j["causes"] = dist.num_causes();
  ordered_json rows = ordered_json::array();
  for (int cause = 1; cause <= dist.num_causes(); ++cause) {
    ordered_json row = ordered_json::array();
    for (int t = 1; t <= t_max; ++t) {
      row.push_back(dist.mass(cause, t));
    }
    rows.push_back(std::move(row));
  }
  j["mass"] = std::move(rows);
  j["tail"] = dist.tail();
  if (!name.empty()) {
    j["name"] = name;
  }
  return j.dump(2) + "\n";
}

std::string format_censoring(const CensoringDistribution& dist,
                             const std::string& name) {
  ordered_json j;
  j["t_max"] = dist.grid().t_max();
  ordered_json mass = ordered_json::array();
  for (int t = 1; t <= dist.grid().t_max(); ++t) {
    mass.push_back(dist.mass(t));
  }
  j["mass"] = std::move(mass);
  if (!name.empty()) {
    j["name"] = name;
  }
  return j.dump(2) + "\n";
}

std::string format_observations(const std::vector<Observation>& rows,
                                int wide_num_causes) {
  std::ostringstream out;
  if (wide_num_causes == 0) {
    out << "y,cause\n";
    for (const Observation& obs : rows) {
      out << obs.y << ',' << obs.cause << '\n';
    }
    return out.str();
  }

  out << 'y';
  for (int j = 1; j <= wide_num_causes; ++j) {
    out << ",delta_" << j;
  }
  out << '\n';
  for (const Observation& obs : rows) {
    if (obs.cause > wide_num_causes) {
      throw CauseOutOfRangeError("cause " + std::to_string(obs.cause) +
                                 " does not fit in " +
                                 std::to_string(wide_num_causes) +
                                 " delta columns");
    }
    out << obs.y;
    for (int j = 1; j <= wide_num_causes; ++j) {
      out << ',' << (obs.cause == j ? 1 : 0);
    }
    out << '\n';
  }
  return out.str();
}

std::string classify(const std::string& text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      continue;
    }
    if (c != '{') {
      return "observations";
    }
    const ordered_json j = ordered_json::parse(text, nullptr, false);
    if (!j.is_discarded() && j.is_object() && j.contains("causes")) {
      return "forecast";
    }
    return "censoring";
  }
  return "observations";  // empty files hold zero observations
}

}  // namespace crscore::io
