// crscore: scoring, propriety certification, simulation, and estimation
// for discrete-time competing-risks forecasts under right censoring.
//
// Exit codes: 0 success (for `propriety`, verdict true), 1 domain or
// validation failure, 2 IO, parse, or usage failure. Reports are JSON on
// stdout with +infinity rendered as the string "inf"; identical inputs
// produce byte-identical output.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "crscore/candidates.hpp"
#include "crscore/distribution.hpp"
#include "crscore/errors.hpp"
#include "crscore/io.hpp"
#include "crscore/joint.hpp"
#include "crscore/propriety.hpp"
#include "crscore/score.hpp"
#include "crscore/sim.hpp"
#include "crscore/types.hpp"

namespace {

using crscore::CompetingRisksDistribution;
using ordered_json = nlohmann::ordered_json;

ordered_json number_or_inf(double v) {
  if (std::isinf(v)) {
    return "inf";
  }
  return v;
}

void emit(const ordered_json& report) {
  std::cout << report.dump(2) << "\n";
}

crscore::Dataset dataset_for(const CompetingRisksDistribution& model,
                             const crscore::io::ParsedObservations& parsed) {
  return crscore::Dataset(model.grid(), model.num_causes(), parsed.rows);
}

struct ValidateArgs {
  std::vector<std::string> paths;
};

int run_validate(const ValidateArgs& args) {
  ordered_json files = ordered_json::array();
  int worst = 0;
  for (const std::string& path : args.paths) {
    ordered_json entry;
    entry["path"] = path;
    entry["kind"] = nullptr;
    entry["valid"] = false;
    entry["error"] = nullptr;
    try {
      const std::string text = crscore::io::read_text(path);
      const std::string kind = crscore::io::classify(text);
      entry["kind"] = kind;
      if (kind == "forecast") {
        crscore::io::parse_forecast(text);
      } else if (kind == "censoring") {
        crscore::io::parse_censoring(text);
      } else {
        crscore::io::parse_observations(text);
      }
      entry["valid"] = true;
    } catch (const crscore::ParseError& e) {
      entry["error"] = e.what();
      worst = 2;
    } catch (const crscore::IoError& e) {
      entry["error"] = e.what();
      worst = 2;
    } catch (const crscore::Error& e) {
      entry["error"] = e.what();
      worst = std::max(worst, 1);
    }
    files.push_back(std::move(entry));
  }
  ordered_json report;
  report["command"] = "validate";
  report["files"] = std::move(files);
  report["verdict"] = worst == 0;
  emit(report);
  return worst;
}

struct ScoreArgs {
  std::string model_path;
  std::string data_path;
  bool per_observation = false;
  double clamp = 0.0;
  bool has_clamp = false;
};

int run_score(const ScoreArgs& args) {
  const crscore::io::LoadedForecast model =
      crscore::io::load_forecast(args.model_path);
  const crscore::io::ParsedObservations parsed =
      crscore::io::load_observations(args.data_path);
  const crscore::Dataset data = dataset_for(model.dist, parsed);

  const double clamp = args.has_clamp ? args.clamp : 0.0;
  const std::vector<double> scores =
      crscore::score_observations(data, model.dist, clamp);
  const double mean = crscore::mean_score(data, model.dist, clamp);

  ordered_json report;
  report["command"] = "score";
  report["n"] = data.size();
  report["clamp"] = args.has_clamp ? ordered_json(args.clamp)
                                   : ordered_json(nullptr);
  report["mean_score"] = number_or_inf(mean);
  if (args.per_observation) {
    ordered_json per = ordered_json::array();
    for (double s : scores) {
      per.push_back(number_or_inf(s));
    }
    report["per_observation"] = std::move(per);
  }
  emit(report);
  return 0;
}

struct TripleArgs {
  std::string truth_path;
  std::string censoring_path;
  std::string model_path;
};

int run_expected_score(const TripleArgs& args) {
  const crscore::io::LoadedForecast truth =
      crscore::io::load_forecast(args.truth_path);
  const crscore::io::LoadedCensoring censoring =
      crscore::io::load_censoring(args.censoring_path);
  const crscore::io::LoadedForecast model =
      crscore::io::load_forecast(args.model_path);
  ordered_json report;
  report["command"] = "expected-score";
  report["value"] = number_or_inf(
      crscore::expected_score(truth.dist, censoring.dist, model.dist));
  emit(report);
  return 0;
}

int run_kl(const TripleArgs& args) {
  const crscore::io::LoadedForecast truth =
      crscore::io::load_forecast(args.truth_path);
  const crscore::io::LoadedCensoring censoring =
      crscore::io::load_censoring(args.censoring_path);
  const crscore::io::LoadedForecast model =
      crscore::io::load_forecast(args.model_path);
  const double value =
      crscore::kl_divergence(crscore::joint_pmf(truth.dist, censoring.dist),
                             crscore::joint_pmf(model.dist, censoring.dist));
  ordered_json report;
  report["command"] = "kl";
  report["value"] = number_or_inf(value);
  emit(report);
  return 0;
}

struct ProprietyArgs {
  std::string truth_path;
  std::string censoring_path;
  std::vector<std::string> candidate_paths;
  int random = 0;
  std::uint64_t seed = 0;
};

int run_propriety(const ProprietyArgs& args) {
  const crscore::io::LoadedForecast truth =
      crscore::io::load_forecast(args.truth_path);
  const crscore::io::LoadedCensoring censoring =
      crscore::io::load_censoring(args.censoring_path);

  std::vector<CompetingRisksDistribution> candidates;
  std::vector<std::string> names;
  for (const std::string& path : args.candidate_paths) {
    crscore::io::LoadedForecast c = crscore::io::load_forecast(path);
    names.push_back(c.name.empty()
                        ? std::filesystem::path(path).stem().string()
                        : c.name);
    candidates.push_back(std::move(c.dist));
  }
  std::vector<CompetingRisksDistribution> random =
      crscore::make_candidates(truth.dist, args.random, args.seed);
  for (std::size_t k = 0; k < random.size(); ++k) {
    names.push_back("random-" + std::to_string(k));
    candidates.push_back(std::move(random[k]));
  }
  if (candidates.empty()) {
    throw crscore::ParseError(
        "propriety needs --candidates files or --random N");
  }

  const crscore::ProprietyReport result =
      crscore::check_propriety(truth.dist, censoring.dist, candidates);

  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < result.candidates.size(); ++i) {
    const crscore::CandidateCheck& c = result.candidates[i];
    ordered_json row;
    row["index"] = i;
    row["name"] = names[i];
    row["score_gap"] = number_or_inf(c.score_gap);
    row["kl"] = number_or_inf(c.kl);
    row["identity_residual"] = number_or_inf(c.identity_residual);
    row["pi_equal"] = c.pi_equal;
    rows.push_back(std::move(row));
  }
  ordered_json report;
  report["command"] = "propriety";
  report["candidates"] = std::move(rows);
  report["verdict"] = result.verdict;
  emit(report);
  return result.verdict ? 0 : 1;
}

struct SimulateArgs {
  std::string truth_path;
  std::string censoring_path;
  std::int64_t n = 0;
  std::uint64_t seed = 0;
  std::string out_path;
};

int run_simulate(const SimulateArgs& args) {
  const crscore::io::LoadedForecast truth =
      crscore::io::load_forecast(args.truth_path);
  const crscore::io::LoadedCensoring censoring =
      crscore::io::load_censoring(args.censoring_path);
  const crscore::Dataset data =
      crscore::simulate_dataset(truth.dist, censoring.dist, args.n, args.seed);
  crscore::io::write_text(
      args.out_path, crscore::io::format_observations(data.observations()));
  return 0;
}

struct EstimateArgs {
  std::string data_path;
  int t_max = 0;
  int causes = 0;
  std::string out_path;
};

int run_estimate(const EstimateArgs& args) {
  const crscore::io::ParsedObservations parsed =
      crscore::io::load_observations(args.data_path);
  const crscore::Dataset data(crscore::TimeGrid(args.t_max), args.causes,
                              parsed.rows);
  const CompetingRisksDistribution estimate = crscore::aalen_johansen(data);
  crscore::io::write_text(args.out_path,
                          crscore::io::format_forecast(estimate));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Log-score evaluation for discrete-time competing-risks forecasts "
      "under right censoring"};
  app.require_subcommand(1);

  ValidateArgs validate_args;
  CLI::App* validate = app.add_subcommand(
      "validate", "Check forecast, censoring, or observation files");
  validate->add_option("paths", validate_args.paths, "Files to check")
      ->required()
      ->expected(-1);

  ScoreArgs score_args;
  CLI::App* score =
      app.add_subcommand("score", "Mean log score of a model on a dataset");
  score->add_option("--model", score_args.model_path, "Forecast file")
      ->required();
  score->add_option("--data", score_args.data_path, "Observations file")
      ->required();
  score->add_flag("--per-observation", score_args.per_observation,
                  "Also report each observation's score");
  CLI::Option* clamp_opt = score->add_option(
      "--clamp", score_args.clamp,
      "Floor forecast probabilities at EPS before taking logs");

  TripleArgs expected_args;
  CLI::App* expected = app.add_subcommand(
      "expected-score", "Exact expected score of a model under truth");
  expected->add_option("--truth", expected_args.truth_path, "Truth file")
      ->required();
  expected
      ->add_option("--censoring", expected_args.censoring_path,
                   "Censoring file")
      ->required();
  expected->add_option("--model", expected_args.model_path, "Forecast file")
      ->required();

  TripleArgs kl_args;
  CLI::App* kl = app.add_subcommand(
      "kl", "KL divergence between induced observation pmfs");
  kl->add_option("--truth", kl_args.truth_path, "Truth file")->required();
  kl->add_option("--censoring", kl_args.censoring_path, "Censoring file")
      ->required();
  kl->add_option("--model", kl_args.model_path, "Forecast file")->required();

  ProprietyArgs propriety_args;
  CLI::App* propriety = app.add_subcommand(
      "propriety", "Certify the scoring rule's propriety against candidates");
  propriety->add_option("--truth", propriety_args.truth_path, "Truth file")
      ->required();
  propriety
      ->add_option("--censoring", propriety_args.censoring_path,
                   "Censoring file")
      ->required();
  propriety->add_option("--candidates", propriety_args.candidate_paths,
                        "Candidate forecast files");
  propriety->add_option("--random", propriety_args.random,
                        "Number of generated candidates");
  propriety->add_option("--seed", propriety_args.seed,
                        "Seed for generated candidates");

  SimulateArgs simulate_args;
  CLI::App* simulate = app.add_subcommand(
      "simulate", "Draw a censored dataset from truth and censoring");
  simulate->add_option("--truth", simulate_args.truth_path, "Truth file")
      ->required();
  simulate
      ->add_option("--censoring", simulate_args.censoring_path,
                   "Censoring file")
      ->required();
  simulate->add_option("--n", simulate_args.n, "Number of observations")
      ->required();
  simulate->add_option("--seed", simulate_args.seed, "Stream seed")
      ->required();
  simulate->add_option("--out", simulate_args.out_path, "Output file")
      ->required();

  EstimateArgs estimate_args;
  CLI::App* estimate = app.add_subcommand(
      "estimate", "Aalen-Johansen forecast estimate from observations");
  estimate->add_option("--data", estimate_args.data_path, "Observations file")
      ->required();
  estimate->add_option("--t-max", estimate_args.t_max, "Grid horizon")
      ->required();
  estimate->add_option("--causes", estimate_args.causes, "Number of causes")
      ->required();
  estimate->add_option("--out", estimate_args.out_path, "Output file")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*validate) {
      return run_validate(validate_args);
    }
    if (*score) {
      score_args.has_clamp = clamp_opt->count() > 0;
      return run_score(score_args);
    }
    if (*expected) {
      return run_expected_score(expected_args);
    }
    if (*kl) {
      return run_kl(kl_args);
    }
    if (*propriety) {
      return run_propriety(propriety_args);
    }
    if (*simulate) {
      return run_simulate(simulate_args);
    }
    if (*estimate) {
      return run_estimate(estimate_args);
    }
  } catch (const crscore::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const crscore::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const crscore::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;  // unreachable with require_subcommand(1)
}
