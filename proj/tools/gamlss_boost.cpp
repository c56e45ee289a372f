// Command-line front end: fit, cross-validate, run simulation studies and
// score survival predictions, emitting machine-readable CSV/JSON.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gamboost/boost.hpp"
#include "gamboost/csv.hpp"
#include "gamboost/metrics.hpp"
#include "gamboost/model_io.hpp"
#include "gamboost/numeric.hpp"
#include "gamboost/parallel.hpp"
#include "gamboost/simulation.hpp"
#include "gamboost/tuning.hpp"

namespace fs = std::filesystem;
using namespace gamboost;

namespace {

int default_jobs() {
  if (const char* env = std::getenv("GAMLSS_BOOST_JOBS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

struct CommonOpts {
  std::string data_path;
  std::string response = "y";
  std::string family_name = "gaussian";
  std::string scheme = "F-F";
  double lambda_s = 0.1;
  std::uint64_t seed = 1;
  int jobs = default_jobs();
  bool standardize = false;
  std::string out_dir;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_data) {
  if (needs_data) {
    cmd->add_option("--data", o.data_path, "input CSV with header row")->required();
    cmd->add_option("--response", o.response, "response column name")->required();
    cmd->add_option("--family", o.family_name, "gaussian|negbin|weibull")->required();
    cmd->add_flag("--standardize", o.standardize, "center/scale covariates before fitting");
  }
  cmd->add_option("--scheme", o.scheme, "step-length preset (F-F, LS-LS, A-LS, A-BL, BL-F, F-BL)");
  cmd->add_option("--lambda-s", o.lambda_s, "shrinkage factor for optimal step lengths");
  cmd->add_option("--seed", o.seed, "random seed");
  cmd->add_option("--jobs", o.jobs, "worker threads (default: GAMLSS_BOOST_JOBS or 1)");
  cmd->add_option("--out", o.out_dir, "output directory")->required();
}

Dataset load_for(const CommonOpts& o, Family family) {
  Dataset d = load_csv(o.data_path, o.response);
  if (o.standardize) d = standardize_covariates(d);
  d.validate_for(family);
  return d;
}

std::string out_file(const CommonOpts& o, const std::string& name) {
  fs::create_directories(o.out_dir);
  return (fs::path(o.out_dir) / name).string();
}

void write_mstop_json(const std::string& path, int m_stop, const Quartiles& q, int repeats,
                      const std::vector<int>& per_repeat) {
  nlohmann::ordered_json j;
  j["m_stop"] = m_stop;
  j["quartiles"] = {{"q1", q.q1}, {"median", q.median}, {"q3", q.q3}};
  j["repeats"] = repeats;
  j["per_repeat"] = per_repeat;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file '" + path + "'");
  out << j.dump(2) << '\n';
}

int run_fit(const CommonOpts& o, int m_stop) {
  const Family family = family_from_string(o.family_name);
  const Dataset d = load_for(o, family);
  FitConfig cfg;
  cfg.family = family;
  cfg.scheme = SchemeSpec::preset(o.scheme, family, o.lambda_s);
  cfg.m_stop = m_stop;
  cfg.rng_seed = o.seed;

  const FitResult res = boost_fit(d, cfg);
  write_coefficients_csv(coefficient_table(res.model), out_file(o, "coefficients.csv"));
  write_trace_csv(res.trace, res.model, out_file(o, "trace.csv"));
  write_model_json(res.model, out_file(o, "model.json"));
  return 0;
}

int run_cv(const CommonOpts& o, int folds, int max_mstop, int repeats) {
  const Family family = family_from_string(o.family_name);
  const Dataset d = load_for(o, family);
  FitConfig cfg;
  cfg.family = family;
  cfg.scheme = SchemeSpec::preset(o.scheme, family, o.lambda_s);
  cfg.rng_seed = o.seed;
  const int max_m = max_mstop > 0 ? max_mstop : default_max_mstop(cfg.scheme);

  const CvResult first = kfold_cv(d, cfg, folds, max_m, mix_seed(o.seed, 0), o.jobs);
  write_risk_curve_csv(first, out_file(o, "risk_curve.csv"));

  if (repeats <= 1) {
    const Quartiles q{static_cast<double>(first.m_stop), static_cast<double>(first.m_stop),
                      static_cast<double>(first.m_stop)};
    write_mstop_json(out_file(o, "mstop.json"), first.m_stop, q, 1, {first.m_stop});
  } else {
    const RepeatedCvResult rep = repeated_cv(d, cfg, folds, max_m, repeats, o.seed, o.jobs);
    write_mstop_json(out_file(o, "mstop.json"), rep.m_stop_median,
                     Quartiles{rep.q1, rep.median, rep.q3}, repeats, rep.per_repeat);
  }
  return 0;
}

int run_simulate(const CommonOpts& o, const std::string& setting_name,
                 const std::vector<std::string>& schemes, int replicates, int n,
                 const std::vector<int>& noise, int folds, int max_mstop,
                 const std::string& timing) {
  StudyConfig cfg;
  cfg.setting = family_from_string(setting_name);
  cfg.schemes = schemes;
  cfg.replicates = replicates;
  cfg.n = n;
  cfg.noise_levels = noise;
  cfg.cv_folds = folds;
  cfg.seed = o.seed;
  cfg.lambda_s = o.lambda_s;
  cfg.jobs = o.jobs;
  cfg.max_mstop_override = max_mstop;
  cfg.record_timing = timing != "none";
  for (const auto& s : cfg.schemes) SchemeSpec::preset(s, cfg.setting, cfg.lambda_s);

  const StudyResult study = run_study(cfg);

  {
    CsvWriter w(out_file(o, "study_coefficients.csv"),
                {"scheme", "noise", "replicate", "parameter", "covariate", "estimate",
                 "true_value", "m_stop", "seconds"});
    for (const auto& rec : study.records) {
      for (const auto& row : coefficient_table(rec.model, &rec.truth)) {
        w.row({rec.scheme, cell(rec.noise), cell(rec.replicate), row.parameter, row.covariate,
               cell(row.estimate), cell(row.true_value.value_or(0.0)), cell(rec.m_stop),
               cell(rec.seconds)});
      }
    }
  }
  {
    CsvWriter w(out_file(o, "study_metrics.csv"),
                {"scheme", "noise", "replicate", "scr", "fp1", "fp2", "fn1", "fn2", "m_stop",
                 "seconds"});
    for (const auto& rec : study.records) {
      w.row({rec.scheme, cell(rec.noise), cell(rec.replicate), cell(rec.metrics.scr),
             cell(rec.metrics.false_positives[0]), cell(rec.metrics.false_positives[1]),
             cell(rec.metrics.false_negatives[0]), cell(rec.metrics.false_negatives[1]),
             cell(rec.m_stop), cell(rec.seconds)});
    }
  }
  {
    CsvWriter w(out_file(o, "study_summary.csv"),
                {"scheme", "noise", "metric", "q1", "median", "q3"});
    const std::vector<std::string> metrics{"m_stop", "seconds", "scr", "fp1", "fp2", "fn1", "fn2"};
    for (const auto& scheme : cfg.schemes) {
      for (int noise_level : cfg.noise_levels) {
        for (const auto& metric : metrics) {
          std::vector<double> values;
          for (const auto& rec : study.records) {
            if (rec.scheme != scheme || rec.noise != noise_level) continue;
            if (metric == "m_stop") values.push_back(rec.m_stop);
            else if (metric == "seconds") values.push_back(rec.seconds);
            else if (metric == "scr") values.push_back(rec.metrics.scr);
            else if (metric == "fp1") values.push_back(rec.metrics.false_positives[0]);
            else if (metric == "fp2") values.push_back(rec.metrics.false_positives[1]);
            else if (metric == "fn1") values.push_back(rec.metrics.false_negatives[0]);
            else values.push_back(rec.metrics.false_negatives[1]);
          }
          const Quartiles q = quartiles(values);
          w.row({scheme, cell(noise_level), metric, cell(q.q1), cell(q.median), cell(q.q3)});
        }
      }
    }
  }
  return 0;
}

int run_brier(const CommonOpts& o, double split, int grid_points, int repeats, int folds,
              int max_mstop) {
  const Family family = family_from_string(o.family_name);
  if (family != Family::WeibullSS)
    throw std::invalid_argument("brier scoring requires --family weibull");
  const Dataset d = load_for(o, family);

  FitConfig base_cfg;
  base_cfg.family = family;
  base_cfg.scheme = SchemeSpec::preset(o.scheme, family, o.lambda_s);
  const int max_m = max_mstop > 0 ? max_mstop : default_max_mstop(base_cfg.scheme);

  std::vector<double> ibs_values(static_cast<std::size_t>(repeats));
  std::vector<double> first_grid;
  std::vector<double> first_curve;

  parallel_for(repeats, o.jobs, [&](int r) {
    const std::uint64_t rep_seed = mix_seed(o.seed, static_cast<std::uint64_t>(r));
    const auto [train, val] = split_holdout(d, split, rep_seed);
    FitConfig cfg = base_cfg;
    cfg.rng_seed = rep_seed;
    const CvResult cv = kfold_cv(train, cfg, folds, max_m, mix_seed(rep_seed, 1), 1);
    cfg.m_stop = cv.m_stop;
    const FitResult fit = boost_fit(train, cfg);
    const auto grid = default_time_grid(val, grid_points);
    ibs_values[static_cast<std::size_t>(r)] = integrated_brier(fit.model, val, grid);
    if (r == 0) {
      first_grid = grid;
      first_curve.resize(grid.size());
      for (std::size_t i = 0; i < grid.size(); ++i)
        first_curve[i] = brier_score(fit.model, val, grid[i]);
    }
  });

  {
    CsvWriter w(out_file(o, "brier_curve.csv"), {"t", "brier"});
    for (std::size_t i = 0; i < first_grid.size(); ++i)
      w.row({cell(first_grid[i]), cell(first_curve[i])});
  }
  {
    CsvWriter w(out_file(o, "ibs.csv"), {"repeat", "ibs"});
    for (int r = 0; r < repeats; ++r)
      w.row({cell(r + 1), cell(ibs_values[static_cast<std::size_t>(r)])});
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-cyclical gradient boosting for GAMLSS with adaptive step lengths"};
  app.require_subcommand(1);

  CommonOpts fit_opts, cv_opts, sim_opts, brier_opts;

  auto* fit_cmd = app.add_subcommand("fit", "fit a model and write coefficients/trace/model");
  int fit_mstop = 100;
  add_common(fit_cmd, fit_opts, true);
  fit_cmd->add_option("--mstop", fit_mstop, "number of boosting iterations")->required();

  auto* cv_cmd = app.add_subcommand("cv", "choose m_stop by k-fold cross-validation");
  int cv_folds = 10, cv_max_mstop = 0, cv_repeats = 1;
  add_common(cv_cmd, cv_opts, true);
  cv_cmd->add_option("--folds", cv_folds, "number of folds");
  cv_cmd->add_option("--max-mstop", cv_max_mstop, "iterations to evaluate (0 = scheme default)");
  cv_cmd->add_option("--repeats", cv_repeats, "repeated fold draws");

  auto* sim_cmd = app.add_subcommand("simulate", "run a multi-replicate scheme-comparison study");
  std::string sim_setting = "gaussian";
  std::vector<std::string> sim_schemes;
  int sim_replicates = 1, sim_n = 500, sim_folds = 10, sim_max_mstop = 0;
  std::vector<int> sim_noise{0};
  std::string sim_timing = "wall";
  add_common(sim_cmd, sim_opts, false);
  sim_cmd->add_option("--setting", sim_setting, "gaussian|negbin|weibull")->required();
  sim_cmd->add_option("--schemes", sim_schemes, "step-length presets to compare")
      ->required()
      ->delimiter(',');
  sim_cmd->add_option("--replicates", sim_replicates, "simulation runs per cell");
  sim_cmd->add_option("--n", sim_n, "observations per replicate");
  sim_cmd->add_option("--noise", sim_noise, "non-informative covariate counts")->delimiter(',');
  sim_cmd->add_option("--folds", sim_folds, "cross-validation folds");
  sim_cmd->add_option("--max-mstop", sim_max_mstop, "iteration cap (0 = scheme default)");
  sim_cmd->add_option("--timing", sim_timing, "wall|none: how the seconds column is filled")
      ->check(CLI::IsMember({"wall", "none"}));

  auto* brier_cmd = app.add_subcommand("brier", "survival scoring on repeated holdout splits");
  double brier_split = 0.333;
  int brier_grid = 100, brier_repeats = 1, brier_folds = 10, brier_max_mstop = 0;
  add_common(brier_cmd, brier_opts, true);
  brier_cmd->add_option("--split", brier_split, "validation fraction");
  brier_cmd->add_option("--grid", brier_grid, "time-grid points");
  brier_cmd->add_option("--repeats", brier_repeats, "random splits");
  brier_cmd->add_option("--folds", brier_folds, "cross-validation folds");
  brier_cmd->add_option("--max-mstop", brier_max_mstop, "iteration cap (0 = scheme default)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (fit_cmd->parsed()) return run_fit(fit_opts, fit_mstop);
    if (cv_cmd->parsed()) return run_cv(cv_opts, cv_folds, cv_max_mstop, cv_repeats);
    if (sim_cmd->parsed())
      return run_simulate(sim_opts, sim_setting, sim_schemes, sim_replicates, sim_n, sim_noise,
                          sim_folds, sim_max_mstop, sim_timing);
    if (brier_cmd->parsed())
      return run_brier(brier_opts, brier_split, brier_grid, brier_repeats, brier_folds,
                       brier_max_mstop);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
