#include "gamboost/model_io.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "gamboost/csv.hpp"

namespace gamboost {

void write_model_json(const FittedModel& model, const std::string& path) {
  const FamilyModel fam = FamilyModel::make(model.family);
  nlohmann::ordered_json j;
  j["family"] = family_to_string(model.family);
  j["m_stop"] = model.m_stop;
  j["names"] = model.names;
  for (int k = 0; k < kNumParams; ++k) {
    nlohmann::ordered_json pj;
    pj["offset"] = model.offsets[static_cast<std::size_t>(k)];
    pj["beta0"] = model.coef.beta0[static_cast<std::size_t>(k)];
    pj["beta"] = model.coef.beta[static_cast<std::size_t>(k)];
    j["parameters"][fam.param_name(k)] = pj;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file '" + path + "'");
  out << j.dump(2) << '\n';
}

FittedModel read_model_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
  nlohmann::json j;
  in >> j;

  FittedModel model;
  model.family = family_from_string(j.at("family").get<std::string>());
  model.m_stop = j.at("m_stop").get<int>();
  model.names = j.at("names").get<std::vector<std::string>>();
  const FamilyModel fam = FamilyModel::make(model.family);
  for (int k = 0; k < kNumParams; ++k) {
    const auto& pj = j.at("parameters").at(fam.param_name(k));
    model.offsets[static_cast<std::size_t>(k)] = pj.at("offset").get<double>();
    model.coef.beta0[static_cast<std::size_t>(k)] = pj.at("beta0").get<double>();
    model.coef.beta[static_cast<std::size_t>(k)] = pj.at("beta").get<std::vector<double>>();
  }
  if (model.coef.beta[0].size() != model.names.size())
    throw std::invalid_argument("model json: coefficient/name length mismatch");
  return model;
}

void write_trace_csv(const FitTrace& trace, const FittedModel& model, const std::string& path) {
  const FamilyModel fam = FamilyModel::make(model.family);
  CsvWriter w(path, {"iteration", "parameter", "covariate", "nu", "intercept", "slope", "sqnorm",
                     "zeta", "loss", "applied", "boundary", "fallback"});
  for (const TraceRow& r : trace.rows) {
    w.row({cell(r.iteration), fam.param_name(r.param),
           r.covariate >= 0 ? model.names[static_cast<std::size_t>(r.covariate)] : "",
           cell(r.nu), cell(r.intercept), cell(r.slope), cell(r.sqnorm), cell(r.zeta),
           cell(r.loss), cell(static_cast<int>(r.applied)), cell(static_cast<int>(r.boundary)),
           cell(static_cast<int>(r.fallback))});
  }
}

void write_coefficients_csv(const std::vector<CoefficientRow>& rows, const std::string& path) {
  const bool with_truth = !rows.empty() && rows.front().true_value.has_value();
  std::vector<std::string> header{"parameter", "covariate", "estimate"};
  if (with_truth) header.push_back("true_value");
  CsvWriter w(path, header);
  for (const auto& r : rows) {
    std::vector<std::string> cells{r.parameter, r.covariate, cell(r.estimate)};
    if (with_truth) cells.push_back(cell(r.true_value.value_or(0.0)));
    w.row(cells);
  }
}

void write_risk_curve_csv(const CvResult& cv, const std::string& path) {
  CsvWriter w(path, {"iteration", "mean_risk"});
  for (std::size_t m = 0; m < cv.risk_curve.size(); ++m)
    w.row({cell(static_cast<int>(m + 1)), cell(cv.risk_curve[m])});
}

}  // namespace gamboost
