#include "gamboost/model.hpp"

#include <stdexcept>

namespace gamboost {

EtaVectors predict_link(const FittedModel& model, const std::vector<std::vector<double>>& columns,
                        int n_rows) {
  if (columns.size() != model.coef.beta[0].size())
    throw std::invalid_argument("predict: expected " + std::to_string(model.coef.beta[0].size()) +
                                " covariate columns, got " + std::to_string(columns.size()));
  EtaVectors etas;
  for (int k = 0; k < kNumParams; ++k) {
    auto& eta = etas[static_cast<std::size_t>(k)];
    eta.assign(static_cast<std::size_t>(n_rows),
               model.offsets[static_cast<std::size_t>(k)] +
                   model.coef.beta0[static_cast<std::size_t>(k)]);
    const auto& beta = model.coef.beta[static_cast<std::size_t>(k)];
    for (std::size_t j = 0; j < columns.size(); ++j) {
      const double b = beta[j];
      if (b == 0.0) continue;
      for (int i = 0; i < n_rows; ++i)
        eta[static_cast<std::size_t>(i)] += b * columns[j][static_cast<std::size_t>(i)];
    }
  }
  return etas;
}

EtaVectors predict_link(const FittedModel& model, const Dataset& d) {
  return predict_link(model, d.columns, d.n());
}

EtaVectors predict(const FittedModel& model, const std::vector<std::vector<double>>& columns,
                   int n_rows) {
  const FamilyModel fam = FamilyModel::make(model.family);
  EtaVectors out = predict_link(model, columns, n_rows);
  for (int k = 0; k < kNumParams; ++k)
    for (double& v : out[static_cast<std::size_t>(k)]) v = fam.link_inverse(k, v);
  return out;
}

EtaVectors predict(const FittedModel& model, const Dataset& d) {
  return predict(model, d.columns, d.n());
}

}  // namespace gamboost
