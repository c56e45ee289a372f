#pragma once

#include <string>
#include <vector>

#include "gamboost/metrics.hpp"
#include "gamboost/model.hpp"
#include "gamboost/tuning.hpp"

namespace gamboost {

void write_model_json(const FittedModel& model, const std::string& path);
FittedModel read_model_json(const std::string& path);

// trace.csv: iteration,parameter,covariate,nu,intercept,slope,sqnorm,zeta,
// loss,applied,boundary,fallback
void write_trace_csv(const FitTrace& trace, const FittedModel& model, const std::string& path);

// coefficients.csv: parameter,covariate,estimate[,true_value]
void write_coefficients_csv(const std::vector<CoefficientRow>& rows, const std::string& path);

void write_risk_curve_csv(const CvResult& cv, const std::string& path);

}  // namespace gamboost
