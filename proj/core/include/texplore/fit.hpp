#pragma once

#include <string>
#include <vector>

#include "texplore/types.hpp"

namespace texplore {

// Growth models fitted in log space: a*n, a*n*log2(n), a*n^p, a*n^2.
enum class GrowthModel { Linear, NLogN, Power, Quadratic };

GrowthModel growth_model_from_name(const std::string& name);
std::string growth_model_name(GrowthModel m);

struct FitResult {
  GrowthModel model = GrowthModel::Power;
  double a = 0.0;
  double p = 0.0;       // exponent; only meaningful for Power
  double residual = 0.0;  // rms residual in log space
  int points = 0;
};

// Least squares on (log n, log y). Requires at least three distinct sizes.
FitResult fit_growth(const std::vector<std::pair<double, double>>& data, GrowthModel model);

}  // namespace texplore
