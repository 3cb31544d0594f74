#include "texplore/fit.hpp"

#include <cmath>
#include <set>

namespace texplore {

GrowthModel growth_model_from_name(const std::string& name) {
  if (name == "linear" || name == "n") return GrowthModel::Linear;
  if (name == "nlogn") return GrowthModel::NLogN;
  if (name == "power") return GrowthModel::Power;
  if (name == "quadratic" || name == "n2") return GrowthModel::Quadratic;
  throw ShapeError("unknown growth model: " + name);
}

std::string growth_model_name(GrowthModel m) {
  switch (m) {
    case GrowthModel::Linear: return "linear";
    case GrowthModel::NLogN: return "nlogn";
    case GrowthModel::Power: return "power";
    case GrowthModel::Quadratic: return "quadratic";
  }
  return "?";
}

FitResult fit_growth(const std::vector<std::pair<double, double>>& data, GrowthModel model) {
  std::set<double> sizes;
  for (auto& [n, y] : data) {
    if (n <= 0 || y <= 0) throw ShapeError("fit data must be positive");
    sizes.insert(n);
  }
  if (sizes.size() < 3) throw ShapeError("fit needs at least three distinct sizes");

  FitResult res;
  res.model = model;
  res.points = static_cast<int>(data.size());

  auto shape = [&](double n) {
    switch (model) {
      case GrowthModel::Linear: return n;
      case GrowthModel::NLogN: return n * std::log2(n);
      case GrowthModel::Quadratic: return n * n;
      case GrowthModel::Power: return 1.0;  // handled separately
    }
    return 1.0;
  };

  if (model == GrowthModel::Power) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto& [n, y] : data) {
      double lx = std::log(n), ly = std::log(y);
      sx += lx;
      sy += ly;
      sxx += lx * lx;
      sxy += lx * ly;
    }
    double count = static_cast<double>(data.size());
    double denom = count * sxx - sx * sx;
    res.p = (count * sxy - sx * sy) / denom;
    double la = (sy - res.p * sx) / count;
    res.a = std::exp(la);
    double ss = 0;
    for (auto& [n, y] : data) {
      double r = std::log(y) - (la + res.p * std::log(n));
      ss += r * r;
    }
    res.residual = std::sqrt(ss / count);
    return res;
  }

  double sum = 0;
  for (auto& [n, y] : data) sum += std::log(y) - std::log(shape(n));
  double la = sum / static_cast<double>(data.size());
  res.a = std::exp(la);
  res.p = model == GrowthModel::Linear ? 1.0 : (model == GrowthModel::Quadratic ? 2.0 : 0.0);
  double ss = 0;
  for (auto& [n, y] : data) {
    double r = std::log(y) - (la + std::log(shape(n)));
    ss += r * r;
  }
  res.residual = std::sqrt(ss / static_cast<double>(data.size()));
  return res;
}

}  // namespace texplore
