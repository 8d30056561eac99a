#pragma once

#include <cstddef>
#include <span>
#include <string>

namespace hermlag {

enum class FitModel {
  algebraic,  // err ~ C N^{-order}
  exp_pow,    // err ~ C e^{-c N^p}
};

struct FitResult {
  FitModel model = FitModel::algebraic;
  double power = 1.0;      // p for exp_pow
  double rate = 0.0;       // order, or c
  double intercept = 0.0;  // log C
  double r_squared = 0.0;
  std::size_t used = 0;
  std::size_t excluded = 0;  // points at or below the floor
};

/// Precision plateau excluded from every fit.
inline constexpr double kFitFloor = 1e-13;

/// Least squares on log err against log N (algebraic) or N^p (exp_pow).
FitResult fit_rate(std::span<const double> N, std::span<const double> err, FitModel model,
                   double power = 1.0, double floor = kFitFloor);

/// Ordinary least-squares line with its coefficient of determination.
struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};
LineFit fit_line(std::span<const double> x, std::span<const double> y);

FitModel fit_model_from_string(const std::string& s);
const char* to_string(FitModel m);

}  // namespace hermlag
