#include "hermlag/fit.hpp"

#include <cmath>
#include <vector>

#include "hermlag/errors.hpp"

namespace hermlag {

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
  require(x.size() == y.size(), "fit needs matching x and y");
  require(x.size() >= 2, "fit needs at least two points");
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  require(sxx > 0.0, "fit abscissae are all equal");
  LineFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (f.intercept + f.slope * x[i]);
    ss_res += r * r;
  }
  f.r_squared = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;
  return f;
}

FitResult fit_rate(std::span<const double> N, std::span<const double> err, FitModel model,
                   double power, double floor) {
  require(N.size() == err.size(), "fit needs one error per N");
  if (model == FitModel::exp_pow) require(power > 0.0, "exp_pow fit needs a positive power");
  std::vector<double> xs, ys;
  FitResult r;
  r.model = model;
  r.power = model == FitModel::exp_pow ? power : 1.0;
  for (std::size_t i = 0; i < N.size(); ++i) {
    require(N[i] > 0.0, "fit needs positive N");
    if (!(err[i] > floor) || !std::isfinite(err[i])) {
      ++r.excluded;
      continue;
    }
    xs.push_back(model == FitModel::algebraic ? std::log(N[i]) : std::pow(N[i], power));
    ys.push_back(std::log(err[i]));
  }
  if (xs.size() < 2)
    throw DomainError("fit refused: " + std::to_string(xs.size()) + " of " + std::to_string(N.size()) +
                      " points lie above the floor " + std::to_string(floor));
  const LineFit lf = fit_line(xs, ys);
  r.rate = -lf.slope;
  r.intercept = lf.intercept;
  r.r_squared = lf.r_squared;
  r.used = xs.size();
  return r;
}

FitModel fit_model_from_string(const std::string& s) {
  if (s == "algebraic") return FitModel::algebraic;
  if (s == "exp_pow") return FitModel::exp_pow;
  throw DomainError("unknown fit model '" + s + "' (expected algebraic or exp_pow)");
}

const char* to_string(FitModel m) { return m == FitModel::algebraic ? "algebraic" : "exp_pow"; }

}  // namespace hermlag
