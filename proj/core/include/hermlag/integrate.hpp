#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace hermlag {

/// Abscissae and weights of a composite rule.
struct PointSet {
  std::vector<double> x;
  std::vector<double> w;

  std::size_t size() const { return x.size(); }
  void append(const PointSet& other);
  double sum(const std::function<double(double)>& g) const;
};

/// Gauss-Legendre panels on consecutive breakpoints.
PointSet panel_points(std::span<const double> breaks, std::size_t order = 16);

/// Panels on [0, b] refined geometrically toward 0, for integrands like x^a g(x) with a > -1.
PointSet graded_points(double b, double exponent, std::size_t order = 16);

/// Panels on [a, end] whose widths grow by a fixed ratio from w0.
PointSet growing_points(double a, double end, double w0, std::size_t order = 16, double ratio = 1.5);

/// Adaptive composite Gauss-Legendre on [a, b].
double integrate_adaptive(const std::function<double(double)>& g, double a, double b,
                          double rel_tol = 1e-12, double abs_tol = 0.0, std::size_t order = 16);

/// Integral of g over [a, inf) on panels of growing width, stopped once contributions are negligible.
double integrate_tail(const std::function<double(double)>& g, double a, double w0,
                      double rel_tol = 1e-12, std::size_t order = 16);

}  // namespace hermlag
