#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "hermlag/approx.hpp"

namespace hermlag {

/// Exact solution with hand-derived first and second derivatives.
struct Manufactured {
  std::function<double(double)> u;
  std::function<double(double)> du;
  std::function<double(double)> d2u;
};

/// -u'' + gamma u = f on (0, inf) with u(0) = 0.
struct ModelProblem {
  double gamma = 1.0;
  TargetFunction f;
  std::optional<Manufactured> exact;

  /// f is rebuilt as -u'' + gamma u from the analytic second derivative.
  static ModelProblem manufactured(double gamma, Manufactured m);
  void validate() const;
};

/// phi_k(x) = L_k(beta x) - L_{k+1}(beta x), k = 0..N-1, with Laguerre functions of parameter 0.
struct BoundaryBasis {
  double beta = 1.0;
  std::size_t N = 1;

  /// values[k * xs.size() + j] = phi_k(xs[j])
  std::vector<double> values(std::span<const double> xs) const;
  std::vector<double> derivatives(std::span<const double> xs) const;
  /// The same function as a Laguerre expansion with N+1 terms.
  Expansion expansion(std::span<const double> coeffs) const;
};

BoundaryBasis boundary_basis(double beta, std::size_t N);

struct LinearSystem {
  Eigen::MatrixXd A;
  Eigen::VectorXd b;
};

struct GalerkinOptions {
  InterpKind rhs_kind = InterpKind::radau;
  std::size_t extra_points = 8;  // assembly rule has N + extra_points nodes
  bool estimate_condition = true;
  bool continuous_errors = false;
};

LinearSystem assemble(const ModelProblem& p, double beta, std::size_t N,
                      const GalerkinOptions& opts = {});

struct GalerkinSolution {
  double beta = 1.0;
  std::size_t N = 0;
  std::vector<double> coeffs;  // in the boundary basis
  Expansion expansion;         // the same solution in Laguerre functions
  double condition = 0.0;      // 2-norm condition number of A, 0 when not estimated
  double residual = 0.0;       // ||A c - b|| / ||b||
  // discrete norms on the Radau nodes used for the right-hand side
  std::optional<double> error_L2;
  std::optional<double> error_H1;
  std::optional<double> error_L2_continuous;
  std::optional<double> error_H1_continuous;
};

/// Smallest error value ever reported.
inline constexpr double kErrorFloor = 1e-14;

GalerkinSolution solve(const ModelProblem& p, double beta, std::size_t N,
                       const GalerkinOptions& opts = {});

}  // namespace hermlag
