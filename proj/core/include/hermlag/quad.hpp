#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hermlag/basis.hpp"

namespace hermlag {

/// Symmetric tridiagonal matrix; off[k] couples rows k and k+1.
struct JacobiMatrix {
  std::vector<double> diag;
  std::vector<double> off;
  double zeroth_moment = 1.0;  // total mass of the measure
  std::size_t size() const { return diag.size(); }
};

struct EigenSystem {
  std::vector<double> values;       // ascending
  std::vector<double> first_comps;  // first component of each unit eigenvector
};

/// Eigenvalues and first eigenvector components by implicit-shift QL.
/// Throws ConvergenceError once the sweep budget is spent.
EigenSystem tridiagonal_eigen(const JacobiMatrix& j, std::size_t sweeps_per_value = 60);

struct NodesWeights {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss rule of the measure described by a Jacobi matrix.
NodesWeights golub_welsch(const JacobiMatrix& j);

/// Jacobi matrix of the Laguerre weight x^alpha e^{-x}, size n >= 1.
JacobiMatrix laguerre_jacobi(double alpha, std::size_t n);

enum class RuleKind { gauss, radau };

struct QuadratureRule {
  Family family = Family::laguerre;
  RuleKind kind = RuleKind::gauss;
  double param = 0.0;
  double scale = 1.0;
  std::vector<double> nodes;         // ascending
  std::vector<double> weights_poly;  // for integrands p(x) w(x) e^{-beta x} or e^{-beta^2 x^2}
  std::vector<double> weights_func;  // for integrands g(x) w(x); may stay finite when poly weights underflow

  std::size_t size() const { return nodes.size(); }
};

QuadratureRule gauss_laguerre(double alpha, double beta, std::size_t n_points);
/// Rule with a fixed node at the origin.
QuadratureRule gauss_radau_laguerre(double alpha, double beta, std::size_t n_points);
/// Rule for |x|^{2 mu} e^{-beta^2 x^2} built from a half-line rule in y = x^2.
QuadratureRule gauss_hermite_generalized(double mu, double beta, std::size_t n_points);

/// Gauss-Legendre rule on [-1, 1].
NodesWeights gauss_legendre(std::size_t n_points);

struct NodeBoundReport {
  bool ok = true;
  std::optional<std::size_t> violating_index;  // index into the rule's nodes
  double ratio = 0.0;                          // largest node over its asymptotic value
  std::size_t checked = 0;
};

/// Checks every positive Gauss-type node against the known upper bound.
NodeBoundReport node_bound_check(const QuadratureRule& rule);

}  // namespace hermlag
