#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "hermlag/basis.hpp"
#include "hermlag/integrate.hpp"
#include "hermlag/quad.hpp"

namespace hermlag {

enum class Domain { half_line, real_line };

struct TargetFunction {
  std::function<double(double)> value;
  Domain domain = Domain::half_line;
  std::string name;

  double operator()(double x) const { return value(x); }
};

struct Expansion {
  BasisSpec spec;
  std::vector<double> coeffs;  // spec.count() entries
};

struct ProjectOptions {
  double tol = 1e-10;  // relative to the largest coefficient, or to ||u|| / ||phi_n|| if larger
  std::size_t max_doublings = 4;
};

struct ProjectionResult {
  Expansion expansion;
  std::size_t doublings = 0;
  double last_delta = 0.0;
};

/// Orthogonal projection by oversampled composite quadrature, refined until stable.
ProjectionResult project_adaptive(const TargetFunction& u, const BasisSpec& spec,
                                  const ProjectOptions& opts = {});
Expansion project(const TargetFunction& u, const BasisSpec& spec, const ProjectOptions& opts = {});

enum class InterpKind { gauss, radau, hermite };

/// Rule whose nodes define the interpolant of the given kind in the given basis.
QuadratureRule interpolation_rule(const BasisSpec& spec, InterpKind kind);

/// Interpolant through the values of u at the rule nodes.
Expansion interpolate(const TargetFunction& u, const BasisSpec& spec, InterpKind kind);
/// Discrete transform of nodal values on a rule with spec.count() points.
Expansion interpolate_values(const QuadratureRule& rule, std::span<const double> values,
                             const BasisSpec& spec);

std::vector<double> evaluate(const Expansion& e, std::span<const double> xs);
double evaluate(const Expansion& e, double x);

/// Hermite expansions: exact derivative in the same family, one more term.
/// Laguerre expansions (parameter a): ordinary derivative as a Laguerre
/// expansion with parameter a+1 and the same size, obtained through the
/// Hermite representation of v(x^2).
Expansion differentiate(const Expansion& e);

/// v(y) = sum c_k L_k(beta y)  ->  u(x) = v(x^2) as a Hermite expansion at scale sqrt(beta).
Expansion to_hermite(const Expansion& laguerre);

struct ErrorOptions {
  std::size_t extra_points = 64;  // refined rule size is 2N + extra_points
  double refine_tol = 0.01;
};

struct ErrorReport {
  double value = 0.0;    // weighted L2 norm of u - e
  double refined = 0.0;  // the same on a doubled reference rule
  bool refinement_ok = true;
};

/// Continuous weighted L2 distance between u and e on the basis domain.
ErrorReport weighted_error(const TargetFunction& u, const Expansion& e, const ErrorOptions& opts = {});

/// Weighted L2 norm of g alone, with the same rule as weighted_error for spec.
double weighted_norm(const TargetFunction& g, const BasisSpec& spec, const ErrorOptions& opts = {});

struct EquivalenceReport {
  double hermite_error = 0.0;   // ||u - P_{2N} u|| with u(x) = v(x^2)
  double laguerre_error = 0.0;  // ||v - P_N v||
  double relative_gap = 0.0;
};

/// Projection errors of v on the half line and of v(x^2) on the line, side by side.
EquivalenceReport equivalence_transfer(const std::function<double(double)>& v, double mu,
                                       double beta, std::size_t n_half,
                                       const ProjectOptions& opts = {});

/// Composite points for integrals against the basis weight over the basis domain.
/// Panels break at nodes of a refined rule with n_break points at scale break_scale,
/// followed by growing panels up to tail_factor times the last breakpoint.
PointSet weighted_points(const BasisSpec& spec, std::size_t n_break, double break_scale,
                         double tail_factor = 2.0, std::size_t order = 16);

}  // namespace hermlag
