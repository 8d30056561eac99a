#include "hermlag/galerkin.hpp"

#include <algorithm>
#include <cmath>

#include "hermlag/errors.hpp"

namespace hermlag {

ModelProblem ModelProblem::manufactured(double gamma, Manufactured m) {
  require(m.u && m.d2u, "a manufactured solution needs u and u''");
  ModelProblem p;
  p.gamma = gamma;
  auto u = m.u, d2u = m.d2u;
  p.f = {[u, d2u, gamma](double x) { return -d2u(x) + gamma * u(x); }, Domain::half_line, "f"};
  p.exact = std::move(m);
  return p;
}

void ModelProblem::validate() const {
  require(gamma > 0.0 && std::isfinite(gamma), "gamma must be positive");
  require(static_cast<bool>(f.value), "right-hand side is missing");
  require(f.domain == Domain::half_line, "the model problem lives on the half line");
}

BoundaryBasis boundary_basis(double beta, std::size_t N) {
  require(N >= 1, "boundary basis needs N >= 1");
  require(beta > 0.0 && std::isfinite(beta), "scaling factor must be positive");
  return {beta, N};
}

std::vector<double> BoundaryBasis::values(std::span<const double> xs) const {
  const auto L = glf_eval(0.0, beta, N, xs);
  std::vector<double> out(N * xs.size());
  for (std::size_t k = 0; k < N; ++k)
    for (std::size_t j = 0; j < xs.size(); ++j) out[k * xs.size() + j] = L(k, j) - L(k + 1, j);
  return out;
}

std::vector<double> BoundaryBasis::derivatives(std::span<const double> xs) const {
  const auto L = glf_eval(0.0, beta, N, xs);
  std::vector<double> out(N * xs.size());
  for (std::size_t k = 0; k < N; ++k)
    for (std::size_t j = 0; j < xs.size(); ++j)
      out[k * xs.size() + j] = 0.5 * beta * (L(k, j) + L(k + 1, j));
  return out;
}

Expansion BoundaryBasis::expansion(std::span<const double> a) const {
  require(a.size() == N, "one coefficient per boundary basis function");
  Expansion e;
  e.spec = {Family::laguerre, 0.0, beta, N};
  e.coeffs.assign(N + 1, 0.0);
  for (std::size_t k = 0; k < N; ++k) {
    e.coeffs[k] += a[k];
    e.coeffs[k + 1] -= a[k];
  }
  return e;
}

LinearSystem assemble(const ModelProblem& p, double beta, std::size_t N, const GalerkinOptions& opts) {
  p.validate();
  const BoundaryBasis basis = boundary_basis(beta, N);
  const auto rule = gauss_laguerre(0.0, beta, N + opts.extra_points);
  const std::size_t m = rule.size();
  const auto phi = basis.values(rule.nodes);
  const auto dphi = basis.derivatives(rule.nodes);
  const auto& w = rule.weights_func;

  LinearSystem sys;
  sys.A.resize(static_cast<Eigen::Index>(N), static_cast<Eigen::Index>(N));
  for (std::size_t j = 0; j < N; ++j) {
    for (std::size_t k = j; k < N; ++k) {
      double s = 0.0;
      for (std::size_t i = 0; i < m; ++i)
        s += w[i] * (dphi[j * m + i] * dphi[k * m + i] + p.gamma * phi[j * m + i] * phi[k * m + i]);
      sys.A(j, k) = s;
      sys.A(k, j) = s;
    }
  }

  const BasisSpec spec{Family::laguerre, 0.0, beta, N};
  const Expansion fi = interpolate(p.f, spec, opts.rhs_kind);
  const auto fv = evaluate(fi, rule.nodes);
  sys.b.resize(static_cast<Eigen::Index>(N));
  for (std::size_t j = 0; j < N; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i) s += w[i] * fv[i] * phi[j * m + i];
    sys.b(j) = s;
  }
  return sys;
}

namespace {

double floored(double e) { return std::max(e, kErrorFloor); }

}  // namespace

GalerkinSolution solve(const ModelProblem& p, double beta, std::size_t N, const GalerkinOptions& opts) {
  const LinearSystem sys = assemble(p, beta, N, opts);
  Eigen::LLT<Eigen::MatrixXd> llt(sys.A);
  if (llt.info() != Eigen::Success)
    throw ConvergenceError("Galerkin matrix is not positive definite", 0.0);
  const Eigen::VectorXd c = llt.solve(sys.b);

  GalerkinSolution sol;
  sol.beta = beta;
  sol.N = N;
  sol.coeffs.assign(c.data(), c.data() + c.size());
  sol.expansion = boundary_basis(beta, N).expansion(sol.coeffs);
  const double bn = sys.b.norm();
  sol.residual = bn > 0.0 ? (sys.A * c - sys.b).norm() / bn : 0.0;
  if (opts.estimate_condition) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sys.A, Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();
    sol.condition = ev(ev.size() - 1) / ev(0);
  }
  if (!p.exact) return sol;

  const Manufactured& ex = *p.exact;
  const Expansion d = differentiate(sol.expansion);
  const BasisSpec spec{Family::laguerre, 0.0, beta, N};
  const auto nodal = interpolation_rule(spec, InterpKind::radau);
  const auto un = evaluate(sol.expansion, nodal.nodes);
  double e0 = 0.0;
  for (std::size_t j = 0; j < nodal.size(); ++j) {
    const double r = ex.u(nodal.nodes[j]) - un[j];
    e0 += nodal.weights_func[j] * r * r;
  }
  sol.error_L2 = floored(std::sqrt(e0));
  if (ex.du) {
    const auto dn = evaluate(d, nodal.nodes);
    double e1 = 0.0;
    for (std::size_t j = 0; j < nodal.size(); ++j) {
      const double r = ex.du(nodal.nodes[j]) - dn[j];
      e1 += nodal.weights_func[j] * r * r;
    }
    sol.error_H1 = floored(std::sqrt(e0 + e1));
  }
  if (opts.continuous_errors) {
    const TargetFunction ut{ex.u, Domain::half_line, "u"};
    const double c0 = weighted_error(ut, sol.expansion).refined;
    sol.error_L2_continuous = floored(c0);
    if (ex.du) {
      const auto du = ex.du;
      const TargetFunction g{[&d, du](double x) { return du(x) - evaluate(d, x); }, Domain::half_line,
                             "u' - u_N'"};
      const double c1 = weighted_norm(g, spec);
      sol.error_H1_continuous = floored(std::sqrt(c0 * c0 + c1 * c1));
    }
  }
  return sol;
}

}  // namespace hermlag
