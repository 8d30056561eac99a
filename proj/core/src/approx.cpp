#include "hermlag/approx.hpp"

#include <algorithm>
#include <cmath>

#include "hermlag/errors.hpp"
#include "hermlag/integrate.hpp"

namespace hermlag {

namespace {

constexpr std::size_t kChunk = 512;

FunctionValues basis_values(const BasisSpec& s, std::span<const double> xs) {
  return s.family == Family::laguerre ? glf_eval(s.param, s.scale, s.size, xs)
                                      : ghf_eval(s.param, s.scale, s.size, xs);
}

double weight_exponent(const BasisSpec& s) {
  return s.family == Family::laguerre ? s.param : 2.0 * s.param;
}

void check_domain(const TargetFunction& u, const BasisSpec& s) {
  const Domain want = s.family == Family::laguerre ? Domain::half_line : Domain::real_line;
  require(u.domain == want, "target domain does not match the basis family");
}

// Coefficients sum_i w_i u(x_i) phi_n(x_i) / ||phi_n||^2 over a point set.
std::vector<double> moments(const BasisSpec& spec, const PointSet& ps, std::span<const double> uv) {
  std::vector<double> c(spec.count(), 0.0);
  for (std::size_t start = 0; start < ps.size(); start += kChunk) {
    const std::size_t len = std::min(kChunk, ps.size() - start);
    const auto vals = basis_values(spec, std::span<const double>(ps.x.data() + start, len));
    for (std::size_t n = 0; n <= spec.size; ++n) {
      const auto row = vals.degree(n);
      double s = 0.0;
      for (std::size_t j = 0; j < len; ++j) s += ps.w[start + j] * uv[start + j] * row[j];
      c[n] += s;
    }
  }
  for (std::size_t n = 0; n <= spec.size; ++n) c[n] /= spec.norm_squared(n);
  return c;
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

PointSet weighted_points(const BasisSpec& spec, std::size_t n_break, double break_scale,
                         double tail_factor, std::size_t order) {
  spec.validate();
  std::vector<double> breaks{0.0};
  if (spec.family == Family::laguerre) {
    const auto r = gauss_laguerre(0.0, break_scale, n_break);
    breaks.insert(breaks.end(), r.nodes.begin(), r.nodes.end());
  } else {
    const auto r = gauss_hermite_generalized(0.0, break_scale, 2 * n_break);
    for (double x : r.nodes)
      if (x > 0.0) breaks.push_back(x);
  }
  const double a = weight_exponent(spec);
  PointSet half = graded_points(breaks[1], a, order);
  half.append(panel_points(std::span<const double>(breaks).subspan(1), order));
  const double last = breaks.back(), gap = breaks.back() - breaks[breaks.size() - 2];
  half.append(growing_points(last, tail_factor * last, gap, order));
  for (std::size_t i = 0; i < half.size(); ++i) half.w[i] *= std::pow(half.x[i], a);
  if (spec.family == Family::laguerre) return half;
  PointSet full;
  for (std::size_t i = half.size(); i-- > 0;) {
    full.x.push_back(-half.x[i]);
    full.w.push_back(half.w[i]);
  }
  full.append(half);
  return full;
}

ProjectionResult project_adaptive(const TargetFunction& u, const BasisSpec& spec,
                                  const ProjectOptions& opts) {
  spec.validate();
  check_domain(u, spec);
  const double bscale = spec.family == Family::laguerre ? 0.5 * spec.scale : spec.scale / std::sqrt(2.0);
  std::size_t n_break = 2 * spec.size + 32;
  std::vector<double> prev;
  ProjectionResult res;
  res.expansion.spec = spec;
  for (std::size_t level = 0;; ++level) {
    const auto ps = weighted_points(spec, n_break, bscale);
    std::vector<double> uv(ps.size());
    for (std::size_t i = 0; i < ps.size(); ++i) uv[i] = u(ps.x[i]);
    auto c = moments(spec, ps, uv);
    if (!prev.empty()) {
      double delta = 0.0;
      for (std::size_t n = 0; n < c.size(); ++n) delta = std::max(delta, std::abs(c[n] - prev[n]));
      // Bessel bound |c_n| <= ||u|| / ||phi_n||, for targets nearly orthogonal to the space
      double uu = 0.0, min_norm = INFINITY;
      for (std::size_t i = 0; i < ps.size(); ++i) uu += ps.w[i] * uv[i] * uv[i];
      for (std::size_t n = 0; n <= spec.size; ++n) min_norm = std::min(min_norm, spec.norm_squared(n));
      const double scale = std::max({max_abs(c), std::sqrt(uu / min_norm), 1e-300});
      res.last_delta = delta / scale;
      if (res.last_delta <= opts.tol) {
        res.expansion.coeffs = std::move(c);
        res.doublings = level;
        return res;
      }
      if (level >= opts.max_doublings)
        throw ConvergenceError("projection quadrature did not settle", res.last_delta);
    }
    prev = std::move(c);
    n_break *= 2;
  }
}

Expansion project(const TargetFunction& u, const BasisSpec& spec, const ProjectOptions& opts) {
  return project_adaptive(u, spec, opts).expansion;
}

QuadratureRule interpolation_rule(const BasisSpec& spec, InterpKind kind) {
  spec.validate();
  const std::size_t n = spec.count();
  if (spec.family == Family::laguerre) {
    require(kind != InterpKind::hermite, "Hermite nodes do not apply to a Laguerre basis");
    return kind == InterpKind::gauss ? gauss_laguerre(spec.param, spec.scale, n)
                                     : gauss_radau_laguerre(spec.param, spec.scale, n);
  }
  require(kind != InterpKind::radau, "Radau nodes do not apply to a Hermite basis");
  return gauss_hermite_generalized(spec.param, spec.scale, n);
}

Expansion interpolate_values(const QuadratureRule& rule, std::span<const double> values,
                             const BasisSpec& spec) {
  spec.validate();
  require(rule.size() == spec.count(), "rule size must equal the number of basis functions");
  require(values.size() == rule.size(), "one value per node is required");
  PointSet ps;
  ps.x = rule.nodes;
  ps.w = rule.weights_func;
  Expansion e;
  e.spec = spec;
  e.coeffs = moments(spec, ps, values);
  return e;
}

Expansion interpolate(const TargetFunction& u, const BasisSpec& spec, InterpKind kind) {
  check_domain(u, spec);
  const auto rule = interpolation_rule(spec, kind);
  std::vector<double> v(rule.size());
  for (std::size_t j = 0; j < rule.size(); ++j) v[j] = u(rule.nodes[j]);
  return interpolate_values(rule, v, spec);
}

std::vector<double> evaluate(const Expansion& e, std::span<const double> xs) {
  e.spec.validate();
  require(e.coeffs.size() == e.spec.count(), "coefficient count does not match the basis size");
  std::vector<double> out(xs.size(), 0.0);
  for (std::size_t start = 0; start < xs.size(); start += kChunk) {
    const std::size_t len = std::min(kChunk, xs.size() - start);
    const auto vals = basis_values(e.spec, xs.subspan(start, len));
    for (std::size_t n = e.spec.size + 1; n-- > 0;) {
      const auto row = vals.degree(n);
      for (std::size_t j = 0; j < len; ++j) out[start + j] += e.coeffs[n] * row[j];
    }
  }
  return out;
}

double evaluate(const Expansion& e, double x) {
  return evaluate(e, std::span<const double>(&x, 1))[0];
}

Expansion to_hermite(const Expansion& v) {
  require(v.spec.family == Family::laguerre, "expected a Laguerre expansion");
  v.spec.validate();
  Expansion u;
  u.spec = {Family::hermite, v.spec.param + 0.5, std::sqrt(v.spec.scale), 2 * v.spec.size};
  u.coeffs = glf_to_ghf_coeffs(v.spec.param, v.coeffs);
  return u;
}

Expansion differentiate(const Expansion& e) {
  e.spec.validate();
  require(e.coeffs.size() == e.spec.count(), "coefficient count does not match the basis size");
  Expansion d;
  if (e.spec.family == Family::hermite) {
    d.spec = e.spec;
    d.spec.size += 1;
    d.coeffs = diff_coeffs(e.spec.param, e.spec.scale, e.coeffs);
    return d;
  }
  // d/dy v(y) = g(sqrt y) / (2 sqrt y) with g = d/dx v(x^2), an odd Hermite expansion
  const Expansion u = to_hermite(e);
  const auto g = diff_coeffs(u.spec.param, u.spec.scale, u.coeffs);
  auto c = ghf_odd_to_glf_coeffs(u.spec.param, g);
  for (double& x : c) x *= 0.5 * u.spec.scale;
  d.spec = {Family::laguerre, e.spec.param + 1.0, e.spec.scale, e.spec.size};
  d.coeffs = std::move(c);
  return d;
}

namespace {

double error_on_level(const TargetFunction& u, const Expansion* e, const BasisSpec& spec,
                      std::size_t n_break) {
  const double bscale = spec.family == Family::laguerre ? 0.5 * spec.scale : spec.scale / std::sqrt(2.0);
  const auto ps = weighted_points(spec, n_break, bscale);
  std::vector<double> ev = e ? evaluate(*e, ps.x) : std::vector<double>(ps.size(), 0.0);
  double s = 0.0;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const double d = u(ps.x[i]) - ev[i];
    s += ps.w[i] * d * d;
  }
  // beyond the panels the expansion has decayed; integrate what is left of the target
  const double end = ps.x.back();
  const double a = weight_exponent(spec);
  auto tail_integrand = [&](double x) {
    const double d = u(x) - (e ? evaluate(*e, x) : 0.0);
    return d * d * std::pow(x, a);
  };
  double tail = integrate_tail(tail_integrand, end, 0.05 * end + 1.0);
  if (spec.family == Family::hermite) {
    auto mirrored = [&](double x) {
      const double d = u(-x) - (e ? evaluate(*e, -x) : 0.0);
      return d * d * std::pow(x, a);
    };
    tail += integrate_tail(mirrored, end, 0.05 * end + 1.0);
  }
  return std::sqrt(std::max(s + tail, 0.0));
}

ErrorReport error_report(const TargetFunction& u, const Expansion* e, const BasisSpec& spec,
                         const ErrorOptions& opts) {
  check_domain(u, spec);
  const std::size_t n_break = 2 * spec.size + opts.extra_points;
  ErrorReport r;
  r.value = error_on_level(u, e, spec, n_break);
  r.refined = error_on_level(u, e, spec, 2 * n_break);
  const double denom = std::max(r.refined, 1e-300);
  r.refinement_ok = std::abs(r.value - r.refined) <= opts.refine_tol * denom || r.refined < 1e-15;
  return r;
}

}  // namespace

ErrorReport weighted_error(const TargetFunction& u, const Expansion& e, const ErrorOptions& opts) {
  e.spec.validate();
  return error_report(u, &e, e.spec, opts);
}

double weighted_norm(const TargetFunction& g, const BasisSpec& spec, const ErrorOptions& opts) {
  spec.validate();
  return error_report(g, nullptr, spec, opts).refined;
}

EquivalenceReport equivalence_transfer(const std::function<double(double)>& v, double mu,
                                       double beta, std::size_t n_half,
                                       const ProjectOptions& opts) {
  require(mu > -0.5, "Hermite parameter must exceed -1/2");
  const double alpha = mu - 0.5;
  const TargetFunction vt{v, Domain::half_line, "v"};
  const TargetFunction ut{[&v](double x) { return v(x * x); }, Domain::real_line, "v(x^2)"};
  const BasisSpec lag{Family::laguerre, alpha, beta * beta, n_half};
  const BasisSpec her{Family::hermite, mu, beta, 2 * n_half};
  EquivalenceReport rep;
  rep.laguerre_error = weighted_error(vt, project(vt, lag, opts)).refined;
  rep.hermite_error = weighted_error(ut, project(ut, her, opts)).refined;
  rep.relative_gap = std::abs(rep.hermite_error - rep.laguerre_error) /
                     std::max(rep.laguerre_error, 1e-300);
  return rep;
}

}  // namespace hermlag
