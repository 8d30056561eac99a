#include "hermlag/quad.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "hermlag/errors.hpp"

namespace hermlag {

EigenSystem tridiagonal_eigen(const JacobiMatrix& jm, std::size_t sweeps_per_value) {
  const std::size_t n = jm.size();
  require(jm.off.size() + 1 == n || (n == 0 && jm.off.empty()), "malformed Jacobi matrix");
  std::vector<double> d = jm.diag;
  std::vector<double> e(n, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i) e[i] = jm.off[i];
  std::vector<double> z(n, 0.0);
  if (n > 0) z[0] = 1.0;

  for (std::size_t l = 0; l < n; ++l) {
    std::size_t iter = 0;
    for (;;) {
      std::size_t m = l;
      for (; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
      }
      if (m == l) break;
      if (++iter > sweeps_per_value)
        throw ConvergenceError("tridiagonal QL iteration did not converge", std::abs(e[l]));
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, p = 0.0;
      bool underflow = false;
      for (std::size_t i = m; i-- > l;) {
        double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        f = z[i + 1];
        z[i + 1] = s * z[i] + c * f;
        z[i] = c * z[i] - s * f;
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });
  EigenSystem out;
  out.values.reserve(n);
  out.first_comps.reserve(n);
  for (std::size_t i : order) {
    out.values.push_back(d[i]);
    out.first_comps.push_back(z[i]);
  }
  return out;
}

NodesWeights golub_welsch(const JacobiMatrix& j) {
  const double mu0 = j.zeroth_moment;
  const auto es = tridiagonal_eigen(j);
  NodesWeights nw;
  nw.nodes = es.values;
  nw.weights.resize(es.values.size());
  for (std::size_t i = 0; i < es.values.size(); ++i)
    nw.weights[i] = mu0 * es.first_comps[i] * es.first_comps[i];
  return nw;
}

JacobiMatrix laguerre_jacobi(double alpha, std::size_t n) {
  require(alpha > -1.0, "Laguerre parameter must exceed -1");
  require(n >= 1, "Jacobi matrix needs at least one row");
  JacobiMatrix j;
  j.zeroth_moment = std::tgamma(alpha + 1.0);
  j.diag.resize(n);
  j.off.resize(n > 0 ? n - 1 : 0);
  for (std::size_t k = 0; k < n; ++k) {
    const double dk = static_cast<double>(k);
    j.diag[k] = 2.0 * dk + 1.0 + alpha;
    if (k + 1 < n) j.off[k] = std::sqrt((dk + 1.0) * (dk + 1.0 + alpha));
  }
  return j;
}

namespace {

// Newton correction for a zero of L^(alpha)_n, computed with rescaling.
double laguerre_newton_step(double alpha, std::size_t n, double x) {
  double p0 = 1.0, p1 = 1.0 + alpha - x;
  for (std::size_t k = 1; k < n; ++k) {
    const double dk = static_cast<double>(k);
    double p2 = ((2.0 * dk + 1.0 + alpha - x) * p1 - (dk + alpha) * p0) / (dk + 1.0);
    if (std::abs(p2) > 1e150) {
      p2 *= 1e-150;
      p1 *= 1e-150;
    }
    p0 = p1;
    p1 = p2;
  }
  const double dn = static_cast<double>(n);
  const double denom = dn * p1 - (dn + alpha) * p0;  // x L_n'
  if (denom == 0.0) return 0.0;
  return x * p1 / denom;
}

// Unscaled Gauss-Laguerre nodes and function weights e^{x} w(x).
void unscaled_gauss(double alpha, std::size_t n, std::vector<double>& nodes,
                    std::vector<double>& wfunc) {
  const auto es = tridiagonal_eigen(laguerre_jacobi(alpha, n));
  nodes = es.values;
  for (double& x : nodes) {
    for (int it = 0; it < 3; ++it) {
      const double dx = laguerre_newton_step(alpha, n, x);
      if (!std::isfinite(dx) || std::abs(dx) > 0.1 * std::max(x, 1e-300)) break;
      x -= dx;
      if (std::abs(dx) <= 1e-17 * x) break;
    }
  }
  wfunc.resize(n);
  const auto vals = glf_eval(alpha, 1.0, n - 1, nodes);
  std::vector<double> inv_norm(n);
  for (std::size_t k = 0; k < n; ++k) inv_norm[k] = std::exp(-log_glf_norm(alpha, k));
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t k = n; k-- > 0;) s += vals(k, j) * vals(k, j) * inv_norm[k];
    wfunc[j] = 1.0 / s;
  }
}

void check_common(double a, double beta, std::size_t n_points) {
  require(std::isfinite(a) && a > -1.0, "Laguerre parameter must exceed -1");
  require(std::isfinite(beta) && beta > 0.0, "scaling factor must be positive");
  require(n_points >= 1, "a quadrature rule needs at least one point");
}

}  // namespace

QuadratureRule gauss_laguerre(double alpha, double beta, std::size_t n_points) {
  check_common(alpha, beta, n_points);
  QuadratureRule r;
  r.family = Family::laguerre;
  r.kind = RuleKind::gauss;
  r.param = alpha;
  r.scale = beta;
  std::vector<double> xi, wf;
  unscaled_gauss(alpha, n_points, xi, wf);
  const double s = std::pow(beta, -(alpha + 1.0));
  r.nodes.resize(n_points);
  r.weights_func.resize(n_points);
  r.weights_poly.resize(n_points);
  for (std::size_t j = 0; j < n_points; ++j) {
    r.nodes[j] = xi[j] / beta;
    r.weights_func[j] = wf[j] * s;
    r.weights_poly[j] = wf[j] * std::exp(-xi[j]) * s;
  }
  return r;
}

QuadratureRule gauss_radau_laguerre(double alpha, double beta, std::size_t n_points) {
  check_common(alpha, beta, n_points);
  QuadratureRule r;
  r.family = Family::laguerre;
  r.kind = RuleKind::radau;
  r.param = alpha;
  r.scale = beta;
  const std::size_t n = n_points - 1;
  const double dn = static_cast<double>(n);
  const double s = std::pow(beta, -(alpha + 1.0));
  const double w0 = std::exp(std::log(alpha + 1.0) + 2.0 * std::lgamma(alpha + 1.0) +
                             std::lgamma(dn + 1.0) - std::lgamma(dn + alpha + 2.0));
  r.nodes.push_back(0.0);
  r.weights_func.push_back(w0 * s);
  r.weights_poly.push_back(w0 * s);
  if (n > 0) {
    std::vector<double> xi, wf;
    unscaled_gauss(alpha + 1.0, n, xi, wf);
    for (std::size_t j = 0; j < n; ++j) {
      const double w = wf[j] / xi[j];
      r.nodes.push_back(xi[j] / beta);
      r.weights_func.push_back(w * s);
      r.weights_poly.push_back(w * std::exp(-xi[j]) * s);
    }
  }
  return r;
}

QuadratureRule gauss_hermite_generalized(double mu, double beta, std::size_t n_points) {
  require(std::isfinite(mu) && mu > -0.5, "Hermite parameter must exceed -1/2");
  require(std::isfinite(beta) && beta > 0.0, "scaling factor must be positive");
  require(n_points >= 1, "a quadrature rule needs at least one point");
  const double alpha = mu - 0.5;
  const bool odd = n_points % 2 == 1;
  const std::size_t half = odd ? (n_points - 1) / 2 : n_points / 2;
  const QuadratureRule lag = odd ? gauss_radau_laguerre(alpha, beta * beta, half + 1)
                                 : gauss_laguerre(alpha, beta * beta, half);
  const std::size_t first = odd ? 1 : 0;
  QuadratureRule r;
  r.family = Family::hermite;
  r.kind = RuleKind::gauss;
  r.param = mu;
  r.scale = beta;
  for (std::size_t j = lag.size(); j-- > first;) {
    r.nodes.push_back(-std::sqrt(lag.nodes[j]));
    r.weights_poly.push_back(0.5 * lag.weights_poly[j]);
    r.weights_func.push_back(0.5 * lag.weights_func[j]);
  }
  if (odd) {
    r.nodes.push_back(0.0);
    r.weights_poly.push_back(lag.weights_poly[0]);
    r.weights_func.push_back(lag.weights_func[0]);
  }
  for (std::size_t j = first; j < lag.size(); ++j) {
    r.nodes.push_back(std::sqrt(lag.nodes[j]));
    r.weights_poly.push_back(0.5 * lag.weights_poly[j]);
    r.weights_func.push_back(0.5 * lag.weights_func[j]);
  }
  return r;
}

NodesWeights gauss_legendre(std::size_t n_points) {
  require(n_points >= 1, "a quadrature rule needs at least one point");
  JacobiMatrix j;
  j.diag.assign(n_points, 0.0);
  j.off.resize(n_points - 1);
  j.zeroth_moment = 2.0;
  for (std::size_t k = 1; k < n_points; ++k) {
    const double dk = static_cast<double>(k);
    j.off[k - 1] = dk / std::sqrt(4.0 * dk * dk - 1.0);
  }
  auto nw = golub_welsch(j);
  // symmetrize to remove eigen-solver bias
  const std::size_t n = n_points;
  for (std::size_t i = 0; i < n / 2; ++i) {
    const double x = 0.5 * (nw.nodes[n - 1 - i] - nw.nodes[i]);
    const double w = 0.5 * (nw.weights[n - 1 - i] + nw.weights[i]);
    nw.nodes[i] = -x;
    nw.nodes[n - 1 - i] = x;
    nw.weights[i] = nw.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) nw.nodes[n / 2] = 0.0;
  return nw;
}

namespace {

// Bound for the square of the j-th positive zero of H^(alpha+1/2)_{2N+2}(beta x).
double squared_node_bound(double alpha, double beta2, std::size_t n, std::size_t j) {
  const double dj = static_cast<double>(j);
  const double a3 = 2.0 * dj + alpha + 3.0;
  return (dj + 0.5 * (alpha + 3.0)) * (a3 + std::sqrt(a3 * a3 + 0.25 - alpha * alpha)) /
         (beta2 * (static_cast<double>(n) + 0.5 * (alpha + 3.0)));
}

}  // namespace

NodeBoundReport node_bound_check(const QuadratureRule& rule) {
  // ys: squared Hermite-side positive nodes in ascending order; offset maps back to rule indices
  std::vector<double> ys;
  std::vector<std::size_t> index;
  double alpha = 0.0, beta2 = 1.0;
  if (rule.family == Family::laguerre) {
    alpha = rule.param;
    beta2 = rule.scale;
    for (std::size_t j = 0; j < rule.size(); ++j) {
      if (rule.kind == RuleKind::radau && j == 0) continue;
      ys.push_back(rule.nodes[j]);
      index.push_back(j);
    }
    if (rule.kind == RuleKind::radau) alpha += 1.0;
  } else {
    alpha = rule.param - 0.5;
    beta2 = rule.scale * rule.scale;
    for (std::size_t j = 0; j < rule.size(); ++j) {
      if (rule.nodes[j] > 0.0) {
        ys.push_back(rule.nodes[j] * rule.nodes[j]);
        index.push_back(j);
      }
    }
    if (rule.size() % 2 == 1) alpha += 1.0;
  }
  NodeBoundReport rep;
  rep.checked = ys.size();
  if (ys.empty()) return rep;
  const std::size_t n = ys.size() - 1;
  for (std::size_t j = 0; j < ys.size(); ++j) {
    if (!(ys[j] < squared_node_bound(alpha, beta2, n, j))) {
      rep.ok = false;
      rep.violating_index = index[j];
      break;
    }
  }
  const double asym = (4.0 * static_cast<double>(n) + 2.0 * alpha + 6.0) / beta2;
  rep.ratio = std::sqrt(ys.back() / asym);
  return rep;
}

}  // namespace hermlag
