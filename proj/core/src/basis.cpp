#include "hermlag/basis.hpp"

#include <cmath>
#include <string>

#include "hermlag/errors.hpp"

namespace hermlag {

namespace {

constexpr double kBig = 1e150;
const double kLogBig = std::log(kBig);

// p * exp(e) without spurious underflow of exp(e) alone
double with_exponent(double p, double e) {
  if (p == 0.0) return 0.0;
  if (e > -600.0) return p * std::exp(e);
  return std::copysign(std::exp(e + std::log(std::abs(p))), p);
}

void check_alpha(double alpha) {
  require(std::isfinite(alpha) && alpha > -1.0, "Laguerre parameter must exceed -1");
}

void check_mu(double mu) {
  require(std::isfinite(mu) && mu > -0.5, "Hermite parameter must exceed -1/2");
}

void check_beta(double beta) {
  require(std::isfinite(beta) && beta > 0.0, "scaling factor must be positive");
}

template <class Out>
void glf_column(double alpha, double y, std::size_t n_max, Out&& out) {
  double e = -0.5 * y;
  double p0 = 1.0;
  out(0, with_exponent(p0, e));
  if (n_max == 0) return;
  double p1 = 1.0 + alpha - y;
  out(1, with_exponent(p1, e));
  for (std::size_t n = 1; n < n_max; ++n) {
    const double dn = static_cast<double>(n);
    double p2 = ((2.0 * dn + 1.0 + alpha - y) * p1 - (dn + alpha) * p0) / (dn + 1.0);
    if (std::abs(p2) > kBig) {
      p2 /= kBig;
      p1 /= kBig;
      e += kLogBig;
    }
    out(n + 1, with_exponent(p2, e));
    p0 = p1;
    p1 = p2;
  }
}

template <class Out>
void ghf_column(const RecurrenceCoeffs& rc, double mu, double s, std::size_t n_max, Out&& out) {
  double e = -0.5 * s * s;
  double p0 = std::exp(-0.5 * std::lgamma(mu + 0.5));
  out(0, with_exponent(p0, e));
  if (n_max == 0) return;
  double p1 = s * std::exp(-0.5 * std::lgamma(mu + 1.5));
  out(1, with_exponent(p1, e));
  for (std::size_t n = 1; n < n_max; ++n) {
    double p2 = rc.a[n] * s * p1 - rc.c[n] * p0;
    if (std::abs(p2) > kBig) {
      p2 /= kBig;
      p1 /= kBig;
      e += kLogBig;
    }
    out(n + 1, with_exponent(p2, e));
    p0 = p1;
    p1 = p2;
  }
}

}  // namespace

const char* to_string(Family f) { return f == Family::laguerre ? "laguerre" : "hermite"; }

Family family_from_string(const std::string_view name) {
  if (name == "laguerre" || name == "glf") return Family::laguerre;
  if (name == "hermite" || name == "ghf") return Family::hermite;
  throw DomainError("unknown basis family '" + std::string(name) + "'");
}

void BasisSpec::validate() const {
  if (family == Family::laguerre)
    check_alpha(param);
  else
    check_mu(param);
  check_beta(scale);
}

double BasisSpec::norm_squared(std::size_t n) const {
  if (family == Family::laguerre) return glf_norm(param, n) / std::pow(scale, param + 1.0);
  return std::pow(scale, -(2.0 * param + 1.0));
}

double log_glf_norm(double alpha, std::size_t n) {
  check_alpha(alpha);
  const double dn = static_cast<double>(n);
  return std::lgamma(dn + alpha + 1.0) - std::lgamma(dn + 1.0);
}

double glf_norm(double alpha, std::size_t n) { return std::exp(log_glf_norm(alpha, n)); }

FunctionValues glf_eval(double alpha, double beta, std::size_t n_max, std::span<const double> xs) {
  check_alpha(alpha);
  check_beta(beta);
  FunctionValues v(n_max, xs.size());
  for (std::size_t j = 0; j < xs.size(); ++j) {
    require(std::isfinite(xs[j]) && xs[j] >= 0.0, "Laguerre functions need x >= 0");
    glf_column(alpha, beta * xs[j], n_max, [&](std::size_t n, double val) { v(n, j) = val; });
  }
  return v;
}

std::vector<double> glf_eval(double alpha, double beta, std::size_t n_max, double x) {
  const auto v = glf_eval(alpha, beta, n_max, std::span<const double>(&x, 1));
  std::vector<double> out(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) out[n] = v(n, 0);
  return out;
}

RecurrenceCoeffs ghf_recurrence(double mu, std::size_t n_max) {
  check_mu(mu);
  RecurrenceCoeffs rc;
  rc.a.assign(n_max + 1, 0.0);
  rc.c.assign(n_max + 1, 0.0);
  rc.theta.assign(n_max + 1, 0.0);
  for (std::size_t n = 0; n <= n_max; ++n) {
    const double dn = static_cast<double>(n);
    if (n % 2 == 0) {
      rc.a[n] = std::sqrt(2.0 / (dn + 1.0 + 2.0 * mu));
      rc.c[n] = std::sqrt(dn / (dn + 2.0 * mu + 1.0));
    } else {
      rc.theta[n] = 2.0 * mu;
      rc.a[n] = std::sqrt(2.0 / (dn + 1.0));
      rc.c[n] = std::sqrt((dn + 2.0 * mu) / (dn + 1.0));
    }
  }
  return rc;
}

FunctionValues ghf_eval(double mu, double beta, std::size_t n_max, std::span<const double> xs) {
  check_mu(mu);
  check_beta(beta);
  const auto rc = ghf_recurrence(mu, n_max);
  FunctionValues v(n_max, xs.size());
  for (std::size_t j = 0; j < xs.size(); ++j) {
    require(std::isfinite(xs[j]), "non-finite abscissa");
    ghf_column(rc, mu, beta * xs[j], n_max, [&](std::size_t n, double val) { v(n, j) = val; });
  }
  return v;
}

std::vector<double> ghf_eval(double mu, double beta, std::size_t n_max, double x) {
  const auto v = ghf_eval(mu, beta, n_max, std::span<const double>(&x, 1));
  std::vector<double> out(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) out[n] = v(n, 0);
  return out;
}

std::vector<double> glp_eval(double alpha, std::size_t n_max, double x) {
  check_alpha(alpha);
  std::vector<double> p(n_max + 1);
  p[0] = 1.0;
  if (n_max == 0) return p;
  p[1] = 1.0 + alpha - x;
  for (std::size_t n = 1; n < n_max; ++n) {
    const double dn = static_cast<double>(n);
    p[n + 1] = ((2.0 * dn + 1.0 + alpha - x) * p[n] - (dn + alpha) * p[n - 1]) / (dn + 1.0);
  }
  return p;
}

double ghf_at_zero_even(double mu, std::size_t n) {
  check_mu(mu);
  const double dn = static_cast<double>(n);
  const double mag =
      std::exp(0.5 * (std::lgamma(dn + mu + 0.5) - std::lgamma(dn + 1.0)) - std::lgamma(mu + 0.5));
  return n % 2 == 0 ? mag : -mag;
}

double ghp_direct(double mu, std::size_t n, double x) {
  check_mu(mu);
  double h0 = 1.0;
  if (n == 0) return h0;
  double h1 = 2.0 * x;
  for (std::size_t k = 1; k < n; ++k) {
    const double theta = k % 2 == 0 ? 0.0 : 2.0 * mu;
    const double h2 = 2.0 * x * h1 - 2.0 * (static_cast<double>(k) + theta) * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

double ghp_via_glp(double mu, std::size_t n, double x) {
  check_mu(mu);
  const std::size_t m = n / 2;
  const double dm = static_cast<double>(m);
  const double sign = m % 2 == 0 ? 1.0 : -1.0;
  const double lead = std::exp(static_cast<double>(n) * std::log(2.0) + std::lgamma(dm + 1.0));
  if (n % 2 == 0) return sign * lead * glp_eval(mu - 0.5, m, x * x)[m];
  return sign * lead * x * glp_eval(mu + 0.5, m, x * x)[m];
}

std::vector<double> diff_coeffs(double mu, double beta, std::span<const double> c) {
  check_mu(mu);
  check_beta(beta);
  const std::size_t len = c.size();
  std::vector<double> d(len + 1, 0.0);
  for (std::size_t n = 0; n < len; ++n) {
    const double dn = static_cast<double>(n);
    if (n % 2 == 0) {
      d[n + 1] -= std::sqrt((dn + 1.0 + 2.0 * mu) / 2.0) * c[n];
      if (n > 0) d[n - 1] += std::sqrt(dn / 2.0) * c[n];
    } else {
      d[n + 1] -= std::sqrt((dn + 1.0) / 2.0) * c[n];
      d[n - 1] += std::sqrt((dn + 2.0 * mu) / 2.0) * c[n];
    }
  }
  if (mu != 0.0 && len > 1) {
    // odd-index contributions to every lower even index share a suffix sum
    const std::size_t m_max = (len - 2) / 2;
    double suffix = 0.0;
    for (std::size_t m = m_max + 1; m-- > 0;) {
      const double dm = static_cast<double>(m);
      const double sign = m % 2 == 1 ? 1.0 : -1.0;
      suffix += sign * std::exp(0.5 * (std::lgamma(dm + 1.0) - std::lgamma(dm + mu + 1.5))) *
                c[2 * m + 1];
      const double dk = dm;
      const double ksign = m % 2 == 0 ? 1.0 : -1.0;
      d[2 * m] += 2.0 * mu * ksign *
                  std::exp(0.5 * (std::lgamma(dk + mu + 0.5) - std::lgamma(dk + 1.0))) * suffix;
    }
  }
  for (double& v : d) v *= beta;
  return d;
}

std::vector<double> glf_to_ghf_coeffs(double alpha, std::span<const double> c) {
  check_alpha(alpha);
  std::vector<double> h(c.empty() ? 0 : 2 * c.size() - 1, 0.0);
  for (std::size_t k = 0; k < c.size(); ++k) {
    const double sign = k % 2 == 0 ? 1.0 : -1.0;
    h[2 * k] = sign * std::exp(0.5 * log_glf_norm(alpha, k)) * c[k];
  }
  return h;
}

std::vector<double> ghf_even_to_glf_coeffs(double mu, std::span<const double> h) {
  check_mu(mu);
  const double alpha = mu - 0.5;
  std::vector<double> c((h.size() + 1) / 2, 0.0);
  for (std::size_t k = 0; k < c.size(); ++k) {
    const double sign = k % 2 == 0 ? 1.0 : -1.0;
    c[k] = sign * std::exp(-0.5 * log_glf_norm(alpha, k)) * h[2 * k];
  }
  return c;
}

std::vector<double> ghf_odd_to_glf_coeffs(double mu, std::span<const double> h) {
  check_mu(mu);
  const double alpha = mu + 0.5;
  std::vector<double> c(h.size() / 2, 0.0);
  for (std::size_t k = 0; k < c.size(); ++k) {
    const double sign = k % 2 == 0 ? 1.0 : -1.0;
    c[k] = sign * std::exp(-0.5 * log_glf_norm(alpha, k)) * h[2 * k + 1];
  }
  return c;
}

}  // namespace hermlag
