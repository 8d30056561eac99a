#include "hermlag/errlab.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hermlag/errors.hpp"
#include "hermlag/integrate.hpp"
#include "hermlag/quad.hpp"

namespace hermlag {

double default_bandwidth_constant() { return 1.0 / (2.0 * std::sqrt(3.0)); }

Bandwidths bandwidths(Family family, std::size_t N, double beta, double c) {
  require(beta > 0.0 && std::isfinite(beta), "scaling factor must be positive");
  require(c > 0.0 && std::isfinite(c), "bandwidth constant must be positive");
  require(N >= 1, "bandwidths need N >= 1");
  const double n = static_cast<double>(N);
  if (family == Family::hermite) return {c * std::sqrt(n) / beta, c * std::sqrt(n) * beta};
  const double cl = std::sqrt(2.0) * c;
  return {cl * std::sqrt(n / beta), cl * std::sqrt(n * beta)};
}

namespace {

double log_cosh(double z) {
  z = std::abs(z);
  return z + std::log1p(std::exp(-2.0 * z)) - std::numbers::ln2;
}

}  // namespace

double bessel_k(double nu, double x) {
  require(std::isfinite(nu), "Bessel order must be finite");
  require(std::isfinite(x) && x > 0.0, "Bessel argument must be positive");
  nu = std::abs(nu);
  auto log_f = [&](double t) { return -x * (std::cosh(t) - 1.0) + log_cosh(nu * t); };
  double t_peak = 0.0;
  if (nu * nu > x) {
    double lo = 0.0, hi = std::asinh(nu / x) + 1.0;
    for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
      const double mid = 0.5 * (lo + hi);
      (nu * std::tanh(nu * mid) - x * std::sinh(mid) > 0.0 ? lo : hi) = mid;
    }
    t_peak = 0.5 * (lo + hi);
  }
  const double peak = log_f(t_peak);
  double step = 0.25, t_end = t_peak + step;
  while (log_f(t_end) > peak - 50.0) {
    step *= 1.5;
    t_end += step;
  }
  auto g = [&](double t) { return std::exp(log_f(t) - peak); };
  const double integral = integrate_adaptive(g, 0.0, t_end, 1e-15);
  return std::exp(peak - x) * integral;
}

std::vector<std::complex<double>> TransformProvider::derivatives(double k, std::size_t r_max) const {
  std::vector<std::complex<double>> out(r_max + 1);
  for (std::size_t r = 0; r <= r_max; ++r) out[r] = derivative(r, k);
  return out;
}

namespace {

class GaussianTransform final : public TransformProvider {
 public:
  GaussianTransform(double a, double c) : a_(a) {
    // P_{r+1} = P_r' - k/(2a) P_r, coefficients in ascending powers of k
    poly_.push_back({c / std::sqrt(2.0 * a)});
    for (std::size_t r = 0; r < 8; ++r) {
      const auto& p = poly_.back();
      std::vector<double> q(p.size() + 1, 0.0);
      for (std::size_t m = 1; m < p.size(); ++m) q[m - 1] += static_cast<double>(m) * p[m];
      for (std::size_t m = 0; m < p.size(); ++m) q[m + 1] -= p[m] / (2.0 * a);
      poly_.push_back(std::move(q));
    }
  }
  std::complex<double> derivative(std::size_t r, double k) const override {
    require(r < poly_.size(), "derivative order not available");
    const auto& p = poly_[r];
    double s = 0.0;
    for (std::size_t m = p.size(); m-- > 0;) s = s * k + p[m];
    return s * std::exp(-k * k / (4.0 * a_));
  }
  std::size_t max_order() const override { return poly_.size() - 1; }

 private:
  double a_;
  std::vector<std::vector<double>> poly_;
};

struct BesselTerm {
  double coef;
  double power;  // of k
  double order;  // of K
};

class RationalPowerTransform final : public TransformProvider {
 public:
  explicit RationalPowerTransform(const std::vector<std::pair<double, double>>& terms) {
    std::vector<BesselTerm> base;
    for (const auto& [c, h] : terms) {
      require(h > 0.5, "transform of (1+x^2)^{-h} needs h > 1/2");
      base.push_back({c * std::exp((1.0 - h) * std::numbers::ln2 - std::lgamma(h)), h - 0.5, h - 0.5});
    }
    terms_.push_back(base);
    // d/dk k^a K_b(k) = (a - b) k^{a-1} K_b - k^a K_{b-1}
    for (std::size_t r = 0; r < 3; ++r) {
      std::vector<BesselTerm> next;
      for (const auto& t : terms_.back()) {
        if (t.power != t.order) next.push_back({t.coef * (t.power - t.order), t.power - 1.0, t.order});
        next.push_back({-t.coef, t.power, t.order - 1.0});
      }
      terms_.push_back(std::move(next));
    }
  }
  std::complex<double> derivative(std::size_t r, double k) const override {
    require(r < terms_.size(), "derivative order not available");
    const double ak = std::abs(k);
    require(ak > 0.0, "closed-form transform is evaluated away from k = 0");
    double s = 0.0;
    for (const auto& t : terms_[r]) s += t.coef * std::pow(ak, t.power) * bessel_k(t.order, ak);
    return (k < 0.0 && r % 2 == 1) ? -s : s;
  }
  std::vector<std::complex<double>> derivatives(double k, std::size_t r_max) const override {
    require(r_max < terms_.size(), "derivative order not available");
    const double ak = std::abs(k);
    require(ak > 0.0, "closed-form transform is evaluated away from k = 0");
    std::vector<std::pair<double, double>> seen;  // |order|, K value
    auto kval = [&](double order) {
      const double o = std::abs(order);
      for (const auto& [so, v] : seen)
        if (so == o) return v;
      const double v = bessel_k(o, ak);
      seen.emplace_back(o, v);
      return v;
    };
    std::vector<std::complex<double>> out(r_max + 1);
    for (std::size_t r = 0; r <= r_max; ++r) {
      double s = 0.0;
      for (const auto& t : terms_[r]) s += t.coef * std::pow(ak, t.power) * kval(t.order);
      out[r] = (k < 0.0 && r % 2 == 1) ? -s : s;
    }
    return out;
  }
  std::size_t max_order() const override { return terms_.size() - 1; }

 private:
  std::vector<std::vector<BesselTerm>> terms_;
};

class NumericTransform final : public TransformProvider {
 public:
  NumericTransform(const std::function<double(double)>& u, std::size_t r_max,
                   const NumericTransformOptions& opts)
      : r_max_(r_max) {
    require(r_max <= 3, "numeric transforms support derivative orders up to 3");
    double L = 8.0;
    for (;;) {
      if (tails_small(u, L, opts.tail_tol) || L >= opts.max_half_width) break;
      L *= 2.0;
    }
    std::size_t m = 1024;
    build(u, L, m);
    auto prev = probe(opts.probe_band);
    for (;;) {
      if (2 * (2 * m) + 1 > opts.max_points)
        throw ConvergenceError("numeric transform did not settle within the point budget", 1.0);
      m *= 2;
      build(u, L, m);
      auto cur = probe(opts.probe_band);
      double worst = 0.0;
      for (std::size_t r = 0; r <= r_max_; ++r) {
        double scale = 1e-300, diff = 0.0;
        for (std::size_t i = 0; i < cur[r].size(); ++i) {
          scale = std::max(scale, std::abs(cur[r][i]));
          diff = std::max(diff, std::abs(cur[r][i] - prev[r][i]));
        }
        worst = std::max(worst, diff / scale);
      }
      if (worst <= opts.settle_tol) break;
      prev = std::move(cur);
    }
  }

  std::complex<double> derivative(std::size_t r, double k) const override {
    return derivatives(k, r)[r];
  }

  std::vector<std::complex<double>> derivatives(double k, std::size_t r_max) const override {
    require(r_max <= r_max_, "derivative order not available");
    std::vector<double> cs(r_max + 1, 0.0), sn(r_max + 1, 0.0);
    const std::size_t n = g_[0].size();
    constexpr std::size_t kBlock = 64;
    const std::complex<double> rot = std::polar(1.0, -k * h_);
    for (std::size_t start = 0; start < n; start += kBlock) {
      std::complex<double> z = std::polar(1.0, -k * (x0_ + static_cast<double>(start) * h_));
      const std::size_t end = std::min(n, start + kBlock);
      for (std::size_t j = start; j < end; ++j) {
        for (std::size_t r = 0; r <= r_max; ++r) {
          cs[r] += g_[r][j] * z.real();
          sn[r] += g_[r][j] * z.imag();
        }
        z *= rot;
      }
    }
    // F[(-ix)^r u] = (-i)^r sum
    std::vector<std::complex<double>> out(r_max + 1);
    std::complex<double> phase(1.0, 0.0);
    for (std::size_t r = 0; r <= r_max; ++r) {
      out[r] = phase * std::complex<double>(cs[r], sn[r]);
      phase *= std::complex<double>(0.0, -1.0);
    }
    return out;
  }
  std::size_t max_order() const override { return r_max_; }
  double band_limit() const override { return 0.5 * std::numbers::pi / h_; }

 private:
  bool tails_small(const std::function<double(double)>& u, double L, double tol) const {
    for (std::size_t r = 0; r <= r_max_; ++r) {
      double peak = 0.0;
      for (int i = -512; i <= 512; ++i) {
        const double x = L * i / 512.0;
        peak = std::max(peak, std::abs(std::pow(x, static_cast<double>(r)) * u(x)));
      }
      const double edge = std::max(std::abs(std::pow(L, static_cast<double>(r)) * u(L)),
                                   std::abs(std::pow(L, static_cast<double>(r)) * u(-L)));
      if (edge > tol * peak) return false;
    }
    return true;
  }

  void build(const std::function<double(double)>& u, double L, std::size_t m) {
    h_ = L / static_cast<double>(m);
    x0_ = -L;
    const std::size_t n = 2 * m + 1;
    g_.assign(r_max_ + 1, std::vector<double>(n));
    const double norm = h_ / std::sqrt(2.0 * std::numbers::pi);
    for (std::size_t j = 0; j < n; ++j) {
      const double x = x0_ + static_cast<double>(j) * h_;
      const double w = (j == 0 || j + 1 == n) ? 0.5 * norm : norm;
      double v = w * u(x);
      for (std::size_t r = 0; r <= r_max_; ++r) {
        g_[r][j] = v;
        v *= x;
      }
    }
  }

  std::vector<std::vector<std::complex<double>>> probe(double band) const {
    std::vector<std::vector<std::complex<double>>> out(r_max_ + 1);
    for (std::size_t r = 0; r <= r_max_; ++r)
      for (double frac : {0.0, 0.125, 0.25, 0.5, 1.0}) out[r].push_back(derivative(r, frac * band));
    return out;
  }

  std::size_t r_max_;
  double h_ = 0.0;
  double x0_ = 0.0;
  std::vector<std::vector<double>> g_;
};

}  // namespace

std::unique_ptr<TransformProvider> gaussian_transform(double a, double c) {
  require(a > 0.0, "Gaussian exponent must be positive");
  return std::make_unique<GaussianTransform>(a, c);
}

std::unique_ptr<TransformProvider> rational_power_transform(std::vector<std::pair<double, double>> terms) {
  require(!terms.empty(), "empty rational transform");
  return std::make_unique<RationalPowerTransform>(terms);
}

std::unique_ptr<TransformProvider> fourier_numeric(const std::function<double(double)>& u,
                                                   std::size_t r_max,
                                                   const NumericTransformOptions& opts) {
  return std::make_unique<NumericTransform>(u, r_max, opts);
}

double spatial_truncation(const std::function<double(double)>& u, double mu, double M) {
  require(mu > -0.5, "Hermite parameter must exceed -1/2");
  require(std::isfinite(M) && M > 0.0, "spatial bandwidth must be positive");
  auto g = [&](double x) {
    const double a = u(x), b = u(-x);
    return (a * a + b * b) * std::pow(x, 2.0 * mu);
  };
  const double w0 = std::max(0.25, 0.05 * M);
  const double coarse = integrate_tail(g, M, w0, 1e-12, 16);
  const double fine = integrate_tail(g, M, 0.5 * w0, 1e-12, 24);
  if (std::abs(coarse - fine) > 0.005 * std::abs(fine) && fine > 1e-300)
    throw ConvergenceError("spatial tail integral is not resolved", std::abs(coarse - fine) / fine);
  return std::sqrt(std::max(fine, 0.0));
}

HolderPair interpolation_exponents(double mu) {
  require(mu >= 0.0 && std::isfinite(mu), "frequency truncation needs mu >= 0");
  HolderPair hp;
  hp.lo = static_cast<std::size_t>(std::floor(mu));
  hp.hi = static_cast<std::size_t>(std::ceil(mu));
  if (hp.lo == hp.hi) return hp;
  const double frac = mu - static_cast<double>(hp.lo);
  hp.q = 1.0 / frac;
  hp.p = 1.0 / (1.0 - frac);
  return hp;
}

FrequencyProfile::FrequencyProfile(std::shared_ptr<const TransformProvider> provider,
                                   std::size_t r_max)
    : provider_(std::move(provider)), r_max_(r_max), width_(0.5) {
  require(provider_ != nullptr, "missing transform provider");
  require(r_max <= provider_->max_order(), "provider lacks the requested derivative order");
  const auto gl = gauss_legendre(24);
  const double k_cap = std::min(provider_->band_limit(), 4000.0);
  std::vector<std::vector<double>> part(r_max_ + 1);
  std::vector<double> peak(r_max_ + 1, 0.0);
  breaks_.push_back(0.0);
  for (std::size_t i = 0;; ++i) {
    const double a = width_ * static_cast<double>(i), b = a + width_;
    const double mid = 0.5 * (a + b), half = 0.5 * width_;
    std::vector<double> s(r_max_ + 1, 0.0);
    for (std::size_t q = 0; q < gl.nodes.size(); ++q) {
      const auto d = provider_->derivatives(mid + half * gl.nodes[q], r_max_);
      for (std::size_t r = 0; r <= r_max_; ++r) s[r] += gl.weights[q] * std::norm(d[r]);
    }
    // stop once every order has fallen far below anything a balance could resolve
    bool quiet = i >= 40;
    for (std::size_t r = 0; r <= r_max_; ++r) {
      part[r].push_back(half * s[r]);
      peak[r] = std::max(peak[r], part[r].back());
      if (quiet && part[r].back() > 1e-150 * peak[r]) quiet = false;
    }
    breaks_.push_back(b);
    if (quiet || b >= k_cap) break;
  }
  cumulative_.assign(r_max_ + 1, std::vector<double>(breaks_.size(), 0.0));
  for (std::size_t r = 0; r <= r_max_; ++r)
    for (std::size_t i = part[r].size(); i-- > 0;) cumulative_[r][i] = cumulative_[r][i + 1] + part[r][i];
}

double FrequencyProfile::tail(std::size_t r, double B) const {
  require(r <= r_max_, "derivative order not tabulated");
  require(B >= 0.0, "frequency bandwidth must be non-negative");
  if (B >= breaks_.back()) return 0.0;
  const auto i = static_cast<std::size_t>(std::floor(B / width_));
  const double b = breaks_[i + 1];
  static const auto gl = gauss_legendre(24);
  const double mid = 0.5 * (B + b), half = 0.5 * (b - B);
  double s = 0.0;
  for (std::size_t q = 0; q < gl.nodes.size(); ++q)
    s += gl.weights[q] * std::norm(provider_->derivatives(mid + half * gl.nodes[q], r)[r]);
  return half * s + cumulative_[r][i + 1];
}

double frequency_truncation(const FrequencyProfile& profile, double mu, double B) {
  require(std::isfinite(B) && B > 0.0, "frequency bandwidth must be positive");
  const auto hp = interpolation_exponents(mu);
  require(hp.hi <= profile.max_order(), "profile lacks derivative orders for this mu");
  auto sobolev = [&](std::size_t s) {
    double sum = 0.0;
    for (std::size_t r = 0; r <= s; ++r)
      sum += std::pow(B, 2.0 * static_cast<double>(r) - 1.0) * 2.0 * profile.tail(r, B);
    return std::sqrt(sum);
  };
  const double pre = std::pow(B, 0.5 - mu);
  if (hp.lo == hp.hi) return pre * sobolev(hp.lo);
  return pre * std::pow(sobolev(hp.lo), 1.0 / hp.p) * std::pow(sobolev(hp.hi), 1.0 / hp.q);
}

TruncationReport truncation_report(const TruncationTarget& t, Family family, std::size_t N,
                                   double beta, double c) {
  const auto bw = bandwidths(family, N, beta, c);
  TruncationReport rep;
  rep.N = N;
  rep.beta = beta;
  rep.M = bw.M;
  rep.B = bw.B;
  rep.E_s = spatial_truncation(t.u, t.mu, bw.M);
  rep.E_f = frequency_truncation(*t.profile, t.mu, bw.B);
  return rep;
}

namespace {

// log(E_s / E_f); NaN when both vanish
double log_ratio(const TruncationReport& r) {
  if (r.E_s <= 0.0 && r.E_f <= 0.0) return std::numeric_limits<double>::quiet_NaN();
  if (r.E_f <= 0.0) return std::numeric_limits<double>::infinity();
  if (r.E_s <= 0.0) return -std::numeric_limits<double>::infinity();
  return std::log(r.E_s / r.E_f);
}

}  // namespace

TruncationReport balance_scaling(const TruncationTarget& t, Family family, std::size_t N,
                                 const BalanceOptions& opts) {
  require(opts.beta_lo > 0.0 && opts.beta_hi > opts.beta_lo, "invalid scaling bracket");
  constexpr int kScan = 60;
  const double llo = std::log(opts.beta_lo), lhi = std::log(opts.beta_hi);
  double prev_l = 0.0, prev_g = std::numeric_limits<double>::quiet_NaN();
  double a = 0.0, b = 0.0, ga = 0.0;
  bool found = false;
  for (int i = 0; i <= kScan && !found; ++i) {
    const double l = llo + (lhi - llo) * i / kScan;
    const double g = log_ratio(truncation_report(t, family, N, std::exp(l), opts.c));
    if (std::isfinite(prev_g) && !std::isnan(g) && (prev_g < 0.0) != (g < 0.0)) {
      a = prev_l;
      b = l;
      ga = prev_g;
      found = true;
    }
    if (!std::isnan(g)) {
      prev_l = l;
      prev_g = g;
    }
  }
  if (!found) throw DomainError("truncation errors do not cross inside the scaling bracket");
  TruncationReport best;
  double gbest = std::numeric_limits<double>::infinity();
  for (std::size_t it = 0; it < opts.max_iter && b - a > 1e-13; ++it) {
    const double m = 0.5 * (a + b);
    const auto rep = truncation_report(t, family, N, std::exp(m), opts.c);
    const double g = log_ratio(rep);
    if (std::abs(g) < std::abs(gbest)) {
      gbest = g;
      best = rep;
    }
    if ((g < 0.0) == (ga < 0.0)) {
      a = m;
      ga = g;
    } else {
      b = m;
    }
  }
  if (!(std::abs(gbest) <= opts.tol))
    throw ConvergenceError("scaling balance did not reach the tolerance", std::abs(gbest));
  return best;
}

double transition_point(const TruncationTarget& t, const TransitionOptions& opts) {
  require(opts.p_lo > 0.0 && opts.p_hi > opts.p_lo && opts.scan >= 2, "invalid transition scan");
  auto g = [&](double p) {
    TruncationReport r;
    r.E_s = spatial_truncation(t.u, t.mu, p);
    r.E_f = frequency_truncation(*t.profile, t.mu, p);
    return log_ratio(r);
  };
  const double llo = std::log(opts.p_lo), lhi = std::log(opts.p_hi);
  // scan downward so the outermost crossing is found first
  double prev_l = 0.0, prev_g = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t i = opts.scan + 1; i-- > 0;) {
    const double l = llo + (lhi - llo) * static_cast<double>(i) / static_cast<double>(opts.scan);
    const double gv = g(std::exp(l));
    if (std::isnan(gv)) continue;
    if (std::isfinite(prev_g) && std::isfinite(gv) && std::abs(prev_g) > opts.sign_tol &&
        std::abs(gv) > opts.sign_tol && (prev_g < 0.0) != (gv < 0.0)) {
      double a = l, b = prev_l, ga = gv;
      for (int it = 0; it < 100 && b - a > 1e-12; ++it) {
        const double m = 0.5 * (a + b);
        const double gm = g(std::exp(m));
        if ((gm < 0.0) == (ga < 0.0)) {
          a = m;
          ga = gm;
        } else {
          b = m;
        }
      }
      return std::exp(0.5 * (a + b));
    }
    prev_l = l;
    prev_g = gv;
  }
  throw DomainError("spatial and frequency truncation errors do not cross");
}

}  // namespace hermlag
