#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <memory>
#include <vector>

#include "hermlag/basis.hpp"

namespace hermlag {

/// Default c in M = c sqrt(N) / beta and B = c sqrt(N) beta for the Hermite basis.
double default_bandwidth_constant();

struct Bandwidths {
  double M = 0.0;  // spatial
  double B = 0.0;  // frequency
};

/// Effective spatial and frequency bandwidths of the scaled basis with N terms.
/// The Laguerre basis uses the constant sqrt(2) c, its nodes being squares of Hermite nodes.
Bandwidths bandwidths(Family family, std::size_t N, double beta,
                      double c = default_bandwidth_constant());

/// Modified Bessel function of the second kind from its integral representation.
double bessel_k(double nu, double x);

/// Source of d^r/dk^r of the unitary Fourier transform F[u](k) = (2 pi)^{-1/2} int u e^{-ikx} dx.
class TransformProvider {
 public:
  virtual ~TransformProvider() = default;
  virtual std::complex<double> derivative(std::size_t r, double k) const = 0;
  virtual std::size_t max_order() const = 0;
  /// Orders 0..r_max at one k; providers override this when values share work.
  virtual std::vector<std::complex<double>> derivatives(double k, std::size_t r_max) const;
  /// Largest k at which values are trustworthy.
  virtual double band_limit() const { return 1e300; }
};

/// Gaussian c e^{-a x^2}.
std::unique_ptr<TransformProvider> gaussian_transform(double a, double c = 1.0);

/// Linear combination sum_i c_i (1+x^2)^{-h_i}, h_i > 1/2, through Bessel functions.
std::unique_ptr<TransformProvider> rational_power_transform(std::vector<std::pair<double, double>> terms);

struct NumericTransformOptions {
  double tail_tol = 1e-14;
  double max_half_width = 4096.0;
  std::size_t max_points = std::size_t{1} << 21;
  double probe_band = 40.0;
  double settle_tol = 1e-10;
};

/// Trapezoid transform on a uniform grid whose extent and spacing grow until settled.
std::unique_ptr<TransformProvider> fourier_numeric(const std::function<double(double)>& u,
                                                   std::size_t r_max,
                                                   const NumericTransformOptions& opts = {});

/// ||u 1_{|x|>M}|| in the weight |x|^{2 mu} on the whole line.
double spatial_truncation(const std::function<double(double)>& u, double mu, double M);

struct HolderPair {
  double p = 2.0;
  double q = 2.0;
  std::size_t lo = 0;  // floor(mu)
  std::size_t hi = 0;  // ceil(mu)
};

/// Exponents with lo/p + hi/q = mu and 1/p + 1/q = 1.
HolderPair interpolation_exponents(double mu);

/// Cumulative frequency tails int_B^inf |d^r F|^2 dk for r = 0..r_max, tabulated once.
class FrequencyProfile {
 public:
  FrequencyProfile(std::shared_ptr<const TransformProvider> provider, std::size_t r_max);
  double tail(std::size_t r, double B) const;
  std::size_t max_order() const { return r_max_; }

 private:
  std::shared_ptr<const TransformProvider> provider_;
  std::size_t r_max_;
  double width_;
  std::vector<double> breaks_;
  std::vector<std::vector<double>> cumulative_;  // [r][i] = int_{breaks_i}^inf
};

/// B^{1/2 - mu} ||g||_{H^lo}^{1/p} ||g||_{H^hi}^{1/q} with g(xi) = F[u](B xi) on |xi| > 1.
double frequency_truncation(const FrequencyProfile& profile, double mu, double B);

/// A whole-line target on the Hermite side together with its transform.
struct TruncationTarget {
  std::function<double(double)> u;
  std::shared_ptr<const FrequencyProfile> profile;
  double mu = 0.0;
};

struct TruncationReport {
  std::size_t N = 0;
  double beta = 0.0;
  double M = 0.0;
  double B = 0.0;
  double E_s = 0.0;
  double E_f = 0.0;
};

TruncationReport truncation_report(const TruncationTarget& t, Family family, std::size_t N,
                                   double beta, double c = default_bandwidth_constant());

struct BalanceOptions {
  double beta_lo = 1e-3;
  double beta_hi = 1e3;
  double c = default_bandwidth_constant();
  double tol = 1e-3;  // on |log(E_s / E_f)|
  std::size_t max_iter = 60;
};

/// Scaling factor at which spatial and frequency truncation errors coincide.
TruncationReport balance_scaling(const TruncationTarget& t, Family family, std::size_t N,
                                 const BalanceOptions& opts = {});

struct TransitionOptions {
  double p_lo = 1.0;
  double p_hi = 200.0;
  std::size_t scan = 80;
  double sign_tol = 1e-3;
};

/// Largest common bandwidth p in the scan range with E_s(p) = E_f(p).
double transition_point(const TruncationTarget& t, const TransitionOptions& opts = {});

}  // namespace hermlag
