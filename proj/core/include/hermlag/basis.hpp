#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace hermlag {

enum class Family { laguerre, hermite };

const char* to_string(Family f);
Family family_from_string(const std::string_view name);

/// A scaled basis: Laguerre functions L^(alpha)_n(beta x) on the half line or
/// Hermite functions H^(mu)_n(beta x) on the whole line, n = 0..size.
struct BasisSpec {
  Family family = Family::laguerre;
  double param = 0.0;  // alpha or mu
  double scale = 1.0;  // beta
  std::size_t size = 0;

  void validate() const;
  std::size_t count() const { return size + 1; }
  /// Squared weighted norm of the n-th basis function.
  double norm_squared(std::size_t n) const;
};

/// Basis values for degrees 0..n_max at a batch of abscissae, stored by degree.
class FunctionValues {
 public:
  FunctionValues() = default;
  FunctionValues(std::size_t n_max, std::size_t points)
      : n_max_(n_max), points_(points), data_((n_max + 1) * points, 0.0) {}

  double operator()(std::size_t n, std::size_t j) const { return data_[n * points_ + j]; }
  double& operator()(std::size_t n, std::size_t j) { return data_[n * points_ + j]; }
  std::span<const double> degree(std::size_t n) const {
    return {data_.data() + n * points_, points_};
  }
  std::size_t n_max() const { return n_max_; }
  std::size_t points() const { return points_; }

 private:
  std::size_t n_max_ = 0;
  std::size_t points_ = 0;
  std::vector<double> data_;
};

/// e^{-y/2} L^(alpha)_n(y) at y = beta x, for x >= 0.
FunctionValues glf_eval(double alpha, double beta, std::size_t n_max, std::span<const double> xs);
std::vector<double> glf_eval(double alpha, double beta, std::size_t n_max, double x);

/// Orthonormal generalized Hermite functions at beta x.
FunctionValues ghf_eval(double mu, double beta, std::size_t n_max, std::span<const double> xs);
std::vector<double> ghf_eval(double mu, double beta, std::size_t n_max, double x);

/// Laguerre polynomials L^(alpha)_0..n_max at x (no envelope).
std::vector<double> glp_eval(double alpha, std::size_t n_max, double x);

/// gamma_n = Gamma(n+alpha+1)/n!
double glf_norm(double alpha, std::size_t n);
double log_glf_norm(double alpha, std::size_t n);

/// Closed-form value of the even generalized Hermite function of index 2n at 0.
double ghf_at_zero_even(double mu, std::size_t n);

/// Unnormalized generalized Hermite polynomial by its own three-term recurrence.
double ghp_direct(double mu, std::size_t n, double x);
/// The same polynomial assembled from a Laguerre polynomial in x^2.
double ghp_via_glp(double mu, std::size_t n, double x);

struct RecurrenceCoeffs {
  std::vector<double> a;      // multiplier of x
  std::vector<double> c;      // multiplier of the previous term
  std::vector<double> theta;  // 0 for even n, 2 mu for odd n
};

/// H_{n+1} = a_n x H_n - c_n H_{n-1}, n = 1..n_max-1 (index 0 unused).
RecurrenceCoeffs ghf_recurrence(double mu, std::size_t n_max);

/// Coefficients of d/dx sum_n c_n H^(mu)_n(beta x) in the same basis; length grows by one.
std::vector<double> diff_coeffs(double mu, double beta, std::span<const double> c);

/// Hermite coefficients (index 2k) of v(x^2) for v = sum_k c_k L^(alpha)_k(beta y),
/// expanded in H^(alpha+1/2)_n(sqrt(beta) x).
std::vector<double> glf_to_ghf_coeffs(double alpha, std::span<const double> c);

/// Inverse of glf_to_ghf_coeffs on the even indices; odd entries are ignored.
std::vector<double> ghf_even_to_glf_coeffs(double mu, std::span<const double> h);

/// Laguerre coefficients (parameter mu+1/2) of w(y) = g(sqrt y)/sqrt y where
/// g = sum_n h_n H^(mu)_n(x) is odd; even entries of h are ignored.
std::vector<double> ghf_odd_to_glf_coeffs(double mu, std::span<const double> h);

}  // namespace hermlag
