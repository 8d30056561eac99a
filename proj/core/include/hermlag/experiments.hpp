#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "hermlag/errlab.hpp"
#include "hermlag/galerkin.hpp"
#include "hermlag/registry.hpp"

namespace hermlag {

/// beta as a function of N: "c", "c/N", "c*N^p", "N^p", "c*ln(N)^2/N".
struct BetaRule {
  enum class Kind { constant, inverse, power, log_squared_over_n };
  Kind kind = Kind::constant;
  double c = 1.0;
  double p = 1.0;
  std::string text;

  double operator()(std::size_t N) const;
};

BetaRule parse_beta_rule(const std::string& text);

/// "a:b:s", "a:b" (unit step) or a comma list.
std::vector<std::size_t> parse_n_range(const std::string& text);
std::vector<double> parse_real_list(const std::string& text);

/// out[i] = fn(i) for i < count, on a worker pool unless serial; order is always by index.
template <class T>
std::vector<T> parallel_map(std::size_t count, const std::function<T(std::size_t)>& fn, bool serial) {
  std::vector<T> out(count);
  std::size_t workers = serial ? 1 : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::exception_ptr> errs(count);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) {
        try {
          out[i] = fn(i);
        } catch (...) {
          errs[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errs)
    if (e) std::rethrow_exception(e);
  return out;
}

enum class ErrorNorm { nodal, continuous };

struct SweepRow {
  std::size_t N = 0;
  double beta = 0.0;
  double err_L2 = 0.0;
  double err_H1 = 0.0;
};

struct SweepOptions {
  double gamma = 1.0;
  ErrorNorm norm = ErrorNorm::nodal;
  bool serial = false;
};

/// Manufactured-solution convergence sweep of the half-line Galerkin solver.
std::vector<SweepRow> galerkin_sweep(const RegistryEntry& u, const BetaRule& beta,
                                     const std::vector<std::size_t>& Ns, const SweepOptions& opts = {});

/// Hermite-side target for truncation studies. For the Laguerre family the
/// half-line function v enters as u(x) = v(x^2); mu is always the Hermite parameter.
TruncationTarget make_truncation_target(const RegistryEntry& entry, Family family, double mu);

std::vector<TruncationReport> balance_sweep(const TruncationTarget& t, Family family,
                                            const std::vector<std::size_t>& Ns,
                                            const BalanceOptions& opts = {}, bool serial = false);

struct TransitionRow {
  double h = 0.0;
  double p = 0.0;           // NaN when no crossing was found
  double N_predicted = 0.0;  // 12 p^2
  std::string message;
};

/// Crossing of the two truncation errors for x^2 (1+x^2)^{-h} with mu = 1/2.
std::vector<TransitionRow> transition_sweep(const std::vector<double>& hs, bool serial = false);

inline constexpr double kGaussCos3Integral = 1.3881082669687811005592093889;
inline constexpr double kGaussRat16Integral = 0.60502876376748959404513302081;

/// Quadrature sum of g over the whole line with the n-point Hermite rule at scale beta.
double hermite_quadrature(const std::function<double(double)>& g, double beta, std::size_t n);
/// 2 x half-line Radau sum for an even integrand, (n+1)/2 points per semi-axis.
double dual_laguerre_quadrature(const std::function<double(double)>& g, double beta, std::size_t n);

struct QuadCompareRow {
  std::size_t N = 0;
  double beta_hermite = 0.0;
  double beta_laguerre = 0.0;
  double err_hermite = 0.0;
  double err_dual_laguerre = 0.0;
};
/// e^{-x^2}/(1+16x^2): Hermite at 2^{5/6} N^{1/6} against dual Laguerre at 2^{5/6} N^{3/5}.
std::vector<QuadCompareRow> quad_compare_rational(const std::vector<std::size_t>& Ns, bool serial = false);

struct QuadScalingRow {
  std::size_t N = 0;
  double err_unit = 0.0;    // beta = 1
  double err_scaled = 0.0;  // beta = N^{1/6}
};
/// e^{-x^2} cos(x^3) with Hermite quadrature at two scalings.
std::vector<QuadScalingRow> quad_compare_oscillatory(const std::vector<std::size_t>& Ns, bool serial = false);

}  // namespace hermlag
