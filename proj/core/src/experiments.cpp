#include "hermlag/experiments.hpp"

#include <cmath>
#include <limits>
#include <regex>
#include <sstream>

#include "hermlag/errors.hpp"
#include "hermlag/quad.hpp"

namespace hermlag {

namespace {

double to_real(const std::string& s, const std::string& context) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  require(used == s.size() && used > 0, "cannot read a number from '" + s + "' in " + context);
  return v;
}

std::size_t to_count(const std::string& s, const std::string& context) {
  const double v = to_real(s, context);
  require(v >= 0.0 && v == std::floor(v) && v < 1e9, "expected a nonnegative integer in " + context);
  return static_cast<std::size_t>(v);
}

std::string strip(std::string s) {
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }), s.end());
  return s;
}

}  // namespace

double BetaRule::operator()(std::size_t N) const {
  const double n = static_cast<double>(N);
  switch (kind) {
    case Kind::constant:
      return c;
    case Kind::inverse:
      return c / n;
    case Kind::power:
      return c * std::pow(n, p);
    case Kind::log_squared_over_n: {
      const double l = std::log(n);
      return c * l * l / n;
    }
  }
  return c;
}

BetaRule parse_beta_rule(const std::string& raw) {
  const std::string s = strip(raw);
  const std::string num = R"(([0-9]*\.?[0-9]+(?:[eE][-+]?[0-9]+)?))";
  const std::string snum = R"(([-+]?[0-9]*\.?[0-9]+(?:[eE][-+]?[0-9]+)?))";
  BetaRule r;
  r.text = s;
  std::smatch m;
  if (std::regex_match(s, m, std::regex(num))) {
    r.kind = BetaRule::Kind::constant;
    r.c = std::stod(m[1]);
  } else if (std::regex_match(s, m, std::regex(num + R"(/N)"))) {
    r.kind = BetaRule::Kind::inverse;
    r.c = std::stod(m[1]);
  } else if (std::regex_match(s, m, std::regex(num + R"(\*N\^\(?)" + snum + R"(\)?)"))) {
    r.kind = BetaRule::Kind::power;
    r.c = std::stod(m[1]);
    r.p = std::stod(m[2]);
  } else if (std::regex_match(s, m, std::regex(R"(N\^\(?)" + snum + R"(\)?)"))) {
    r.kind = BetaRule::Kind::power;
    r.p = std::stod(m[1]);
  } else if (std::regex_match(s, m, std::regex(num + R"(\*ln\(N\)\^2/N)"))) {
    r.kind = BetaRule::Kind::log_squared_over_n;
    r.c = std::stod(m[1]);
  } else {
    throw DomainError("cannot parse scaling rule '" + raw + "' (expected c, c/N, c*N^p, N^p or c*ln(N)^2/N)");
  }
  require(r.c > 0.0, "scaling rule constant must be positive");
  return r;
}

std::vector<std::size_t> parse_n_range(const std::string& raw) {
  const std::string s = strip(raw);
  require(!s.empty(), "empty N range");
  std::vector<std::size_t> out;
  if (s.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    require(parts.size() == 2 || parts.size() == 3, "N range must be a:b or a:b:s");
    const std::size_t a = to_count(parts[0], "N range"), b = to_count(parts[1], "N range");
    const std::size_t step = parts.size() == 3 ? to_count(parts[2], "N range") : 1;
    require(step >= 1 && a <= b, "N range needs a <= b and a positive step");
    for (std::size_t n = a; n <= b; n += step) out.push_back(n);
  } else {
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(to_count(item, "N list"));
  }
  return out;
}

std::vector<double> parse_real_list(const std::string& raw) {
  const std::string s = strip(raw);
  require(!s.empty(), "empty list");
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(to_real(item, "list"));
  return out;
}

std::vector<SweepRow> galerkin_sweep(const RegistryEntry& u, const BetaRule& beta,
                                     const std::vector<std::size_t>& Ns, const SweepOptions& opts) {
  require(u.domain == Domain::half_line, "Galerkin sweeps need a half-line target");
  const ModelProblem prob = ModelProblem::manufactured(opts.gamma, u.manufactured());
  GalerkinOptions go;
  go.estimate_condition = false;
  go.continuous_errors = opts.norm == ErrorNorm::continuous;
  std::function<SweepRow(std::size_t)> cell = [&](std::size_t i) {
    const std::size_t N = Ns[i];
    const double b = beta(N);
    const auto sol = solve(prob, b, N, go);
    SweepRow row{N, b, 0.0, 0.0};
    if (opts.norm == ErrorNorm::nodal) {
      row.err_L2 = *sol.error_L2;
      row.err_H1 = *sol.error_H1;
    } else {
      row.err_L2 = *sol.error_L2_continuous;
      row.err_H1 = *sol.error_H1_continuous;
    }
    return row;
  };
  return parallel_map(Ns.size(), cell, opts.serial);
}

TruncationTarget make_truncation_target(const RegistryEntry& entry, Family family, double mu) {
  require(mu >= 0.0 && mu <= 3.0, "truncation studies support 0 <= mu <= 3");
  const std::size_t r_max = static_cast<std::size_t>(std::ceil(mu));
  TruncationTarget t;
  t.mu = mu;
  std::shared_ptr<const TransformProvider> provider;
  if (family == Family::hermite) {
    require(entry.domain == Domain::real_line, "Hermite truncation needs a whole-line target");
    t.u = entry.value;
    provider = entry.transform ? entry.transform() : fourier_numeric(entry.value, r_max);
  } else {
    require(entry.domain == Domain::half_line, "Laguerre truncation needs a half-line target");
    require(mu >= 0.5, "Laguerre truncation needs mu = alpha + 1/2 >= 1/2");
    const auto v = entry.value;
    t.u = [v](double x) { return v(x * x); };
    provider = fourier_numeric(t.u, r_max);
  }
  t.profile = std::make_shared<const FrequencyProfile>(provider, r_max);
  return t;
}

std::vector<TruncationReport> balance_sweep(const TruncationTarget& t, Family family,
                                            const std::vector<std::size_t>& Ns,
                                            const BalanceOptions& opts, bool serial) {
  std::function<TruncationReport(std::size_t)> cell = [&](std::size_t i) {
    return balance_scaling(t, family, Ns[i], opts);
  };
  return parallel_map(Ns.size(), cell, serial);
}

std::vector<TransitionRow> transition_sweep(const std::vector<double>& hs, bool serial) {
  std::function<TransitionRow(std::size_t)> cell = [&](std::size_t i) {
    TransitionRow row;
    row.h = hs[i];
    row.p = std::numeric_limits<double>::quiet_NaN();
    row.N_predicted = row.p;
    try {
      const auto entry = lookup("x2_rat_pow:" + std::to_string(hs[i]));
      const auto t = make_truncation_target(entry, Family::hermite, 0.5);
      row.p = transition_point(t);
      row.N_predicted = 12.0 * row.p * row.p;
    } catch (const DomainError& e) {
      row.message = e.what();
    }
    return row;
  };
  return parallel_map(hs.size(), cell, serial);
}

double hermite_quadrature(const std::function<double(double)>& g, double beta, std::size_t n) {
  const auto rule = gauss_hermite_generalized(0.0, beta, n);
  double s = 0.0;
  for (std::size_t j = 0; j < rule.size(); ++j) s += rule.weights_func[j] * g(rule.nodes[j]);
  return s;
}

double dual_laguerre_quadrature(const std::function<double(double)>& g, double beta, std::size_t n) {
  require(n % 2 == 1, "dual Laguerre quadrature needs an odd total point count");
  const auto rule = gauss_radau_laguerre(0.0, beta, (n + 1) / 2);
  double s = 0.0;
  for (std::size_t j = 0; j < rule.size(); ++j) s += rule.weights_func[j] * g(rule.nodes[j]);
  return 2.0 * s;
}

std::vector<QuadCompareRow> quad_compare_rational(const std::vector<std::size_t>& Ns, bool serial) {
  const auto g = lookup("gauss_rat16").value;
  std::function<QuadCompareRow(std::size_t)> cell = [&](std::size_t i) {
    const std::size_t N = Ns[i];
    const double n = static_cast<double>(N);
    QuadCompareRow r;
    r.N = N;
    r.beta_hermite = std::pow(2.0, 5.0 / 6.0) * std::pow(n, 1.0 / 6.0);
    r.beta_laguerre = std::pow(2.0, 5.0 / 6.0) * std::pow(n, 3.0 / 5.0);
    r.err_hermite = std::abs(hermite_quadrature(g, r.beta_hermite, N) - kGaussRat16Integral);
    r.err_dual_laguerre = std::abs(dual_laguerre_quadrature(g, r.beta_laguerre, N) - kGaussRat16Integral);
    return r;
  };
  return parallel_map(Ns.size(), cell, serial);
}

std::vector<QuadScalingRow> quad_compare_oscillatory(const std::vector<std::size_t>& Ns, bool serial) {
  const auto g = lookup("gauss_cos3").value;
  std::function<QuadScalingRow(std::size_t)> cell = [&](std::size_t i) {
    const std::size_t N = Ns[i];
    QuadScalingRow r;
    r.N = N;
    r.err_unit = std::abs(hermite_quadrature(g, 1.0, N) - kGaussCos3Integral);
    r.err_scaled =
        std::abs(hermite_quadrature(g, std::pow(static_cast<double>(N), 1.0 / 6.0), N) - kGaussCos3Integral);
    return r;
  };
  return parallel_map(Ns.size(), cell, serial);
}

}  // namespace hermlag
