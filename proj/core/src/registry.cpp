#include "hermlag/registry.hpp"

#include <cmath>
#include <sstream>

#include "hermlag/errors.hpp"

namespace hermlag {

namespace {

std::vector<double> parse_args(const std::string& s, const std::string& id) {
  std::vector<double> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    require(used == item.size() && used > 0, "bad argument '" + item + "' in function id " + id);
    out.push_back(v);
  }
  return out;
}

// (1+x^2)^{-h} and its first two derivatives
double rat(double h, double x) { return std::pow(1.0 + x * x, -h); }
double rat_d1(double h, double x) { return -2.0 * h * x * std::pow(1.0 + x * x, -h - 1.0); }
double rat_d2(double h, double x) {
  const double t = 1.0 + x * x;
  return -2.0 * h * std::pow(t, -h - 1.0) + 4.0 * h * (h + 1.0) * x * x * std::pow(t, -h - 2.0);
}

// (1+x)^{-h} and its first two derivatives
double lin(double h, double x) { return std::pow(1.0 + x, -h); }
double lin_d1(double h, double x) { return -h * std::pow(1.0 + x, -h - 1.0); }
double lin_d2(double h, double x) { return h * (h + 1.0) * std::pow(1.0 + x, -h - 2.0); }

// e^{-c x^n}
double ep(double c, double n, double x) { return std::exp(-c * std::pow(x, n)); }
double ep_d1(double c, double n, double x) {
  if (n == 1.0) return -c * ep(c, n, x);
  return -c * n * std::pow(x, n - 1.0) * ep(c, n, x);
}
double ep_d2(double c, double n, double x) {
  double s = c * c * n * n * std::pow(x, 2.0 * n - 2.0);
  if (n != 1.0) s -= c * n * (n - 1.0) * std::pow(x, n - 2.0);
  return s * ep(c, n, x);
}

void need(const std::vector<double>& a, std::size_t n, const std::string& id) {
  require(a.size() == n, "function id " + id + " expects " + std::to_string(n) + " argument(s)");
}

}  // namespace

Manufactured RegistryEntry::manufactured() const {
  require(has_derivatives(), "function " + id + " has no analytic derivatives");
  return {value, d1, d2};
}

RegistryEntry lookup(const std::string& id) {
  const auto colon = id.find(':');
  const std::string name = id.substr(0, colon);
  const auto a = parse_args(colon == std::string::npos ? "" : id.substr(colon + 1), id);
  RegistryEntry e;
  e.id = id;

  if (name == "exp_pow_diff") {
    need(a, 1, id);
    const double n = a[0];
    require(n >= 1.0, "exp_pow_diff needs n >= 1");
    e.value = [n](double x) { return ep(1.0, n, x) - ep(0.5, n, x); };
    e.d1 = [n](double x) { return ep_d1(1.0, n, x) - ep_d1(0.5, n, x); };
    e.d2 = [n](double x) { return ep_d2(1.0, n, x) - ep_d2(0.5, n, x); };
    e.provenance = "geometric-convergence Galerkin study and optimal-scaling growth law";
  } else if (name == "alg_x") {
    need(a, 1, id);
    const double h = a[0];
    require(h > 1.0, "alg_x needs h > 1");
    // x (1+x)^{-h} = (1+x)^{1-h} - (1+x)^{-h}
    e.value = [h](double x) { return x * lin(h, x); };
    e.d1 = [h](double x) { return lin_d1(h - 1.0, x) - lin_d1(h, x); };
    e.d2 = [h](double x) { return lin_d2(h - 1.0, x) - lin_d2(h, x); };
    e.provenance = "algebraic-decay Galerkin study: order table and transition bend";
  } else if (name == "sin_alg") {
    need(a, 2, id);
    const double k = a[0], h = a[1];
    e.value = [k, h](double x) { return std::sin(k * x) * lin(h, x); };
    e.d1 = [k, h](double x) { return k * std::cos(k * x) * lin(h, x) + std::sin(k * x) * lin_d1(h, x); };
    e.d2 = [k, h](double x) {
      const double s = std::sin(k * x), c = std::cos(k * x);
      return -k * k * s * lin(h, x) + 2.0 * k * c * lin_d1(h, x) + s * lin_d2(h, x);
    };
    e.provenance = "oscillatory algebraic-decay Galerkin study: scaling insensitivity";
  } else if (name == "sin_rat") {
    need(a, 2, id);
    const double k = a[0], h = a[1];
    e.value = [k, h](double x) { return std::sin(k * x) * rat(h, x); };
    e.d1 = [k, h](double x) { return k * std::cos(k * x) * rat(h, x) + std::sin(k * x) * rat_d1(h, x); };
    e.d2 = [k, h](double x) {
      const double s = std::sin(k * x), c = std::cos(k * x);
      return -k * k * s * rat(h, x) + 2.0 * k * c * rat_d1(h, x) + s * rat_d2(h, x);
    };
    e.provenance = "oscillatory rational-decay target on the half line";
  } else if (name == "exp_rat") {
    need(a, 0, id);
    e.value = [](double y) { return std::exp(-y) / ((1.0 + y) * (1.0 + y)); };
    e.d1 = [](double y) { return -std::exp(-y) * (y + 3.0) * std::pow(1.0 + y, -3.0); };
    e.d2 = [](double y) { return std::exp(-y) * (y * y + 6.0 * y + 11.0) * std::pow(1.0 + y, -4.0); };
    e.provenance = "half-line versus whole-line projection equivalence";
  } else if (name == "trial") {
    need(a, 1, id);
    const double b = a[0];
    require(b > 0.0, "trial needs a positive scaling factor");
    e.value = [b](double x) { return b * x * std::exp(-0.5 * b * x); };
    e.d1 = [b](double x) { return b * std::exp(-0.5 * b * x) * (1.0 - 0.5 * b * x); };
    e.d2 = [b](double x) { return b * b * std::exp(-0.5 * b * x) * (0.25 * b * x - 1.0); };
    e.provenance = "first boundary basis function; Galerkin exactness on the trial space";
  } else if (name == "gauss_cos3") {
    need(a, 0, id);
    e.domain = Domain::real_line;
    e.value = [](double x) { return std::exp(-x * x) * std::cos(x * x * x); };
    e.d1 = [](double x) {
      const double g = std::exp(-x * x);
      return -2.0 * x * g * std::cos(x * x * x) - 3.0 * x * x * g * std::sin(x * x * x);
    };
    e.provenance = "Hermite quadrature with optimal versus unit scaling";
  } else if (name == "gauss_rat16") {
    need(a, 0, id);
    e.domain = Domain::real_line;
    e.value = [](double x) { return std::exp(-x * x) / (1.0 + 16.0 * x * x); };
    e.provenance = "Hermite versus dual Laguerre quadrature";
  } else if (name == "gaussian") {
    need(a, 1, id);
    const double c = a[0];
    require(c > 0.0, "gaussian needs a positive exponent");
    e.domain = Domain::real_line;
    e.value = [c](double x) { return std::exp(-c * x * x); };
    e.d1 = [c](double x) { return -2.0 * c * x * std::exp(-c * x * x); };
    e.d2 = [c](double x) { return (4.0 * c * c * x * x - 2.0 * c) * std::exp(-c * x * x); };
    e.transform = [c] { return gaussian_transform(c); };
    e.provenance = "self-reciprocal balancing check";
  } else if (name == "rat_pow") {
    need(a, 1, id);
    const double h = a[0];
    require(h > 0.5, "rat_pow needs h > 1/2");
    e.domain = Domain::real_line;
    e.value = [h](double x) { return rat(h, x); };
    e.d1 = [h](double x) { return rat_d1(h, x); };
    e.d2 = [h](double x) { return rat_d2(h, x); };
    e.transform = [h] { return rational_power_transform({{1.0, h}}); };
    e.provenance = "algebraic spatial decay with exponential frequency decay";
  } else if (name == "x2_rat_pow") {
    need(a, 1, id);
    const double h = a[0];
    require(h > 1.5, "x2_rat_pow needs h > 3/2");
    e.domain = Domain::real_line;
    e.value = [h](double x) { return x * x * rat(h, x); };
    e.d1 = [h](double x) { return rat_d1(h - 1.0, x) - rat_d1(h, x); };
    e.d2 = [h](double x) { return rat_d2(h - 1.0, x) - rat_d2(h, x); };
    e.transform = [h] { return rational_power_transform({{1.0, h - 1.0}, {-1.0, h}}); };
    e.provenance = "transition points between sub-geometric and algebraic convergence";
  } else {
    throw DomainError("unregistered function id '" + id + "'");
  }
  return e;
}

std::vector<RegistryInfo> registry_catalog() {
  return {
      {"exp_pow_diff:n", "e^{-x^n} - e^{-x^n/2} on x >= 0"},
      {"alg_x:h", "x (1+x)^{-h} on x >= 0"},
      {"sin_alg:k,h", "sin(k x) (1+x)^{-h} on x >= 0"},
      {"sin_rat:k,h", "sin(k x) (1+x^2)^{-h} on x >= 0"},
      {"exp_rat", "e^{-y} (1+y)^{-2} on y >= 0"},
      {"trial:beta", "beta x e^{-beta x/2} on x >= 0"},
      {"gauss_cos3", "e^{-x^2} cos(x^3) on the real line"},
      {"gauss_rat16", "e^{-x^2} / (1+16 x^2) on the real line"},
      {"gaussian:a", "e^{-a x^2} on the real line"},
      {"rat_pow:h", "(1+x^2)^{-h} on the real line"},
      {"x2_rat_pow:h", "x^2 (1+x^2)^{-h} on the real line"},
  };
}

}  // namespace hermlag
