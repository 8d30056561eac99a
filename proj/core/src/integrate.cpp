#include "hermlag/integrate.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>

#include "hermlag/errors.hpp"
#include "hermlag/quad.hpp"

namespace hermlag {

namespace {

const NodesWeights& legendre(std::size_t order) {
  static std::mutex m;
  static std::map<std::size_t, NodesWeights> cache;
  std::lock_guard<std::mutex> lock(m);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, gauss_legendre(order)).first;
  return it->second;
}

void add_panel(PointSet& ps, const NodesWeights& gl, double a, double b) {
  const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
  for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
    ps.x.push_back(mid + half * gl.nodes[i]);
    ps.w.push_back(half * gl.weights[i]);
  }
}

double panel_sum(const std::function<double(double)>& g, const NodesWeights& gl, double a,
                 double b) {
  const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
  double s = 0.0;
  for (std::size_t i = 0; i < gl.nodes.size(); ++i) s += gl.weights[i] * g(mid + half * gl.nodes[i]);
  return half * s;
}

double adaptive_rec(const std::function<double(double)>& g, const NodesWeights& gl, double a,
                    double b, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double left = panel_sum(g, gl, a, m), right = panel_sum(g, gl, m, b);
  const double both = left + right;
  const double floor = 64.0 * std::numeric_limits<double>::epsilon() * (std::abs(left) + std::abs(right));
  if (std::abs(both - whole) <= std::max(tol, floor) || depth >= 24) return both;
  return adaptive_rec(g, gl, a, m, left, 0.5 * tol, depth + 1) +
         adaptive_rec(g, gl, m, b, right, 0.5 * tol, depth + 1);
}

}  // namespace

void PointSet::append(const PointSet& other) {
  x.insert(x.end(), other.x.begin(), other.x.end());
  w.insert(w.end(), other.w.begin(), other.w.end());
}

double PointSet::sum(const std::function<double(double)>& g) const {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * g(x[i]);
  return s;
}

PointSet panel_points(std::span<const double> breaks, std::size_t order) {
  const auto& gl = legendre(order);
  PointSet ps;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
    if (breaks[i + 1] > breaks[i]) add_panel(ps, gl, breaks[i], breaks[i + 1]);
  return ps;
}

PointSet graded_points(double b, double exponent, std::size_t order) {
  require(b > 0.0, "graded panel needs a positive length");
  require(exponent > -1.0, "graded panel needs an integrable weight");
  const auto& gl = legendre(order);
  PointSet ps;
  const bool smooth = exponent >= 0.0 && std::floor(exponent) == exponent;
  if (smooth) {
    add_panel(ps, gl, 0.0, b);
    return ps;
  }
  // the dropped piece [0, b 2^-levels] carries a fraction 2^{-levels (a+1)} of the mass
  const auto levels = static_cast<std::size_t>(std::ceil(60.0 / (exponent + 1.0)));
  double hi = b;
  for (std::size_t k = 0; k < levels; ++k) {
    add_panel(ps, gl, 0.5 * hi, hi);
    hi *= 0.5;
  }
  add_panel(ps, gl, 0.0, hi);
  return ps;
}

PointSet growing_points(double a, double end, double w0, std::size_t order, double ratio) {
  require(w0 > 0.0 && ratio >= 1.0, "invalid panel growth");
  const auto& gl = legendre(order);
  PointSet ps;
  double lo = a, w = w0;
  while (lo < end) {
    const double hi = std::min(lo + w, end);
    add_panel(ps, gl, lo, hi);
    lo = hi;
    w *= ratio;
  }
  return ps;
}

double integrate_adaptive(const std::function<double(double)>& g, double a, double b,
                          double rel_tol, double abs_tol, std::size_t order) {
  if (b <= a) return 0.0;
  const auto& gl = legendre(order);
  // coarse pass fixes the tolerance scale
  constexpr int kPanels = 8;
  double est = 0.0, mag = 0.0;
  std::vector<double> parts(kPanels);
  const double h = (b - a) / kPanels;
  for (int i = 0; i < kPanels; ++i) {
    parts[i] = panel_sum(g, gl, a + i * h, a + (i + 1) * h);
    est += parts[i];
    mag += std::abs(parts[i]);
  }
  const double tol = std::max(abs_tol, std::max(rel_tol, 1e-14) * mag) / kPanels;
  double total = 0.0;
  for (int i = 0; i < kPanels; ++i)
    total += adaptive_rec(g, gl, a + i * h, a + (i + 1) * h, parts[i], tol, 0);
  return total;
}

double integrate_tail(const std::function<double(double)>& g, double a, double w0,
                      double rel_tol, std::size_t order) {
  require(w0 > 0.0, "tail panel width must be positive");
  double total = 0.0, lo = a, w = w0;
  int quiet = 0;
  for (int panel = 0; panel < 4000 && lo < 1e300; ++panel) {
    const double hi = lo + w;
    const double part = integrate_adaptive(g, lo, hi, 1e-13, 0.0, order);
    total += part;
    if (std::abs(part) <= rel_tol * 1e-4 * std::abs(total) || (part == 0.0 && total == 0.0 && panel > 60))
      ++quiet;
    else
      quiet = 0;
    if (quiet >= 3) break;
    lo = hi;
    w *= 1.5;
  }
  return total;
}

}  // namespace hermlag
