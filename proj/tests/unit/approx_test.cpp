#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hermlag/approx.hpp"
#include "hermlag/errors.hpp"
#include "hermlag/fit.hpp"
#include "oracles.hpp"

using namespace hermlag;
using doctest::Approx;

namespace {

BasisSpec hermite(double mu, double beta, std::size_t N) { return {Family::hermite, mu, beta, N}; }
BasisSpec laguerre(double alpha, double beta, std::size_t N) { return {Family::laguerre, alpha, beta, N}; }

TargetFunction line(std::function<double(double)> f) { return {std::move(f), Domain::real_line, "t"}; }
TargetFunction half(std::function<double(double)> f) { return {std::move(f), Domain::half_line, "t"}; }

double basis_value(const BasisSpec& s, std::size_t n, double x) {
  return s.family == Family::hermite ? ghf_eval(s.param, s.scale, n, x)[n]
                                     : glf_eval(s.param, s.scale, n, x)[n];
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

TEST_SUITE("approx") {

TEST_CASE("projection examples") {
  for (double mu : {0.0, 0.5, 1.5}) {
    const auto s = hermite(mu, 1.7, 6);
    const auto e = project(line([&](double x) { return basis_value(s, 3, x); }), s);
    for (std::size_t n = 0; n <= 6; ++n) CHECK(e.coeffs[n] == Approx(n == 3 ? 1.0 : 0.0).epsilon(1e-10).scale(1.0));
  }
  const auto g = project(line([](double x) { return std::exp(-0.5 * x * x) * (1.0 + x); }), hermite(0.0, 1.0, 1));
  CHECK(g.coeffs[0] == Approx(std::pow(std::numbers::pi, 0.25)).epsilon(1e-10));
  CHECK(g.coeffs[1] == Approx(std::pow(std::numbers::pi, 0.25) / std::sqrt(2.0)).epsilon(1e-10));
  const auto l = laguerre(0.0, 2.5, 5);
  const auto le = project(half([&](double x) { return basis_value(l, 2, x); }), l);
  for (std::size_t n = 0; n <= 5; ++n) CHECK(std::abs(le.coeffs[n] - (n == 2 ? 1.0 : 0.0)) <= 1e-10);
}

TEST_CASE("adaptive projection reports its refinement") {
  const auto r = project_adaptive(half([](double x) { return 1.0 / (1.0 + x * x); }), laguerre(0.0, 1.0, 20));
  CHECK(r.last_delta <= 1e-10 * max_abs(r.expansion.coeffs));
  CHECK(r.doublings <= 4);
}

TEST_CASE("interpolation reproduces node values") {
  std::vector<std::pair<BasisSpec, InterpKind>> cases = {
      {laguerre(0.0, 1.0, 12), InterpKind::gauss},
      {laguerre(0.5, 2.0, 12), InterpKind::radau},
      {hermite(0.0, 1.0, 15), InterpKind::hermite},
      {hermite(0.75, 1.5, 14), InterpKind::hermite}};
  for (const auto& [spec, kind] : cases) {
    const std::function<double(double)> f = [](double x) { return std::exp(-0.3 * x * x) * std::cos(x); };
    const TargetFunction u{f, spec.family == Family::hermite ? Domain::real_line : Domain::half_line, "t"};
    const auto e = interpolate(u, spec, kind);
    const auto rule = interpolation_rule(spec, kind);
    REQUIRE(rule.size() == spec.count());
    const auto vals = evaluate(e, rule.nodes);
    for (std::size_t j = 0; j < rule.size(); ++j) {
      const double ref = f(rule.nodes[j]);
      CHECK(std::abs(vals[j] - ref) <= 1e-9 * std::max(1.0, std::abs(ref)));
    }
  }
}

TEST_CASE("interpolation examples") {
  const auto s = laguerre(0.0, 1.0, 7);
  std::vector<double> a = {0.3, -1.0, 0.5, 0.0, 2.0, -0.25, 0.125, 1.0};
  const Expansion member{s, a};
  const auto back = interpolate(half([&](double x) { return evaluate(member, x); }), s, InterpKind::gauss);
  for (std::size_t n = 0; n < a.size(); ++n) CHECK(back.coeffs[n] == Approx(a[n]).epsilon(1e-10).scale(1.0));

  const auto rad = interpolation_rule(laguerre(0.0, 1.0, 6), InterpKind::radau);
  CHECK(rad.nodes[0] == 0.0);
  const auto f0 = [](double x) { return 1.0 / (2.0 + x); };
  const auto eR = interpolate(half(f0), laguerre(0.0, 1.0, 6), InterpKind::radau);
  CHECK(evaluate(eR, 0.0) == Approx(0.5).epsilon(1e-12));

  const auto ex = [](double x) { return std::exp(-x); };
  const auto s8 = laguerre(0.0, 1.0, 8);
  const auto eE = interpolate(half(ex), s8, InterpKind::gauss);
  const auto rule = interpolation_rule(s8, InterpKind::gauss);
  const auto vals = evaluate(eE, rule.nodes);
  for (std::size_t j = 0; j < rule.size(); ++j) CHECK(std::abs(vals[j] - ex(rule.nodes[j])) <= 1e-12);
  const double err = weighted_error(half(ex), eE).value;
  const double ref = std::sqrt(oracle::half_line([&](double x) {
    const double d = ex(x) - evaluate(eE, x);
    return d * d;
  }));
  CHECK(err == Approx(ref).epsilon(0.05));
}

TEST_CASE("evaluation matches naive summation") {
  std::mt19937 gen(7);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (auto spec : {laguerre(0.5, 1.3, 20), hermite(0.5, 0.8, 20)}) {
    std::vector<double> c(21);
    for (auto& v : c) v = dist(gen);
    const Expansion e{spec, c};
    std::vector<double> xs;
    for (int i = 0; i < 100; ++i) xs.push_back(spec.family == Family::hermite ? -6.0 + 0.12 * i : 0.15 * i);
    const auto fast = evaluate(e, xs);
    double scale = 0.0;
    std::vector<double> naive(xs.size());
    for (std::size_t j = 0; j < xs.size(); ++j) {
      const auto b = spec.family == Family::hermite ? ghf_eval(spec.param, spec.scale, 20, xs[j])
                                                    : glf_eval(spec.param, spec.scale, 20, xs[j]);
      for (std::size_t n = 0; n <= 20; ++n) naive[j] += c[n] * b[n];
      scale = std::max(scale, std::abs(naive[j]));
    }
    for (std::size_t j = 0; j < xs.size(); ++j) CHECK(std::abs(fast[j] - naive[j]) <= 1e-12 * scale);
  }
  const Expansion one{hermite(0.5, 1.0, 0), {1.0}};
  CHECK(evaluate(one, 0.0) == Approx(1.0).epsilon(1e-15));
  const Expansion zero{laguerre(0.0, 1.0, 5), std::vector<double>(6, 0.0)};
  CHECK(evaluate(zero, 1.7) == 0.0);
}

TEST_CASE("differentiation examples") {
  const auto d = differentiate(Expansion{hermite(0.0, 1.0, 0), {1.0}});
  REQUIRE(d.coeffs.size() == 2);
  CHECK(d.coeffs[0] == Approx(0.0).scale(1.0));
  CHECK(d.coeffs[1] == Approx(-std::sqrt(0.5)).epsilon(1e-14));
  const std::vector<double> c = {0.4, -0.2, 0.7, 0.1};
  const auto d1 = differentiate(Expansion{hermite(0.5, 1.0, 3), c});
  const auto d2 = differentiate(Expansion{hermite(0.5, 2.0, 3), c});
  for (std::size_t n = 0; n < d1.coeffs.size(); ++n)
    CHECK(d2.coeffs[n] == Approx(2.0 * d1.coeffs[n]).epsilon(1e-13).scale(1.0));
}

TEST_CASE("property: derivatives match finite differences") {
  std::mt19937 gen(11);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (auto spec : {hermite(0.0, 1.0, 12), hermite(1.0, 1.4, 9), laguerre(0.0, 1.0, 10), laguerre(1.5, 0.7, 8)}) {
    std::vector<double> c(spec.count());
    for (auto& v : c) v = dist(gen);
    const Expansion e{spec, c};
    const auto de = differentiate(e);
    CHECK(de.coeffs.size() == (spec.family == Family::hermite ? c.size() + 1 : c.size()));
    for (double x : {0.3, 0.9, 1.7, 2.6, 4.1}) {
      for (double s : {1.0, -1.0}) {
        if (spec.family == Family::laguerre && s < 0) continue;
        const double xx = s * x;
        const double fd = oracle::central_diff([&](double t) { return evaluate(e, t); }, xx, 1e-4);
        const double ref = std::max(1.0, std::abs(fd));
        CHECK(std::abs(evaluate(de, xx) - fd) <= 1e-6 * ref);
      }
    }
  }
}

TEST_CASE("derivative of an oscillatory interpolant") {
  const auto s = hermite(0.0, 1.0, 40);
  const auto e = interpolate(line([](double x) { return std::sin(x) * std::exp(-0.5 * x * x); }), s,
                             InterpKind::hermite);
  const auto de = differentiate(e);
  const TargetFunction exact =
      line([](double x) { return (std::cos(x) - x * std::sin(x)) * std::exp(-0.5 * x * x); });
  CHECK(weighted_error(exact, de).value <= 1e-4);
}

TEST_CASE("weighted error examples") {
  const auto s = laguerre(0.0, 1.0, 6);
  const std::vector<double> a = {1.0, 0.5, 0.0, -0.3, 0.0, 0.0, 0.2};
  const Expansion member{s, a};
  const auto u = half([&](double x) { return evaluate(member, x); });
  CHECK(weighted_error(u, project(u, s)).value <= 1e-10);

  for (double mu : {0.0, 0.5}) {
    for (double beta : {1.0, 2.0}) {
      const std::size_t N = 10;
      const auto sN = hermite(mu, beta, N);
      const auto target = line([&](double x) { return ghf_eval(mu, beta, N + 1, x)[N + 1]; });
      const auto r = weighted_error(target, project(target, sN));
      CHECK(r.value == Approx(std::pow(beta, -mu - 0.5)).epsilon(1e-8));
      CHECK(r.refinement_ok);
    }
  }

  const auto w = half([](double x) { return std::exp(-x) - std::exp(-0.5 * x); });
  const auto rw = weighted_error(w, project(w, laguerre(0.0, 1.0, 32)));
  CHECK(rw.refinement_ok);
  CHECK(rw.refined == Approx(rw.value).epsilon(0.01));
}

TEST_CASE("equivalence transfer") {
  const double alpha = 0.0, beta = 1.3;
  const double L0 = glf_eval(alpha, beta * beta, 0, 0.0)[0];
  const auto trivial = equivalence_transfer(
      [&](double y) { return glf_eval(alpha, beta * beta, 0, y)[0] / L0; }, 0.5, beta, 3);
  CHECK(trivial.hermite_error <= 1e-10);
  CHECK(trivial.laguerre_error <= 1e-10);
  const auto v = [](double y) { return std::exp(-y) / ((1.0 + y) * (1.0 + y)); };
  const auto r = equivalence_transfer(v, 0.5, 1.0, 8);
  CHECK(r.hermite_error > 1e-6);
  CHECK(r.relative_gap <= 1e-8);
  CHECK(r.hermite_error == Approx(r.laguerre_error).epsilon(1e-8));
  for (double mu : {0.25, 1.5}) {
    const auto q = equivalence_transfer(v, mu, 2.0, 12);
    CHECK(q.relative_gap <= 1e-8);
  }
}

TEST_CASE("property: projection never loses to interpolation") {
  const std::vector<std::pair<BasisSpec, std::function<double(double)>>> cases = {
      {hermite(0.0, 1.0, 16), [](double x) { return std::pow(1.0 + x * x, -3.0); }},
      {hermite(0.5, 1.5, 21), [](double x) { return std::exp(-x * x) * std::cos(x * x * x); }},
      {laguerre(0.0, 1.0, 16), [](double x) { return 1.0 / std::pow(1.0 + x, 4.0); }},
      {laguerre(1.0, 2.0, 24), [](double x) { return std::sin(x) * std::exp(-x); }}};
  for (const auto& [spec, f] : cases) {
    const TargetFunction u{f, spec.family == Family::hermite ? Domain::real_line : Domain::half_line, "t"};
    const double ep = weighted_error(u, project(u, spec)).value;
    const auto kind = spec.family == Family::hermite ? InterpKind::hermite : InterpKind::gauss;
    const double ei = weighted_error(u, interpolate(u, spec, kind)).value;
    CHECK(ep <= ei * (1.0 + 1e-9));
    if (spec.family == Family::laguerre)
      CHECK(ep <= weighted_error(u, interpolate(u, spec, InterpKind::radau)).value * (1.0 + 1e-9));
  }
}

TEST_CASE("property: nesting of projections") {
  for (auto [small, big, f] :
       {std::tuple{hermite(0.5, 1.0, 10), hermite(0.5, 1.0, 18),
                   std::function<double(double)>([](double x) { return 1.0 / (1.0 + x * x); })},
        std::tuple{laguerre(0.0, 1.5, 12), laguerre(0.0, 1.5, 20),
                   std::function<double(double)>([](double x) { return std::exp(-x) / (1.0 + x); })}}) {
    const TargetFunction u{f, small.family == Family::hermite ? Domain::real_line : Domain::half_line, "t"};
    const auto a = project(u, small), b = project(u, big);
    const double scale = max_abs(b.coeffs);
    for (std::size_t n = 0; n < a.coeffs.size(); ++n) CHECK(std::abs(a.coeffs[n] - b.coeffs[n]) <= 1e-9 * scale);
  }
}

TEST_CASE("property: projection and interpolation decay at matching rates") {
  const auto u = line([](double x) { return std::pow(1.0 + x * x, -3.0); });
  std::vector<double> Ns, ep, ei;
  for (std::size_t N = 8; N <= 128; N *= 2) {
    const auto s = hermite(0.0, 1.0, N);
    Ns.push_back(static_cast<double>(N));
    ep.push_back(weighted_error(u, project(u, s)).value);
    ei.push_back(weighted_error(u, interpolate(u, s, InterpKind::hermite)).value);
  }
  const auto fp = fit_rate(Ns, ep, FitModel::algebraic);
  const auto fi = fit_rate(Ns, ei, FitModel::algebraic);
  CHECK(fp.rate > 0.5);
  CHECK(std::abs(fp.rate - fi.rate) <= 0.6);
}

TEST_CASE("property: parseval") {
  for (double mu : {0.0, 0.5, 1.25}) {
    for (double beta : {0.7, 1.0, 2.0}) {
      const auto s = hermite(mu, beta, 14);
      const auto e = project(line([](double x) { return std::exp(-x * x) * (1.0 + std::sin(x)); }), s);
      double sum = 0.0;
      for (double c : e.coeffs) sum += c * c;
      const double norm = weighted_norm(line([&](double x) { return evaluate(e, x); }), s);
      CHECK(norm * norm == Approx(std::pow(beta, -2.0 * mu - 1.0) * sum).epsilon(1e-12));
    }
  }
}

TEST_CASE("hermite view of a laguerre expansion") {
  const Expansion v{laguerre(0.5, 1.5, 6), {0.2, -0.4, 1.0, 0.3, 0.0, -0.1, 0.05}};
  const auto u = to_hermite(v);
  CHECK(u.spec.family == Family::hermite);
  CHECK(u.spec.param == Approx(1.0));
  CHECK(u.spec.scale == Approx(std::sqrt(1.5)));
  for (double x : {-2.0, -0.4, 0.0, 0.8, 1.9}) CHECK(evaluate(u, x) == Approx(evaluate(v, x * x)).epsilon(1e-12));
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(project(line([](double) { return 0.0; }), hermite(-0.6, 1.0, 3)), DomainError);
  CHECK_THROWS_AS(project(half([](double) { return 0.0; }), laguerre(0.0, 0.0, 3)), DomainError);
}

}
