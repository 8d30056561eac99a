#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hermlag/basis.hpp"
#include "hermlag/errors.hpp"
#include "hermlag/quad.hpp"
#include "oracles.hpp"

using namespace hermlag;
using doctest::Approx;

TEST_SUITE("basis") {

TEST_CASE("laguerre function values for small degrees") {
  CHECK(glf_eval(0.0, 1.0, 0, 2.0)[0] == Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(glf_eval(0.0, 1.0, 1, 2.0)[1] == Approx(-std::exp(-1.0)).epsilon(1e-15));
  CHECK(glf_eval(0.0, 2.0, 0, 1.0)[0] == Approx(std::exp(-1.0)).epsilon(1e-15));
}

TEST_CASE("laguerre evaluation rejects bad arguments") {
  CHECK_THROWS_AS(glf_eval(-1.0, 1.0, 3, 1.0), DomainError);
  CHECK_THROWS_AS(glf_eval(0.0, 0.0, 3, 1.0), DomainError);
  CHECK_THROWS_AS(glf_eval(0.0, 1.0, 3, -0.5), DomainError);
  CHECK_THROWS_AS(ghf_eval(-0.5, 1.0, 3, 0.0), DomainError);
  CHECK_THROWS_AS(ghf_eval(0.0, -1.0, 3, 0.0), DomainError);
}

TEST_CASE("hermite function values for small degrees") {
  CHECK(ghf_eval(0.5, 1.0, 0, 0.0)[0] == Approx(1.0).epsilon(1e-15));
  CHECK(ghf_eval(0.0, 1.0, 0, 1.0)[0] == Approx(std::pow(std::numbers::pi, -0.25) * std::exp(-0.5)).epsilon(1e-14));
  CHECK(ghf_eval(0.0, 1.0, 1, 0.0)[1] == 0.0);
}

TEST_CASE("hermite functions match an independently normalized polynomial") {
  for (double mu : {0.0, 0.5, 1.3}) {
    for (double x : {-2.5, -0.3, 0.0, 0.8, 3.1}) {
      const auto v = ghf_eval(mu, 1.0, 30, x);
      for (int n = 0; n <= 30; ++n) {
        const double ref = oracle::hermite_function_naive(mu, n, x);
        CHECK(std::abs(v[n] - ref) <= 1e-12 * std::max(1.0, std::abs(ref)));
      }
    }
  }
}

TEST_CASE("even hermite functions at the origin") {
  CHECK(ghf_at_zero_even(0.5, 0) == Approx(1.0).epsilon(1e-15));
  const double expect = -std::sqrt(std::tgamma(1.5)) / std::tgamma(0.5);
  CHECK(ghf_at_zero_even(0.0, 1) == Approx(expect).epsilon(1e-14));
  for (double mu : {0.0, 0.5, 1.3}) {
    const auto v = ghf_eval(mu, 1.0, 40, 0.0);
    for (std::size_t n = 0; n <= 20; ++n) CHECK(ghf_at_zero_even(mu, n) == Approx(v[2 * n]).epsilon(1e-12));
  }
}

TEST_CASE("laguerre norms") {
  CHECK(glf_norm(0.0, 0) == Approx(1.0));
  CHECK(glf_norm(0.0, 5) == Approx(1.0));
  CHECK(glf_norm(1.0, 3) == Approx(4.0));
  const double big = glf_norm(0.5, 10000);
  CHECK(std::isfinite(big));
  CHECK(big == Approx(std::exp(std::lgamma(10001.5) - std::lgamma(10001.0))).epsilon(1e-12));
}

TEST_CASE("hermite polynomial through the laguerre representation") {
  CHECK(ghp_via_glp(0.0, 2, 1.0) == Approx(2.0));
  CHECK(ghp_via_glp(0.0, 1, 0.0) == 0.0);
  CHECK(ghp_via_glp(0.5, 0, 3.7) == Approx(1.0));
  for (double mu : {0.0, 0.5, 1.25}) {
    for (std::size_t n = 0; n <= 50; ++n) {
      for (double x : {-10.0, -3.3, -0.7, 0.4, 2.0, 6.5, 10.0}) {
        const double direct = ghp_direct(mu, n, x);
        const double via = ghp_via_glp(mu, n, x);
        CHECK(std::abs(direct - via) <= 1e-10 * std::max(std::abs(direct), 1e-300) + 1e-300);
      }
    }
  }
}

TEST_CASE("recurrence coefficients are positive") {
  for (double mu : {-0.4, 0.0, 0.5, 2.0}) {
    const auto r = ghf_recurrence(mu, 50);
    for (std::size_t n = 1; n < 50; ++n) {
      CHECK(r.a[n] > 0.0);
      CHECK(r.c[n] > 0.0);
      CHECK(r.theta[n] == (n % 2 == 0 ? 0.0 : 2.0 * mu));
    }
  }
}

TEST_CASE("derivative coefficients of the first hermite function") {
  const std::vector<double> e0{1.0};
  auto d = diff_coeffs(0.0, 1.0, e0);
  REQUIRE(d.size() == 2);
  CHECK(d[0] == 0.0);
  CHECK(d[1] == Approx(-std::sqrt(0.5)).epsilon(1e-15));
  auto d2 = diff_coeffs(0.0, 2.0, e0);
  CHECK(d2[1] == Approx(2.0 * d[1]).epsilon(1e-15));

  const std::vector<double> e1{0.0, 1.0};
  const auto d1 = diff_coeffs(0.5, 1.0, e1);
  for (int j = 0; j < 64; ++j) {
    const double x = -4.0 + 8.0 * j / 63.0;
    const double fd = oracle::central_diff([](double t) { return ghf_eval(0.5, 1.0, 1, t)[1]; }, x);
    const auto v = ghf_eval(0.5, 1.0, 2, x);
    double s = 0.0;
    for (std::size_t n = 0; n < d1.size(); ++n) s += d1[n] * v[n];
    CHECK(std::abs(s - fd) <= 1e-6 * std::max(1.0, std::abs(fd)));
  }
}

TEST_CASE("property: derivative coefficients match finite differences") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  for (double mu : {0.0, 0.5, 1.25}) {
    for (double beta : {0.7, 1.0, 2.0}) {
      for (std::size_t len : {1u, 5u, 17u, 30u}) {
        std::vector<double> c(len);
        for (double& x : c) x = U(rng);
        const auto d = diff_coeffs(mu, beta, c);
        REQUIRE(d.size() == len + 1);
        auto f = [&](double x) {
          const auto v = ghf_eval(mu, beta, len - 1, x);
          double s = 0.0;
          for (std::size_t n = 0; n < len; ++n) s += c[n] * v[n];
          return s;
        };
        double scale = 0.0;
        std::vector<double> xs, fd, an;
        for (int j = 0; j < 40; ++j) {
          const double x = (-5.0 + 10.0 * j / 39.0) / beta + 1e-3;
          const auto v = ghf_eval(mu, beta, len, x);
          double s = 0.0;
          for (std::size_t n = 0; n <= len; ++n) s += d[n] * v[n];
          an.push_back(s);
          fd.push_back(oracle::central_diff(f, x, 1e-5 / beta));
          scale = std::max(scale, std::abs(fd.back()));
        }
        for (std::size_t j = 0; j < an.size(); ++j) CHECK(std::abs(an[j] - fd[j]) <= 1e-6 * scale);
      }
    }
  }
}

TEST_CASE("property: discrete orthonormality of hermite functions") {
  for (double mu : {0.0, 0.5, 1.25}) {
    for (double beta : {0.5, 1.0, 3.0}) {
      const auto r = gauss_hermite_generalized(mu, beta, 42);
      const auto v = ghf_eval(mu, beta, 40, r.nodes);
      const double target = std::pow(beta, -2.0 * mu - 1.0);
      double worst = 0.0;
      for (std::size_t m = 0; m <= 40; ++m)
        for (std::size_t n = m; n <= 40; ++n) {
          double s = 0.0;
          for (std::size_t j = 0; j < r.size(); ++j) s += r.weights_func[j] * v(m, j) * v(n, j);
          worst = std::max(worst, std::abs(s - (m == n ? target : 0.0)));
        }
      CHECK(worst <= 1e-9 * target);
    }
  }
}

TEST_CASE("property: discrete orthogonality of laguerre functions") {
  for (double alpha : {0.0, 0.5, 2.0}) {
    for (double beta : {0.5, 1.0, 3.0}) {
      const auto r = gauss_laguerre(alpha, beta, 41);
      const auto v = glf_eval(alpha, beta, 40, r.nodes);
      double worst = 0.0;
      for (std::size_t m = 0; m <= 40; ++m)
        for (std::size_t n = m; n <= 40; ++n) {
          double s = 0.0;
          for (std::size_t j = 0; j < r.size(); ++j) s += r.weights_func[j] * v(m, j) * v(n, j);
          const double nm = glf_norm(alpha, m) / std::pow(beta, alpha + 1.0);
          const double nn = glf_norm(alpha, n) / std::pow(beta, alpha + 1.0);
          worst = std::max(worst, std::abs(s - (m == n ? nm : 0.0)) / std::sqrt(nm * nn));
        }
      CHECK(worst <= 1e-9);
    }
  }
}

TEST_CASE("property: envelope keeps high-degree values bounded") {
  for (double mu : {0.0, 0.5}) {
    std::vector<double> xs;
    for (int j = 0; j <= 400; ++j) xs.push_back(-65.0 + 130.0 * j / 400.0);
    const auto v = ghf_eval(mu, 1.0, 2000, xs);
    double m = 0.0;
    bool finite = true;
    for (std::size_t n = 0; n <= 2000; ++n)
      for (std::size_t j = 0; j < xs.size(); ++j) {
        finite = finite && std::isfinite(v(n, j));
        m = std::max(m, std::abs(v(n, j)));
      }
    CHECK(finite);
    CHECK(m <= 10.0);
  }
  std::vector<double> ys;
  for (int j = 0; j <= 200; ++j) ys.push_back(40.0 * j);
  const auto L = glf_eval(0.0, 1.0, 2000, ys);
  bool finite = true;
  for (std::size_t n = 0; n <= 2000; ++n)
    for (std::size_t j = 0; j < ys.size(); ++j) finite = finite && std::isfinite(L(n, j));
  CHECK(finite);
}

TEST_CASE("coefficient maps between laguerre and hermite expansions") {
  // v(y) = sum c_k L^(a)_k(beta y) equals u(x) = v(x^2) in H^(a+1/2)(sqrt(beta) x)
  const double alpha = 0.3, beta = 1.7;
  const std::vector<double> c{0.4, -1.1, 0.25, 0.9, -0.3};
  const auto h = glf_to_ghf_coeffs(alpha, c);
  REQUIRE(h.size() == 2 * c.size() - 1);
  for (double x : {0.0, 0.3, 1.1, 2.4}) {
    const auto L = glf_eval(alpha, beta, c.size() - 1, x * x);
    const auto H = ghf_eval(alpha + 0.5, std::sqrt(beta), h.size() - 1, x);
    double v = 0.0, u = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k) v += c[k] * L[k];
    for (std::size_t n = 0; n < h.size(); ++n) u += h[n] * H[n];
    CHECK(u == Approx(v).epsilon(1e-12));
  }
  const auto back = ghf_even_to_glf_coeffs(alpha + 0.5, h);
  REQUIRE(back.size() == c.size());
  for (std::size_t k = 0; k < c.size(); ++k) CHECK(back[k] == Approx(c[k]).epsilon(1e-13));
}

TEST_CASE("basis spec validation") {
  CHECK_NOTHROW(BasisSpec{Family::laguerre, -0.9, 1.0, 0}.validate());
  CHECK_THROWS_AS((BasisSpec{Family::laguerre, -1.0, 1.0, 3}.validate()), DomainError);
  CHECK_THROWS_AS((BasisSpec{Family::hermite, -0.5, 1.0, 3}.validate()), DomainError);
  CHECK_THROWS_AS((BasisSpec{Family::hermite, 0.0, 0.0, 3}.validate()), DomainError);
  CHECK(family_from_string("ghf") == Family::hermite);
  CHECK(family_from_string("laguerre") == Family::laguerre);
  CHECK_THROWS_AS(family_from_string("chebyshev"), DomainError);
}

}
