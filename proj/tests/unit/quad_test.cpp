#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hermlag/errors.hpp"
#include "hermlag/quad.hpp"
#include "oracles.hpp"

using namespace hermlag;
using doctest::Approx;

namespace {

double max_moment_error(const QuadratureRule& r, double alpha, double beta, int degree) {
  double worst = 0.0;
  for (int k = 0; k <= degree; ++k) {
    double s = 0.0;
    for (std::size_t j = 0; j < r.size(); ++j) s += r.weights_poly[j] * std::pow(r.nodes[j], k);
    worst = std::max(worst, std::abs(s / oracle::laguerre_moment(k, alpha, beta) - 1.0));
  }
  return worst;
}

void check_ordered_positive(const QuadratureRule& r) {
  for (std::size_t j = 0; j < r.size(); ++j) {
    CHECK(r.weights_poly[j] > 0.0);
    CHECK(r.weights_func[j] > 0.0);
    if (j > 0) CHECK(r.nodes[j] > r.nodes[j - 1]);
  }
}

}  // namespace

TEST_SUITE("quad") {

TEST_CASE("laguerre jacobi matrix") {
  const auto j = laguerre_jacobi(0.0, 2);
  CHECK(j.diag == std::vector<double>{1.0, 3.0});
  REQUIRE(j.off.size() == 1);
  CHECK(j.off[0] == Approx(1.0));
  CHECK(j.zeroth_moment == Approx(1.0));
  const auto j1 = laguerre_jacobi(1.0, 1);
  CHECK(j1.diag == std::vector<double>{2.0});
  CHECK(j1.zeroth_moment == Approx(1.0));
  const auto es = tridiagonal_eigen(j);
  CHECK(es.values[0] == Approx(2.0 - std::sqrt(2.0)).epsilon(1e-15));
  CHECK(es.values[1] == Approx(2.0 + std::sqrt(2.0)).epsilon(1e-15));
  CHECK_THROWS_AS(laguerre_jacobi(0.0, 0), DomainError);
  CHECK_THROWS_AS(laguerre_jacobi(-1.0, 3), DomainError);
  for (double o : laguerre_jacobi(0.7, 30).off) CHECK(o > 0.0);
}

TEST_CASE("golub welsch on small matrices") {
  const auto nw = golub_welsch(laguerre_jacobi(0.0, 2));
  CHECK(nw.nodes[0] == Approx(0.5857864376269050).epsilon(1e-14));
  CHECK(nw.nodes[1] == Approx(3.4142135623730950).epsilon(1e-14));
  CHECK(nw.weights[0] == Approx(0.8535533905932738).epsilon(1e-14));
  CHECK(nw.weights[1] == Approx(0.1464466094067262).epsilon(1e-14));
  JacobiMatrix one;
  one.diag = {2.5};
  one.zeroth_moment = 3.0;
  const auto r1 = golub_welsch(one);
  CHECK(r1.nodes[0] == 2.5);
  CHECK(r1.weights[0] == 3.0);
  for (std::size_t n : {1u, 5u, 30u}) {
    const auto r = golub_welsch(laguerre_jacobi(0.0, n));
    double s0 = 0.0, s1 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      s0 += r.weights[i];
      s1 += r.weights[i] * r.nodes[i];
    }
    CHECK(s0 == Approx(1.0).epsilon(1e-12));
    CHECK(s1 == Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("eigen solver reports an exhausted sweep budget") {
  CHECK_THROWS_AS(tridiagonal_eigen(laguerre_jacobi(0.0, 40), 0), ConvergenceError);
}

TEST_CASE("gauss laguerre examples") {
  const auto r = gauss_laguerre(0.0, 1.0, 2);
  double m3 = 0.0;
  for (std::size_t j = 0; j < 2; ++j) m3 += r.weights_poly[j] * std::pow(r.nodes[j], 3);
  CHECK(m3 == Approx(6.0).epsilon(1e-13));
  const auto one = gauss_laguerre(0.0, 2.0, 1);
  CHECK(one.nodes[0] == Approx(0.5));
  CHECK(one.weights_poly[0] == Approx(0.5));
  const auto r8 = gauss_laguerre(0.5, 1.0, 8);
  double s = 0.0;
  for (double w : r8.weights_poly) s += w;
  CHECK(s == Approx(0.8862269254527580).epsilon(1e-13));
}

TEST_CASE("radau laguerre examples") {
  const auto r0 = gauss_radau_laguerre(0.0, 1.0, 1);
  CHECK(r0.nodes[0] == 0.0);
  CHECK(r0.weights_poly[0] == Approx(1.0));
  for (std::size_t n : {1u, 2u, 7u, 30u}) {
    const auto r = gauss_radau_laguerre(0.0, 1.0, n);
    CHECK(r.nodes[0] == 0.0);
    double s = 0.0;
    for (double w : r.weights_poly) s += w;
    CHECK(s == Approx(1.0).epsilon(1e-12));
  }
  const auto r3 = gauss_radau_laguerre(0.0, 1.0, 4);
  double m6 = 0.0;
  for (std::size_t j = 0; j < r3.size(); ++j) m6 += r3.weights_poly[j] * std::pow(r3.nodes[j], 6);
  CHECK(m6 == Approx(720.0).epsilon(1e-10));
}

TEST_CASE("property: laguerre rules are exact to their degree") {
  for (double alpha : {0.0, 0.5, 2.0}) {
    for (double beta : {0.5, 1.0, 3.0}) {
      for (std::size_t N : {0u, 1u, 4u, 13u, 25u, 40u}) {
        const auto g = gauss_laguerre(alpha, beta, N + 1);
        const auto r = gauss_radau_laguerre(alpha, beta, N + 1);
        CHECK(max_moment_error(g, alpha, beta, 2 * N + 1) <= 1e-9);
        CHECK(max_moment_error(r, alpha, beta, 2 * N) <= 1e-9);
        check_ordered_positive(g);
        check_ordered_positive(r);
      }
    }
  }
}

TEST_CASE("function weights are the exponentially scaled polynomial weights") {
  for (double alpha : {0.0, 1.5}) {
    const auto g = gauss_laguerre(alpha, 2.0, 20);
    for (std::size_t j = 0; j < g.size(); ++j)
      CHECK(g.weights_func[j] == Approx(std::exp(2.0 * g.nodes[j]) * g.weights_poly[j]).epsilon(1e-11));
    const auto h = gauss_hermite_generalized(alpha, 1.5, 21);
    for (std::size_t j = 0; j < h.size(); ++j)
      CHECK(h.weights_func[j] ==
            Approx(std::exp(2.25 * h.nodes[j] * h.nodes[j]) * h.weights_poly[j]).epsilon(1e-11));
  }
}

TEST_CASE("function weights stay finite where polynomial weights underflow") {
  const auto r = gauss_radau_laguerre(0.0, 1.0, 401);
  for (std::size_t j = 0; j < r.size(); ++j) CHECK(std::isfinite(r.weights_func[j]));
  CHECK(r.nodes.back() > 745.0);
}

TEST_CASE("scale covariance") {
  const auto a = gauss_laguerre(0.7, 1.0, 15), b = gauss_laguerre(0.7, 4.0, 15);
  for (std::size_t j = 0; j < a.size(); ++j) {
    CHECK(b.nodes[j] == Approx(a.nodes[j] / 4.0).epsilon(1e-13));
    CHECK(b.weights_poly[j] == Approx(a.weights_poly[j] * std::pow(4.0, -1.7)).epsilon(1e-12));
  }
  const auto h1 = gauss_hermite_generalized(0.5, 1.0, 15), h2 = gauss_hermite_generalized(0.5, 2.5, 15);
  for (std::size_t j = 0; j < h1.size(); ++j) {
    CHECK(h2.nodes[j] == Approx(h1.nodes[j] / 2.5).epsilon(1e-13));
    CHECK(h2.weights_poly[j] == Approx(h1.weights_poly[j] * std::pow(2.5, -2.0)).epsilon(1e-12));
  }
}

TEST_CASE("hermite rule examples") {
  const auto r = gauss_hermite_generalized(0.0, 1.0, 2);
  CHECK(r.nodes[0] == Approx(-std::sqrt(0.5)).epsilon(1e-15));
  CHECK(r.nodes[1] == Approx(std::sqrt(0.5)).epsilon(1e-15));
  CHECK(r.weights_poly[0] == Approx(std::sqrt(std::numbers::pi) / 2).epsilon(1e-14));
  CHECK(r.weights_func[1] == Approx(1.4611411826611389).epsilon(1e-14));
  // one point: the centre weight is the whole mass
  const auto one = gauss_hermite_generalized(0.5, 1.0, 1);
  CHECK(one.nodes[0] == 0.0);
  CHECK(one.weights_func[0] == Approx(1.0).epsilon(1e-15));
  // three points with mu = 1/2: nodes 0 and +-sqrt(2), centre weight 1/2
  const auto three = gauss_hermite_generalized(0.5, 1.0, 3);
  CHECK(three.nodes[1] == 0.0);
  CHECK(three.nodes[2] == Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(three.weights_poly[1] == Approx(0.5).epsilon(1e-14));
  for (double mu : {0.0, 0.5, 1.25}) {
    for (double beta : {0.5, 1.0, 3.0}) {
      for (std::size_t n : {1u, 2u, 9u, 40u, 81u}) {
        const auto h = gauss_hermite_generalized(mu, beta, n);
        double s = 0.0;
        for (double w : h.weights_poly) s += w;
        CHECK(s == Approx(std::tgamma(mu + 0.5) / std::pow(beta, 2 * mu + 1)).epsilon(1e-12));
        for (std::size_t j = 0; j < n; ++j) {
          CHECK(h.nodes[j] == Approx(-h.nodes[n - 1 - j]).epsilon(1e-15));
          CHECK(h.weights_poly[j] == Approx(h.weights_poly[n - 1 - j]).epsilon(1e-15));
        }
      }
    }
  }
}

TEST_CASE("property: hermite rules are exact to their degree") {
  for (double mu : {0.0, 0.5, 1.25}) {
    for (double beta : {0.5, 1.0, 3.0}) {
      for (std::size_t n : {1u, 2u, 7u, 20u, 41u}) {
        const auto h = gauss_hermite_generalized(mu, beta, n);
        double worst = 0.0;
        for (std::size_t k = 0; k <= 2 * n - 1; k += 2) {
          double s = 0.0;
          for (std::size_t j = 0; j < n; ++j) s += h.weights_poly[j] * std::pow(h.nodes[j], k);
          worst = std::max(worst, std::abs(s / oracle::hermite_moment(k, mu, beta) - 1.0));
        }
        CHECK(worst <= 1e-9);
      }
    }
  }
}

TEST_CASE("hermite rules agree with a direct construction") {
  for (double mu : {0.0, 0.5, 1.25}) {
    for (int n : {1, 2, 5, 16, 33, 64, 81}) {
      const auto ours = gauss_hermite_generalized(mu, 1.3, n);
      const auto ref = oracle::hermite_direct(mu, 1.3, n);
      for (int j = 0; j < n; ++j) {
        if (ref.nodes[j] == 0.0)
          CHECK(std::abs(ours.nodes[j]) <= 1e-15);
        else
          CHECK(ours.nodes[j] == Approx(ref.nodes[j]).epsilon(1e-10));
        CHECK(ours.weights_poly[j] == Approx(ref.weights_poly[j]).epsilon(1e-10));
        CHECK(ours.weights_func[j] == Approx(ref.weights_func[j]).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("centre weight of odd hermite rules has a closed form") {
  for (double mu : {0.0, 0.5, 1.25}) {
    for (std::size_t N : {0u, 1u, 6u, 40u}) {
      const auto h = gauss_hermite_generalized(mu, 1.0, 2 * N + 1);
      const double a = mu - 0.5, dn = static_cast<double>(N);
      const double w0 = (a + 1.0) * std::exp(2.0 * std::lgamma(a + 1.0) + std::lgamma(dn + 1.0) -
                                             std::lgamma(dn + a + 2.0));
      CHECK(h.weights_poly[N] == Approx(w0).epsilon(1e-12));
    }
  }
}

TEST_CASE("gauss legendre") {
  const auto g = gauss_legendre(5);
  double s = 0.0, m4 = 0.0;
  for (std::size_t i = 0; i < 5; ++i) {
    s += g.weights[i];
    m4 += g.weights[i] * std::pow(g.nodes[i], 8);
  }
  CHECK(s == Approx(2.0).epsilon(1e-14));
  CHECK(m4 == Approx(2.0 / 9.0).epsilon(1e-13));
}

TEST_CASE("node bound") {
  const auto r = gauss_laguerre(0.0, 1.0, 11);
  const auto rep = node_bound_check(r);
  CHECK(rep.ok);
  CHECK(rep.checked == 11);
  const auto r4 = gauss_laguerre(0.0, 4.0, 11);
  const auto rep4 = node_bound_check(r4);
  CHECK(rep4.ok);
  CHECK(rep4.ratio == Approx(rep.ratio).epsilon(1e-12));
  const auto big = node_bound_check(gauss_laguerre(0.0, 1.0, 101));
  CHECK(big.ok);
  CHECK(big.ratio > 0.9);
  CHECK(big.ratio < 1.0);
  QuadratureRule bad = r;
  bad.nodes.back() *= 2.0;
  const auto broken = node_bound_check(bad);
  CHECK_FALSE(broken.ok);
  REQUIRE(broken.violating_index.has_value());
  CHECK(*broken.violating_index == r.size() - 1);
}

TEST_CASE("property: node bound holds across rules") {
  for (double a : {0.0, 0.5, 2.0})
    for (double b : {0.5, 1.0, 3.0})
      for (std::size_t n : {1u, 5u, 40u, 150u}) {
        CHECK(node_bound_check(gauss_laguerre(a, b, n)).ok);
        CHECK(node_bound_check(gauss_radau_laguerre(a, b, n)).ok);
        CHECK(node_bound_check(gauss_hermite_generalized(a, b, n)).ok);
      }
}

}
