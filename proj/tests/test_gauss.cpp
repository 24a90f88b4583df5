#include "stlw/gauss.hpp"

#include <doctest.h>

#include <cmath>

using namespace stlw;

TEST_CASE("gauss rules integrate polynomials exactly up to degree 2n-1") {
  for (int n : {2, 5, 10, 16}) {
    for (int deg = 0; deg <= 2 * n - 1; ++deg) {
      const double got = integrate_segments([&](double x) { return std::pow(x, deg); }, 0.0, 1.0, n, 1);
      const double want = 1.0 / (deg + 1);
      CHECK(got == doctest::Approx(want).epsilon(1e-14));
    }
  }
}

TEST_CASE("gauss weights sum to interval length") {
  for (int n : {1, 3, 5, 16, 32}) {
    const GaussRule& r = gauss_legendre(n);
    double sum = 0.0;
    for (double w : r.weights) sum += w;
    CHECK(sum == doctest::Approx(2.0).epsilon(1e-15));
  }
}

TEST_CASE("composite quadrature converges on a smooth integrand") {
  auto f = [](double x) { return std::exp(-x * x); };
  const double ref = integrate_segments(f, 0.0, 2.0, 16, 64);
  const double got = integrate_segments(f, 0.0, 2.0, 5, 4);
  CHECK(std::abs(got - ref) < 1e-10);
}
