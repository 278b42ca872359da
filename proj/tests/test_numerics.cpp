#include <doctest.h>

#include <cmath>
#include <random>

#include "rotlandau/numerics.hpp"

using namespace rotlandau;

TEST_SUITE("numerics") {

TEST_CASE("laguerre closed-form anchors") {
  // L_0^a = 1, L_1^a = 1 + a - x, L_2^0(x) = 1 - 2x + x^2/2.
  for (int a : {0, 1, 3, 7}) CHECK(laguerre(0, a, 0.37) == doctest::Approx(1.0));
  CHECK(laguerre(1, 1, 1.0) == doctest::Approx(1.0));
  // direct evaluation of 1 - 2x + x^2/2 at x = 1/2
  CHECK(laguerre(2, 0, 0.5) == doctest::Approx(0.125).epsilon(1e-14));
  CHECK(laguerre(2, 1, 0.5) == doctest::Approx(1.625).epsilon(1e-14));
}

TEST_CASE("laguerre against the standard library") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> xs(0.0, 40.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = trial % 11;
    const int a = (trial * 3) % 9;
    const double x = xs(rng);
    const double ours = laguerre(n, a, x);
    const double ref = std::assoc_laguerre(n, a, x);
    CHECK(ours == doctest::Approx(ref).epsilon(1e-11));
  }
}

TEST_CASE("laguerre coefficients evaluate to the recurrence values") {
  for (int n : {0, 1, 2, 5, 9})
    for (int a : {0, 1, 4}) {
      const auto c = laguerre_coeffs(n, a);
      for (double x : {0.0, 0.3, 2.7, 11.0})
        CHECK(poly_eval(c, x) == doctest::Approx(laguerre(n, a, x)).epsilon(1e-11));
    }
}

TEST_CASE("gauss-laguerre integrates polynomials exactly") {
  // int_0^inf e^{-x} x^k dx = k!
  const auto rule = gauss_laguerre(12);
  double factorial = 1.0;
  for (int k = 0; k <= 20; ++k) {
    if (k > 0) factorial *= k;
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.node.size(); ++i) {
      double xp = 1.0;
      for (int p = 0; p < k; ++p) xp *= rule.node[i];
      sum += rule.weight[i] * xp;
    }
    CHECK(sum == doctest::Approx(factorial).epsilon(1e-12));
  }
}

TEST_CASE("phase reduction lands on the declared branch (-pi, pi]") {
  CHECK(reduce_phase(0.0) == doctest::Approx(0.0));
  CHECK(reduce_phase(3.0 * pi) == doctest::Approx(pi));
  CHECK(reduce_phase(-pi) == doctest::Approx(pi));  // -pi is excluded
  CHECK(reduce_phase(pi) == doctest::Approx(pi));
  CHECK(reduce_phase(-0.5 - 8.0 * pi) == doctest::Approx(-0.5));
  for (double x : {-123.4, -1.0, 0.2, 55.7}) {
    const double r = reduce_phase(x);
    CHECK(r > -pi);
    CHECK(r <= pi);
    CHECK(std::remainder(x - r, 2.0 * pi) == doctest::Approx(0.0).epsilon(1e-12));
  }
}

}  // TEST_SUITE
