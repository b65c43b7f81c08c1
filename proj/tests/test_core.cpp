#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include <Eigen/LU>

#include "hyperdyn/core.hpp"

using namespace hyperdyn;
using H = HyperbolicNumber;

namespace {

double scale(const H& z) { return std::abs(z.x()) + std::abs(z.y()); }

bool close(const H& u, const H& v, double tol) {
  return std::abs(u.x() - v.x()) <= tol && std::abs(u.y() - v.y()) <= tol;
}

H random_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(-10.0, 10.0);
  const double x = d(rng);
  return {x, d(rng)};
}

}  // namespace

TEST_CASE("construction rejects non-finite components") {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(H(nan, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(H(0.0, inf), std::invalid_argument);
  CHECK_THROWS_AS(H(-inf, 1.0), std::invalid_argument);
  CHECK_NOTHROW(H(1e308, -1e308));
}

TEST_CASE("overflowing arithmetic is rejected rather than propagated") {
  const H big(1e200, 0.0);
  CHECK_THROWS_AS(mul(big, big), std::invalid_argument);
}

TEST_CASE("mul") {
  CHECK(mul(H(0, 1), H(0, 1)) == H(1, 0));
  CHECK(mul(H(1, 1), H(1, -1)) == H(0, 0));
  // (3 + j)^2 = 9 + 1 + j*2*3
  CHECK(mul(H(3, 1), H(3, 1)) == H(10, 6));
}

TEST_CASE("conjugate") {
  CHECK(conjugate(H(3, 2)) == H(3, -2));
  CHECK(conjugate(H(0, 0)) == H(0, 0));
  // (1 + 2j)(3 - j) = (3 - 2) + j(-1 + 6) = 1 + 5j, conjugate 1 - 5j;
  // (1 - 2j)(3 + j) = (3 - 2) + j(1 - 6) = 1 - 5j.
  const H z(1, 2), w(3, -1);
  CHECK(conjugate(mul(z, w)) == H(1, -5));
  CHECK(mul(conjugate(z), conjugate(w)) == H(1, -5));
}

TEST_CASE("quadratic form and modulus") {
  CHECK(quadratic_form(H(3, 1)) == 8.0);
  CHECK(quadratic_form(H(2, 2)) == 0.0);
  const auto t = to_characteristic(H(3, 1));
  CHECK(t.X * t.Y == 8.0);

  CHECK(modulus(H(3, 2)) == doctest::Approx(std::sqrt(5.0)));
  CHECK(modulus(H(1, 1)) == 0.0);
  CHECK(modulus(H(2, 3)) == doctest::Approx(std::sqrt(5.0)));  // |4 - 9|
  // (3 + j)(1 - 2j) = (3 - 2) + j(-6 + 1) = 1 - 5j, |1 - 25| = 24
  const H prod = mul(H(3, 1), H(1, -2));
  CHECK(prod == H(1, -5));
  CHECK(modulus(prod) == doctest::Approx(std::sqrt(24.0)).epsilon(1e-12));
  CHECK(modulus(H(3, 1)) * modulus(H(1, -2)) == doctest::Approx(std::sqrt(24.0)).epsilon(1e-12));
}

TEST_CASE("zero divisors") {
  CHECK(is_zero_divisor(H(2, 2)));
  CHECK(is_zero_divisor(H(-1.5, 1.5)));
  CHECK_FALSE(is_zero_divisor(H(0, 0)));
  CHECK_FALSE(is_zero_divisor(H(3, 1)));
  // Exact comparison: one ulp off the diagonal is not a zero divisor.
  CHECK_FALSE(is_zero_divisor(H(1.0, std::nextafter(1.0, 2.0))));
}

TEST_CASE("characteristic coordinates") {
  CHECK(to_characteristic(H(3, 1)) == CharCoords<double>{2, 4});
  CHECK(to_characteristic(alpha<double>()) == CharCoords<double>{1, 0});
  CHECK(to_characteristic(alpha_star<double>()) == CharCoords<double>{0, 1});
  CHECK(to_characteristic(H(0, 0)) == CharCoords<double>{0, 0});

  CHECK(from_characteristic(CharCoords<double>{2, 4}) == H(3, 1));
  CHECK(from_characteristic(CharCoords<double>{1, 1}) == H(1, 0));
  CHECK(from_characteristic(CharCoords<double>{0, 2}) == H(1, 1));
}

TEST_CASE("idempotent basis") {
  const H a = alpha<double>(), as = alpha_star<double>();
  CHECK(mul(a, a) == a);
  CHECK(mul(as, as) == as);
  CHECK(mul(a, as) == H(0, 0));
  CHECK(a + as == H(1, 0));
  CHECK(is_zero_divisor(a));
  CHECK(is_zero_divisor(as));
}

TEST_CASE("transform matrix agrees with the closed-form maps") {
  const Eigen::Matrix2d t = characteristic_matrix<double>();
  CHECK((t * inverse_characteristic_matrix<double>()).isIdentity(0.0));
  CHECK(t.determinant() == doctest::Approx(2.0));
  std::mt19937_64 rng(7);
  for (int k = 0; k < 1000; ++k) {
    const H z = random_point(rng);
    const Eigen::Vector2d v = t * z.vector();
    const auto c = to_characteristic(z);
    CHECK(v(0) == c.X);
    CHECK(v(1) == c.Y);
    const H back(inverse_characteristic_matrix<double>() * v);
    CHECK(close(back, from_characteristic(c), 1e-15 * (1 + scale(z))));
  }
}

TEST_CASE("long double instantiation") {
  using HL = Hyperbolic<long double>;
  CHECK(mul(HL(0, 1), HL(0, 1)) == HL(1, 0));
  CHECK(quadratic_form(HL(3, 1)) == 8.0L);
}

TEST_CASE("property: round trip and product in characteristic coordinates") {
  std::mt19937_64 rng(20240611);
  for (int k = 0; k < 20000; ++k) {
    const H z = random_point(rng), w = random_point(rng);
    // Halving and the +- maps are exact away from under/overflow on this range
    // up to a single rounding of x +- y.
    const H back = from_characteristic(to_characteristic(z));
    CHECK(close(back, z, 4 * std::numeric_limits<double>::epsilon() * scale(z)));

    const auto zc = to_characteristic(z), wc = to_characteristic(w);
    const auto pc = to_characteristic(mul(z, w));
    const double tol = 1e-12 * scale(z) * scale(w);
    CHECK(std::abs(pc.X - zc.X * wc.X) <= tol);
    CHECK(std::abs(pc.Y - zc.Y * wc.Y) <= tol);

    if (is_zero_divisor(z)) CHECK(((zc.X == 0) != (zc.Y == 0)));
  }
}
