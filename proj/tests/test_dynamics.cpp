#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "hyperdyn/dynamics.hpp"

using namespace hyperdyn;
using H = HyperbolicNumber;
constexpr auto kComponent = BoundednessVariant::ComponentBounded;
constexpr auto kModulus = BoundednessVariant::ModulusBounded;

TEST_CASE("parameter caches characteristic coordinates") {
  const HyperParam c(1.5, -0.25);
  CHECK(c.c1() == 1.75);
  CHECK(c.c2() == 1.25);
  const auto back = HyperParam::from_characteristic(c.c1(), c.c2());
  CHECK(back.a() == 1.5);
  CHECK(back.b() == -0.25);
  CHECK_THROWS_AS(HyperParam(std::nan(""), 0.0), std::invalid_argument);
}

TEST_CASE("hyperbolic step") {
  const HyperParam c(0.7, -1.1);
  CHECK(step(H(0, 0), c) == H(0.7, -1.1));
  CHECK(step(H(1, 1), HyperParam(0, 0)) == H(2, 2));

  // X = 2, Y = 4, c1 = 0, c2 = 2: (X^2 + c1, Y^2 + c2) = (4, 18).
  const auto t = to_characteristic(step(H(3, 1), HyperParam(1, 1)));
  CHECK(t == CharCoords<double>{4, 18});

  CHECK_THROWS_AS(step(H(1e200, 0), HyperParam(0, 0)), std::overflow_error);
  CHECK_FALSE(try_step(H(1e200, 0), HyperParam(0, 0)));
}

TEST_CASE("orbit") {
  const auto o = orbit(H(0, 0), HyperParam(-2, 0), 3);
  REQUIRE(o.size() == 4);
  CHECK(o[0] == H(0, 0));
  CHECK(o[1] == H(-2, 0));
  CHECK(o[2] == H(2, 0));
  CHECK(o[3] == H(2, 0));

  for (const auto& z : orbit(H(0, 0), HyperParam(0, 0), 5)) CHECK(z == H(0, 0));

  // Stops early once the iterates overflow.
  const auto blowup = orbit(H(10, 0), HyperParam(0, 0), 50);
  CHECK(blowup.size() < 51);
  CHECK(blowup.size() > 5);
}

TEST_CASE("orbit follows the two real orbits in characteristic coordinates") {
  const H z(0.3, -0.45);
  const HyperParam c(-0.9, 0.35);
  const auto o = orbit(z, c, 12);
  double X = to_characteristic(z).X, Y = to_characteristic(z).Y;
  for (const auto& w : o) {
    const auto t = to_characteristic(w);
    CHECK(t.X == doctest::Approx(X).epsilon(1e-9));
    CHECK(t.Y == doctest::Approx(Y).epsilon(1e-9));
    X = X * X + c.c1();
    Y = Y * Y + c.c2();
  }
}

TEST_CASE("analytic Mandelbrot predicate") {
  CHECK(mandelbrot_analytic(HyperParam(0, 0), kComponent));
  CHECK(mandelbrot_analytic(HyperParam(0, 0), kModulus));
  CHECK(mandelbrot_analytic(HyperParam(0, 0.25), kComponent));
  CHECK_FALSE(mandelbrot_analytic(HyperParam(0, 0.26), kComponent));
  CHECK_FALSE(mandelbrot_analytic(HyperParam(1, 1), kComponent));
  CHECK(mandelbrot_analytic(HyperParam(1, 1), kModulus));
  CHECK(mandelbrot_analytic(HyperParam(-7, 7), kModulus));
  CHECK_FALSE(mandelbrot_analytic(HyperParam(1, 0.9), kModulus));
}

TEST_CASE("square geometry") {
  CHECK(MandelbrotSquare::side_length() * MandelbrotSquare::side_length() ==
        doctest::Approx(MandelbrotSquare::area).epsilon(1e-15));
  // Vertices of S in (a, b): (-2, 0), (1/4, 0), (-7/8, +-9/8).
  const auto v1 = HyperParam::from_characteristic(-2, -2);
  const auto v2 = HyperParam::from_characteristic(0.25, 0.25);
  const auto v3 = HyperParam::from_characteristic(-2, 0.25);
  CHECK(v1.a() == -2);
  CHECK(v2.a() == 0.25);
  CHECK(v3.a() == -0.875);
  CHECK(v3.b() == 1.125);
  CHECK(std::hypot(v3.a() - v1.a(), v3.b() - v1.b()) == doctest::Approx(MandelbrotSquare::side_length()));
}

TEST_CASE("iterative Mandelbrot") {
  CHECK(mandelbrot_iterative(HyperParam(0, 0), 100, kComponent) == OrbitOutcome::bounded_through(100));

  const HyperParam mixed(-1.25, 1.25);  // c1 = -2.5, c2 = 0
  CHECK(mixed.c1() == -2.5);
  CHECK(mandelbrot_iterative(mixed, 100, kComponent) == OrbitOutcome::escaped_at(1));
  CHECK(mandelbrot_iterative(mixed, 1000, kModulus) == OrbitOutcome::bounded_through(1000));

  CHECK(mandelbrot_iterative(HyperParam(-2, 0), 5000, kComponent) == OrbitOutcome::bounded_through(5000));
  CHECK(mandelbrot_iterative(HyperParam(0.25, 0), 5000, kComponent) == OrbitOutcome::bounded_through(5000));
  CHECK(mandelbrot_iterative(HyperParam(0, 0.2501), 5000, kComponent).escaped());
  CHECK_THROWS_AS(mandelbrot_iterative(HyperParam(0, 0), 0, kComponent), std::invalid_argument);
}

TEST_CASE("modulus threshold") {
  CHECK(modulus_escape_threshold(HyperParam(0, 0)) == 4.0);
  // c1 = c2 = 3: radii 3 and 3.
  CHECK(modulus_escape_threshold(HyperParam(3, 0)) == 9.0);
}

TEST_CASE("Julia classification") {
  const auto origin = julia_classify(HyperParam(0, 0));
  CHECK(origin.kind == JuliaKind::ConnectedRectangle);
  CHECK(origin.half_width_x == 1.0);
  CHECK(origin.half_width_y == 1.0);

  CHECK(julia_classify(HyperParam(-2.5, 0)).kind == JuliaKind::CantorDust);

  const auto mixed = julia_classify(HyperParam(-1.25, 1.25));
  CHECK(mixed.kind == JuliaKind::DisconnectedMixed);
  CHECK(mixed.connected_axis == CharAxis::Y);
  CHECK(julia_classify(HyperParam(-1.25, -1.25)).connected_axis == CharAxis::X);

  CHECK(julia_classify(HyperParam(0.3, 0)).kind == JuliaKind::Empty);
  // Empty wins even when the other factor is Cantor.
  CHECK(julia_classify(HyperParam::from_characteristic(-5, 1)).kind == JuliaKind::Empty);

  CHECK(to_string(JuliaKind::DisconnectedMixed) == "disconnected-mixed");
}

TEST_CASE("Julia bounding rectangle") {
  const auto r0 = julia_bounding_rectangle(HyperParam(0, 0));
  REQUIRE(r0);
  CHECK(r0->half_width_x == 1.0);
  CHECK(r0->half_width_y == 1.0);
  CHECK(r0->xy_area() == 2.0);

  const auto r2 = julia_bounding_rectangle(HyperParam(-2, 0));
  REQUIRE(r2);
  CHECK(r2->half_width_x == 2.0);
  CHECK(r2->xy_area() == 8.0);

  CHECK_FALSE(julia_bounding_rectangle(HyperParam(0.3, 0)));
  CHECK(julia_bounding_rectangle(HyperParam(-2.5, 0)));
}

TEST_CASE("Julia membership") {
  CHECK(julia_membership_analytic(H(0, 0), HyperParam(0, 0), 10) == JuliaVerdict::In);
  CHECK(julia_membership_analytic(H(1, 1), HyperParam(0, 0), 10) == JuliaVerdict::Out);
  CHECK(julia_membership_analytic(H(0, 0), HyperParam(0.3, 0), 10) == JuliaVerdict::Out);

  // Cantor factor: the origin escapes immediately under c = -2.5.
  CHECK(julia_membership_analytic(H(0, 0), HyperParam(-2.5, 0), 10) == JuliaVerdict::Out);
  // The fixed point p+ of c1 = c2 = -2.5 sits at x = p+, y = 0.
  const double p = fixed_points(-2.5)->p_plus;
  CHECK(julia_membership_analytic(H(p, 0), HyperParam(-2.5, 0), 100) == JuliaVerdict::BoundedThroughDepth);

  CHECK(julia_membership_iterative(H(0, 0), HyperParam(-2, 0), 50) == OrbitOutcome::bounded_through(50));
  CHECK(julia_membership_iterative(H(3, 0), HyperParam(0, 0), 10) == OrbitOutcome::escaped_at(0));
}

TEST_CASE("property: conjugacy identity") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  for (int k = 0; k < 20000; ++k) {
    const H z(d(rng), d(rng));
    const HyperParam c(d(rng), d(rng));
    const auto t = to_characteristic(z);
    const auto s = to_characteristic(step(z, c));
    CHECK(std::abs(s.X - (t.X * t.X + c.c1())) <= 1e-12 * (t.X * t.X + std::abs(c.c1()) + 1e-300));
    CHECK(std::abs(s.Y - (t.Y * t.Y + c.c2())) <= 1e-12 * (t.Y * t.Y + std::abs(c.c2()) + 1e-300));
  }
}

TEST_CASE("property: symmetry under b -> -b") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> d(-3.0, 3.0);
  for (int k = 0; k < 20000; ++k) {
    const double a = d(rng), b = d(rng);
    const HyperParam c(a, b), m(a, -b);
    for (auto v : {kComponent, kModulus}) {
      CHECK(mandelbrot_analytic(c, v) == mandelbrot_analytic(m, v));
      CHECK(mandelbrot_iterative(c, 200, v) == mandelbrot_iterative(m, 200, v));
    }
    CHECK(julia_classify(c).kind == julia_classify(m).kind);
  }
}

TEST_CASE("property: rectangle exactness in the connected case") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> cd(-2.0, 0.25);
  std::uniform_real_distribution<double> zd(-2.5, 2.5);
  for (int k = 0; k < 20000; ++k) {
    const auto c = HyperParam::from_characteristic(cd(rng), cd(rng));
    if (!MandelbrotSquare::contains(c)) continue;  // halving may round across the edge
    const H z(zd(rng), zd(rng));
    const auto rect = julia_bounding_rectangle(c);
    REQUIRE(rect);
    const bool in = julia_membership_analytic(z, c, 20) == JuliaVerdict::In;
    CHECK(in == rect->contains(to_characteristic(z)));
    CHECK(julia_membership_iterative(z, c, 20).escaped() == !in);
  }
}

TEST_CASE("property: classification is a partition") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> d(-6.0, 3.0);
  for (int k = 0; k < 20000; ++k) {
    const HyperParam c(d(rng), d(rng));
    const double c1 = c.c1(), c2 = c.c2();
    const bool i1 = c1 >= -2 && c1 <= 0.25, i2 = c2 >= -2 && c2 <= 0.25;
    const int cases = (i1 && i2) + (c1 < -2 && c2 < -2) + ((i1 && c2 < -2) || (i2 && c1 < -2)) +
                      (c1 > 0.25 || c2 > 0.25);
    CHECK(cases == 1);
    const auto kind = julia_classify(c).kind;
    if (i1 && i2) CHECK(kind == JuliaKind::ConnectedRectangle);
    if (c1 < -2 && c2 < -2) CHECK(kind == JuliaKind::CantorDust);
    if (c1 > 0.25 || c2 > 0.25) CHECK(kind == JuliaKind::Empty);
  }
}

TEST_CASE("property: iterative Mandelbrot never escapes inside the square") {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> cd(-2.0, 0.25);
  for (int k = 0; k < 2000; ++k) {
    const auto c = HyperParam::from_characteristic(cd(rng), cd(rng));
    if (!MandelbrotSquare::contains(c)) continue;
    CHECK_FALSE(mandelbrot_iterative(c, 2000, kComponent).escaped());
    CHECK_FALSE(mandelbrot_iterative(c, 2000, kModulus).escaped());
  }
}

TEST_CASE("modulus variant: zero-divisor parameters never escape") {
  for (double other : {-10.0, -2.5, -1.0, 0.3, 2.0, 10.0}) {
    CHECK_FALSE(mandelbrot_iterative(HyperParam::from_characteristic(0.0, other), 10000, kModulus).escaped());
    CHECK_FALSE(mandelbrot_iterative(HyperParam::from_characteristic(other, 0.0), 10000, kModulus).escaped());
  }
  // Off the diagonals and outside S the product grows.
  CHECK(mandelbrot_iterative(HyperParam::from_characteristic(1.0, 1.0), 1000, kModulus).escaped());
}
