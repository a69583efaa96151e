#include <cmath>
#include <random>

#include <doctest.h>

#include "sl2r/error.hpp"
#include "sl2r/hpoint.hpp"

using namespace sl2r;

namespace {

std::mt19937_64 rng_for_core(0xc03e0001);

HPoint random_interior() {
  std::uniform_real_distribution<double> radius(0.0, 3.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  std::uniform_real_distribution<double> fibre(-1.4, 1.4);
  return from_hyperboloid({radius(rng_for_core), angle(rng_for_core), fibre(rng_for_core)});
}

}  // namespace

TEST_CASE("form value of stored representatives") {
  CHECK(form_value(HPoint(1, 0, 0, 0.5)) == doctest::Approx(-0.75).epsilon(1e-14));
  CHECK(form_value(HPoint::origin()) == -1.0);
  CHECK(form_value(HPoint(1, 0, 0, 1)) == 0.0);
  CHECK(form_value(HPoint(1, 0, 1.5, 0)) > 0.0);
  CHECK(is_interior(HPoint(1, 0, 0, 0.5)));
  CHECK_FALSE(is_interior(HPoint(1, 0, 1.5, 0)));
}

TEST_CASE("constructor rejects degenerate rows") {
  CHECK_THROWS_AS(HPoint(0, 0, 0, 0), Error);
  CHECK_THROWS_AS(HPoint(1, std::nan(""), 0, 0), Error);
}

TEST_CASE("canonical representative") {
  HPoint c = HPoint(2, 4, 6, 8).canonical();
  CHECK(c[0] == 1.0);
  CHECK(c[1] == 2.0);
  CHECK(c[2] == 3.0);
  CHECK(c[3] == 4.0);
  CHECK(HPoint(0, 1, 0, 0).at_infinity());
  CHECK_THROWS_AS(HPoint(0, 1, 0, 0).canonical(), Error);
}

TEST_CASE("sl2 chart and its determinant identity") {
  Sl2Chart ch = sl2_chart(HPoint(1, 0, 0, 0.5));
  CHECK(ch.a == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(ch.b == 0.0);
  CHECK(ch.c == 0.0);
  CHECK(ch.d == doctest::Approx(0.5).epsilon(1e-15));
  for (int i = 0; i < 200; ++i) {
    HPoint x = random_interior();
    Sl2Chart g = sl2_chart(x);
    CHECK(g.a * g.d - g.b * g.c == doctest::Approx(-form_value(x)).epsilon(1e-12));
  }
}

TEST_CASE("trace point") {
  // A point of the origin fibre projects to the origin.
  HPoint fibre_point(std::cos(0.3), std::sin(0.3), 0.0, 0.0);
  CHECK(projectively_equal(trace_point(fibre_point), HPoint::origin(), 1e-12));

  // Base-plane points are fixed.
  HPoint base(1, 0, 0.2, -0.4);
  HPoint t = trace_point(base);
  CHECK(t[1] == 0.0);
  CHECK(projectively_equal(t, base, 1e-12));

  for (int i = 0; i < 200; ++i) {
    HPoint x = random_interior();
    HPoint t1 = trace_point(x);
    HPoint t2 = trace_point(t1);
    CHECK(t1[0] == 1.0);  // canonical output
    CHECK(t1[1] == 0.0);
    CHECK(projective_angle(t1, t2) <= 1e-12);
    CHECK(t2[0] > 0.0);  // positive proportionality
  }
}

TEST_CASE("hyperboloid parameters give unit-form representatives") {
  std::uniform_real_distribution<double> radius(0.0, 3.0);
  std::uniform_real_distribution<double> angle(-8.0, 8.0);
  for (int i = 0; i < 500; ++i) {
    HyperboloidParam hp{radius(rng_for_core), angle(rng_for_core), angle(rng_for_core)};
    HPoint x = from_hyperboloid(hp);
    CHECK(std::abs(form_value(x) + 1.0) <= 1e-12);
    if (std::abs(std::cos(hp.phi)) > 1e-6) {
      double expected = std::remainder(hp.phi, M_PI);
      CHECK(fibre_coordinate(x) == doctest::Approx(expected).epsilon(1e-10));
    }
  }
  CHECK_THROWS_AS(from_hyperboloid({-1.0, 0.0, 0.0}), Error);
}

TEST_CASE("fibre coordinate") {
  CHECK(fibre_coordinate(HPoint(std::cos(0.3), std::sin(0.3), 0, 0)) ==
        doctest::Approx(0.3).epsilon(1e-14));
  CHECK(fibre_coordinate(HPoint::origin()) == 0.0);
  // Representative independent.
  CHECK(fibre_coordinate(HPoint(-2 * std::cos(0.3), -2 * std::sin(0.3), 0, 0)) ==
        doctest::Approx(0.3).epsilon(1e-14));
  CHECK_THROWS_AS(fibre_coordinate(HPoint(0, 0, 1, 0)), Error);
}

TEST_CASE("inhomogeneous round trip") {
  for (int i = 0; i < 200; ++i) {
    HPoint x = random_interior();
    if (x[0] == 0.0) continue;
    ModelPoint m = to_inhomogeneous(x);
    HPoint back = from_inhomogeneous(m);
    CHECK(projective_angle(back, x) <= 1e-12);
    ModelPoint m2 = to_inhomogeneous(back);
    CHECK(m2.x == doctest::Approx(m.x).epsilon(1e-12));
    CHECK(m2.y == doctest::Approx(m.y).epsilon(1e-12));
    CHECK(m2.z == doctest::Approx(m.z).epsilon(1e-12));
  }
  CHECK_THROWS_AS(to_inhomogeneous(HPoint(0, 1, 0, 0)), Error);
}

TEST_CASE("projective comparison respects positive rescaling only") {
  HPoint a(1, 0, 0, 0.5);
  HPoint b(3, 0, 0, 1.5);
  HPoint c(-1, 0, 0, -0.5);
  CHECK(projectively_equal(a, b, 1e-12));
  CHECK_FALSE(projectively_equal(a, c, 1e-6));
  CHECK(projective_angle(a, c) == doctest::Approx(M_PI).epsilon(1e-12));
}
