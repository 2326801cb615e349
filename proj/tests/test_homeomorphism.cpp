#include <gtest/gtest.h>

#include <cmath>

#include "valleyscape/errors.hpp"
#include "valleyscape/homeomorphism.hpp"
#include "valleyscape/sampling.hpp"

using namespace valleyscape;

namespace {

Landscape base_for_rosenbrock() { return make_elliptic({{1.0, 100.0}}); }

}  // namespace

TEST(MakeTransformed, RosenbrockIsGenerated) {
  const auto t = make_transformed(base_for_rosenbrock(), rosenbrock_map());
  const auto rosen = make_rosenbrock();
  RngStream s = substream(5, 0);
  for (const auto& y : uniform_in_box(s, Domain::cube(2, -1, 2), 1000)) {
    const double a = t.evaluate(y);
    const double b = rosen.evaluate(y);
    EXPECT_LE(std::abs(a - b), 1e-9 * (1.0 + std::abs(b)));
  }
  EXPECT_EQ(t.evaluate(Point{1, 1}), 0.0);
  EXPECT_EQ(t.induced().label(), "rosen(elliptic:1,100)");
}

TEST(MakeTransformed, IdentityReproducesBase) {
  const auto f = make_rosenbrock();
  const auto t = make_transformed(f, identity_map(2));
  RngStream s = substream(6, 0);
  for (const auto& p : uniform_in_box(s, Domain::cube(2, -5, 5), 100)) EXPECT_EQ(t.evaluate(p), f.evaluate(p));
}

TEST(MakeTransformed, LinearMapOfSphere) {
  const double a[] = {2.0, 1.0};
  const auto t = make_transformed(make_sphere(2), linear_map(a));
  RngStream s = substream(7, 0);
  for (const auto& y : uniform_in_box(s, Domain::cube(2, -5, 5), 100)) {
    EXPECT_NEAR(t.evaluate(y), (y[0] / 2) * (y[0] / 2) + y[1] * y[1], 1e-12);
  }
}

TEST(MakeTransformed, RejectsBrokenInverse) {
  Homeomorphism bad(
      [](std::span<const double> x, std::span<double> y) {
        y[0] = x[0] + 1.0;
        y[1] = x[1];
      },
      [](std::span<const double> y, std::span<double> x) {
        x[0] = y[0];
        x[1] = y[1];
      },
      2, "shift-without-inverse");
  EXPECT_THROW(make_transformed(make_sphere(2), bad), InvalidHomeomorphismError);
  EXPECT_THROW(make_transformed(make_sphere(3), rosenbrock_map()), DimensionError);
  const double zero[] = {1.0, 0.0};
  EXPECT_THROW(linear_map(zero), ConfigError);
}

TEST(Homeomorphism, RoundTripProperty) {
  const double a[] = {3.0, -0.25, 7.5};
  for (const auto& h : {rosenbrock_map(), identity_map(2)}) {
    RngStream s = substream(8, 0);
    const auto pts = uniform_in_box(s, Domain::cube(2, -10, 10), 1000);
    EXPECT_LE(round_trip_error(h, pts), 1e-9) << h.label();
  }
  RngStream s = substream(9, 0);
  const auto pts3 = uniform_in_box(s, Domain::cube(3, -10, 10), 1000);
  EXPECT_LE(round_trip_error(linear_map(a), pts3), 1e-9);
}

TEST(Homeomorphism, ComposedEvaluationMatchesBase) {
  const auto base = base_for_rosenbrock();
  const auto t = make_transformed(base, rosenbrock_map());
  RngStream s = substream(10, 0);
  for (const auto& x : uniform_in_box(s, Domain::cube(2, -1, 2), 1000)) {
    const double fx = base.evaluate(x);
    EXPECT_LE(std::abs(t.evaluate(t.map().forward(x)) - fx), 1e-9 * (1.0 + std::abs(fx)));
  }
}

TEST(OrderPreservation, ConstructedTransformsHaveNoViolations) {
  const auto dom = Domain::cube(2, -1, 2);
  const auto rosen = make_transformed(base_for_rosenbrock(), rosenbrock_map());
  const auto c = check_order_preservation(rosen, dom, 1000, 42);
  EXPECT_EQ(c.total, 1000u);
  EXPECT_EQ(c.violations, 0u);
  const double a[] = {2.0, 1.0};
  const auto lin = make_transformed(make_elliptic({{1.0, 0.01}}), linear_map(a));
  EXPECT_EQ(check_order_preservation(lin, Domain::cube(2, -10, 10), 1000, 43).violations, 0u);
}

TEST(OrderPreservation, WorkedPair) {
  const auto base = base_for_rosenbrock();
  const auto t = make_transformed(base, rosenbrock_map());
  const Point x{0, 0};
  const Point xp{0.5, 0};
  EXPECT_EQ(base.evaluate(x), 0.0);
  EXPECT_EQ(base.evaluate(xp), 0.25);
  EXPECT_EQ(t.map().forward(x), (Point{1, 1}));
  EXPECT_EQ(t.map().forward(xp), (Point{0.5, 0.25}));
  EXPECT_EQ(t.evaluate(t.map().forward(x)), 0.0);
  EXPECT_EQ(t.evaluate(t.map().forward(xp)), 0.25);
}

TEST(OrderPreservation, ReversedOrderViolatesEveryPair) {
  const auto f = make_sphere(2);
  const auto c = check_order_preservation(f, negate(f), identity_map(2), Domain::cube(2, -10, 10), 500, 1);
  EXPECT_EQ(c.violations, c.total);
  EXPECT_EQ(c.total, 500u);
}
