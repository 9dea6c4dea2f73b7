#include <doctest.h>

#include "tsnnc/curve.hpp"
#include "tsnnc/errors.hpp"
#include "tsnnc/minplus.hpp"

using namespace tsnnc;

namespace {
Rational q(const char* s) { return parse_rational(s); }
}  // namespace

TEST_CASE("rational parsing and rendering") {
  CHECK(q("793.6") == Rational(3968, 5));
  CHECK(q("1e-5") == Rational(1, 100000));
  CHECK(q("1.25E3") == 1250);
  CHECK(q("7/3") == Rational(7, 3));
  CHECK(q("-3") == -3);
  CHECK_THROWS_AS(q("abc"), std::invalid_argument);
  CHECK_THROWS_AS(q("1/0"), std::invalid_argument);
  CHECK(to_exact_string(q("6/4")) == "3/2");
  CHECK(to_decimal(q("0.000144")) == "0.000144");
  CHECK(to_decimal(Rational(1, 3)) == "0.333333333333");
  CHECK(lcm(Rational(1, 2), Rational(1, 3)) == 1);
  CHECK(lcm(Rational(4), Rational(6)) == 12);
}

TEST_CASE("primitive curves evaluate as defined") {
  auto lb = Curve::leaky_bucket(10, 2);
  CHECK(lb(0) == Rational(0));
  CHECK(lb(q("0.5")) == Rational(11));
  CHECK(lb(3) == Rational(16));
  CHECK(lb.right_limit(0) == Rational(10));

  auto rl = Curve::rate_latency(5, 2);
  CHECK(rl(1) == Rational(0));
  CHECK(rl(2) == Rational(0));
  CHECK(rl(4) == Rational(10));

  auto bd = Curve::burst_delay(3);
  CHECK(bd(3) == Rational(0));
  CHECK(bd(q("3.01")).is_infinite());

  auto st = Curve::staircase(4, 2, 1);
  CHECK(st(0) == Rational(0));
  CHECK(st(1) == Rational(0));
  CHECK(st(q("1.5")) == Rational(4));
  CHECK(st(3) == Rational(4));
  CHECK(st(q("3.1")) == Rational(8));
  CHECK(st(101) == Rational(200));
  CHECK_THROWS_AS(lb(-1), DomainError);
}

TEST_CASE("pointwise operations") {
  auto a = Curve::leaky_bucket(10, 1);
  auto b = Curve::affine(0, 3);
  auto m = minimum(a, b);
  CHECK(m(2) == Rational(6));
  CHECK(m(5) == Rational(15));
  CHECK(m(100) == Rational(110));
  auto s = a + b;
  CHECK(s(2) == Rational(18));
  auto x = maximum(a, b);
  CHECK(x(2) == Rational(12));
  CHECK(x(100) == Rational(300));
  auto st = minimum(Curve::staircase(4, 2), Curve::affine(0, 1));
  CHECK(st(q("1.5")) == Rational(3, 2));
  CHECK(st(9) == Rational(9));
  CHECK(st(q("9.5")) == Rational(19, 2));
}

TEST_CASE("convolution and deconvolution of the standard pair") {
  auto alpha = Curve::leaky_bucket(10, 2);
  auto beta = Curve::rate_latency(5, 3);
  auto c = convolve(alpha, beta);
  // rate-latency with the smaller rate once the burst is spent
  CHECK(c(3) == Rational(0));
  CHECK(c(4) == Rational(5));
  CHECK(c(5) == Rational(10));
  CHECK(c(6) == Rational(15));
  CHECK(c(10) == Rational(24));
  CHECK(c(50) == Rational(10 + 2 * 47));

  auto d = deconvolve(alpha, beta);
  CHECK(d(0) == Rational(16));
  CHECK(d(1) == Rational(18));
  CHECK(d(10) == Rational(36));

  CHECK(horizontal_deviation(alpha, beta) == 5);
  CHECK(vertical_deviation(alpha, beta) == 16);

  CHECK_THROWS_AS(deconvolve(Curve::affine(0, 6), beta), UnboundedError);
  CHECK_THROWS_AS(horizontal_deviation(Curve::affine(0, 6), beta), UnboundedError);
}

TEST_CASE("burst delay is the shift operator") {
  auto f = Curve::leaky_bucket(4, 1);
  auto g = convolve(f, Curve::burst_delay(2));
  CHECK(g(2) == Rational(0));
  CHECK(g(3) == Rational(5));
  CHECK(convolve(f, Curve::burst_delay(0)) == f);
}

TEST_CASE("closure, composition and pseudo-inverse") {
  auto f = Curve::from_elements({Element::point(0, 0), Element::segment(0, 1, 0, 2), Element::point(1, 2),
                                 Element::segment(1, 2, 2, -1), Element::point(2, 1),
                                 Element::segment(2, 3, 1, 2)},
                                2, 1, 2);
  auto g = non_decreasing_closure(f);
  CHECK(g(q("1.5")) == Rational(2));
  CHECK(g(q("2.5")) == Rational(2));
  CHECK(g(3) == Rational(3));
  CHECK(g.is_non_decreasing());

  auto h = compose(Curve::rate_latency(2, 1), Curve::affine(-1, 1));
  CHECK(h(0) == Rational(0));
  CHECK(h(2) == Rational(0));
  CHECK(h(4) == Rational(4));

  auto st = Curve::staircase(4, 2);
  CHECK(*lower_pseudo_inverse(st, 4) == 0);
  CHECK(*lower_pseudo_inverse(st, 5) == 2);
  CHECK(*lower_pseudo_inverse(st, 41) == 20);
  CHECK(!lower_pseudo_inverse(Curve::affine(3, 0), 5));
  CHECK(*lower_pseudo_inverse(Curve::rate_latency(2, 1), 6) == 4);
}

TEST_CASE("staircase arrival against rate latency") {
  auto alpha = Curve::staircase(4, 2);
  auto beta = Curve::rate_latency(3, 1);
  // worst case at each burst start
  CHECK(horizontal_deviation(alpha, beta) == Rational(1) + Rational(4, 3));
  CHECK(vertical_deviation(alpha, beta) == 5);
}
