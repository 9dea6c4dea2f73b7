#include <doctest.h>

#include "support.hpp"
#include "tsnnc/bounds.hpp"
#include "tsnnc/errors.hpp"
#include "tsnnc/minplus.hpp"

using namespace tsnnc;
using testing_support::q;

TEST_CASE("token bucket through a rate-latency server") {
  const Rational b = 1500, r = q("2e6"), rate = q("1e7"), latency = q("3e-5");
  const Curve alpha = Curve::leaky_bucket(b, r);
  const Curve beta = Curve::rate_latency(rate, latency);
  CHECK(delay_bound(alpha, beta) == latency + b / rate);
  CHECK(backlog_bound(alpha, beta) == b + r * latency);
  const Curve out = output_bound(alpha, beta);
  CHECK(out(0) == Rational(0));
  CHECK(out.right_limit(0) == Rational(b + r * latency));
  CHECK(out == Curve::leaky_bucket(b + r * latency, r));
}

TEST_CASE("backlog bound is never negative") {
  CHECK(backlog_bound(Curve::zero(), Curve::rate_latency(10, 1)) == 0);
  CHECK(delay_bound(Curve::zero(), Curve::rate_latency(10, 1)) == 0);
}

TEST_CASE("two identical flows into the highest shaped class") {
  CHECK(two_flow_cbs_delay(12000, q("1e8"), q("793.6"), q("8e5"), q("5e7")) == q("1.44e-4"));
  CHECK_THROWS_AS(two_flow_cbs_delay(12000, q("1e8"), 800, q("3e7"), q("5e7")), InfeasibleError);
  CHECK_THROWS_AS(two_flow_cbs_delay(12000, q("1e8"), 800, q("1e6"), q("2e8")), InfeasibleError);
}

TEST_CASE("closed form matches the curve computation") {
  testing_support::Rng rng(7);
  for (int i = 0; i < 40; ++i) {
    const Rational c = rng.pick(std::vector<Rational>{q("1e8"), q("1e9")});
    const Rational r = rng.inside(0, c / 4);
    const Rational idle = rng.inside(2 * r, c);
    const Rational b = rng.inside(0, 20000);
    const Rational lbar = rng.integer(512, 12176);
    const Curve one = minimum(Curve::affine(0, c), Curve::leaky_bucket(b, r));
    const Curve beta = cbs_service_curve(1, {{idle, idle - c, 12000, lbar}}, c);
    CHECK(delay_bound(one + one, beta) == two_flow_cbs_delay(lbar, c, b, r, idle));
  }
}
