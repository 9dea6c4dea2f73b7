#include <doctest.h>

#include "tsnnc/errors.hpp"
#include "tsnnc/minplus.hpp"
#include "tsnnc/service.hpp"

using namespace tsnnc;

namespace {
Rational q(const char* s) { return parse_rational(s); }
const Rational kLink = q("1e8");

std::vector<CbsClassConfig> two_classes() {
  return {{q("5e7"), q("5e7") - kLink, 12000, 12000}, {q("2e7"), q("2e7") - kLink, 12000, 12000}};
}

GclClass make_class(const char* name, ClassKind kind, std::vector<Window> w) { return {name, kind, std::move(w)}; }
}  // namespace

TEST_CASE("credit bounds") {
  auto cfg = two_classes();
  CHECK(cbs_max_credit(1, cfg, kLink) == 6000);
  CHECK(cbs_max_credit(2, cfg, kLink) == 7200);
  auto zero_lower = cfg;
  zero_lower[0].lower_max_frame = 0;
  CHECK(cbs_max_credit(1, zero_lower, kLink) == 0);
  CHECK(cbs_service_curve(1, zero_lower, kLink) == Curve::rate_latency(q("5e7"), 0));

  CHECK(cbs_service_curve(1, cfg, kLink) == Curve::rate_latency(q("5e7"), q("1.2e-4")));
  CHECK(cbs_service_curve(2, cfg, kLink) == Curve::rate_latency(q("2e7"), q("3.6e-4")));

  auto heavy = cfg;
  heavy[1].idle_slope = q("6e7");
  heavy[1].send_slope = q("6e7") - kLink;
  CHECK_THROWS_AS(cbs_max_credit(2, heavy, kLink), InfeasibleError);
  auto bad = cfg;
  bad[0].send_slope = -1;
  CHECK_THROWS_AS(cbs_max_credit(1, bad, kLink), ParameterError);
  CHECK_THROWS_AS(cbs_max_credit(3, cfg, kLink), ParameterError);
}

TEST_CASE("control traffic") {
  CdtSpec cdt{1000, q("1e6"), 12000};
  auto busy = cdt_busy_time(cdt, kLink);
  CHECK(busy(0) == q("1.12e-5"));
  CHECK(busy.rate() == q("1e-2"));
  CHECK(cdt_busy_time({0, 0, 12000}, kLink) == Curve::zero());
  CHECK(cdt_output_bound(cdt, kLink) == scale(busy, kLink));

  auto cfg = two_classes();
  auto plain = cbs_service_curve(1, cfg, kLink);
  auto with = cbs_cdt_service_curve(1, cfg, cdt, kLink);
  const Rational shrink = 1 - cdt.rate / kLink;
  const Rational k = (cdt.burst + cdt.rate * cdt.max_lower_frame / kLink) / kLink;
  CHECK(with == Curve::rate_latency(q("5e7") * shrink, (q("1.2e-4") + k) / shrink));
  CHECK(with.rate() == q("4.95e7"));
  CHECK(dominated_on(with, plain, q("1e-2")));
  CHECK(cbs_cdt_service_curve(1, cfg, {0, 0, 0}, kLink) == plain);
  CHECK(ats_cbs_service_curve(1, cfg, std::nullopt, kLink) == plain);
  CHECK(ats_cbs_service_curve(1, cfg, cdt, kLink) == with);
  CHECK_THROWS_AS(cbs_cdt_service_curve(1, cfg, {0, q("5e7"), 0}, kLink), InfeasibleError);
}

TEST_CASE("guaranteed slots") {
  Gcl always{q("1e-3"), {make_class("A", ClassKind::credit_based, {{0, q("1e-3")}})}};
  auto one = guaranteed_slots(always, 0, SlotPolicy::ideal, kLink, 12000);
  REQUIRE(one.count() == 1);
  CHECK(one.slots[0].length == q("1e-3"));
  CHECK(one.max_wait(0) == 0);

  Gcl two{q("1e-3"),
          {make_class("Q1", ClassKind::time_triggered, {{0, q("2e-4")}}),
           make_class("Q2", ClassKind::credit_based, {{0, q("1e-3")}})}};
  auto ideal = guaranteed_slots(two, 1, SlotPolicy::ideal, kLink, 12000);
  REQUIRE(ideal.count() == 1);
  CHECK(ideal.slots[0].start == q("2e-4"));
  CHECK(ideal.slots[0].length == q("8e-4"));
  CHECK(ideal.max_wait(0) == q("2e-4"));
  CHECK(ideal.offset(0, 0) == 0);

  auto blocked = guaranteed_slots(two, 1, SlotPolicy::nonpreemptive_blocking, kLink, 12000);
  REQUIRE(blocked.count() == 1);
  CHECK(blocked.slots[0].start == q("3.2e-4"));
  CHECK(blocked.slots[0].length == q("6.8e-4"));

  // a window split by a higher class wraps around the hyperperiod end
  Gcl split{q("1e-3"),
            {make_class("H", ClassKind::time_triggered, {{q("4e-4"), q("5e-4")}}),
             make_class("L", ClassKind::credit_based, {{0, q("1e-3")}})}};
  auto s = guaranteed_slots(split, 1, SlotPolicy::ideal, kLink, 0);
  REQUIRE(s.count() == 1);
  CHECK(s.slots[0].start == q("5e-4"));
  CHECK(s.slots[0].length == q("9e-4"));
  CHECK(s.max_wait(0) == q("1e-4"));

  Gcl shadowed{q("1e-3"),
               {make_class("H", ClassKind::time_triggered, {{0, q("1e-3")}}),
                make_class("L", ClassKind::credit_based, {{0, q("5e-4")}})}};
  CHECK(guaranteed_slots(shadowed, 1, SlotPolicy::ideal, kLink, 0).count() == 0);

  Gcl broken{q("1e-3"), {make_class("A", ClassKind::credit_based, {{q("5e-4"), q("2e-3")}})}};
  CHECK_THROWS_AS(broken.validate(), ParameterError);
}

TEST_CASE("TDMA and TAS curves") {
  auto tdma = tdma_service_curve(q("1e-3"), q("2e-4"), kLink);
  CHECK(tdma(q("1e-3")) == 20000);
  CHECK(tdma(q("9e-4")) == 10000);
  CHECK(tdma(q("8e-4")) == 0);
  CHECK(tdma(q("1.5e-3")) == 20000);
  CHECK(tdma_service_curve(q("1e-3"), q("1e-3"), kLink) == Curve::affine(0, kLink));
  CHECK_THROWS_AS(tdma_service_curve(q("1e-3"), q("2e-3"), kLink), ParameterError);

  Gcl always{q("1e-3"), {make_class("A", ClassKind::credit_based, {{0, q("1e-3")}})}};
  CHECK(tas_service_curve(guaranteed_slots(always, 0, SlotPolicy::ideal, kLink, 0), kLink) ==
        Curve::affine(0, kLink));
  CHECK(tas_service_curve(SlotSet{q("1e-3"), {}}, kLink) == Curve::zero());

  Gcl multi{q("1e-3"),
            {make_class("T", ClassKind::time_triggered, {{q("1e-4"), q("2e-4")}, {q("6e-4"), q("6.5e-4")}}),
             make_class("B", ClassKind::best_effort, {{0, q("1e-4")}, {q("2e-4"), q("6e-4")}, {q("6.5e-4"), q("1e-3")}})}};
  auto tt = guaranteed_slots(multi, 0, SlotPolicy::ideal, kLink, 0);
  REQUIRE(tt.count() == 2);
  auto beta = tas_service_curve(tt, kLink);
  CHECK(beta(0) == Rational(0));
  CHECK(beta.is_non_decreasing());
  const Rational inc = kLink * tt.total_length();
  for (const char* t : {"3e-3", "3.33e-3", "4.7e-3", "5.05e-3"}) {
    CHECK(beta.value(q(t) + q("1e-3")) == beta.value(q(t)) + inc);
  }
  // minimum over both reference slots
  CHECK(beta(q("4e-4")) == 0);
  CHECK(beta(q("4.5e-4")) == 0);
  CHECK(beta(q("5e-4")) == 5000);
  CHECK(beta(q("5.5e-4")) == 5000);
  CHECK(beta(q("9e-4")) == 5000);
  CHECK(beta(q("1e-3")) == 15000);
}

TEST_CASE("time-triggered open time and TAS-CBS") {
  Gcl none{q("1e-3"), {make_class("A", ClassKind::credit_based, {{0, q("1e-3")}})}};
  CHECK(tt_open_time_bound(none) == Curve::zero());
  auto cfg = two_classes();
  CHECK(tas_cbs_service_curve(1, cfg, none, kLink) == cbs_service_curve(1, cfg, kLink));

  Gcl one{q("1e-3"),
          {make_class("T", ClassKind::time_triggered, {{0, q("2e-4")}}),
           make_class("A", ClassKind::credit_based, {{q("2e-4"), q("1e-3")}})}};
  auto f = tt_open_time_bound(one);
  CHECK(f == Curve::staircase(q("2e-4"), q("1e-3")));

  std::vector<CbsClassConfig> small{{q("3e7"), q("3e7") - kLink, 12000, 12000}};
  auto beta = tas_cbs_service_curve(1, small, one, kLink);
  CHECK(beta.is_non_decreasing());
  CHECK(beta(0) == Rational(0));
  CHECK(beta.rate() == q("3e7") * (1 - q("2e-4") / q("1e-3")));
  CHECK(dominated_on(beta, cbs_service_curve(1, small, kLink), q("5e-3")));
  std::vector<CbsClassConfig> heavy{{q("8.5e7"), q("8.5e7") - kLink, 12000, 12000}};
  CHECK_THROWS_AS(tas_cbs_service_curve(1, heavy, one, kLink), InfeasibleError);

  Gcl full{q("1e-3"), {make_class("T", ClassKind::time_triggered, {{0, q("1e-3")}})}};
  CHECK(tas_cbs_service_curve(1, small, full, kLink) == Curve::zero());
}
