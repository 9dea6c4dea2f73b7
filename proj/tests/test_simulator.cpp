#include <doctest.h>

#include <fstream>
#include <sstream>

#include "support.hpp"
#include "tsnnc/errors.hpp"
#include "tsnnc/validation.hpp"

using namespace tsnnc;
using testing_support::ModelBuilder;
using testing_support::q;

namespace {
NetworkModel model(const std::string& name) { return load_model(std::string(TSNNC_MODELS_DIR) + "/" + name); }

FlowSpec flow(const char* cmi, long mif, long mfs, bool periodic, const std::string& cls) {
  FlowSpec f;
  f.cmi = q(cmi);
  f.mif = mif;
  f.mfs = mfs;
  f.periodic = periodic;
  f.traffic_class = cls;
  return f;
}
}  // namespace

TEST_CASE("one frame through an always-open gate") {
  ModelBuilder b(q("1e8"));
  SchedulerConfig s;
  s.mechanism = Mechanism::tas;
  s.classes = {testing_support::plain_class("TT", ClassKind::time_triggered)};
  s.gcl = GclConfig{q("1e-3"), {{"TT", {{0, q("1e-3")}}}}};
  b.scheduler(s);
  b.flow(flow("1e-3", 1, 100, true, "TT"), b.talker(q("1e8")));
  const SimResult r = simulate_schedule(b.model(), q("1e-3"), TrafficPolicy::greedy());
  const ClassObservation& o = r.observation("sw.out", "TT");
  CHECK(o.frames == 1);
  CHECK(o.max_delay == q("8e-6"));
  CHECK(o.max_backlog == 800);
}

TEST_CASE("no flows, no delay") {
  NetworkModel m = model("cbs_two_flows.json");
  m.flows.clear();
  const SimResult r = simulate_schedule(m, q("1e-2"), TrafficPolicy::greedy());
  for (const auto& o : r.classes) {
    CHECK(o.frames == 0);
    CHECK(o.max_delay == 0);
  }
}

TEST_CASE("credit grows while a lower-priority frame blocks") {
  ModelBuilder b(q("1e8"));
  SchedulerConfig s;
  s.mechanism = Mechanism::cbs;
  s.classes = {testing_support::shaped_class("A", q("5e7")),
               testing_support::plain_class("BE", ClassKind::best_effort)};
  b.scheduler(s);
  // the A frame is fully received at 80 us, the BE frame occupies 12..132 us
  b.flow(flow("1e-3", 1, 100, true, "A"), b.talker(q("1e7")));
  b.flow(flow("1e-3", 1, 1500, true, "BE"), b.talker(q("1e9")));
  const SimResult r = simulate_schedule(b.model(), q("1e-3"), TrafficPolicy::greedy());
  const ClassObservation& a = r.observation("sw.out", "A");
  CHECK(a.max_delay == q("6e-5"));
  CHECK(a.max_credit == 2600);
  CHECK(r.observation("sw.out", "BE").max_delay == q("1.2e-4"));
}

TEST_CASE("worked example stays within its bound") {
  const NetworkModel m = model("cbs_two_flows.json");
  const SimResult greedy = simulate_schedule(m, q("1e-2"), TrafficPolicy::greedy());
  CHECK(greedy.observation("sw1.p1", "A").max_delay <= q("1.44e-4"));
  CHECK(greedy.conservation_held);
  CHECK(greedy.fifo_held);
  CHECK_FALSE(greedy.seed.has_value());
}

TEST_CASE("randomized runs are reproducible") {
  const NetworkModel m = model("tas_cbs.json");
  const SimResult a = simulate_schedule(m, q("5e-3"), TrafficPolicy::randomized(11));
  const SimResult b = simulate_schedule(m, q("5e-3"), TrafficPolicy::randomized(11));
  REQUIRE(a.classes.size() == b.classes.size());
  for (size_t k = 0; k < a.classes.size(); ++k) {
    CHECK(a.classes[k].max_delay == b.classes[k].max_delay);
    CHECK(a.classes[k].max_backlog == b.classes[k].max_backlog);
  }
  CHECK(a.events == b.events);
  CHECK(*a.seed == 11);
}

TEST_CASE("multi-hop models are out of scope") {
  CHECK_THROWS_AS(simulate_schedule(model("ats_three_hops.json"), q("1e-3"), TrafficPolicy::greedy()), ScopeError);
}

TEST_CASE("bounds hold on the example models and weakened bounds are caught") {
  for (const char* name : {"cbs_two_flows.json", "cbs_cdt.json", "tas.json", "tas_cbs.json"}) {
    INFO(name);
    CheckOptions options;
    options.trials = 3;
    const Verdict v = check_bounds_against_sim(model(name), q("1e-2"), options);
    CHECK(v.pass);
    CHECK(v.runs.size() == 4);
    for (const auto& c : v.checks) {
      if (c.credit_bound) CHECK(c.observed_credit <= *c.credit_bound);
    }
  }
  CHECK(harness_catches_weakened_bounds(model("cbs_two_flows.json"), q("1e-2")));
}

TEST_CASE("random credit-based models") {
  testing_support::Rng rng(99);
  for (int i = 0; i < 8; ++i) {
    const NetworkModel m = testing_support::random_cbs_model(rng);
    CheckOptions options;
    options.trials = 2;
    const Verdict v = check_bounds_against_sim(m, q("5e-3"), options);
    INFO(serialize_model(m));
    CHECK(v.pass);
  }
}
