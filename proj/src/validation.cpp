#include "tsnnc/validation.hpp"

#include <algorithm>

#include "tsnnc/bounds.hpp"
#include "tsnnc/minplus.hpp"
#include "tsnnc/report.hpp"

namespace tsnnc {

using ojson = nlohmann::ordered_json;

std::optional<Rational> BoundCheck::delay_tightness() const {
  if (delay_bound <= 0) return std::nullopt;
  return Rational(observed_delay / delay_bound);
}

std::optional<Rational> BoundCheck::backlog_tightness() const {
  if (backlog_bound <= 0) return std::nullopt;
  return Rational(observed_backlog / backlog_bound);
}

namespace {

BoundCheck bound_for(const NetworkModel& model, const QueueAnalysis& q, bool weaken) {
  BoundCheck b;
  b.port = q.port;
  b.traffic_class = q.traffic_class;

  Rational wait = 0;
  for (const auto& id : q.flows) {
    for (const auto& f : model.flows) {
      if (f.id != id) continue;
      const auto it = std::find(f.path.begin(), f.path.end(), q.port);
      const Rational in_rate = model.link_from(*(it - 1))->rate;
      wait = max_of(wait, Rational(f.frame_bits() / in_rate));
    }
  }
  const Curve service = convolve(q.service, Curve::burst_delay(wait));
  b.delay_bound = delay_bound(q.arrival, service);
  b.backlog_bound = backlog_bound(q.arrival, service);

  const ResolvedPort rp = resolve_port(model, q.port);
  const ResolvedClass& rc = rp.classes[rp.index_of(q.traffic_class)];
  if (rc.kind == ClassKind::credit_based) {
    b.credit_bound = cbs_max_credit(rp.cbs_index(rc.name), rp.cbs_configs(), rp.link_rate);
  }
  if (weaken) {
    b.delay_bound -= rc.max_frame / rp.link_rate;
    b.backlog_bound -= rc.max_frame;
  }
  b.observed_delay = 0;
  b.observed_backlog = 0;
  b.observed_credit = 0;
  return b;
}

}  // namespace

Verdict check_bounds_against_sim(const NetworkModel& model, const Rational& horizon, const CheckOptions& options) {
  const NetworkReport report = analyze_network(model, options.policy);
  Verdict v;
  v.runs.push_back(simulate_schedule(model, horizon, TrafficPolicy::greedy()));
  for (std::size_t k = 0; k < options.trials; ++k) {
    v.runs.push_back(simulate_schedule(model, horizon, TrafficPolicy::randomized(options.first_seed + k)));
  }
  for (const auto& q : report.queues) {
    BoundCheck b = bound_for(model, q, options.weaken);
    for (const auto& run : v.runs) {
      const ClassObservation& o = run.observation(q.port, q.traffic_class);
      b.observed_delay = max_of(b.observed_delay, o.max_delay);
      b.observed_backlog = max_of(b.observed_backlog, o.max_backlog);
      b.observed_credit = max_of(b.observed_credit, o.max_credit);
    }
    b.holds = b.observed_delay <= b.delay_bound && b.observed_backlog <= b.backlog_bound &&
              (!b.credit_bound || b.observed_credit <= *b.credit_bound);
    v.pass = v.pass && b.holds;
    v.checks.push_back(std::move(b));
  }
  for (const auto& run : v.runs) v.pass = v.pass && run.conservation_held && run.fifo_held;
  return v;
}

bool harness_catches_weakened_bounds(const NetworkModel& model, const Rational& horizon) {
  CheckOptions options;
  options.trials = 0;
  options.weaken = true;
  return !check_bounds_against_sim(model, horizon, options).pass;
}

ojson sim_result_document(const SimResult& result) {
  ojson doc;
  doc["seed"] = result.seed ? ojson(*result.seed) : ojson(nullptr);
  doc["events"] = result.events;
  doc["conservationHeld"] = result.conservation_held;
  doc["fifoHeld"] = result.fifo_held;
  doc["queues"] = ojson::array();
  for (const auto& c : result.classes) {
    ojson q = {{"port", c.port},
               {"class", c.traffic_class},
               {"frames", c.frames},
               {"departed", c.departed},
               {"maxDelay", exact_value(c.max_delay)},
               {"maxBacklog", exact_value(c.max_backlog)}};
    if (c.kind == ClassKind::credit_based) q["maxCredit"] = exact_value(c.max_credit);
    doc["queues"].push_back(std::move(q));
  }
  return doc;
}

ojson verdict_document(const Verdict& verdict) {
  ojson doc;
  doc["verdict"] = verdict.pass ? "PASS" : "FAIL";
  doc["runs"] = verdict.runs.size();
  doc["checks"] = ojson::array();
  for (const auto& b : verdict.checks) {
    ojson c = {{"port", b.port},
               {"class", b.traffic_class},
               {"delayBound", exact_value(b.delay_bound)},
               {"observedDelay", exact_value(b.observed_delay)},
               {"backlogBound", exact_value(b.backlog_bound)},
               {"observedBacklog", exact_value(b.observed_backlog)}};
    const auto dt = b.delay_tightness();
    const auto bt = b.backlog_tightness();
    c["delayTightness"] = dt ? ojson(to_decimal(*dt, 6)) : ojson(nullptr);
    c["backlogTightness"] = bt ? ojson(to_decimal(*bt, 6)) : ojson(nullptr);
    if (b.credit_bound) {
      c["creditBound"] = exact_value(*b.credit_bound);
      c["observedCredit"] = exact_value(b.observed_credit);
    }
    c["holds"] = b.holds;
    doc["checks"].push_back(std::move(c));
  }
  return doc;
}

}  // namespace tsnnc
