#include "tsnnc/network.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "tsnnc/bounds.hpp"
#include "tsnnc/errors.hpp"
#include "tsnnc/minplus.hpp"

namespace tsnnc {

const QueueAnalysis& NetworkReport::queue(const std::string& port, const std::string& cls) const {
  for (const auto& q : queues) {
    if (q.port == port && q.traffic_class == cls) return q;
  }
  throw ModelError(port, "no analyzed queue for class " + cls);
}

Curve queue_service_curve(const ResolvedPort& port, const std::string& cls, SlotPolicy policy) {
  const ResolvedClass& rc = port.classes[port.index_of(cls)];
  const Rational& c = port.link_rate;
  if (rc.kind == ClassKind::best_effort) throw ScopeError(port.id + ": best-effort class " + cls + " is not analyzed");

  const bool gated = port.mechanism == Mechanism::tas || port.mechanism == Mechanism::tas_cbs;
  if (rc.kind == ClassKind::time_triggered) {
    if (gated) {
      const auto slots = guaranteed_slots(*port.gcl, port.index_of(cls), policy, c, rc.lower_max_frame);
      return tas_service_curve(slots, c);
    }
    // control traffic: one lower frame of blocking, then the full link
    return Curve::rate_latency(c, port.cdt.value().max_lower_frame / c);
  }
  const size_t x = port.cbs_index(cls);
  const auto configs = port.cbs_configs();
  switch (port.mechanism) {
    case Mechanism::cbs: return cbs_service_curve(x, configs, c);
    case Mechanism::cbs_cdt: return cbs_cdt_service_curve(x, configs, port.cdt.value(), c);
    case Mechanism::ats_cbs: return ats_cbs_service_curve(x, configs, port.cdt, c);
    case Mechanism::tas_cbs: return tas_cbs_service_curve(x, configs, *port.gcl, c);
    case Mechanism::tas: break;
  }
  throw ScopeError(port.id + ": shaped class " + cls + " under plain TAS");
}

QueueAnalysis analyze_queue(const ResolvedPort& port, const std::string& cls,
                            const std::vector<FlowEnvelope>& envelopes, SlotPolicy policy) {
  QueueAnalysis q;
  q.port = port.id;
  q.traffic_class = cls;
  q.service = queue_service_curve(port, cls, policy);

  std::map<std::string, std::pair<BucketParams, Rational>> by_link;
  for (const auto& e : envelopes) {
    q.flows.push_back(e.flow);
    auto& slot = by_link[e.input_link];
    slot.first.burst += e.burst;
    slot.first.rate += e.rate;
    slot.second = e.input_rate;
  }
  q.arrival = Curve::zero();
  Rational total_rate = 0;
  for (const auto& [link, params] : by_link) {
    (void)link;
    const auto& [bucket, cap] = params;
    q.arrival = q.arrival + minimum(Curve::affine(0, cap), Curve::leaky_bucket(bucket.burst, bucket.rate));
    total_rate += min_of(bucket.rate, cap);
  }
  if (envelopes.empty()) {
    q.delay = 0;
    q.backlog = 0;
    q.output = Curve::zero();
    return q;
  }
  if (total_rate >= q.service.rate()) {
    throw UnboundedError("queue " + port.id + "/" + cls + ": arrival rate " + to_decimal(total_rate) +
                         " reaches the service rate " + to_decimal(q.service.rate()));
  }
  q.delay = delay_bound(q.arrival, q.service);
  q.backlog = backlog_bound(q.arrival, q.service);
  q.output = output_bound(q.arrival, q.service);
  return q;
}

std::vector<std::string> port_order(const NetworkModel& model) {
  std::vector<std::string> ports;
  for (const auto& p : model.ports) {
    if (p.scheduler) ports.push_back(p.id);
  }
  std::map<std::string, std::set<std::string>> next;
  std::map<std::string, int> indegree;
  for (const auto& p : ports) indegree[p] = 0;
  for (const auto& f : model.flows) {
    for (size_t k = 1; k + 1 < f.path.size(); ++k) {
      if (next[f.path[k]].insert(f.path[k + 1]).second) ++indegree[f.path[k + 1]];
    }
  }
  std::vector<std::string> order;
  std::vector<std::string> ready;
  for (const auto& p : ports) {
    if (indegree[p] == 0) ready.push_back(p);
  }
  while (!ready.empty()) {
    // model order among ready ports keeps the result deterministic
    auto it = std::min_element(ready.begin(), ready.end(), [&](const std::string& a, const std::string& b) {
      return std::find(ports.begin(), ports.end(), a) < std::find(ports.begin(), ports.end(), b);
    });
    const std::string p = *it;
    ready.erase(it);
    order.push_back(p);
    for (const auto& n : next[p]) {
      if (--indegree[n] == 0) ready.push_back(n);
    }
  }
  if (order.size() == ports.size()) return order;

  // report one cycle among the remaining ports
  std::set<std::string> left;
  for (const auto& p : ports) {
    if (indegree[p] > 0) left.insert(p);
  }
  std::vector<std::string> stack;
  std::set<std::string> on_stack;
  std::set<std::string> done;
  std::vector<std::string> cycle;
  std::function<bool(const std::string&)> visit = [&](const std::string& p) {
    stack.push_back(p);
    on_stack.insert(p);
    for (const auto& n : next[p]) {
      if (!left.count(n) || done.count(n)) continue;
      if (on_stack.count(n)) {
        cycle.assign(std::find(stack.begin(), stack.end(), n), stack.end());
        cycle.push_back(n);
        return true;
      }
      if (visit(n)) return true;
    }
    stack.pop_back();
    on_stack.erase(p);
    done.insert(p);
    return false;
  };
  for (const auto& p : ports) {
    if (left.count(p) && !done.count(p) && visit(p)) break;
  }
  std::string text;
  for (const auto& p : cycle) text += (text.empty() ? "" : " -> ") + p;
  throw CycleError("cyclic port dependency: " + text);
}

NetworkReport analyze_network(const NetworkModel& model, SlotPolicy policy) {
  validate_model(model);
  const auto order = port_order(model);

  struct FlowState {
    BucketParams source;
    std::vector<Rational> burst;  // burst entering path[k]
    std::vector<Rational> delay;  // delay at path[k]
    bool analyzed = true;
  };
  std::vector<FlowState> state(model.flows.size());
  for (size_t i = 0; i < model.flows.size(); ++i) {
    const auto& f = model.flows[i];
    state[i].source = source_bucket(model, f);
    state[i].burst.assign(f.path.size() + 1, 0);
    state[i].delay.assign(f.path.size(), 0);
    state[i].burst[1] = state[i].source.burst;
    for (size_t k = 1; k < f.path.size(); ++k) {
      const auto& sched = *model.port(f.path[k]).scheduler;
      for (const auto& c : sched.classes) {
        if (c.name == f.traffic_class && c.kind == ClassKind::best_effort) state[i].analyzed = false;
      }
    }
  }

  NetworkReport report;
  for (const auto& pid : order) {
    const ResolvedPort port = resolve_port(model, pid);
    for (const auto& rc : port.classes) {
      if (rc.kind == ClassKind::best_effort) continue;
      std::vector<FlowEnvelope> envelopes;
      std::vector<std::pair<size_t, size_t>> members;  // (flow, hop index)
      for (size_t i = 0; i < model.flows.size(); ++i) {
        const auto& f = model.flows[i];
        if (f.traffic_class != rc.name || !state[i].analyzed) continue;
        auto it = std::find(f.path.begin() + 1, f.path.end(), pid);
        if (it == f.path.end()) continue;
        const size_t k = static_cast<size_t>(it - f.path.begin());
        const std::string& from = f.path[k - 1];
        envelopes.push_back({f.id, state[i].burst[k], state[i].source.rate, from, model.link_from(from)->rate});
        members.emplace_back(i, k);
      }
      if (envelopes.empty()) continue;
      QueueAnalysis q = analyze_queue(port, rc.name, envelopes, policy);
      for (const auto& [i, k] : members) {
        state[i].delay[k] = q.delay;
        state[i].burst[k + 1] = port.mechanism == Mechanism::ats_cbs
                                    ? state[i].source.burst
                                    : state[i].burst[k] + state[i].source.rate * q.delay;
      }
      report.queues.push_back(std::move(q));
    }
  }

  for (size_t i = 0; i < model.flows.size(); ++i) {
    if (!state[i].analyzed) continue;
    const auto& f = model.flows[i];
    FlowReport fr;
    fr.flow = f.id;
    fr.technical_delay = 0;
    fr.end_to_end = 0;
    for (size_t k = 0; k < f.path.size(); ++k) {
      fr.technical_delay += model.link_from(f.path[k])->technical_delay;
      if (k == 0) continue;
      fr.hops.push_back({f.path[k], state[i].delay[k]});
      fr.end_to_end += state[i].delay[k];
    }
    fr.end_to_end += fr.technical_delay;
    report.flows.push_back(std::move(fr));
  }
  return report;
}

}  // namespace tsnnc
