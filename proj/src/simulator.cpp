#include "tsnnc/simulator.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>

#include "tsnnc/errors.hpp"

namespace tsnnc {

const ClassObservation& SimResult::observation(const std::string& port, const std::string& cls) const {
  for (const auto& c : classes) {
    if (c.port == port && c.traffic_class == cls) return c;
  }
  throw ModelError(port, "no simulated queue for class " + cls);
}

namespace {

struct Frame {
  size_t flow = 0;
  size_t cls = 0;
  Rational bits;
  Rational input_rate;
  Rational release;
  Rational wire_start;
  Rational arrival;  // last bit received at the switch
  Rational start;
  Rational depart;
  bool started = false;
  bool departed = false;
};

class Gates {
 public:
  Gates(const std::optional<Gcl>& gcl) : gcl_(gcl) {
    if (!gcl_) return;
    for (const auto& c : gcl_->classes) {
      for (const auto& w : c.windows) {
        edges_.push_back(w.start);
        edges_.push_back(w.end);
      }
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  }

  bool open(size_t cls, const Rational& t) const {
    if (!gcl_) return true;
    const Rational p = phase(t);
    for (const auto& w : gcl_->classes[cls].windows) {
      if (w.start <= p && p < w.end) return true;
    }
    return false;
  }

  std::optional<Rational> next_change(const Rational& t) const {
    if (edges_.empty()) return std::nullopt;
    const Rational p = phase(t);
    for (const auto& e : edges_) {
      if (e > p) return Rational(t + e - p);
    }
    return Rational(t + gcl_->hyperperiod - p + edges_.front());
  }

 private:
  Rational phase(const Rational& t) const {
    const Rational& h = gcl_->hyperperiod;
    return t - h * Rational(floor_div(t / h));
  }

  const std::optional<Gcl>& gcl_;
  std::vector<Rational> edges_;
};

void check_scope(const NetworkModel& model) {
  size_t switches = 0;
  for (const auto& n : model.nodes) switches += n.is_switch ? 1 : 0;
  if (switches > 1) throw ScopeError("the simulator handles a single switch, the model has " + std::to_string(switches));
  for (const auto& f : model.flows) {
    if (f.path.size() != 2 || !model.is_switch_port(f.path[1])) {
      throw ScopeError("flow " + f.id + " does not cross exactly one switch output port");
    }
  }
}

// Source-side release times of one flow's bursts.
std::vector<Rational> release_times(const FlowSpec& f, const Rational& input_rate, const Rational& horizon,
                                    const TrafficPolicy& traffic, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> grain(0, 999);
  auto fraction = [&]() -> Rational { return Rational(grain(rng), 1000); };
  const Rational burst_time = f.interval_bits() / input_rate;
  std::vector<Rational> out;
  if (f.periodic) {
    const Rational phase = traffic.kind == TrafficPolicy::Kind::greedy ? Rational(0) : Rational(f.cmi * fraction());
    for (Rational t = phase; t < horizon; t += f.cmi) out.push_back(t);
    return out;
  }
  // aperiodic: anywhere inside each interval; the greedy pattern ends
  // interval 0 with a burst and starts interval 1 with the next one
  const Rational slack = f.cmi - burst_time;
  for (Integer k = 0;; ++k) {
    const Rational base = f.cmi * Rational(k);
    if (base >= horizon) break;
    Rational t;
    if (traffic.kind == TrafficPolicy::Kind::greedy) {
      t = k == 0 ? slack : base;
    } else {
      t = base + slack * fraction();
    }
    if (t < horizon) out.push_back(t);
  }
  return out;
}

struct PortRun {
  std::vector<ClassObservation> classes;
  std::uint64_t events = 0;
  bool conservation = true;
  bool fifo = true;
};

PortRun run_port(const NetworkModel& model, const std::string& pid, std::vector<Frame> frames,
                 const Rational& stop) {
  const ResolvedPort rp = resolve_port(model, pid);
  const Rational& c = rp.link_rate;
  const size_t n = rp.classes.size();
  const Gates gates(rp.gcl);

  std::stable_sort(frames.begin(), frames.end(), [](const Frame& a, const Frame& b) { return a.arrival < b.arrival; });

  std::vector<std::deque<size_t>> queues(n);
  std::vector<Rational> credit(n, Rational(0));
  std::vector<Rational> max_credit(n, Rational(0));
  std::optional<size_t> sending;
  Rational tx_end;
  size_t next = 0;
  Rational now = 0;
  PortRun run;

  auto shaped = [&](size_t k) { return rp.classes[k].kind == ClassKind::credit_based; };
  auto slope = [&](size_t k) -> Rational {
    if (!shaped(k)) return 0;
    if (sending && frames[*sending].cls == k) return rp.classes[k].send_slope;
    if (!gates.open(k, now)) return 0;
    if (!queues[k].empty() || credit[k] < 0) return rp.classes[k].idle_slope;
    return 0;
  };

  for (;;) {
    std::vector<Rational> slopes(n);
    for (size_t k = 0; k < n; ++k) slopes[k] = slope(k);

    std::optional<Rational> t;
    auto offer = [&](const Rational& x) {
      if (!t || x < *t) t = x;
    };
    if (next < frames.size()) offer(frames[next].arrival);
    if (sending) offer(tx_end);
    bool active = sending.has_value();
    for (size_t k = 0; k < n; ++k) {
      if (slopes[k] > 0 && credit[k] < 0) offer(now - credit[k] / slopes[k]);
      active = active || !queues[k].empty() || credit[k] != 0;
    }
    if (active) {
      if (auto g = gates.next_change(now)) offer(*g);
    }
    if (!t || *t > stop) break;

    for (size_t k = 0; k < n; ++k) credit[k] += slopes[k] * (*t - now);
    now = *t;
    ++run.events;

    // end of transmission
    if (sending && tx_end == now) {
      Frame& f = frames[*sending];
      f.depart = now;
      f.departed = true;
      sending.reset();
    }
    // credit bookkeeping, then the reset of idle shaped queues; gate state
    // is read from the clock
    for (size_t k = 0; k < n; ++k) {
      if (credit[k] > max_credit[k]) max_credit[k] = credit[k];
      const bool busy = sending && frames[*sending].cls == k;
      if (shaped(k) && queues[k].empty() && !busy && credit[k] > 0) credit[k] = 0;
    }
    while (next < frames.size() && frames[next].arrival == now) {
      queues[frames[next].cls].push_back(next);
      ++next;
    }
    if (!sending) {
      for (size_t k = 0; k < n; ++k) {
        if (queues[k].empty() || !gates.open(k, now)) continue;
        if (shaped(k) && credit[k] < 0) continue;
        const size_t i = queues[k].front();
        queues[k].pop_front();
        frames[i].start = now;
        frames[i].started = true;
        if (frames[i].start < frames[i].arrival) run.conservation = false;
        sending = i;
        tx_end = now + frames[i].bits / c;
        break;
      }
    }
  }

  for (size_t k = 0; k < n; ++k) {
    ClassObservation obs;
    obs.port = pid;
    obs.traffic_class = rp.classes[k].name;
    obs.kind = rp.classes[k].kind;
    obs.max_delay = 0;
    obs.max_backlog = 0;
    obs.max_credit = max_credit[k];

    // fluid backlog: wire bits in minus bits out, piecewise linear
    std::vector<std::pair<Rational, Rational>> kinks;
    Rational last_start = -1;
    for (const auto& f : frames) {
      if (f.cls != k) continue;
      ++obs.frames;
      kinks.emplace_back(f.wire_start, f.input_rate);
      kinks.emplace_back(f.arrival, Rational(-f.input_rate));
      if (f.started) {
        if (f.start < last_start) run.fifo = false;
        last_start = f.start;
        const Rational end = f.departed ? f.depart : tx_end;
        kinks.emplace_back(f.start, Rational(-c));
        kinks.emplace_back(end, c);
      } else {
        last_start = stop + 1;
      }
      if (f.departed) {
        ++obs.departed;
        if (f.depart - f.arrival > obs.max_delay) obs.max_delay = f.depart - f.arrival;
      } else if (f.arrival < stop && stop - f.arrival > obs.max_delay) {
        obs.max_delay = stop - f.arrival;
      }
    }
    std::sort(kinks.begin(), kinks.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    Rational at = 0;
    Rational level = 0;
    Rational rate = 0;
    for (const auto& [when, delta] : kinks) {
      level += rate * (when - at);
      at = when;
      if (level > obs.max_backlog) obs.max_backlog = level;
      rate += delta;
    }
    run.classes.push_back(std::move(obs));
  }
  return run;
}

}  // namespace

SimResult simulate_schedule(const NetworkModel& model, const Rational& horizon, const TrafficPolicy& traffic) {
  validate_model(model);
  check_scope(model);
  if (horizon < 0) throw ParameterError("simulation horizon must be non-negative");
  std::mt19937_64 rng(traffic.seed);

  // release every burst, then serialize the frames on each source link
  std::map<std::string, std::vector<Frame>> by_source;
  for (size_t i = 0; i < model.flows.size(); ++i) {
    const auto& f = model.flows[i];
    const ResolvedPort rp = resolve_port(model, f.path[1]);
    const Rational rate = model.link_from(f.path[0])->rate;
    for (const auto& r : release_times(f, rate, horizon, traffic, rng)) {
      for (Integer j = 0; j < f.mif; ++j) {
        Frame fr;
        fr.flow = i;
        fr.cls = rp.index_of(f.traffic_class);
        fr.bits = f.frame_bits();
        fr.input_rate = rate;
        fr.release = r;
        by_source[f.path[0]].push_back(std::move(fr));
      }
    }
  }
  std::map<std::string, std::vector<Frame>> by_port;
  for (auto& [source, list] : by_source) {
    std::stable_sort(list.begin(), list.end(), [](const Frame& a, const Frame& b) { return a.release < b.release; });
    Rational free = 0;
    for (auto& fr : list) {
      fr.wire_start = max_of(fr.release, free);
      fr.arrival = fr.wire_start + fr.bits / fr.input_rate;
      free = fr.arrival;
      by_port[model.flows[fr.flow].path[1]].push_back(fr);
    }
  }

  SimResult result;
  if (traffic.kind == TrafficPolicy::Kind::randomized) result.seed = traffic.seed;
  const Rational stop = 2 * horizon;
  for (const auto& p : model.ports) {
    if (!p.scheduler || !model.is_switch_port(p.id)) continue;
    PortRun run = run_port(model, p.id, by_port[p.id], stop);
    result.events += run.events;
    result.conservation_held = result.conservation_held && run.conservation;
    result.fifo_held = result.fifo_held && run.fifo;
    for (auto& c : run.classes) result.classes.push_back(std::move(c));
  }
  return result;
}

}  // namespace tsnnc
