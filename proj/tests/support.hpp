// Random generators shared by the property tests and the acceptance run.
#pragma once

#include <algorithm>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tsnnc/arrival.hpp"
#include "tsnnc/grid.hpp"
#include "tsnnc/minplus.hpp"
#include "tsnnc/model.hpp"
#include "tsnnc/service.hpp"

namespace testing_support {

using tsnnc::Curve;
using tsnnc::Rational;
using tsnnc::max_of;
using tsnnc::min_of;

inline Rational q(const char* s) { return tsnnc::parse_rational(s); }

// gmpxx leaves n/d unreduced, and comparisons assume reduced operands
inline Rational fraction(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
  bool coin() { return integer(0, 1) == 1; }
  /// Uniform on lo + k (hi - lo) / steps, k = 0..steps.
  Rational uniform(const Rational& lo, const Rational& hi, long steps = 1000) {
    return lo + (hi - lo) * fraction(integer(0, steps), steps);
  }
  /// Uniform on the open interval, same grid.
  Rational inside(const Rational& lo, const Rational& hi, long steps = 1000) {
    return lo + (hi - lo) * fraction(integer(1, steps - 1), steps);
  }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<size_t>(integer(0, static_cast<long>(v.size()) - 1))];
  }

 private:
  std::mt19937_64 gen_;
};

inline tsnnc::FlowSpec random_flow(Rng& rng, const Rational& link_rate) {
  for (;;) {
    tsnnc::FlowSpec f;
    f.id = "f";
    f.cmi = rng.pick(std::vector<Rational>{q("125e-6"), q("250e-6"), q("5e-4"), q("1e-3"), q("7/3000")});
    f.mif = rng.integer(1, 4);
    f.mfs = rng.integer(64, 1522);
    f.periodic = rng.coin();
    if (f.interval_bits() < link_rate * f.cmi) return f;
  }
}

/// A continuous, grid-aligned arrival and service pair with the arrival's
/// long-run rate strictly below the service's, plus a grid horizon large
/// enough for every comparison.
struct GridCase {
  Curve arrival;
  Curve service;
  Rational step;
  Rational horizon;
  Rational exact_until;  // deconvolution is compared on [0, exact_until]
};

inline Rational micro(long n) { return fraction(n, 1000000); }
inline Rational per_micro(long bits) { return Rational(bits * 1000000); }

inline Curve random_grid_arrival(Rng& rng) {
  const long line = rng.integer(10, 20);
  auto bucket = [&]() -> Curve {
    const long r = rng.integer(1, 4);
    const long kink = rng.integer(1, 10);
    return tsnnc::minimum(Curve::affine(0, per_micro(line)), Curve::leaky_bucket(per_micro(line - r) * micro(kink),
                                                                                  per_micro(r)));
  };
  auto ramps = [&]() -> Curve {
    const long period = rng.integer(4, 20);
    const long width = rng.integer(1, period - 1);
    return tsnnc::convolve(Curve::staircase(Rational(line * width), micro(period)), Curve::affine(0, per_micro(line)));
  };
  switch (rng.integer(0, 2)) {
    case 0: return bucket();
    case 1: return ramps();
    default: return bucket() + ramps();
  }
}

inline Curve random_grid_service(Rng& rng) {
  auto latency = [&]() -> Curve { return Curve::rate_latency(per_micro(rng.integer(5, 30)), micro(rng.integer(0, 20))); };
  auto tdma = [&]() -> Curve {
    const long period = rng.integer(4, 24);
    return tsnnc::tdma_service_curve(micro(period), micro(rng.integer(1, period)), per_micro(rng.integer(10, 40)));
  };
  switch (rng.integer(0, 2)) {
    case 0: return latency();
    case 1: return tdma();
    default: return latency() + tdma();
  }
}

inline Rational ceil_to(const Rational& x, const Rational& step) { return step * Rational(tsnnc::ceil_div(x / step)); }

inline GridCase random_grid_case(Rng& rng, long max_points = 700) {
  for (;;) {
    GridCase c;
    c.step = micro(1);
    c.arrival = random_grid_arrival(rng);
    c.service = random_grid_service(rng);
    const Rational ra = c.arrival.rate();
    const Rational rb = c.service.rate();
    if (rb <= ra * Rational(5, 4)) continue;
    const auto ea = tsnnc::affine_envelope(c.arrival);
    const auto eb = tsnnc::affine_envelope(c.service);
    // beyond `quiet` the arrival stays below the service
    const Rational quiet = max_of(Rational(0), Rational((ea.highest - eb.lowest) / (rb - ra)));
    const Rational reach = (ea.highest + ra * quiet - eb.lowest) / rb;  // latest service time needed
    Rational periods = c.step;
    for (const Curve* f : {&c.arrival, &c.service}) {
      if (!f->has_linear_tail()) periods = tsnnc::lcm(periods, f->period_length());
    }
    const Rational transient = max_of(c.arrival.period_start(), c.service.period_start());
    c.exact_until = ceil_to(transient + 3 * periods, c.step);
    const Rational lookahead = (ea.highest - ea.lowest - eb.lowest) / (rb - ra);
    Rational h = max_of(max_of(quiet, reach), Rational(c.exact_until + lookahead));
    h = ceil_to(max_of(h, c.exact_until), c.step) + c.step;
    if (h / c.step > max_points) continue;
    c.horizon = h;
    return c;
  }
}

/// Builds a single-switch model: talkers feed one switch whose port "sw.out"
/// sends to a sink over a link of rate `out_rate`.
class ModelBuilder {
 public:
  explicit ModelBuilder(const Rational& out_rate) {
    m_.nodes.push_back({"sink", false});
    m_.nodes.push_back({"sw", true});
    m_.ports.push_back({"sink.p0", "sink", std::nullopt});
    m_.ports.push_back({"sw.out", "sw", std::nullopt});
    m_.links.push_back({"sw.out", "sink.p0", out_rate, 0});
  }

  void scheduler(tsnnc::SchedulerConfig s) { m_.ports[1].scheduler = std::move(s); }

  /// New talker with its own link into the switch; returns its port.
  std::string talker(const Rational& rate) {
    const std::string id = "t" + std::to_string(++talkers_);
    m_.nodes.push_back({id, false});
    m_.ports.push_back({id + ".p0", id, std::nullopt});
    m_.ports.push_back({"sw.in" + std::to_string(talkers_), "sw", std::nullopt});
    m_.links.push_back({id + ".p0", "sw.in" + std::to_string(talkers_), rate, 0});
    return id + ".p0";
  }

  void flow(tsnnc::FlowSpec f, const std::string& source) {
    f.id = "f" + std::to_string(m_.flows.size() + 1);
    f.path = {source, "sw.out"};
    m_.flows.push_back(std::move(f));
  }

  const tsnnc::NetworkModel& model() const { return m_; }

 private:
  tsnnc::NetworkModel m_;
  int talkers_ = 0;
};

inline tsnnc::ClassConfig shaped_class(const std::string& name, const Rational& idle) {
  tsnnc::ClassConfig c;
  c.name = name;
  c.kind = tsnnc::ClassKind::credit_based;
  c.idle_slope = idle;
  return c;
}

inline tsnnc::ClassConfig plain_class(const std::string& name, tsnnc::ClassKind kind) {
  tsnnc::ClassConfig c;
  c.name = name;
  c.kind = kind;
  return c;
}

/// Adds a random flow of class `cls` from a new talker if one fits in the
/// remaining rate `budget`, which is reduced accordingly.
inline bool add_flow_within(Rng& rng, ModelBuilder& b, Rational& budget, const std::string& cls,
                            const Rational& in_rate, const Rational& out_rate, long max_bytes, bool periodic_only) {
  for (int attempt = 0; attempt < 20; ++attempt) {
    tsnnc::FlowSpec f = random_flow(rng, min_of(in_rate, out_rate));
    f.mfs = rng.integer(64, max_bytes);
    if (periodic_only) f.periodic = true;
    f.traffic_class = cls;
    if (f.interval_bits() >= min_of(in_rate, out_rate) * f.cmi) continue;
    if (f.rate() >= budget) continue;
    budget -= f.rate();
    b.flow(f, b.talker(in_rate));
    return true;
  }
  return false;
}

/// One switch, one or two shaped classes plus best effort, one flow per
/// talker, input links at 100 Mbit/s or 1 Gbit/s.
inline tsnnc::NetworkModel random_cbs_model(Rng& rng) {
  const Rational c = q("1e8");
  ModelBuilder b(c);
  tsnnc::SchedulerConfig s;
  s.mechanism = tsnnc::Mechanism::cbs;
  const size_t shaped = static_cast<size_t>(rng.integer(1, 2));
  const std::vector<std::string> names = {"A", "B"};
  std::vector<Rational> idle = {rng.uniform(c / 5, c / 2, 30), rng.uniform(c / 10, c * 3 / 10, 20)};
  for (size_t k = 0; k < shaped; ++k) s.classes.push_back(shaped_class(names[k], idle[k]));
  s.classes.push_back(plain_class("BE", tsnnc::ClassKind::best_effort));
  b.scheduler(s);
  const std::vector<Rational> rates = {q("1e8"), q("1e9")};
  for (size_t k = 0; k < shaped; ++k) {
    Rational budget = idle[k] * Rational(7, 10);
    const long flows = rng.integer(1, 3);
    for (long i = 0; i < flows; ++i) add_flow_within(rng, b, budget, names[k], rng.pick(rates), c, 1522, false);
  }
  Rational be_budget = c / 4;
  const long be = rng.integer(0, 2);
  for (long i = 0; i < be; ++i) add_flow_within(rng, b, be_budget, "BE", rng.pick(rates), c, 1522, false);
  return b.model();
}

/// One switch with one or two gated time-triggered classes and best effort
/// in the gaps. Windows of different classes are separated by at least the
/// transmission time of the earlier class's largest frame.
inline tsnnc::NetworkModel random_tas_model(Rng& rng) {
  const Rational c = q("1e8");
  ModelBuilder b(c);
  const Rational period = rng.pick(std::vector<Rational>{q("5e-4"), q("1e-3")});
  const long tt = rng.integer(1, 2);
  const long be_bytes = rng.integer(64, 500);
  const long tt_bytes = 300;
  const Rational blocking = Rational(8 * std::max(be_bytes, tt_bytes)) / c;
  const Rational gap = Rational(8 * tt_bytes) / c;

  tsnnc::SchedulerConfig s;
  s.mechanism = tsnnc::Mechanism::tas;
  tsnnc::GclConfig gcl;
  gcl.hyperperiod = period;
  Rational cursor = 0;
  std::vector<Rational> slot;
  for (long k = 0; k < tt; ++k) {
    const std::string name = "TT" + std::to_string(k + 1);
    s.classes.push_back(plain_class(name, tsnnc::ClassKind::time_triggered));
    const Rational width = blocking + rng.uniform(micro(20), period / 4 - blocking, 20);
    gcl.windows[name] = {{cursor, cursor + width}};
    slot.push_back(width - blocking);
    cursor += width + gap;
  }
  s.classes.push_back(plain_class("BE", tsnnc::ClassKind::best_effort));
  // best effort gets every gap and the rest of the cycle
  std::vector<tsnnc::Window> be;
  Rational open = 0;
  for (long k = 0; k < tt; ++k) {
    const auto& w = gcl.windows["TT" + std::to_string(k + 1)].front();
    if (w.start > open) be.push_back({open, w.start});
    open = w.end;
  }
  if (open < period) be.push_back({open, period});
  gcl.windows["BE"] = be;
  s.gcl = gcl;
  b.scheduler(s);

  for (long k = 0; k < tt; ++k) {
    Rational budget = c * slot[static_cast<size_t>(k)] / period * Rational(7, 10);
    const long flows = rng.integer(1, 2);
    for (long i = 0; i < flows; ++i) {
      add_flow_within(rng, b, budget, "TT" + std::to_string(k + 1), c, c, tt_bytes, true);
    }
  }
  Rational be_budget = c / 5;
  const long bes = rng.integer(0, 2);
  for (long i = 0; i < bes; ++i) add_flow_within(rng, b, be_budget, "BE", c, c, be_bytes, false);
  return b.model();
}

/// Empty when the engine agrees with the grid oracle on every operation,
/// otherwise a description of the first disagreement.
inline std::string grid_mismatch(const GridCase& c) {
  using namespace tsnnc;
  const GridCurve a = GridCurve::sample(c.arrival, c.step, c.horizon);
  const GridCurve b = GridCurve::sample(c.service, c.step, c.horizon);
  std::ostringstream why;
  const GridCurve conv = grid_convolve(a, b);
  const Curve engine_conv = convolve(c.arrival, c.service);
  const GridCurve deconv = grid_deconvolve(a, b);
  const Curve engine_deconv = deconvolve(c.arrival, c.service);
  for (size_t k = 0; k < a.size(); ++k) {
    const Rational t = a.time(k);
    if (engine_conv.value(t) != conv.values[k]) {
      why << "conv differs at t=" << t << ": " << engine_conv.value(t) << " vs " << conv.values[k];
      return why.str();
    }
    if (t <= c.exact_until && engine_deconv.value(t) != deconv.values[k]) {
      why << "deconv differs at t=" << t << ": " << engine_deconv.value(t) << " vs " << deconv.values[k];
      return why.str();
    }
  }
  const Rational h = horizontal_deviation(c.arrival, c.service);
  const Rational gh = grid_horizontal_deviation(a, b);
  if (h != gh) {
    why << "hdev " << h << " vs " << gh;
    return why.str();
  }
  const Rational v = vertical_deviation(c.arrival, c.service);
  const Rational gv = grid_vertical_deviation(a, b);
  if (v != gv) {
    why << "vdev " << v << " vs " << gv;
    return why.str();
  }
  return {};
}

}  // namespace testing_support
