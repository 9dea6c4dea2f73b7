#include "tsnnc/service.hpp"

#include <algorithm>

#include "tsnnc/errors.hpp"
#include "tsnnc/minplus.hpp"

namespace tsnnc {

namespace {

void check_configs(size_t x, const std::vector<CbsClassConfig>& configs, const Rational& link_rate) {
  if (link_rate <= 0) throw ParameterError("link rate must be positive");
  if (x < 1 || x > configs.size()) {
    throw ParameterError("shaped class index " + std::to_string(x) + " out of range 1.." +
                         std::to_string(configs.size()));
  }
  Rational reserved = 0;
  for (size_t j = 0; j < configs.size(); ++j) {
    const auto& c = configs[j];
    const std::string who = "shaped class " + std::to_string(j + 1);
    if (c.idle_slope <= 0 || c.idle_slope >= link_rate) {
      throw ParameterError(who + ": idle slope must lie in (0, C)");
    }
    if (c.send_slope >= 0) throw ParameterError(who + ": send slope must be negative");
    if (c.idle_slope - c.send_slope != link_rate) {
      throw ParameterError(who + ": idle slope minus send slope must equal the link rate");
    }
    if (c.max_frame < 0 || c.lower_max_frame < 0) throw ParameterError(who + ": frame sizes must be >= 0");
    reserved += c.idle_slope;
  }
  if (reserved >= link_rate) {
    throw InfeasibleError("reserved idle slopes " + to_decimal(reserved) + " reach the link rate " +
                          to_decimal(link_rate));
  }
}

void check_cdt(const CdtSpec& cdt, const Rational& link_rate) {
  if (cdt.burst < 0 || cdt.rate < 0 || cdt.max_lower_frame < 0) {
    throw ParameterError("control traffic burst, rate and frame must be >= 0");
  }
  if (cdt.rate >= link_rate) throw InfeasibleError("control traffic rate reaches the link rate");
}

Rational mod(const Rational& x, const Rational& m) { return x - Rational(floor_div(x / m)) * m; }

// Sorted, merged intervals; a piece ending at the hyperperiod joins one
// starting at 0.
std::vector<Slot> cyclic_merge(std::vector<Window> pieces, const Rational& period) {
  std::sort(pieces.begin(), pieces.end(), [](const Window& a, const Window& b) { return a.start < b.start; });
  std::vector<Window> merged;
  for (const auto& w : pieces) {
    if (!(w.start < w.end)) continue;
    if (!merged.empty() && w.start <= merged.back().end) {
      merged.back().end = max_of(merged.back().end, w.end);
    } else {
      merged.push_back(w);
    }
  }
  std::vector<Slot> out;
  for (const auto& w : merged) out.push_back({w.start, w.end - w.start});
  if (out.size() >= 2 && merged.front().start == 0 && merged.back().end == period) {
    out.back().length += out.front().length;
    out.erase(out.begin());
  }
  return out;
}

bool covers_everything(const std::vector<Slot>& slots, const Rational& period) {
  return slots.size() == 1 && slots.front().length == period;
}

}  // namespace

Rational cbs_max_credit(size_t x, const std::vector<CbsClassConfig>& configs, const Rational& link_rate) {
  check_configs(x, configs, link_rate);
  Rational higher_idle = 0;
  Rational higher_send = 0;
  for (size_t j = 0; j + 1 < x; ++j) {
    higher_idle += configs[j].idle_slope;
    higher_send += configs[j].send_slope * configs[j].max_frame;
  }
  const auto& own = configs[x - 1];
  if (higher_idle >= link_rate) throw InfeasibleError("higher shaped classes reserve the whole link");
  return own.idle_slope / (link_rate * (link_rate - higher_idle)) *
         (link_rate * own.lower_max_frame - higher_send);
}

Curve cbs_service_curve(size_t x, const std::vector<CbsClassConfig>& configs, const Rational& link_rate) {
  const Rational credit = cbs_max_credit(x, configs, link_rate);
  const Rational& idle = configs[x - 1].idle_slope;
  return Curve::rate_latency(idle, credit / idle);
}

Curve cdt_busy_time(const CdtSpec& cdt, const Rational& link_rate) {
  check_cdt(cdt, link_rate);
  return Curve::affine((cdt.burst + cdt.rate * cdt.max_lower_frame / link_rate) / link_rate,
                       cdt.rate / link_rate);
}

Curve cdt_output_bound(const CdtSpec& cdt, const Rational& link_rate) {
  check_cdt(cdt, link_rate);
  return deconvolve(Curve::leaky_bucket(cdt.burst, cdt.rate),
                    Curve::rate_latency(link_rate, cdt.max_lower_frame / link_rate));
}

Curve cbs_cdt_service_curve(size_t x, const std::vector<CbsClassConfig>& configs, const CdtSpec& cdt,
                            const Rational& link_rate) {
  const Curve base = cbs_service_curve(x, configs, link_rate);
  check_cdt(cdt, link_rate);
  if (configs[x - 1].idle_slope + cdt.rate >= link_rate) {
    throw InfeasibleError("idle slope plus control traffic rate reaches the link rate");
  }
  const Curve busy = cdt_busy_time(cdt, link_rate);
  // t - busy(t), affine with slope 1 - r/C
  const Curve remaining = Curve::affine(-busy.value(0), 1 - cdt.rate / link_rate);
  return compose(base, remaining);
}

Curve ats_cbs_service_curve(size_t x, const std::vector<CbsClassConfig>& configs,
                            const std::optional<CdtSpec>& cdt, const Rational& link_rate) {
  if (cdt) return cbs_cdt_service_curve(x, configs, *cdt, link_rate);
  return cbs_service_curve(x, configs, link_rate);
}

void Gcl::validate() const {
  if (hyperperiod <= 0) throw ParameterError("gate control hyperperiod must be positive");
  for (const auto& c : classes) {
    Rational last = 0;
    bool first = true;
    for (const auto& w : c.windows) {
      if (w.start < 0 || !(w.start < w.end) || w.end > hyperperiod) {
        throw ParameterError("class " + c.name + ": window [" + to_decimal(w.start) + ", " + to_decimal(w.end) +
                             ") must be non-empty and inside the hyperperiod");
      }
      if (!first && w.start < last) throw ParameterError("class " + c.name + ": windows overlap or are unsorted");
      last = w.end;
      first = false;
    }
  }
}

size_t Gcl::index_of(const std::string& name) const {
  for (size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].name == name) return i;
  }
  throw ParameterError("gate control list has no class named " + name);
}

std::vector<Window> Gcl::time_triggered_windows() const {
  std::vector<Window> all;
  for (const auto& c : classes) {
    if (c.kind == ClassKind::time_triggered) all.insert(all.end(), c.windows.begin(), c.windows.end());
  }
  std::vector<Window> out;
  for (const auto& s : cyclic_merge(all, hyperperiod)) out.push_back({s.start, s.start + s.length});
  return out;
}

Rational SlotSet::max_wait(size_t i) const {
  if (covers_everything(slots, hyperperiod)) return 0;
  const Slot& prev = slots[(i + slots.size() - 1) % slots.size()];
  return mod(slots[i].start - (prev.start + prev.length), hyperperiod);
}

Rational SlotSet::offset(size_t j, size_t i) const { return mod(slots[j].start - slots[i].start, hyperperiod); }

Rational SlotSet::total_length() const {
  Rational sum = 0;
  for (const auto& s : slots) sum += s.length;
  return sum;
}

SlotSet guaranteed_slots(const Gcl& gcl, size_t class_index, SlotPolicy policy, const Rational& link_rate,
                         const Rational& lower_max_frame) {
  gcl.validate();
  if (class_index >= gcl.classes.size()) throw ParameterError("gate control class index out of range");
  const Rational& period = gcl.hyperperiod;

  std::vector<Window> higher;
  for (size_t k = 0; k < class_index; ++k) {
    higher.insert(higher.end(), gcl.classes[k].windows.begin(), gcl.classes[k].windows.end());
  }
  std::sort(higher.begin(), higher.end(), [](const Window& a, const Window& b) { return a.start < b.start; });

  std::vector<Window> pieces;
  for (const auto& w : gcl.classes[class_index].windows) {
    Rational cursor = w.start;
    for (const auto& h : higher) {
      if (h.end <= cursor || h.start >= w.end) continue;
      if (h.start > cursor) pieces.push_back({cursor, h.start});
      cursor = max_of(cursor, h.end);
    }
    if (cursor < w.end) pieces.push_back({cursor, w.end});
  }

  SlotSet result{period, cyclic_merge(pieces, period)};
  if (policy == SlotPolicy::nonpreemptive_blocking && !covers_everything(result.slots, period)) {
    if (link_rate <= 0) throw ParameterError("link rate must be positive");
    const Rational blocking = lower_max_frame / link_rate;
    std::vector<Slot> shrunk;
    for (const auto& s : result.slots) {
      if (s.length <= blocking) continue;
      shrunk.push_back({mod(s.start + blocking, period), s.length - blocking});
    }
    std::sort(shrunk.begin(), shrunk.end(), [](const Slot& a, const Slot& b) { return a.start < b.start; });
    result.slots = std::move(shrunk);
  }
  return result;
}

Curve tdma_service_curve(const Rational& period, const Rational& open, const Rational& link_rate) {
  if (period <= 0 || open <= 0 || open > period) throw ParameterError("TDMA slot needs 0 < L <= T");
  if (link_rate <= 0) throw ParameterError("link rate must be positive");
  if (open == period) return Curve::affine(0, link_rate);
  const Rational closed = period - open;
  return Curve::from_elements({Element::point(0, 0), Element::segment(0, closed, 0, 0), Element::point(closed, 0),
                               Element::segment(closed, period, 0, link_rate)},
                              0, period, link_rate * open);
}

Curve tas_service_curve(const SlotSet& slots, const Rational& link_rate) {
  if (slots.slots.empty()) return Curve::zero();
  const Rational& period = slots.hyperperiod;
  std::optional<Curve> best;
  for (size_t i = 0; i < slots.count(); ++i) {
    const Rational wait = slots.max_wait(i);
    std::optional<Curve> sum;
    for (size_t j = 0; j < slots.count(); ++j) {
      const Rational& len = slots.slots[j].length;
      const Rational lead = period - len - wait - slots.offset(j, i);
      if (lead < 0) throw std::logic_error("guaranteed slots overlap");
      Curve term = shift_left(tdma_service_curve(period, len, link_rate), lead);
      sum = sum ? *sum + term : term;
    }
    best = best ? minimum(*best, *sum) : *sum;
  }
  return *best;
}

Curve tt_open_time_bound(const Gcl& gcl) {
  gcl.validate();
  const auto windows = gcl.time_triggered_windows();
  if (windows.empty()) return Curve::zero();
  const Rational& period = gcl.hyperperiod;
  std::optional<Curve> best;
  for (size_t i = 0; i < windows.size(); ++i) {
    std::optional<Curve> sum;
    for (size_t j = 0; j < windows.size(); ++j) {
      const Rational offset = mod(windows[j].start - windows[i].start, period);
      Curve term = Curve::staircase(windows[j].end - windows[j].start, period, offset);
      sum = sum ? *sum + term : term;
    }
    best = best ? maximum(*best, *sum) : *sum;
  }
  return *best;
}

Curve tas_cbs_service_curve(size_t x, const std::vector<CbsClassConfig>& configs, const Gcl& gcl,
                            const Rational& link_rate) {
  const Curve base = cbs_service_curve(x, configs, link_rate);
  const auto windows = gcl.time_triggered_windows();
  if (windows.empty()) return base;
  Rational closed = 0;
  for (const auto& w : windows) closed += w.end - w.start;
  if (closed >= gcl.hyperperiod) return Curve::zero();
  Rational reserved = 0;
  for (const auto& c : configs) reserved += c.idle_slope;
  const Rational usable = link_rate * (1 - closed / gcl.hyperperiod);
  if (reserved >= usable) {
    throw InfeasibleError("reserved idle slopes " + to_decimal(reserved) + " reach the rate left by time-triggered windows " +
                          to_decimal(usable));
  }
  const Curve free_time = non_decreasing_closure(Curve::affine(0, 1) + scale(tt_open_time_bound(gcl), -1));
  return compose(base, free_time);
}

}  // namespace tsnnc
