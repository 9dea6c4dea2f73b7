#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tsnnc/curve.hpp"

namespace tsnnc {

/// One credit-based shaper queue. Queues are passed in priority order, the
/// first entry being the highest-priority shaped class.
struct CbsClassConfig {
  Rational idle_slope;       // bits/s, reserved rate
  Rational send_slope;       // bits/s, negative; idle_slope - send_slope = C
  Rational max_frame;        // bits, largest frame of this class
  Rational lower_max_frame;  // bits, largest frame of any lower priority
};

/// Leaky-bucket envelope of the control traffic above all shaped classes.
struct CdtSpec {
  Rational burst;            // bits
  Rational rate;             // bits/s
  Rational max_lower_frame;  // bits

  friend bool operator==(const CdtSpec&, const CdtSpec&) = default;
};

/// Highest credit reachable by shaped class `x` (1-based).
Rational cbs_max_credit(size_t x, const std::vector<CbsClassConfig>& configs, const Rational& link_rate);

/// Rate-latency curve with rate I and latency Vmax / I.
Curve cbs_service_curve(size_t x, const std::vector<CbsClassConfig>& configs, const Rational& link_rate);

/// Time spent sending control traffic during a window of length t:
/// (b + r (t + lmax / C)) / C.
Curve cdt_busy_time(const CdtSpec& cdt, const Rational& link_rate);

/// Output envelope of the control traffic, alpha (/) C [t - lmax / C]^+.
Curve cdt_output_bound(const CdtSpec& cdt, const Rational& link_rate);

/// The shaped curve evaluated at t minus the control traffic's busy time.
Curve cbs_cdt_service_curve(size_t x, const std::vector<CbsClassConfig>& configs, const CdtSpec& cdt,
                            const Rational& link_rate);

/// Shaped class behind an asynchronous traffic shaper: same curve as plain
/// CBS (or CBS with control traffic).
Curve ats_cbs_service_curve(size_t x, const std::vector<CbsClassConfig>& configs,
                            const std::optional<CdtSpec>& cdt, const Rational& link_rate);

enum class ClassKind { time_triggered, credit_based, best_effort };

struct Window {
  Rational start;
  Rational end;

  friend bool operator==(const Window&, const Window&) = default;
};

struct GclClass {
  std::string name;
  ClassKind kind = ClassKind::best_effort;
  std::vector<Window> windows;  // sorted, disjoint, inside [0, hyperperiod)
};

/// Gate control list. Classes are listed highest priority first.
struct Gcl {
  Rational hyperperiod;
  std::vector<GclClass> classes;

  /// Throws ParameterError when windows are unsorted, overlapping or outside
  /// the hyperperiod.
  void validate() const;
  /// Index of the class named `name`; throws ParameterError if unknown.
  size_t index_of(const std::string& name) const;
  /// Merged gate-open intervals of every time-triggered class, as cyclic
  /// intervals (an interval may extend past the hyperperiod).
  std::vector<Window> time_triggered_windows() const;
};

enum class SlotPolicy { ideal, nonpreemptive_blocking };

struct Slot {
  Rational start;   // in [0, hyperperiod)
  Rational length;  // may run past the hyperperiod end
};

/// Guaranteed transmission slots of one class within a hyperperiod.
struct SlotSet {
  Rational hyperperiod;
  std::vector<Slot> slots;  // ordered by start

  size_t count() const { return slots.size(); }
  /// Longest wait from the start of a backlogged period to slot i.
  Rational max_wait(size_t i) const;
  /// Start-to-start offset from slot i to slot j, in [0, hyperperiod).
  Rational offset(size_t j, size_t i) const;
  Rational total_length() const;
};

/// Open windows of class `class_index` minus every higher-priority window.
/// Under nonpreemptive blocking each slot start is delayed by the
/// transmission time of `lower_max_frame` bits.
SlotSet guaranteed_slots(const Gcl& gcl, size_t class_index, SlotPolicy policy, const Rational& link_rate,
                         const Rational& lower_max_frame);

/// C max(floor(t/T) L, t - ceil(t/T) (T - L)).
Curve tdma_service_curve(const Rational& period, const Rational& open, const Rational& link_rate);

/// Minimum over reference slots of the summed TDMA curves of every slot.
/// Zero curve for an empty slot set.
Curve tas_service_curve(const SlotSet& slots, const Rational& link_rate);

/// Upper bound on the time time-triggered gates are open within any window
/// of length t.
Curve tt_open_time_bound(const Gcl& gcl);

/// Shaped-class curve evaluated on the time the time-triggered gates leave
/// free: beta_cbs(sup_{u <= t} u - f(u)).
Curve tas_cbs_service_curve(size_t x, const std::vector<CbsClassConfig>& configs, const Gcl& gcl,
                            const Rational& link_rate);

}  // namespace tsnnc
