#pragma once

#include <string>
#include <vector>

#include "tsnnc/curve.hpp"

namespace tsnnc {

/// Traffic contract of one stream: at most `mif` frames of `mfs` bytes in
/// every class measurement interval `cmi`.
struct FlowSpec {
  std::string id;
  Rational cmi;      // seconds
  Integer mif = 1;   // frames per interval
  Integer mfs = 1;   // bytes per frame
  bool periodic = true;
  std::string traffic_class;
  std::vector<std::string> path;  // output port ids, source first

  /// Bits per interval.
  Rational interval_bits() const { return Rational(mif * mfs * 8); }
  Rational frame_bits() const { return Rational(mfs * 8); }
  Rational rate() const { return interval_bits() / cmi; }
};

/// Throws ParameterError for an ill-formed contract and InfeasibleError when
/// one interval's worth of bits does not fit the link of rate `link_rate`.
void check_flow(const FlowSpec& flow, const Rational& link_rate);

/// min(C t, b + r t), r = m / cmi, b = m (1 - r / C), doubled when aperiodic.
Curve simple_arrival(const FlowSpec& flow, const Rational& link_rate);

/// Burst parameters of simple_arrival.
struct BucketParams {
  Rational burst;
  Rational rate;
};
BucketParams simple_arrival_params(const FlowSpec& flow, const Rational& link_rate);

/// (m ceil(t / cmi)) convolved with C t.
Curve detailed_periodic_arrival(const FlowSpec& flow, const Rational& link_rate);

/// (m ceil((t + cmi) / cmi)) convolved with C t, zero at t = 0.
Curve detailed_aperiodic_legacy(const FlowSpec& flow, const Rational& link_rate);

/// sup_{u <= t} C (u - [(cmi - m/C) ceil((u - 2m/C) / cmi)]^+).
Curve detailed_aperiodic_improved(const FlowSpec& flow, const Rational& link_rate);

/// Pointwise sum. Throws ParameterError on an empty list.
Curve aggregate_arrivals(const std::vector<Curve>& curves);

}  // namespace tsnnc
