#pragma once

#include <map>
#include <string>
#include <vector>

#include "tsnnc/model.hpp"

namespace tsnnc {

/// Bounds for one traffic class at one output port.
struct QueueAnalysis {
  std::string port;
  std::string traffic_class;
  std::vector<std::string> flows;
  Curve arrival;
  Curve service;
  Rational delay;
  Rational backlog;
  Curve output;
};

struct HopDelay {
  std::string port;
  Rational delay;
};

struct FlowReport {
  std::string flow;
  std::vector<HopDelay> hops;
  Rational technical_delay;  // sum over the links on the path
  Rational end_to_end;
};

struct NetworkReport {
  std::vector<QueueAnalysis> queues;  // in analysis order
  std::vector<FlowReport> flows;      // in model order

  const QueueAnalysis& queue(const std::string& port, const std::string& cls) const;
};

/// Leaky-bucket envelope of one flow as it enters a port, plus the rate of the
/// link it arrives on.
struct FlowEnvelope {
  std::string flow;
  Rational burst;
  Rational rate;
  std::string input_link;  // port id the traffic comes from
  Rational input_rate;
};

/// Service curve of `cls` at a resolved port.
Curve queue_service_curve(const ResolvedPort& port, const std::string& cls, SlotPolicy policy);

/// Aggregates the envelopes per input link, capped by that link's rate, then
/// computes the three bounds. Throws UnboundedError naming the queue when the
/// arrival rate reaches the service rate.
QueueAnalysis analyze_queue(const ResolvedPort& port, const std::string& cls,
                            const std::vector<FlowEnvelope>& envelopes, SlotPolicy policy);

/// Switch output ports ordered so that every port comes after the ports
/// feeding it. Throws CycleError naming the cycle.
std::vector<std::string> port_order(const NetworkModel& model);

/// Successive per-hop analysis of every shaped, time-triggered or control
/// class queue that carries flows.
NetworkReport analyze_network(const NetworkModel& model, SlotPolicy policy = SlotPolicy::nonpreemptive_blocking);

}  // namespace tsnnc
