#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tsnnc/model.hpp"

namespace tsnnc {

/// How the sources release their frames.
struct TrafficPolicy {
  enum class Kind { greedy, randomized };
  Kind kind = Kind::greedy;
  std::uint64_t seed = 0;

  static TrafficPolicy greedy() { return {}; }
  static TrafficPolicy randomized(std::uint64_t seed) { return {Kind::randomized, seed}; }
};

/// What one class queue at one switch output port experienced.
struct ClassObservation {
  std::string port;
  std::string traffic_class;
  ClassKind kind = ClassKind::best_effort;
  std::size_t frames = 0;    // frames that entered the queue
  std::size_t departed = 0;  // frames fully sent before the simulation stopped
  Rational max_delay;        // last bit in to last bit out
  Rational max_backlog;      // wire bits arrived minus bits sent
  Rational max_credit;       // shaped classes only
};

struct SimResult {
  std::vector<ClassObservation> classes;
  std::uint64_t events = 0;
  std::optional<std::uint64_t> seed;  // set for randomized traffic
  bool conservation_held = true;      // no frame left before it fully arrived
  bool fifo_held = true;              // each queue sent in arrival order

  const ClassObservation& observation(const std::string& port, const std::string& cls) const;
};

/// Event-driven simulation of a single-switch network. Sources release
/// frames over [0, horizon); the run continues until every queue drains or
/// time reaches twice the horizon. Frames that never leave count with the
/// delay they had accumulated by then. Throws ScopeError for models with more
/// than one switch hop.
SimResult simulate_schedule(const NetworkModel& model, const Rational& horizon, const TrafficPolicy& traffic);

}  // namespace tsnnc
