#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tsnnc/network.hpp"
#include "tsnnc/simulator.hpp"

namespace tsnnc {

struct CheckOptions {
  std::size_t trials = 10;       // randomized runs on top of the greedy one
  std::uint64_t first_seed = 1;  // seeds first_seed, first_seed + 1, ...
  SlotPolicy policy = SlotPolicy::nonpreemptive_blocking;
  /// Harness self-test: lower every delay bound by one transmission time of
  /// the class's largest frame and every backlog bound by that frame.
  bool weaken = false;
};

/// One analyzed queue compared with the worst the simulator saw.
struct BoundCheck {
  std::string port;
  std::string traffic_class;
  // The simulator measures from the last bit received, so the analyzed
  // service is followed by the store-and-forward wait of the largest frame
  // on its input link before comparing.
  Rational delay_bound;
  Rational backlog_bound;
  Rational observed_delay;
  Rational observed_backlog;
  std::optional<Rational> credit_bound;  // shaped classes
  Rational observed_credit;
  bool holds = true;

  std::optional<Rational> delay_tightness() const;
  std::optional<Rational> backlog_tightness() const;
};

struct Verdict {
  bool pass = true;
  std::vector<BoundCheck> checks;
  std::vector<SimResult> runs;  // greedy first
};

/// Analyzes the model, simulates it under greedy traffic and `trials`
/// randomized seeds, and compares every observation with its bound.
Verdict check_bounds_against_sim(const NetworkModel& model, const Rational& horizon, const CheckOptions& options = {});

/// True when the checker rejects deliberately weakened bounds on `model`.
bool harness_catches_weakened_bounds(const NetworkModel& model, const Rational& horizon);

nlohmann::ordered_json sim_result_document(const SimResult& result);
nlohmann::ordered_json verdict_document(const Verdict& verdict);

}  // namespace tsnnc
