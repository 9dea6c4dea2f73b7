#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tsnnc/arrival.hpp"
#include "tsnnc/service.hpp"

namespace tsnnc {

enum class Mechanism { cbs, cbs_cdt, tas, tas_cbs, ats_cbs };

std::string to_string(Mechanism m);
std::string to_string(ClassKind k);

struct ClassConfig {
  std::string name;
  ClassKind kind = ClassKind::best_effort;
  std::optional<Rational> idle_slope;
  std::optional<Rational> send_slope;
  std::optional<Rational> max_frame;
  std::optional<Rational> lower_max_frame;

  friend bool operator==(const ClassConfig&, const ClassConfig&) = default;
};

struct GclConfig {
  Rational hyperperiod;
  std::map<std::string, std::vector<Window>> windows;  // by class name

  friend bool operator==(const GclConfig&, const GclConfig&) = default;
};

struct SchedulerConfig {
  Mechanism mechanism = Mechanism::cbs;
  std::vector<ClassConfig> classes;  // highest priority first
  std::optional<CdtSpec> cdt;
  std::optional<GclConfig> gcl;

  friend bool operator==(const SchedulerConfig&, const SchedulerConfig&) = default;
};

struct Node {
  std::string id;
  bool is_switch = false;

  friend bool operator==(const Node&, const Node&) = default;
};

struct Port {
  std::string id;
  std::string node;
  std::optional<SchedulerConfig> scheduler;

  friend bool operator==(const Port&, const Port&) = default;
};

struct Link {
  std::string from;
  std::string to;
  Rational rate;
  Rational technical_delay;

  friend bool operator==(const Link&, const Link&) = default;
};

struct NetworkModel {
  std::vector<Node> nodes;
  std::vector<Port> ports;
  std::vector<Link> links;
  std::vector<FlowSpec> flows;

  const Node& node(const std::string& id) const;
  const Port& port(const std::string& id) const;
  /// The link leaving `port_id`, or nullptr.
  const Link* link_from(const std::string& port_id) const;
  bool is_switch_port(const std::string& port_id) const;

  friend bool operator==(const NetworkModel& a, const NetworkModel& b);
};

/// A traffic class at one output port with every derived parameter filled in.
struct ResolvedClass {
  std::string name;
  ClassKind kind = ClassKind::best_effort;
  Rational idle_slope;
  Rational send_slope;
  Rational max_frame;
  Rational lower_max_frame;
};

struct ResolvedPort {
  std::string id;
  Rational link_rate;
  Mechanism mechanism = Mechanism::cbs;
  std::vector<ResolvedClass> classes;
  std::optional<CdtSpec> cdt;
  std::optional<Gcl> gcl;

  size_t index_of(const std::string& cls) const;
  /// Shaped classes in priority order, as the credit formulas expect.
  std::vector<CbsClassConfig> cbs_configs() const;
  /// 1-based position of `cls` among the shaped classes.
  size_t cbs_index(const std::string& cls) const;
};

/// Parses and validates. Structural problems throw ModelError with a location
/// such as "flows[1].cmi"; bandwidth problems throw InfeasibleError.
NetworkModel parse_model(const std::string& json_text);
NetworkModel load_model(const std::string& path);

/// Canonical JSON text: fixed key order, numbers as exact strings.
std::string serialize_model(const NetworkModel& model);

/// Checks every invariant of an already-built model.
void validate_model(const NetworkModel& model);

/// Scheduler of `port_id` with frame sizes derived from the flows crossing it.
ResolvedPort resolve_port(const NetworkModel& model, const std::string& port_id);

/// Arrival envelope parameters of a flow at its source.
BucketParams source_bucket(const NetworkModel& model, const FlowSpec& flow);

}  // namespace tsnnc
