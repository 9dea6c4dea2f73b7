#include "tsnnc/model.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "tsnnc/errors.hpp"

namespace tsnnc {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

std::string to_string(Mechanism m) {
  switch (m) {
    case Mechanism::cbs: return "CBS";
    case Mechanism::cbs_cdt: return "CBS_CDT";
    case Mechanism::tas: return "TAS";
    case Mechanism::tas_cbs: return "TAS_CBS";
    case Mechanism::ats_cbs: return "ATS_CBS";
  }
  return "?";
}

std::string to_string(ClassKind k) {
  switch (k) {
    case ClassKind::time_triggered: return "TT";
    case ClassKind::credit_based: return "CBS";
    case ClassKind::best_effort: return "BE";
  }
  return "?";
}

namespace {

std::string at(const std::string& where, const std::string& key) { return where.empty() ? key : where + "." + key; }
std::string at(const std::string& where, size_t i) { return where + "[" + std::to_string(i) + "]"; }

const json& object(const json& j, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) throw ModelError(where.empty() ? "$" : where, "expected an object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (std::find_if(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }) == allowed.end()) {
      throw ModelError(at(where, key), "unknown field");
    }
  }
  return j;
}

const json& field(const json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) throw ModelError(at(where, key), "missing required field");
  return *it;
}

const json* optional_field(const json& j, const char* key) {
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

const json& array(const json& j, const std::string& where) {
  if (!j.is_array()) throw ModelError(where, "expected an array");
  return j;
}

std::string text(const json& j, const std::string& where) {
  if (!j.is_string()) throw ModelError(where, "expected a string");
  return j.get<std::string>();
}

Rational number(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.dump());
  if (j.is_number_float()) {
    throw ModelError(where, "binary floating-point numbers are not accepted; write \"" + j.dump() +
                                "\" as a string or a p/q fraction");
  }
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw ModelError(where, "not an exact number: \"" + j.get<std::string>() + "\"");
    }
  }
  throw ModelError(where, "expected a number");
}

Integer integer(const json& j, const std::string& where) {
  const Rational q = number(j, where);
  if (q.get_den() != 1) throw ModelError(where, "expected an integer");
  return q.get_num();
}

std::optional<Rational> optional_number(const json& j, const char* key, const std::string& where) {
  if (const json* v = optional_field(j, key)) return number(*v, at(where, key));
  return std::nullopt;
}

ClassKind parse_kind(const json& j, const std::string& where) {
  const std::string s = text(j, where);
  if (s == "TT") return ClassKind::time_triggered;
  if (s == "CBS") return ClassKind::credit_based;
  if (s == "BE") return ClassKind::best_effort;
  throw ModelError(where, "class kind must be TT, CBS or BE, got \"" + s + "\"");
}

Mechanism parse_mechanism(const json& j, const std::string& where) {
  const std::string s = text(j, where);
  for (auto m : {Mechanism::cbs, Mechanism::cbs_cdt, Mechanism::tas, Mechanism::tas_cbs, Mechanism::ats_cbs}) {
    if (to_string(m) == s) return m;
  }
  throw ModelError(where, "mechanism must be one of CBS, CBS_CDT, TAS, TAS_CBS, ATS_CBS, got \"" + s + "\"");
}

SchedulerConfig parse_scheduler(const json& j, const std::string& where) {
  object(j, where, {"mechanism", "classes", "cdt", "gcl"});
  SchedulerConfig s;
  s.mechanism = parse_mechanism(field(j, "mechanism", where), at(where, "mechanism"));
  const std::string cw = at(where, "classes");
  const json& classes = array(field(j, "classes", where), cw);
  for (size_t i = 0; i < classes.size(); ++i) {
    const std::string w = at(cw, i);
    object(classes[i], w, {"name", "kind", "idleSlope", "sendSlope", "maxFrame", "lowerMaxFrame"});
    ClassConfig c;
    c.name = text(field(classes[i], "name", w), at(w, "name"));
    c.kind = parse_kind(field(classes[i], "kind", w), at(w, "kind"));
    c.idle_slope = optional_number(classes[i], "idleSlope", w);
    c.send_slope = optional_number(classes[i], "sendSlope", w);
    c.max_frame = optional_number(classes[i], "maxFrame", w);
    c.lower_max_frame = optional_number(classes[i], "lowerMaxFrame", w);
    s.classes.push_back(std::move(c));
  }
  if (const json* cdt = optional_field(j, "cdt")) {
    const std::string w = at(where, "cdt");
    object(*cdt, w, {"burst", "rate", "maxLowerFrame"});
    s.cdt = CdtSpec{number(field(*cdt, "burst", w), at(w, "burst")), number(field(*cdt, "rate", w), at(w, "rate")),
                    number(field(*cdt, "maxLowerFrame", w), at(w, "maxLowerFrame"))};
  }
  if (const json* gcl = optional_field(j, "gcl")) {
    const std::string w = at(where, "gcl");
    object(*gcl, w, {"hyperperiod", "windows"});
    GclConfig g;
    g.hyperperiod = number(field(*gcl, "hyperperiod", w), at(w, "hyperperiod"));
    const json& windows = field(*gcl, "windows", w);
    if (!windows.is_object()) throw ModelError(at(w, "windows"), "expected an object keyed by class name");
    for (const auto& [name, list] : windows.items()) {
      const std::string lw = at(at(w, "windows"), name);
      array(list, lw);
      auto& out = g.windows[name];
      for (size_t k = 0; k < list.size(); ++k) {
        const std::string pw = at(lw, k);
        if (!list[k].is_array() || list[k].size() != 2) throw ModelError(pw, "expected [open_start, open_end]");
        out.push_back({number(list[k][0], at(pw, 0)), number(list[k][1], at(pw, 1))});
      }
    }
    s.gcl = std::move(g);
  }
  return s;
}

NetworkModel parse_document(const json& doc) {
  object(doc, "", {"nodes", "ports", "links", "flows"});
  NetworkModel m;
  const json& nodes = array(field(doc, "nodes", ""), "nodes");
  for (size_t i = 0; i < nodes.size(); ++i) {
    const std::string w = at("nodes", i);
    object(nodes[i], w, {"id", "kind"});
    const std::string kind = text(field(nodes[i], "kind", w), at(w, "kind"));
    if (kind != "end-station" && kind != "switch") {
      throw ModelError(at(w, "kind"), "node kind must be end-station or switch");
    }
    m.nodes.push_back({text(field(nodes[i], "id", w), at(w, "id")), kind == "switch"});
  }
  const json& ports = array(field(doc, "ports", ""), "ports");
  for (size_t i = 0; i < ports.size(); ++i) {
    const std::string w = at("ports", i);
    object(ports[i], w, {"id", "node", "scheduler"});
    Port p{text(field(ports[i], "id", w), at(w, "id")), text(field(ports[i], "node", w), at(w, "node")), {}};
    if (const json* s = optional_field(ports[i], "scheduler")) p.scheduler = parse_scheduler(*s, at(w, "scheduler"));
    m.ports.push_back(std::move(p));
  }
  const json& links = array(field(doc, "links", ""), "links");
  for (size_t i = 0; i < links.size(); ++i) {
    const std::string w = at("links", i);
    object(links[i], w, {"from", "to", "rate", "technicalDelay"});
    Link l{text(field(links[i], "from", w), at(w, "from")), text(field(links[i], "to", w), at(w, "to")),
           number(field(links[i], "rate", w), at(w, "rate")), Rational(0)};
    if (auto d = optional_number(links[i], "technicalDelay", w)) l.technical_delay = *d;
    m.links.push_back(std::move(l));
  }
  const json& flows = array(field(doc, "flows", ""), "flows");
  for (size_t i = 0; i < flows.size(); ++i) {
    const std::string w = at("flows", i);
    object(flows[i], w, {"id", "cmi", "mif", "mfs", "periodic", "class", "path"});
    FlowSpec f;
    f.id = text(field(flows[i], "id", w), at(w, "id"));
    f.cmi = number(field(flows[i], "cmi", w), at(w, "cmi"));
    f.mif = integer(field(flows[i], "mif", w), at(w, "mif"));
    f.mfs = integer(field(flows[i], "mfs", w), at(w, "mfs"));
    const json& periodic = field(flows[i], "periodic", w);
    if (!periodic.is_boolean()) throw ModelError(at(w, "periodic"), "expected true or false");
    f.periodic = periodic.get<bool>();
    f.traffic_class = text(field(flows[i], "class", w), at(w, "class"));
    const json& path = array(field(flows[i], "path", w), at(w, "path"));
    for (size_t k = 0; k < path.size(); ++k) f.path.push_back(text(path[k], at(at(w, "path"), k)));
    m.flows.push_back(std::move(f));
  }
  return m;
}

template <typename T>
void require_unique(const std::vector<T>& items, const char* what) {
  std::set<std::string> seen;
  for (size_t i = 0; i < items.size(); ++i) {
    if (items[i].id.empty()) throw ModelError(at(at(what, i), "id"), "id must not be empty");
    if (!seen.insert(items[i].id).second) throw ModelError(at(at(what, i), "id"), "duplicate id " + items[i].id);
  }
}

template <typename T>
size_t position(const std::vector<T>& items, const std::string& id) {
  for (size_t i = 0; i < items.size(); ++i) {
    if (items[i].id == id) return i;
  }
  return items.size();
}

// Frame sizes (bits) of flows of each class crossing a port, by class name.
std::map<std::string, Rational> flow_frames_at(const NetworkModel& model, const std::string& port_id) {
  std::map<std::string, Rational> frames;
  for (const auto& f : model.flows) {
    if (std::find(f.path.begin(), f.path.end(), port_id) == f.path.end()) continue;
    auto& v = frames[f.traffic_class];
    v = max_of(v, f.frame_bits());
  }
  return frames;
}

void validate_scheduler(const NetworkModel& model, size_t port_index) {
  const Port& port = model.ports[port_index];
  const SchedulerConfig& s = *port.scheduler;
  const std::string where = at(at("ports", port_index), "scheduler");
  const Link* out = model.link_from(port.id);
  if (out == nullptr) throw ModelError(where, "port " + port.id + " has a scheduler but no outgoing link");
  const Rational& c = out->rate;

  if (s.classes.empty()) throw ModelError(at(where, "classes"), "at least one class is required");
  std::set<std::string> names;
  bool has_tt = false;
  bool has_cbs = false;
  Rational reserved = 0;
  const auto frames = flow_frames_at(model, port.id);
  for (size_t i = 0; i < s.classes.size(); ++i) {
    const auto& cls = s.classes[i];
    const std::string w = at(at(where, "classes"), i);
    if (cls.name.empty()) throw ModelError(at(w, "name"), "class name must not be empty");
    if (!names.insert(cls.name).second) throw ModelError(at(w, "name"), "duplicate class " + cls.name);
    has_tt |= cls.kind == ClassKind::time_triggered;
    has_cbs |= cls.kind == ClassKind::credit_based;
    if (cls.kind == ClassKind::credit_based) {
      if (!cls.idle_slope) throw ModelError(at(w, "idleSlope"), "shaped classes need an idle slope");
      if (*cls.idle_slope <= 0 || *cls.idle_slope >= c) {
        throw ModelError(at(w, "idleSlope"), "idle slope must lie strictly between 0 and the link rate");
      }
      if (cls.send_slope && *cls.send_slope != *cls.idle_slope - c) {
        throw ModelError(at(w, "sendSlope"), "send slope must equal idleSlope - link rate = " +
                                                 to_decimal(*cls.idle_slope - c));
      }
      reserved += *cls.idle_slope;
    } else if (cls.idle_slope || cls.send_slope) {
      throw ModelError(w, "only CBS classes take idle and send slopes");
    }
    for (const char* key : {"maxFrame", "lowerMaxFrame"}) {
      const auto& v = std::string(key) == "maxFrame" ? cls.max_frame : cls.lower_max_frame;
      if (v && *v < 0) throw ModelError(at(w, key), "frame size must be >= 0");
    }
    if (cls.max_frame) {
      auto it = frames.find(cls.name);
      if (it != frames.end() && *cls.max_frame < it->second) {
        throw ModelError(at(w, "maxFrame"), "smaller than the largest frame of a flow in this class (" +
                                                to_decimal(it->second) + " bits)");
      }
    }
  }

  Rational below = 0;
  for (size_t i = s.classes.size(); i-- > 0;) {
    const auto& cls = s.classes[i];
    if (cls.lower_max_frame && *cls.lower_max_frame < below) {
      throw ModelError(at(at(at(where, "classes"), i), "lowerMaxFrame"),
                       "smaller than the largest lower-priority frame (" + to_decimal(below) + " bits)");
    }
    auto it = frames.find(cls.name);
    if (cls.max_frame) below = max_of(below, *cls.max_frame);
    if (it != frames.end()) below = max_of(below, it->second);
  }

  const bool needs_cdt = s.mechanism == Mechanism::cbs_cdt;
  const bool allows_cdt = needs_cdt || s.mechanism == Mechanism::ats_cbs;
  const bool needs_gcl = s.mechanism == Mechanism::tas || s.mechanism == Mechanism::tas_cbs;
  if (needs_cdt && !s.cdt) throw ModelError(at(where, "cdt"), "CBS_CDT needs a cdt envelope");
  if (!allows_cdt && s.cdt) throw ModelError(at(where, "cdt"), "only CBS_CDT and ATS_CBS take a cdt envelope");
  if (needs_gcl && !s.gcl) throw ModelError(at(where, "gcl"), to_string(s.mechanism) + " needs a gate control list");
  if (!needs_gcl && s.gcl) throw ModelError(at(where, "gcl"), "only TAS and TAS_CBS take a gate control list");
  if (has_tt && !needs_gcl && !s.cdt) {
    throw ModelError(at(where, "classes"), "TT classes above shaped classes need a cdt envelope (CBS_CDT or ATS_CBS)");
  }
  if (s.mechanism == Mechanism::tas && has_cbs) {
    throw ModelError(at(where, "classes"), "TAS ports take TT and BE classes; use TAS_CBS for shaped classes");
  }

  if (s.cdt) {
    const std::string w = at(where, "cdt");
    if (s.cdt->burst < 0 || s.cdt->rate < 0 || s.cdt->max_lower_frame < 0) {
      throw ModelError(w, "burst, rate and maxLowerFrame must be >= 0");
    }
    if (s.cdt->rate >= c) throw InfeasibleError(at(w, "rate") + ": control traffic rate reaches the link rate");
  }
  if (reserved >= c) {
    throw InfeasibleError(at(where, "classes") + ": reserved idle slopes " + to_decimal(reserved) +
                          " reach the link rate " + to_decimal(c));
  }
  if (s.cdt && has_cbs) {
    for (const auto& cls : s.classes) {
      if (cls.kind == ClassKind::credit_based && *cls.idle_slope + s.cdt->rate >= c) {
        throw InfeasibleError(at(where, "cdt") + ": idle slope of " + cls.name +
                              " plus control traffic rate reaches the link rate");
      }
    }
  }

  if (s.gcl) {
    const std::string w = at(where, "gcl");
    if (s.gcl->hyperperiod <= 0) throw ModelError(at(w, "hyperperiod"), "must be positive");
    for (const auto& [name, list] : s.gcl->windows) {
      if (!names.count(name)) throw ModelError(at(at(w, "windows"), name), "no class of that name at this port");
      Gcl one{s.gcl->hyperperiod, {{name, ClassKind::best_effort, list}}};
      try {
        one.validate();
      } catch (const ParameterError& e) {
        throw ModelError(at(at(w, "windows"), name), e.what());
      }
    }
    if (s.mechanism == Mechanism::tas_cbs) {
      // shaped and best-effort gates open exactly when no TT gate is
      const Gcl gcl = resolve_port(model, port.id).gcl.value();
      std::vector<Window> free;
      Rational cursor = 0;
      auto tt = gcl.time_triggered_windows();
      std::vector<Window> linear;
      for (const auto& x : tt) {
        if (x.end > gcl.hyperperiod) {
          linear.push_back({x.start, gcl.hyperperiod});
          linear.insert(linear.begin(), {0, x.end - gcl.hyperperiod});
        } else {
          linear.push_back(x);
        }
      }
      for (const auto& x : linear) {
        if (cursor < x.start) free.push_back({cursor, x.start});
        cursor = x.end;
      }
      if (cursor < gcl.hyperperiod) free.push_back({cursor, gcl.hyperperiod});
      for (const auto& cls : gcl.classes) {
        if (cls.kind == ClassKind::time_triggered) continue;
        if (cls.windows != free) {
          throw ModelError(at(at(w, "windows"), cls.name),
                           "CBS and BE gates must be open exactly when every TT gate is closed");
        }
      }
    }
  }
}

}  // namespace

const Node& NetworkModel::node(const std::string& id) const {
  const size_t i = position(nodes, id);
  if (i == nodes.size()) throw ModelError("nodes", "unknown node " + id);
  return nodes[i];
}

const Port& NetworkModel::port(const std::string& id) const {
  const size_t i = position(ports, id);
  if (i == ports.size()) throw ModelError("ports", "unknown port " + id);
  return ports[i];
}

const Link* NetworkModel::link_from(const std::string& port_id) const {
  for (const auto& l : links) {
    if (l.from == port_id) return &l;
  }
  return nullptr;
}

bool NetworkModel::is_switch_port(const std::string& port_id) const { return node(port(port_id).node).is_switch; }

bool operator==(const NetworkModel& a, const NetworkModel& b) {
  if (a.nodes != b.nodes || a.ports != b.ports || a.links != b.links || a.flows.size() != b.flows.size()) return false;
  for (size_t i = 0; i < a.flows.size(); ++i) {
    const auto& x = a.flows[i];
    const auto& y = b.flows[i];
    if (x.id != y.id || x.cmi != y.cmi || x.mif != y.mif || x.mfs != y.mfs || x.periodic != y.periodic ||
        x.traffic_class != y.traffic_class || x.path != y.path) {
      return false;
    }
  }
  return true;
}

void validate_model(const NetworkModel& model) {
  require_unique(model.nodes, "nodes");
  require_unique(model.ports, "ports");
  require_unique(model.flows, "flows");

  for (size_t i = 0; i < model.ports.size(); ++i) {
    const Port& p = model.ports[i];
    if (position(model.nodes, p.node) == model.nodes.size()) {
      throw ModelError(at(at("ports", i), "node"), "unknown node " + p.node);
    }
    if (p.scheduler && !model.node(p.node).is_switch) {
      throw ModelError(at(at("ports", i), "scheduler"), "schedulers belong on switch ports only");
    }
  }
  std::set<std::string> sources;
  for (size_t i = 0; i < model.links.size(); ++i) {
    const Link& l = model.links[i];
    const std::string w = at("links", i);
    if (position(model.ports, l.from) == model.ports.size()) throw ModelError(at(w, "from"), "unknown port " + l.from);
    if (position(model.ports, l.to) == model.ports.size()) throw ModelError(at(w, "to"), "unknown port " + l.to);
    if (!sources.insert(l.from).second) throw ModelError(at(w, "from"), "port " + l.from + " already has a link");
    if (model.port(l.from).node == model.port(l.to).node) throw ModelError(w, "link must join two different nodes");
    if (l.rate <= 0) throw ModelError(at(w, "rate"), "link rate must be positive");
    if (l.technical_delay < 0) throw ModelError(at(w, "technicalDelay"), "must be >= 0");
  }

  for (size_t i = 0; i < model.flows.size(); ++i) {
    const FlowSpec& f = model.flows[i];
    const std::string w = at("flows", i);
    if (f.cmi <= 0) throw ModelError(at(w, "cmi"), "must be positive");
    if (f.mif < 1) throw ModelError(at(w, "mif"), "must be at least 1");
    if (f.mfs < 1) throw ModelError(at(w, "mfs"), "must be at least 1");
    if (f.traffic_class.empty()) throw ModelError(at(w, "class"), "must not be empty");
    if (f.path.empty()) throw ModelError(at(w, "path"), "must list at least the source port");
    std::set<std::string> seen;
    for (size_t k = 0; k < f.path.size(); ++k) {
      const std::string pw = at(at(w, "path"), k);
      const std::string& pid = f.path[k];
      if (position(model.ports, pid) == model.ports.size()) throw ModelError(pw, "unknown port " + pid);
      if (!seen.insert(pid).second) throw ModelError(pw, "port " + pid + " appears twice");
      const Link* out = model.link_from(pid);
      if (out == nullptr) throw ModelError(pw, "port " + pid + " has no outgoing link");
      if (k == 0) {
        if (model.is_switch_port(pid)) throw ModelError(pw, "path must start at an end-station port");
      } else {
        const Link* prev = model.link_from(f.path[k - 1]);
        if (model.port(prev->to).node != model.port(pid).node) {
          throw ModelError(pw, "port " + pid + " is not reachable from " + f.path[k - 1]);
        }
        if (!model.is_switch_port(pid)) throw ModelError(pw, "only the first path port may be on an end-station");
        const auto& sched = model.port(pid).scheduler;
        if (!sched) throw ModelError(pw, "switch port " + pid + " has no scheduler");
        if (std::none_of(sched->classes.begin(), sched->classes.end(),
                         [&](const ClassConfig& c) { return c.name == f.traffic_class; })) {
          throw ModelError(at(w, "class"), "class " + f.traffic_class + " is not configured at port " + pid);
        }
      }
      if (f.interval_bits() > out->rate * f.cmi) {
        throw InfeasibleError(w + " (" + f.id + "): " + to_decimal(f.interval_bits()) +
                              " bits per interval exceed the capacity of the link from " + pid);
      }
    }
  }

  for (size_t i = 0; i < model.ports.size(); ++i) {
    if (model.ports[i].scheduler) validate_scheduler(model, i);
  }
}

NetworkModel parse_model(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ModelError("$", std::string("invalid JSON: ") + e.what());
  }
  NetworkModel m = parse_document(doc);
  validate_model(m);
  return m;
}

NetworkModel load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ModelError(path, "cannot open model file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str());
}

std::string serialize_model(const NetworkModel& model) {
  auto num = [](const Rational& q) { return to_exact_string(q); };
  ojson doc;
  doc["nodes"] = ojson::array();
  for (const auto& n : model.nodes) {
    doc["nodes"].push_back({{"id", n.id}, {"kind", n.is_switch ? "switch" : "end-station"}});
  }
  doc["ports"] = ojson::array();
  for (const auto& p : model.ports) {
    ojson port = {{"id", p.id}, {"node", p.node}};
    if (p.scheduler) {
      const auto& s = *p.scheduler;
      ojson sched = {{"mechanism", to_string(s.mechanism)}, {"classes", ojson::array()}};
      for (const auto& c : s.classes) {
        ojson cls = {{"name", c.name}, {"kind", to_string(c.kind)}};
        if (c.idle_slope) cls["idleSlope"] = num(*c.idle_slope);
        if (c.send_slope) cls["sendSlope"] = num(*c.send_slope);
        if (c.max_frame) cls["maxFrame"] = num(*c.max_frame);
        if (c.lower_max_frame) cls["lowerMaxFrame"] = num(*c.lower_max_frame);
        sched["classes"].push_back(cls);
      }
      if (s.cdt) {
        sched["cdt"] = {{"burst", num(s.cdt->burst)}, {"rate", num(s.cdt->rate)},
                        {"maxLowerFrame", num(s.cdt->max_lower_frame)}};
      }
      if (s.gcl) {
        ojson windows = ojson::object();
        for (const auto& [name, list] : s.gcl->windows) {
          ojson arr = ojson::array();
          for (const auto& w : list) arr.push_back({num(w.start), num(w.end)});
          windows[name] = arr;
        }
        sched["gcl"] = {{"hyperperiod", num(s.gcl->hyperperiod)}, {"windows", windows}};
      }
      port["scheduler"] = sched;
    }
    doc["ports"].push_back(port);
  }
  doc["links"] = ojson::array();
  for (const auto& l : model.links) {
    doc["links"].push_back(
        {{"from", l.from}, {"to", l.to}, {"rate", num(l.rate)}, {"technicalDelay", num(l.technical_delay)}});
  }
  doc["flows"] = ojson::array();
  for (const auto& f : model.flows) {
    doc["flows"].push_back({{"id", f.id},
                            {"cmi", num(f.cmi)},
                            {"mif", num(Rational(f.mif))},
                            {"mfs", num(Rational(f.mfs))},
                            {"periodic", f.periodic},
                            {"class", f.traffic_class},
                            {"path", f.path}});
  }
  return doc.dump(2) + "\n";
}

size_t ResolvedPort::index_of(const std::string& cls) const {
  for (size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].name == cls) return i;
  }
  throw ModelError(id, "no class " + cls);
}

std::vector<CbsClassConfig> ResolvedPort::cbs_configs() const {
  std::vector<CbsClassConfig> out;
  for (const auto& c : classes) {
    if (c.kind == ClassKind::credit_based) out.push_back({c.idle_slope, c.send_slope, c.max_frame, c.lower_max_frame});
  }
  return out;
}

size_t ResolvedPort::cbs_index(const std::string& cls) const {
  size_t x = 0;
  for (const auto& c : classes) {
    if (c.kind != ClassKind::credit_based) continue;
    ++x;
    if (c.name == cls) return x;
  }
  throw ModelError(id, "class " + cls + " is not a shaped class");
}

ResolvedPort resolve_port(const NetworkModel& model, const std::string& port_id) {
  const Port& port = model.port(port_id);
  if (!port.scheduler) throw ModelError(port_id, "port has no scheduler");
  const Link* out = model.link_from(port_id);
  if (out == nullptr) throw ModelError(port_id, "port has no outgoing link");
  const SchedulerConfig& s = *port.scheduler;
  const auto frames = flow_frames_at(model, port_id);

  ResolvedPort r;
  r.id = port_id;
  r.link_rate = out->rate;
  r.mechanism = s.mechanism;
  r.cdt = s.cdt;
  for (const auto& c : s.classes) {
    ResolvedClass rc;
    rc.name = c.name;
    rc.kind = c.kind;
    if (c.kind == ClassKind::credit_based) {
      rc.idle_slope = *c.idle_slope;
      rc.send_slope = c.send_slope ? *c.send_slope : *c.idle_slope - out->rate;
    }
    auto it = frames.find(c.name);
    rc.max_frame = c.max_frame ? *c.max_frame : (it == frames.end() ? Rational(0) : it->second);
    r.classes.push_back(std::move(rc));
  }
  // lower-priority blocking, from the resolved frames below each class
  Rational below = 0;
  for (size_t i = r.classes.size(); i-- > 0;) {
    const auto& given = s.classes[i].lower_max_frame;
    if (given && *given < below) {
      throw ModelError(port_id + ".classes." + s.classes[i].name + ".lowerMaxFrame",
                       "smaller than the largest lower-priority frame (" + to_decimal(below) + " bits)");
    }
    r.classes[i].lower_max_frame = given ? *given : below;
    below = max_of(below, r.classes[i].max_frame);
  }
  if (s.gcl) {
    Gcl g;
    g.hyperperiod = s.gcl->hyperperiod;
    for (const auto& c : s.classes) {
      auto it = s.gcl->windows.find(c.name);
      g.classes.push_back({c.name, c.kind, it == s.gcl->windows.end() ? std::vector<Window>{} : it->second});
    }
    r.gcl = std::move(g);
  }
  return r;
}

BucketParams source_bucket(const NetworkModel& model, const FlowSpec& flow) {
  const Link* out = model.link_from(flow.path.front());
  if (out == nullptr) throw ModelError("flows." + flow.id, "source port has no outgoing link");
  return simple_arrival_params(flow, out->rate);
}

}  // namespace tsnnc
