#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "support.hpp"
#include "tsnnc/bounds.hpp"
#include "tsnnc/errors.hpp"
#include "tsnnc/network.hpp"
#include "tsnnc/report.hpp"

using namespace tsnnc;
using json = nlohmann::json;
using testing_support::q;

namespace {
json model_json(const std::string& name) {
  std::ifstream in(std::string(TSNNC_MODELS_DIR) + "/" + name, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return json::parse(s.str());
}
NetworkModel model(const std::string& name) { return parse_model(model_json(name).dump()); }
}  // namespace

TEST_CASE("two talkers through one credit-based port") {
  const NetworkReport r = analyze_network(model("cbs_two_flows.json"));
  REQUIRE(r.queues.size() == 1);
  const QueueAnalysis& a = r.queue("sw1.p1", "A");
  CHECK(a.delay == q("1.44e-4"));
  CHECK(a.service == Curve::rate_latency(q("5e7"), q("1.2e-4")));
  CHECK(a.delay == delay_bound(a.arrival, a.service));
  CHECK(a.backlog == backlog_bound(a.arrival, a.service));
  REQUIRE(r.flows.size() == 2);
  CHECK(r.flows[0].end_to_end == q("1.44e-4"));
  CHECK(r.flows[1].hops.size() == 1);
}

TEST_CASE("technical delays add to the end-to-end delay") {
  json doc = model_json("cbs_two_flows.json");
  doc["links"][0]["technicalDelay"] = "1e-6";
  doc["links"][2]["technicalDelay"] = "2.5e-6";
  const NetworkReport r = analyze_network(parse_model(doc.dump()));
  CHECK(r.flows[0].technical_delay == q("3.5e-6"));
  CHECK(r.flows[0].end_to_end == q("1.44e-4") + q("3.5e-6"));
  CHECK(r.flows[1].end_to_end == q("1.44e-4") + q("2.5e-6"));
}

TEST_CASE("control traffic lowers the shaped rate") {
  const NetworkReport r = analyze_network(model("cbs_cdt.json"));
  CHECK(r.queue("sw1.p1", "A").service.rate() == q("4.95e7"));
  CHECK(r.queue("sw1.p1", "CDT").service == Curve::rate_latency(q("1e8"), q("1.2e-4")));
}

TEST_CASE("gated ports") {
  const NetworkReport tas = analyze_network(model("tas.json"));
  CHECK(tas.queues.size() == 1);  // best effort is not analyzed
  CHECK(tas.flows.size() == 1);
  const NetworkReport ideal = analyze_network(model("tas.json"), SlotPolicy::ideal);
  CHECK(ideal.queue("sw1.p1", "TT").delay < tas.queue("sw1.p1", "TT").delay);

  const NetworkReport mixed = analyze_network(model("tas_cbs.json"));
  // credit is frozen while the gate is closed: 4e7 over three quarters of the cycle
  CHECK(mixed.queue("sw1.p1", "A").service.rate() == q("3e7"));
}

TEST_CASE("bursts grow hop by hop without reshaping") {
  json doc = model_json("ats_three_hops.json");
  for (auto& p : doc["ports"]) {
    if (p.contains("scheduler")) p["scheduler"]["mechanism"] = "CBS";
  }
  const NetworkReport r = analyze_network(parse_model(doc.dump()));
  const Rational c = q("1e8");
  const Rational rate = q("8e5");
  const Rational burst = 800 * (1 - rate / c);
  const Rational d1 = r.queue("sw1.p1", "A").delay;
  const Curve expected = minimum(Curve::affine(0, c), Curve::leaky_bucket(2 * (burst + rate * d1), 2 * rate));
  CHECK(r.queue("sw2.p1", "A").arrival == expected);
  CHECK(r.queue("sw2.p1", "A").delay > d1);
}

TEST_CASE("asynchronous shaping resets the burst at every hop") {
  const NetworkReport r = analyze_network(model("ats_three_hops.json"));
  const Rational hop = r.queue("sw1.p1", "A").delay;
  CHECK(r.queue("sw2.p1", "A").delay == hop);
  CHECK(r.queue("sw3.p1", "A").delay == hop);
  CHECK(r.flows[0].end_to_end == 3 * hop);
}

TEST_CASE("saturated queues are unbounded") {
  json doc = model_json("cbs_two_flows.json");
  doc["ports"][5]["scheduler"]["classes"][0]["idleSlope"] = "1.6e6";
  CHECK_THROWS_AS(analyze_network(parse_model(doc.dump())), UnboundedError);
}

TEST_CASE("cyclic dependencies are reported") {
  json doc = model_json("cbs_two_flows.json");
  doc["nodes"].push_back({{"id", "sw2"}, {"kind", "switch"}});
  doc["ports"].push_back({{"id", "sw2.p0"}, {"node", "sw2"}});
  doc["ports"].push_back({{"id", "sw2.p1"}, {"node", "sw2"}, {"scheduler", doc["ports"][5]["scheduler"]}});
  doc["ports"].push_back({{"id", "sw1.p4"}, {"node", "sw1"}});
  // sw1.p1 now feeds sw2, and sw2.p1 feeds sw1
  doc["links"] = json::array({{{"from", "talker1.p0"}, {"to", "sw1.p2"}, {"rate", "1e8"}},
                              {{"from", "talker2.p0"}, {"to", "sw2.p0"}, {"rate", "1e8"}},
                              {{"from", "sw1.p1"}, {"to", "sw2.p0"}, {"rate", "1e8"}},
                              {{"from", "sw2.p1"}, {"to", "sw1.p4"}, {"rate", "1e8"}}});
  doc["flows"][0]["path"] = {"talker1.p0", "sw1.p1", "sw2.p1"};
  doc["flows"][1]["path"] = {"talker2.p0", "sw2.p1", "sw1.p1"};
  const NetworkModel m = parse_model(doc.dump());
  std::string what;
  try {
    analyze_network(m);
  } catch (const CycleError& e) {
    what = e.what();
  }
  CHECK(what.find("sw1.p1 -> sw2.p1 -> sw1.p1") != std::string::npos);
}

TEST_CASE("reports are deterministic") {
  const NetworkModel m = model("tas_cbs.json");
  const std::string first = report_document(analyze_network(m)).dump(2);
  CHECK(report_document(analyze_network(m)).dump(2) == first);
}
