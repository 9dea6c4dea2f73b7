// Command-line front end: analyze, curve, validate, simulate, compare.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "tsnnc/errors.hpp"
#include "tsnnc/render.hpp"
#include "tsnnc/report.hpp"
#include "tsnnc/validation.hpp"

namespace {

using namespace tsnnc;
using ojson = nlohmann::ordered_json;

constexpr int kExitOther = 1;
constexpr int kExitParse = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitUnbounded = 4;

Rational number_flag(const std::string& name, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument&) {
    throw ParameterError("--" + name + ": not a number: " + text);
  }
}

SlotPolicy policy_flag(const std::string& text) {
  if (text == "ideal") return SlotPolicy::ideal;
  return SlotPolicy::nonpreemptive_blocking;
}

void emit(const std::string& out, const std::string& text) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw Error("cannot write " + out);
  f << text;
}

std::string dump(const ojson& doc) { return doc.dump(2) + "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Worst-case delay and backlog bounds for TSN output ports"};
  app.require_subcommand(1);

  std::string model_path;
  std::string out;
  std::string policy = "nonpreemptive-blocking";
  std::string port;
  std::string cls;
  std::string which = "service";
  std::string step;
  std::string horizon;
  std::string seed;
  std::size_t trials = 10;

  auto policy_option = [&](CLI::App* sub) {
    sub->add_option("--policy", policy, "guaranteed-slot policy for gated ports")
        ->check(CLI::IsMember({"ideal", "nonpreemptive-blocking"}));
  };

  auto* analyze = app.add_subcommand("analyze", "compute per-queue and end-to-end bounds");
  analyze->add_option("model", model_path, "network model JSON")->required();
  analyze->add_option("--out", out, "write the report JSON here and print a table");
  policy_option(analyze);

  auto* curve = app.add_subcommand("curve", "sample one queue's arrival, service or output curve as CSV");
  curve->add_option("model", model_path, "network model JSON")->required();
  curve->add_option("--port", port, "switch output port")->required();
  curve->add_option("--class", cls, "traffic class")->required();
  curve->add_option("--which", which, "curve to sample")->check(CLI::IsMember({"arrival", "service", "output"}));
  curve->add_option("--step", step, "sampling step in seconds")->required();
  curve->add_option("--horizon", horizon, "last sample time in seconds")->required();
  curve->add_option("--out", out, "CSV file (default: stdout)");
  policy_option(curve);

  auto* validate = app.add_subcommand("validate", "check a model without analyzing it");
  validate->add_option("model", model_path, "network model JSON")->required();

  auto* simulate = app.add_subcommand("simulate", "run the single-switch simulator");
  simulate->add_option("model", model_path, "network model JSON")->required();
  simulate->add_option("--horizon", horizon, "release frames during [0, horizon) seconds")->required();
  simulate->add_option("--seed", seed, "randomized traffic with this seed (default: greedy)");
  simulate->add_option("--out", out, "result JSON file (default: stdout)");

  auto* compare = app.add_subcommand("compare", "check the bounds against simulation");
  compare->add_option("model", model_path, "network model JSON")->required();
  compare->add_option("--horizon", horizon, "simulated release window in seconds")->required();
  compare->add_option("--trials", trials, "randomized runs besides the greedy one");
  compare->add_option("--seed", seed, "first seed of the randomized runs");
  compare->add_option("--out", out, "report JSON file (default: stdout)");
  policy_option(compare);

  CLI11_PARSE(app, argc, argv);

  try {
    const NetworkModel model = load_model(model_path);
    const SlotPolicy slots = policy_flag(policy);

    if (*analyze) {
      const NetworkReport report = analyze_network(model, slots);
      if (out.empty()) {
        std::cout << dump(report_document(report));
      } else {
        emit(out, dump(report_document(report)));
        std::cout << report_table(report);
      }
    } else if (*curve) {
      const NetworkReport report = analyze_network(model, slots);
      const QueueAnalysis& q = report.queue(port, cls);
      const Curve& f = which == "arrival" ? q.arrival : which == "output" ? q.output : q.service;
      emit(out, samples_csv(f, number_flag("step", step), number_flag("horizon", horizon)));
    } else if (*validate) {
      std::cout << model_path << ": ok (" << model.flows.size() << " flows)\n";
    } else if (*simulate) {
      const TrafficPolicy traffic =
          seed.empty() ? TrafficPolicy::greedy() : TrafficPolicy::randomized(std::stoull(seed));
      emit(out, dump(sim_result_document(simulate_schedule(model, number_flag("horizon", horizon), traffic))));
    } else if (*compare) {
      CheckOptions options;
      options.trials = trials;
      options.policy = slots;
      if (!seed.empty()) options.first_seed = std::stoull(seed);
      const Verdict verdict = check_bounds_against_sim(model, number_flag("horizon", horizon), options);
      ojson doc = report_document(analyze_network(model, slots));
      doc["validation"] = verdict_document(verdict);
      emit(out, dump(doc));
      std::cerr << "verdict: " << (verdict.pass ? "PASS" : "FAIL") << "\n";
      return verdict.pass ? 0 : kExitOther;
    }
  } catch (const ModelError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const UnboundedError& e) {
    std::cerr << "unbounded: " << e.what() << "\n";
    return kExitUnbounded;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOther;
  }
  return 0;
}
