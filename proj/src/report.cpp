#include "tsnnc/report.hpp"

#include <iomanip>
#include <sstream>

namespace tsnnc {

using ojson = nlohmann::ordered_json;

ojson exact_value(const Rational& q) { return {{"exact", to_exact_string(q)}, {"decimal", to_decimal(q)}}; }

ojson report_document(const NetworkReport& report) {
  ojson doc;
  doc["queues"] = ojson::array();
  for (const auto& q : report.queues) {
    doc["queues"].push_back({{"port", q.port},
                             {"class", q.traffic_class},
                             {"flows", q.flows},
                             {"arrivalRate", exact_value(q.arrival.rate())},
                             {"serviceRate", exact_value(q.service.rate())},
                             {"delay", exact_value(q.delay)},
                             {"backlog", exact_value(q.backlog)}});
  }
  doc["flows"] = ojson::array();
  for (const auto& f : report.flows) {
    ojson hops = ojson::array();
    for (const auto& h : f.hops) hops.push_back({{"port", h.port}, {"delay", exact_value(h.delay)}});
    doc["flows"].push_back({{"id", f.flow},
                            {"hops", hops},
                            {"technicalDelay", exact_value(f.technical_delay)},
                            {"endToEndDelay", exact_value(f.end_to_end)}});
  }
  return doc;
}

std::string report_table(const NetworkReport& report) {
  std::ostringstream os;
  os << std::left << std::setw(16) << "port" << std::setw(10) << "class" << std::setw(22) << "delay [s]"
     << "backlog [bit]\n";
  for (const auto& q : report.queues) {
    os << std::setw(16) << q.port << std::setw(10) << q.traffic_class << std::setw(22) << to_decimal(q.delay)
       << to_decimal(q.backlog) << '\n';
  }
  os << '\n' << std::setw(16) << "flow" << std::setw(10) << "hops" << "end-to-end delay [s]\n";
  for (const auto& f : report.flows) {
    os << std::setw(16) << f.flow << std::setw(10) << f.hops.size() << to_decimal(f.end_to_end) << '\n';
  }
  return os.str();
}

}  // namespace tsnnc
