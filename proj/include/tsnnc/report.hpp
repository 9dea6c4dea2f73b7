#pragma once

#include <string>

#include <json.hpp>

#include "tsnnc/network.hpp"

namespace tsnnc {

/// {"exact": "p/q", "decimal": "..."}.
nlohmann::ordered_json exact_value(const Rational& q);

/// Report document with `queues` and `flows`; keys in a fixed order.
nlohmann::ordered_json report_document(const NetworkReport& report);

/// Fixed-width text table of queue and flow bounds.
std::string report_table(const NetworkReport& report);

}  // namespace tsnnc
