#pragma once

#include <string>

#include <json.hpp>

#include "qturan/bounds.hpp"

namespace qturan {

nlohmann::json to_json(const BoundReport& r);

// Shortest round-trip decimal form.
std::string format_double(double v);

// Header: graph,n,m,omega,bound_name,bound_value,measured,slack,equality,classification
std::string csv_header();
// One row per bound record.
std::string csv_rows(const BoundReport& r);

}  // namespace qturan
