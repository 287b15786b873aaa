#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "config.hpp"
#include "report.hpp"

namespace segalwb {

// Names accepted in `suite` lists, in declaration order.
const std::vector<std::string>& suite_names();

// Appends the checks of one suite; throws ConfigError for unknown names or bad bounds.
void run_suite(const std::string& name, const RunConfig& cfg, Report& report);

// Objects and hom-set sizes of every index category for the configured group and truncation.
void describe_categories(const RunConfig& cfg, std::ostream& out);

}  // namespace segalwb
