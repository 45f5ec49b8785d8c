#pragma once

#include <json.hpp>

#include <iosfwd>

namespace symcirc {

// Closed forms and walk solutions for every class at q = 2..6, checked against the reference table.
nlohmann::json repro_table();
void print_repro_table(const nlohmann::json& table, std::ostream& out);

} // namespace symcirc
