#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "booklab/search.hpp"
#include "booklab/table.hpp"

namespace booklab {

inline constexpr const char* kSchema = "booklab/1";

/// {schema, n, r, family, maximum, witnesses_g6, examined, engine,
///  exhaustive, strategy, wall_ms, ...}
nlohmann::json to_json(const SearchReport& report);

nlohmann::json to_json(TableKind kind, const std::vector<TableRow>& rows);
std::string to_csv(const std::vector<TableRow>& rows);

}  // namespace booklab
