#include "booklab/report_json.hpp"

#include <sstream>

#include "booklab/graph_io.hpp"

namespace booklab {

nlohmann::json to_json(const SearchReport& report) {
  nlohmann::json j;
  j["schema"] = kSchema;
  j["n"] = report.n;
  j["r"] = report.r;
  j["family"] = to_string(report.family);
  j["maximum"] = report.maximum;
  auto witnesses = nlohmann::json::array();
  for (const auto& w : report.witnesses) witnesses.push_back(w.key);
  j["witnesses_g6"] = std::move(witnesses);
  j["examined"] = report.examined;
  j["engine"] = to_string(report.engine);
  j["exhaustive"] = report.exhaustive;
  j["strategy"] = report.strategy;
  j["wall_ms"] = report.wall_ms;
  if (!report.classes_per_order.empty())
    j["classes_per_order"] = report.classes_per_order;
  if (!report.trajectory.empty()) j["trajectory"] = report.trajectory;
  if (report.final_graph) j["final_g6"] = to_graph6(*report.final_graph);
  return j;
}

nlohmann::json to_json(TableKind kind, const std::vector<TableRow>& rows) {
  nlohmann::json j;
  j["schema"] = kSchema;
  j["table"] = table_id(kind);
  auto out = nlohmann::json::array();
  bool all = true;
  for (const auto& row : rows) {
    out.push_back({{"n", row.n},
                   {"formula", row.formula},
                   {"computed", row.computed},
                   {"match", row.match},
                   {"method", row.method}});
    all = all && row.match;
  }
  j["rows"] = std::move(out);
  j["all_match"] = all;
  return j;
}

std::string to_csv(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << "n,formula,computed,match,method\n";
  for (const auto& row : rows)
    out << row.n << ',' << row.formula << ',' << row.computed << ','
        << (row.match ? "true" : "false") << ',' << row.method << '\n';
  return out.str();
}

}  // namespace booklab
