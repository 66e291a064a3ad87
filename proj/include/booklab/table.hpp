#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "booklab/graph.hpp"
#include "booklab/search.hpp"

namespace booklab {

enum class TableKind {
  kTriangleBowtie,      // ex(n, K3, B(3,1)), id "1.1"
  kK4Family,            // ex(n, K4, {B(4,1), H1, K(5)}), id "2.1"
  kK4BookConstruction,  // K2 v T2(n-2) against floor((n-2)^2/4), id "1.3"
  kB42LowerBound,       // G* against n^2/12 - 2, id "1.7"
};

/// Accepts "1.1", "2.1" (or "lemma-2.1"), "1.3", "1.7".
TableKind parse_table_kind(std::string_view id);
const char* table_id(TableKind kind) noexcept;

struct TableOptions {
  int n_min = 0;  // 0 picks the kind's smallest meaningful n
  int n_max = 8;
  /// Rows with n above this use the construction instead of exhaustive
  /// search (kinds 1.1 and 2.1 only).
  int exhaustive_max = 8;
  Engine engine = Engine::kCanonicalGeneration;
  int jobs = 1;
};

struct TableRow {
  int n = 0;
  /// Closed form; for 1.7 the least integer >= n^2/12 - 2.
  Count formula = 0;
  Count computed = 0;
  /// Equality, or computed >= bound for 1.7.
  bool match = false;
  std::string method;  // "exhaustive" or "construction"
};

std::vector<TableRow> table_report(TableKind kind, const TableOptions& options);

/// floor((n-2)^2 / 4) for n >= 2.
Count k4_book_value(int n);
/// 12 * count >= n^2 - 24, i.e. count >= n^2/12 - 2, in integers.
bool meets_b42_bound(int n, Count count);

}  // namespace booklab
