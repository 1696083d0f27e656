#pragma once

#include <string>
#include <vector>

namespace ddc {

enum class TableFormat { human, json, csv };

struct TableOptions {
  TableFormat format = TableFormat::human;
  bool allow_long = false;  // inertia table: also compute the k = 9, 11 rows
};

// Names accepted by render_table, in display order.
const std::vector<std::string>& table_names();

// Renders one of the reference tables. Numeric content is recomputed from the
// library on every call, never pasted in, except for search-effort columns
// (limits, solution counts) that no formula produces.
std::string render_table(const std::string& name, const TableOptions& = {});

}  // namespace ddc
