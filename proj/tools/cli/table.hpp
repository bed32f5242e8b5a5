#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace gsr::cli {

using Cell = std::variant<std::monostate, double, std::int64_t, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

/// Shortest decimal that round-trips to the same double.
std::string format_number(double value);

enum class Format { Csv, Json };

/// CSV: `# <config>` comment lines, header row, then rows. Empty cells stay empty.
/// JSON: {"config": ..., "comments": [...], "columns": [...], "rows": [[...]]}.
void write_table(std::ostream& out, Format format, const std::string& config_line,
                 const std::vector<std::string>& comments, const Table& table);

}  // namespace gsr::cli
