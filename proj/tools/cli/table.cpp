#include "cli/table.hpp"

#include "json.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

namespace gsr::cli {

std::string format_number(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

namespace {

std::string cell_text(const Cell& c) {
    struct Visitor {
        std::string operator()(std::monostate) const { return {}; }
        std::string operator()(double v) const { return format_number(v); }
        std::string operator()(std::int64_t v) const { return std::to_string(v); }
        std::string operator()(const std::string& v) const { return v; }
    };
    return std::visit(Visitor{}, c);
}

nlohmann::json cell_json(const Cell& c) {
    struct Visitor {
        nlohmann::json operator()(std::monostate) const { return nullptr; }
        nlohmann::json operator()(double v) const {
            return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(format_number(v));
        }
        nlohmann::json operator()(std::int64_t v) const { return v; }
        nlohmann::json operator()(const std::string& v) const { return v; }
    };
    return std::visit(Visitor{}, c);
}

}  // namespace

void write_table(std::ostream& out, Format format, const std::string& config_line,
                 const std::vector<std::string>& comments, const Table& table) {
    if (format == Format::Json) {
        nlohmann::json doc;
        doc["config"] = config_line;
        doc["comments"] = comments;
        doc["columns"] = table.columns;
        doc["rows"] = nlohmann::json::array();
        for (const auto& row : table.rows) {
            nlohmann::json r = nlohmann::json::array();
            for (const auto& c : row) r.push_back(cell_json(c));
            doc["rows"].push_back(std::move(r));
        }
        out << doc.dump(2) << '\n';
        return;
    }
    out << "# " << config_line << '\n';
    for (const auto& c : comments) out << "# " << c << '\n';
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i > 0) out << ',';
        out << table.columns[i];
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) out << ',';
            out << cell_text(row[i]);
        }
        out << '\n';
    }
}

}  // namespace gsr::cli
