#include "ramsey/report.hpp"

#include <json.hpp>

namespace ramsey {

void render_markdown(const TableReport& report, std::ostream& out) {
    out << "# " << report.query << "\n\n";
    out << "| n | " << report.target << " value | formula | status | note |\n";
    out << "|---|-------|---------|--------|------|\n";
    for (const auto& row : report.rows) {
        out << "| " << row.n << " | ";
        if (row.has_value)
            out << row.value;
        else
            out << "-";
        out << " | " << row.formula << " | " << row.status << " | " << row.note << " |\n";
    }
}

void render_csv(const TableReport& report, std::ostream& out) {
    out << "n,value,formula,status,note\n";
    for (const auto& row : report.rows) {
        out << row.n << ",";
        if (row.has_value) out << row.value;
        out << "," << row.formula << "," << row.status << "," << row.note << "\n";
    }
}

void render_json(const TableReport& report, std::ostream& out) {
    nlohmann::json j;
    j["query"] = report.query;
    j["target"] = report.target;
    j["rows"] = nlohmann::json::array();
    for (const auto& row : report.rows) {
        nlohmann::json r;
        r["n"] = row.n;
        if (row.has_value) r["value"] = row.value;
        r["formula"] = row.formula;
        r["status"] = row.status;
        r["note"] = row.note;
        j["rows"].push_back(std::move(r));
    }
    out << j.dump(2) << "\n";
}

} // namespace ramsey
