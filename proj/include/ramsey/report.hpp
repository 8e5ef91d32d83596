#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ramsey {

// One row of a values-vs-formula table. All renderings derive from the same
// row set.
struct TableRow {
    int n = 0;
    int formula = 0;
    bool has_value = false;
    int value = 0;
    std::string status;
    std::string note;
};

struct TableReport {
    std::string query; // echo of the request
    std::string target;
    std::vector<TableRow> rows;
};

void render_markdown(const TableReport& report, std::ostream& out);
void render_csv(const TableReport& report, std::ostream& out);
void render_json(const TableReport& report, std::ostream& out);

} // namespace ramsey
