#include "ramsey/cache.hpp"

#include "ramsey/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace ramsey {

using nlohmann::json;

namespace {

bool same_key(const SearchRecord& a, const SearchRecord& b) {
    return a.target == b.target && a.n == b.n && a.connected_only == b.connected_only;
}

bool same_payload(const SearchRecord& a, const SearchRecord& b) {
    return a.status == b.status && a.lo == b.lo && a.hi == b.hi && a.witness == b.witness;
}

std::string record_key_name(const SearchRecord& r) {
    return "(" + target_to_string(r.target) + ", n=" + std::to_string(r.n) +
           (r.connected_only ? ", connected" : ", any") + ")";
}

json record_to_json(const SearchRecord& r) {
    json j;
    j["target"] = target_to_string(r.target);
    j["n"] = r.n;
    j["connected_only"] = r.connected_only;
    j["status"] = search_status_name(r.status);
    j["lo"] = r.lo;
    j["hi"] = r.hi;
    if (r.witness) j["witness"] = *r.witness;
    j["graphs_examined"] = r.graphs_examined;
    j["wall_time_ms"] = r.wall_time_ms;
    j["engine_version"] = r.engine_version;
    return j;
}

template <typename T>
T require_field(const json& j, const char* field, std::size_t index) {
    if (!j.contains(field))
        throw cache_error("cache record " + std::to_string(index) + ": missing field '" + field +
                          "'");
    try {
        return j.at(field).get<T>();
    } catch (const json::exception& e) {
        throw cache_error("cache record " + std::to_string(index) + ": bad field '" + field +
                          "': " + e.what());
    }
}

SearchRecord record_from_json(const json& j, std::size_t index) {
    SearchRecord r;
    try {
        r.target = target_from_string(require_field<std::string>(j, "target", index));
    } catch (const std::invalid_argument& e) {
        throw cache_error("cache record " + std::to_string(index) + ": bad field 'target': " +
                          e.what());
    }
    r.n = require_field<int>(j, "n", index);
    r.connected_only = require_field<bool>(j, "connected_only", index);
    try {
        r.status = search_status_from_name(require_field<std::string>(j, "status", index));
    } catch (const std::invalid_argument& e) {
        throw cache_error("cache record " + std::to_string(index) + ": bad field 'status': " +
                          e.what());
    }
    r.lo = require_field<int>(j, "lo", index);
    r.hi = require_field<int>(j, "hi", index);
    if (j.contains("witness")) r.witness = require_field<std::string>(j, "witness", index);
    if (j.contains("graphs_examined"))
        r.graphs_examined = require_field<std::uint64_t>(j, "graphs_examined", index);
    if (j.contains("wall_time_ms"))
        r.wall_time_ms = require_field<std::uint64_t>(j, "wall_time_ms", index);
    if (j.contains("engine_version"))
        r.engine_version = require_field<std::string>(j, "engine_version", index);
    return r;
}

} // namespace

std::vector<SearchRecord> cache_load(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) return {};
    std::stringstream buf;
    buf << in.rdbuf();
    std::string content = buf.str();

    json root;
    try {
        root = json::parse(content);
    } catch (const json::parse_error& e) {
        std::size_t line = 1 + static_cast<std::size_t>(
                                   std::count(content.begin(),
                                              content.begin() +
                                                  std::min<std::size_t>(e.byte, content.size()),
                                              '\n'));
        throw cache_error("cache file " + path + ": parse error at line " + std::to_string(line) +
                          ": " + e.what());
    }
    if (!root.is_object() || !root.contains("records") || !root["records"].is_array())
        throw cache_error("cache file " + path + ": missing field 'records'");

    std::vector<SearchRecord> table;
    std::size_t index = 0;
    for (const auto& j : root["records"]) {
        SearchRecord r = record_from_json(j, index++);
        try {
            verify_record(r);
        } catch (const graph6_parse_error& e) {
            throw cache_error("cache record " + std::to_string(index - 1) +
                              ": bad field 'witness': " + e.what());
        }
        auto it = std::find_if(table.begin(), table.end(),
                               [&](const SearchRecord& x) { return same_key(x, r); });
        if (it != table.end()) {
            if (!same_payload(*it, r))
                throw cache_error("cache file " + path + ": conflicting records for key " +
                                  record_key_name(r));
            continue; // identical duplicate
        }
        table.push_back(std::move(r));
    }
    return table;
}

void cache_store(const std::string& path, const SearchRecord& record) {
    auto table = cache_load(path);
    auto it = std::find_if(table.begin(), table.end(),
                           [&](const SearchRecord& x) { return same_key(x, record); });
    if (it != table.end())
        *it = record;
    else
        table.push_back(record);

    json root;
    root["version"] = 1;
    root["records"] = json::array();
    for (const auto& r : table) root["records"].push_back(record_to_json(r));

    std::ofstream out(path);
    if (!out.good()) throw cache_error("cache file " + path + ": cannot open for writing");
    out << root.dump(2) << "\n";
}

const SearchRecord* cache_find(const std::vector<SearchRecord>& table, const TargetPattern& target,
                               int n, bool connected_only) {
    auto it = std::find_if(table.begin(), table.end(), [&](const SearchRecord& r) {
        return r.target == target && r.n == n && r.connected_only == connected_only;
    });
    return it == table.end() ? nullptr : &*it;
}

} // namespace ramsey
