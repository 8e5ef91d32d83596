#pragma once

#include "ramsey/search.hpp"

#include <string>
#include <vector>

namespace ramsey {

// JSON-file results cache, one record per (target, n, connected_only).
// load tolerates a missing file (empty table) and rejects duplicate keys
// whose payloads disagree; every exact record's witness is re-verified on
// load. store is append-with-supersede on the record key.
std::vector<SearchRecord> cache_load(const std::string& path);
void cache_store(const std::string& path, const SearchRecord& record);

const SearchRecord* cache_find(const std::vector<SearchRecord>& table, const TargetPattern& target,
                               int n, bool connected_only);

} // namespace ramsey
