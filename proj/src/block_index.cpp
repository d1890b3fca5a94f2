#include "snb/block_index.hpp"

#include <algorithm>
#include <map>

#include "snb/errors.hpp"

namespace snb {

std::size_t BlockIndex::total_records() const {
    std::size_t n = 0;
    for (const auto& b : blocks) n += b.size();
    return n;
}

BlockIndex build_block_index(const Dataset& ds, const BlockingKeySpec& spec) {
    if (ds.empty()) throw contract_error("cannot block an empty dataset");
    std::map<std::string, std::vector<RecordId>> grouped;
    for (const Record& r : ds.records())
        grouped[apply_blocking_key(r, spec)].push_back(r.id);
    BlockIndex index;
    index.bkvs.reserve(grouped.size());
    index.blocks.reserve(grouped.size());
    for (auto& [bkv, ids] : grouped) {
        std::sort(ids.begin(), ids.end());
        index.bkvs.push_back(bkv);
        index.blocks.push_back(std::move(ids));
    }
    return index;
}

}  // namespace snb
