#pragma once

#include <string>
#include <vector>

#include "snb/blocking_key.hpp"
#include "snb/record.hpp"

namespace snb {

// Ordered list of blocks keyed by distinct BKVs, ascending under the
// lexicographic total order. Blocks partition the record ids; within a block
// ids are ascending (the deterministic baseline the ordering modules permute).
struct BlockIndex {
    std::vector<std::string> bkvs;
    std::vector<std::vector<RecordId>> blocks;

    std::size_t block_count() const { return bkvs.size(); }
    std::size_t total_records() const;
};

BlockIndex build_block_index(const Dataset& ds, const BlockingKeySpec& spec);

}  // namespace snb
