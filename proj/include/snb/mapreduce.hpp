#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "snb/block_index.hpp"
#include "snb/candidate_set.hpp"
#include "snb/merge.hpp"
#include "snb/tsp.hpp"

namespace snb {

struct MapReduceConfig {
    int num_mappers = 1;
    int num_reducers = 1;
    std::uint64_t shard_seed = 0;
};

struct ScoredPair {
    double score = 0.0;
    IdPair pair;
};

// The merge step run on one block in isolation.
std::vector<IdPair> block_merge(std::span<const RecordId> block_list, WindowConfig w);

struct MapReduceReport {
    std::vector<std::string> reducer_bkvs;       // one logical reducer per BKV
    std::vector<std::size_t> reducer_block_sizes;
    std::vector<double> reducer_cost_units;      // modeled s^2 + s^q work units
    double critical_path_units = 0.0;
    std::size_t critical_block_index = 0;
    double wall_map_ms = 0.0;
    double wall_reduce_ms = 0.0;
    bool serial = false;
};

struct MapReduceResult {
    std::vector<ScoredPair> scored;  // canonical: score desc, then pair asc
    MapReduceReport report;
};

// In-process map/shuffle/reduce simulation. Mappers emit (BKV, record) over
// seeded shards, the shuffle groups by BKV, and each reducer instance orders
// its block via the tour solver and block-merges with w = 2. The canonical
// sort makes the output independent of mapper/reducer counts and shard seed.
MapReduceResult run_mapreduce_blocking(const Dataset& ds, const BlockingKeySpec& b,
                                       const ScoringHeuristic& f, const MapReduceConfig& config,
                                       const MaxTourSolver& solver);

// Serial traditional blocking: same per-block ordering and block-merge,
// no simulated dataflow. Emits the same canonical output.
MapReduceResult run_traditional_serial(const Dataset& ds, const BlockingKeySpec& b,
                                       const ScoringHeuristic& f, const MaxTourSolver& solver);

// "score,id1,id2" per line in canonical order.
void write_scored_pairs(std::ostream& out, std::span<const ScoredPair> scored);

}  // namespace snb
