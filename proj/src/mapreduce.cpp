#include "snb/mapreduce.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <random>
#include <thread>

#include "snb/errors.hpp"
#include "snb/ordering.hpp"

namespace snb {

std::vector<IdPair> block_merge(std::span<const RecordId> block_list, WindowConfig w) {
    if (block_list.empty()) return {};
    return sn_merge(block_list, w);
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Work-stealing-style pool: workers pull task indices off a shared counter.
template <typename Fn>
void run_tasks(int workers, std::size_t count, Fn&& fn) {
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto body = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    const int n = int(std::min<std::size_t>(std::size_t(workers), count));
    pool.reserve(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) pool.emplace_back(body);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

struct BlockTaskOutput {
    std::vector<ScoredPair> scored;
    double cost_units = 0.0;
};

BlockTaskOutput reduce_block(const std::vector<RecordId>& block, const Dataset& ds,
                             const ScoringHeuristic& f, const MaxTourSolver& solver) {
    BlockTaskOutput out;
    std::vector<RecordId> ordered;
    if (block.size() == 1) {
        ordered = block;
    } else {
        const TspGraph g = records_to_graph(block, f, ds, /*with_dummy=*/true);
        const Tour tour = solver.solve(g);
        ordered = tour_to_list(tour, g);
    }
    for (const IdPair& p : block_merge(ordered, {2}))
        out.scored.push_back({score_pair(f, ds.by_id(p.lo), ds.by_id(p.hi)), p});
    const double s = double(block.size());
    const int q = solver.profile().exponent;
    out.cost_units = s * s + std::pow(s, double(q));
    return out;
}

void canonical_sort(std::vector<ScoredPair>& scored) {
    std::sort(scored.begin(), scored.end(), [](const ScoredPair& a, const ScoredPair& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.pair < b.pair;
    });
}

MapReduceResult finish(std::map<std::string, std::vector<RecordId>> blocks, const Dataset& ds,
                       const ScoringHeuristic& f, const MaxTourSolver& solver, int reducers,
                       bool serial) {
    MapReduceResult result;
    result.report.serial = serial;
    std::vector<const std::vector<RecordId>*> tasks;
    for (auto& [bkv, ids] : blocks) {
        std::sort(ids.begin(), ids.end());
        result.report.reducer_bkvs.push_back(bkv);
        result.report.reducer_block_sizes.push_back(ids.size());
        tasks.push_back(&ids);
    }
    std::vector<BlockTaskOutput> outputs(tasks.size());
    const auto start = Clock::now();
    run_tasks(reducers, tasks.size(),
              [&](std::size_t i) { outputs[i] = reduce_block(*tasks[i], ds, f, solver); });
    result.report.wall_reduce_ms = ms_since(start);
    for (std::size_t i = 0; i < outputs.size(); ++i) {
        result.report.reducer_cost_units.push_back(outputs[i].cost_units);
        if (outputs[i].cost_units > result.report.critical_path_units) {
            result.report.critical_path_units = outputs[i].cost_units;
            result.report.critical_block_index = i;
        }
        result.scored.insert(result.scored.end(), outputs[i].scored.begin(),
                             outputs[i].scored.end());
    }
    canonical_sort(result.scored);
    return result;
}

}  // namespace

MapReduceResult run_mapreduce_blocking(const Dataset& ds, const BlockingKeySpec& b,
                                       const ScoringHeuristic& f, const MapReduceConfig& config,
                                       const MaxTourSolver& solver) {
    if (config.num_mappers < 1) throw contract_error("num_mappers must be >= 1");
    if (config.num_reducers < 1) throw contract_error("num_reducers must be >= 1");
    if (ds.empty()) throw contract_error("cannot block an empty dataset");

    // map: seeded shard assignment, one emit stream per mapper
    const auto start = Clock::now();
    std::vector<std::size_t> order(ds.size());
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(config.shard_seed);
    std::shuffle(order.begin(), order.end(), rng);
    const int h_m = config.num_mappers;
    std::vector<std::vector<std::size_t>> shards(static_cast<std::size_t>(h_m));
    for (std::size_t i = 0; i < order.size(); ++i)
        shards[i % std::size_t(h_m)].push_back(order[i]);

    std::vector<std::vector<std::pair<std::string, RecordId>>> emitted(shards.size());
    run_tasks(h_m, shards.size(), [&](std::size_t s) {
        for (std::size_t idx : shards[s]) {
            const Record& r = ds.records()[idx];
            emitted[s].emplace_back(apply_blocking_key(r, b), r.id);
        }
    });

    // shuffle: group by BKV
    std::map<std::string, std::vector<RecordId>> blocks;
    for (const auto& stream : emitted)
        for (const auto& [bkv, id] : stream) blocks[bkv].push_back(id);

    MapReduceResult result =
        finish(std::move(blocks), ds, f, solver, config.num_reducers, /*serial=*/false);
    result.report.wall_map_ms = ms_since(start) - result.report.wall_reduce_ms;
    return result;
}

MapReduceResult run_traditional_serial(const Dataset& ds, const BlockingKeySpec& b,
                                       const ScoringHeuristic& f, const MaxTourSolver& solver) {
    const BlockIndex index = build_block_index(ds, b);
    std::map<std::string, std::vector<RecordId>> blocks;
    for (std::size_t i = 0; i < index.blocks.size(); ++i)
        blocks[index.bkvs[i]] = index.blocks[i];
    return finish(std::move(blocks), ds, f, solver, /*reducers=*/1, /*serial=*/true);
}

void write_scored_pairs(std::ostream& out, std::span<const ScoredPair> scored) {
    char buf[64];
    for (const ScoredPair& sp : scored) {
        std::snprintf(buf, sizeof buf, "%.17g", sp.score);
        out << buf << ',' << sp.pair.lo << ',' << sp.pair.hi << '\n';
    }
}

}  // namespace snb
