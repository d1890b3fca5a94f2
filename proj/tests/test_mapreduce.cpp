#include <doctest.h>

#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "snb/errors.hpp"
#include "snb/mapreduce.hpp"
#include "snb/ordering.hpp"
#include "snb/workbench.hpp"

using namespace snb;

namespace {

std::string serialize(const MapReduceResult& r) {
    std::ostringstream out;
    write_scored_pairs(out, r.scored);
    return out.str();
}

}  // namespace

TEST_CASE("block merge mirrors the sliding window on one block") {
    CHECK(block_merge(std::vector<RecordId>{}, {2}).empty());
    CHECK(block_merge(std::vector<RecordId>{1, 2, 3}, {5}).size() == 3);  // all pairs
    const auto five = block_merge(std::vector<RecordId>{1, 2, 3, 4, 5}, {2});
    CHECK(five == std::vector<IdPair>{{1, 2}, {2, 3}, {3, 4}, {4, 5}});
    CHECK(five.size() == candidate_size(5, 2));
}

TEST_CASE("running example through traditional blocking") {
    const Dataset ds = fixtures::table1();
    const ExactTourSolver exact;
    const MapReduceResult serial = run_traditional_serial(
        ds, fixtures::initials_key(), ScoringHeuristic::token_jaccard(), exact);
    REQUIRE(serial.report.reducer_bkvs ==
            std::vector<std::string>{"CR7", "JR7", "JRS7"});
    CHECK(serial.report.reducer_block_sizes == std::vector<std::size_t>{3, 3, 1});
    // 2 + 2 + 0 pairs: the singleton block emits nothing
    CHECK(serial.scored.size() == 4);

    const MapReduceConfig config{1, 1, 0};
    const MapReduceResult mr = run_mapreduce_blocking(
        ds, fixtures::initials_key(), ScoringHeuristic::token_jaccard(), config, exact);
    CHECK(serialize(mr) == serialize(serial));
}

TEST_CASE("output is invariant under mapper/reducer counts and shard seeds") {
    std::mt19937_64 rng(51);
    const ThresholdTourSolver solver;
    for (int trial = 0; trial < 4; ++trial) {
        const GeneratedData data = generate_dataset(60, 6, Distribution::Zipf, 0.2, 100 + trial);
        const ScoringHeuristic f = ScoringHeuristic::token_jaccard();
        const std::string base = serialize(run_traditional_serial(
            data.dataset, fixtures::initials_key(), f, solver));
        const std::size_t u = 6;
        for (int mappers : {1, 2, 4})
            for (std::size_t reducers : {std::size_t(1), u, 2 * u}) {
                const MapReduceConfig config{mappers, int(reducers), rng()};
                const MapReduceResult mr = run_mapreduce_blocking(
                    data.dataset, fixtures::initials_key(), f, config, solver);
                CHECK(serialize(mr) == base);
            }
    }
}

TEST_CASE("per-block scores match the brute-force optima with the exact solver") {
    std::mt19937_64 rng(52);
    const ExactTourSolver exact;
    for (int trial = 0; trial < 10; ++trial) {
        // three planted blocks of sizes 2..6 with a random lookup heuristic
        std::vector<Record> records;
        std::vector<std::vector<RecordId>> blocks;
        RecordId next = 1;
        for (int b = 0; b < 3; ++b) {
            const int size = 2 + int(rng() % 5);
            std::vector<RecordId> block;
            for (int i = 0; i < size; ++i) {
                records.push_back({next, {std::string(1, char('a' + b))}});
                block.push_back(next++);
            }
            blocks.push_back(block);
        }
        const Dataset ds(std::move(records));
        std::vector<RecordId> all;
        for (const auto& b : blocks) all.insert(all.end(), b.begin(), b.end());
        const auto fx = oracle::random_table(all, rng, 15);
        const BlockingKeySpec key = BlockingKeySpec::parse("attr:0");
        const MapReduceResult mr =
            run_mapreduce_blocking(ds, key, fx.heuristic(), MapReduceConfig{2, 3, 9}, exact);
        double total = 0.0;
        for (const auto& sp : mr.scored) total += sp.score;
        double expect = 0.0;
        for (const auto& block : blocks)
            expect += brute_force_best_2_ordering(block, fx.heuristic(), ds).score;
        CHECK(total == expect);  // no cross-block terms exist
    }
}

TEST_CASE("local and global tags produce identical traditional output") {
    const Dataset ds = fixtures::table1();
    const ExactTourSolver exact;
    const ScoringHeuristic global = ScoringHeuristic::token_jaccard();
    const ScoringHeuristic local = localize(global, fixtures::initials_key());
    const MapReduceConfig config{2, 2, 7};
    CHECK(serialize(run_mapreduce_blocking(ds, fixtures::initials_key(), global, config, exact)) ==
          serialize(run_mapreduce_blocking(ds, fixtures::initials_key(), local, config, exact)));
}

TEST_CASE("candidate count sums the per-block formula") {
    const GeneratedData data = generate_dataset(80, 8, Distribution::Zipf, 0.0, 5);
    const ThresholdTourSolver solver;
    const MapReduceResult mr =
        run_mapreduce_blocking(data.dataset, fixtures::initials_key(),
                               ScoringHeuristic::token_jaccard(), MapReduceConfig{2, 4, 1}, solver);
    std::uint64_t expect = 0;
    for (std::size_t s : mr.report.reducer_block_sizes) expect += candidate_size(s, 2);
    CHECK(mr.scored.size() == expect);
}

TEST_CASE("the critical path belongs to the largest block") {
    const GeneratedData data = generate_dataset(200, 10, Distribution::Zipf, 0.1, 3);
    const ThresholdTourSolver solver;
    const MapReduceResult mr =
        run_mapreduce_blocking(data.dataset, fixtures::initials_key(),
                               ScoringHeuristic::token_jaccard(), MapReduceConfig{4, 10, 2}, solver);
    const auto& sizes = mr.report.reducer_block_sizes;
    const std::size_t largest =
        std::size_t(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
    CHECK(mr.report.critical_block_index == largest);
    CHECK(mr.report.critical_path_units == *std::max_element(
              mr.report.reducer_cost_units.begin(), mr.report.reducer_cost_units.end()));
}

TEST_CASE("configuration contract errors") {
    const Dataset ds = fixtures::table1();
    const ExactTourSolver exact;
    CHECK_THROWS_AS(run_mapreduce_blocking(ds, fixtures::initials_key(),
                                           ScoringHeuristic::token_jaccard(),
                                           MapReduceConfig{0, 1, 0}, exact),
                    contract_error);
    CHECK_THROWS_AS(run_mapreduce_blocking(ds, fixtures::initials_key(),
                                           ScoringHeuristic::token_jaccard(),
                                           MapReduceConfig{1, 0, 0}, exact),
                    contract_error);
}
