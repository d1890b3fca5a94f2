#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "snb/errors.hpp"
#include "snb/merge.hpp"
#include "snb/ordering.hpp"

using namespace snb;

namespace {

std::vector<RecordId> ids_upto(int m) {
    std::vector<RecordId> ids;
    for (int i = 1; i <= m; ++i) ids.push_back(RecordId(i));
    return ids;
}

}  // namespace

TEST_CASE("brute force on tiny blocks") {
    const auto ids1 = ids_upto(1);
    const Dataset ds1 = oracle::bare_dataset(ids1);
    auto fx = oracle::TableFixture{};
    const OrderingResult single = brute_force_best_2_ordering(ids1, fx.heuristic(), ds1);
    CHECK(single.list == ids1);
    CHECK(single.score == 0.0);
    CHECK(single.optimal);

    const auto ids2 = ids_upto(2);
    const Dataset ds2 = oracle::bare_dataset(ids2);
    fx.table->set(1, 2, 4.5);
    const OrderingResult pair = brute_force_best_2_ordering(ids2, fx.heuristic(), ds2);
    CHECK(pair.score == 4.5);
    CHECK(pair.list == std::vector<RecordId>{1, 2});  // reversal twin, smaller id first
}

TEST_CASE("brute force agrees with a second independent enumerator") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        const auto ids = ids_upto(5);
        const Dataset ds = oracle::bare_dataset(ids);
        const auto fx = oracle::random_table(ids, rng, 30);
        const OrderingResult got = brute_force_best_2_ordering(ids, fx.heuristic(), ds);
        const auto [best, best_list] = oracle::best_ordering(ids, 2, fx.heuristic(), ds);
        CHECK(got.score == best);
        CHECK(got.list == best_list);  // identical lexicographic tie-break
        CHECK(w_score(got.list, {2}, fx.heuristic(), ds) == best);
    }
}

TEST_CASE("brute force budget") {
    const auto ids = ids_upto(10);
    const Dataset ds = oracle::bare_dataset(ids);
    auto fx = oracle::TableFixture{};
    CHECK_THROWS_AS(brute_force_best_2_ordering(ids, fx.heuristic(), ds), capacity_error);
    CHECK_THROWS_AS(brute_force_best_2_ordering(std::vector<RecordId>{}, fx.heuristic(), ds),
                    contract_error);
}

TEST_CASE("decision oracle") {
    std::mt19937_64 rng(32);
    const auto ids = ids_upto(5);
    const Dataset ds = oracle::bare_dataset(ids);
    const auto fx = oracle::random_table(ids, rng, 10);
    const double optimum = brute_force_best_2_ordering(ids, fx.heuristic(), ds).score;
    CHECK(decide_2_ordering(ids, fx.heuristic(), ds, 0.0));  // non-negative scores
    CHECK(decide_2_ordering(ids, fx.heuristic(), ds, optimum));
    CHECK_FALSE(decide_2_ordering(ids, fx.heuristic(), ds, optimum + 0.5));

    auto two = oracle::TableFixture{};
    two.table->set(1, 2, 3.0);
    const auto pair_ids = ids_upto(2);
    const Dataset pair_ds = oracle::bare_dataset(pair_ids);
    CHECK(decide_2_ordering(pair_ids, two.heuristic(), pair_ds, 3.0));
}

TEST_CASE("tsp ordering with the exact solver attains the brute-force optimum") {
    std::mt19937_64 rng(33);
    const ExactTourSolver exact;
    for (int trial = 0; trial < 150; ++trial) {
        const int m = 3 + int(rng() % 7);  // 3..9
        const auto ids = ids_upto(m);
        const Dataset ds = oracle::bare_dataset(ids);
        const auto fx = oracle::random_table(ids, rng, 50);
        const OrderingResult tsp = order_block_tsp(ids, fx.heuristic(), ds, exact);
        const OrderingResult brute = brute_force_best_2_ordering(ids, fx.heuristic(), ds);
        CHECK(tsp.score == brute.score);
        CHECK(tsp.optimal);
    }
}

TEST_CASE("tsp ordering with the greedy solver stays within its declared ratio") {
    std::mt19937_64 rng(34);
    const GreedyTourSolver greedy;
    double min_ratio = 1.0;
    for (int trial = 0; trial < 150; ++trial) {
        const int m = 3 + int(rng() % 7);
        const auto ids = ids_upto(m);
        const Dataset ds = oracle::bare_dataset(ids);
        const auto fx = oracle::random_table(ids, rng, 50);
        const OrderingResult tsp = order_block_tsp(ids, fx.heuristic(), ds, greedy);
        const OrderingResult brute = brute_force_best_2_ordering(ids, fx.heuristic(), ds);
        CHECK_FALSE(tsp.optimal);
        CHECK(tsp.score >= 0.5 * brute.score);
        if (brute.score > 0) min_ratio = std::min(min_ratio, tsp.score / brute.score);
    }
    MESSAGE("greedy ordering empirical min ratio: ", min_ratio);
}

TEST_CASE("zero heuristic makes every ordering optimal") {
    const auto ids = ids_upto(6);
    const Dataset ds = oracle::bare_dataset(ids);
    auto fx = oracle::TableFixture{};  // empty table: f == 0
    const ExactTourSolver exact;
    const OrderingResult r = order_block_tsp(ids, fx.heuristic(), ds, exact);
    CHECK(r.score == 0.0);
    CHECK(brute_force_best_2_ordering(ids, fx.heuristic(), ds).score == 0.0);
}

TEST_CASE("ordering score is reversal-invariant") {
    std::mt19937_64 rng(35);
    const auto ids = ids_upto(7);
    const Dataset ds = oracle::bare_dataset(ids);
    const auto fx = oracle::random_table(ids, rng, 9);
    const OrderingResult r = brute_force_best_2_ordering(ids, fx.heuristic(), ds);
    std::vector<RecordId> rev(r.list.rbegin(), r.list.rend());
    CHECK(w_score(rev, {2}, fx.heuristic(), ds) == r.score);
}

TEST_CASE("adding a constant to every pair score shifts all orderings equally") {
    std::mt19937_64 rng(36);
    const auto ids = ids_upto(6);
    const Dataset ds = oracle::bare_dataset(ids);
    const auto fx = oracle::random_table(ids, rng, 9);
    const double c = 5.0;
    auto shifted = oracle::TableFixture{};
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j)
            shifted.table->set(ids[i], ids[j], fx.table->get(ids[i], ids[j]) + c);
    const OrderingResult base = brute_force_best_2_ordering(ids, fx.heuristic(), ds);
    const OrderingResult bumped = brute_force_best_2_ordering(ids, shifted.heuristic(), ds);
    CHECK(bumped.score == base.score + double(ids.size() - 1) * c);
    CHECK(bumped.list == base.list);  // argmax set unchanged, same tie-break
}
