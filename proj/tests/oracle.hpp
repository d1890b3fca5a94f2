// Test-side oracles, coded independently of the library paths they check.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "snb/candidate_set.hpp"
#include "snb/record.hpp"
#include "snb/scoring.hpp"
#include "snb/tsp.hpp"

namespace oracle {

// Position-pair rule: with n > w the merge step emits exactly the pairs at
// positional distance <= w-1; with n <= w, all pairs.
inline std::set<std::pair<std::size_t, std::size_t>> merge_positions(std::size_t n, int w) {
    std::set<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (n <= std::size_t(w) || j - i <= std::size_t(w) - 1) pairs.emplace(i, j);
    return pairs;
}

// Plain left-to-right sum over the oracle pair rule.
inline double list_w_score(const std::vector<snb::RecordId>& list, int w,
                           const snb::ScoringHeuristic& f, const snb::Dataset& ds) {
    double total = 0.0;
    for (const auto& [i, j] : merge_positions(list.size(), w))
        total += snb::score_pair(f, ds.by_id(list[i]), ds.by_id(list[j]));
    return total;
}

// Exhaustive maximum w-score over every permutation of ids (recursive
// enumeration, no reversal shortcuts).
inline std::pair<double, std::vector<snb::RecordId>> best_ordering(
    std::vector<snb::RecordId> ids, int w, const snb::ScoringHeuristic& f,
    const snb::Dataset& ds) {
    std::sort(ids.begin(), ids.end());
    double best = -1.0;
    std::vector<snb::RecordId> best_list;
    std::vector<snb::RecordId> current;
    std::vector<bool> used(ids.size(), false);
    std::function<void()> recurse = [&] {
        if (current.size() == ids.size()) {
            const double s = list_w_score(current, w, f, ds);
            if (s > best || (s == best && current < best_list)) {
                best = s;
                best_list = current;
            }
            return;
        }
        for (std::size_t i = 0; i < ids.size(); ++i) {
            if (used[i]) continue;
            used[i] = true;
            current.push_back(ids[i]);
            recurse();
            current.pop_back();
            used[i] = false;
        }
    };
    recurse();
    return {best, best_list};
}

// Maximum w-score over all lists that respect the given block order.
inline double best_block_respecting(const std::vector<std::vector<snb::RecordId>>& blocks,
                                    int w, const snb::ScoringHeuristic& f,
                                    const snb::Dataset& ds) {
    std::vector<std::vector<snb::RecordId>> perms = blocks;
    for (auto& b : perms) std::sort(b.begin(), b.end());
    double best = -1.0;
    std::function<void(std::size_t, std::vector<snb::RecordId>&)> recurse =
        [&](std::size_t bi, std::vector<snb::RecordId>& acc) {
            if (bi == perms.size()) {
                best = std::max(best, list_w_score(acc, w, f, ds));
                return;
            }
            std::vector<snb::RecordId> block = perms[bi];
            std::sort(block.begin(), block.end());
            do {
                const std::size_t len = acc.size();
                acc.insert(acc.end(), block.begin(), block.end());
                recurse(bi + 1, acc);
                acc.resize(len);
            } while (std::next_permutation(block.begin(), block.end()));
        };
    std::vector<snb::RecordId> acc;
    recurse(0, acc);
    return best;
}

// Exhaustive maximum tour weight over the (n-1)!/2 undirected tours.
inline double max_tour_weight(const snb::TspGraph& g) {
    const int n = g.n;
    if (n <= 2) {
        double w = 0.0;
        if (n == 2) w = 2.0 * g.weight(0, 1);
        return w;
    }
    std::vector<int> rest(std::size_t(n) - 1);
    std::iota(rest.begin(), rest.end(), 1);
    double best = -1.0;
    do {
        if (rest.front() > rest.back()) continue;  // direction twin
        double w = g.weight(0, rest.front()) + g.weight(rest.back(), 0);
        for (std::size_t i = 0; i + 1 < rest.size(); ++i)
            w += g.weight(rest[i], rest[i + 1]);
        best = std::max(best, w);
    } while (std::next_permutation(rest.begin(), rest.end()));
    return best;
}

// Exhaustive minimum Hamiltonian path cost (recursive, endpoints free).
inline double min_path_cost(const snb::TspGraph& g) {
    const int n = g.n;
    double best = std::numeric_limits<double>::infinity();
    std::vector<bool> used(std::size_t(n), false);
    std::function<void(int, int, double)> recurse = [&](int last, int depth, double cost) {
        if (cost >= best) return;
        if (depth == n) {
            best = cost;
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[std::size_t(v)]) continue;
            used[std::size_t(v)] = true;
            recurse(v, depth + 1, cost + (last < 0 ? 0.0 : g.weight(last, v)));
            used[std::size_t(v)] = false;
        }
    };
    recurse(-1, 0, 0.0);
    return best;
}

// Fixture helpers: id-only records plus a symmetric lookup heuristic.
inline snb::Dataset bare_dataset(const std::vector<snb::RecordId>& ids) {
    std::vector<snb::Record> records;
    records.reserve(ids.size());
    for (snb::RecordId id : ids) records.push_back({id, {}});
    return snb::Dataset(std::move(records));
}

struct TableFixture {
    std::shared_ptr<snb::LookupTable> table = std::make_shared<snb::LookupTable>();
    snb::ScoringHeuristic heuristic() const { return snb::ScoringHeuristic::lookup(table); }
};

inline TableFixture random_table(const std::vector<snb::RecordId>& ids, std::mt19937_64& rng,
                                 int max_score = 100) {
    TableFixture fx;
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j)
            fx.table->set(ids[i], ids[j], double(rng() % std::uint64_t(max_score + 1)));
    return fx;
}

}  // namespace oracle
