#include "snb/ordering.hpp"

#include <algorithm>
#include <numeric>

#include "snb/errors.hpp"
#include "snb/merge.hpp"

namespace snb {

namespace {

constexpr std::size_t kBruteForceBudget = 9;

// Dense pair-score matrix for one block; brute force over permutations then
// runs on plain array lookups.
struct BlockScores {
    std::vector<RecordId> ids;  // ascending
    std::vector<double> m;      // k*k

    BlockScores(std::span<const RecordId> block, const ScoringHeuristic& f, const Dataset& ds)
        : ids(block.begin(), block.end()) {
        std::sort(ids.begin(), ids.end());
        const std::size_t k = ids.size();
        m.assign(k * k, 0.0);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j)
                m[i * k + j] = m[j * k + i] =
                    score_pair(f, ds.by_id(ids[i]), ds.by_id(ids[j]));
    }

    double adjacent_sum(const std::vector<int>& perm) const {
        const std::size_t k = ids.size();
        double s = 0.0;
        for (std::size_t i = 0; i + 1 < perm.size(); ++i)
            s += m[std::size_t(perm[i]) * k + perm[i + 1]];
        return s;
    }
};

}  // namespace

OrderingResult brute_force_best_2_ordering(std::span<const RecordId> block,
                                           const ScoringHeuristic& f, const Dataset& ds) {
    if (block.empty()) throw contract_error("cannot order an empty block");
    if (block.size() > kBruteForceBudget)
        throw capacity_error("brute-force ordering budget is " +
                             std::to_string(kBruteForceBudget) + " records, got " +
                             std::to_string(block.size()));
    const BlockScores scores(block, f, ds);
    const std::size_t k = block.size();
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best_perm = perm;
    double best = scores.adjacent_sum(perm);
    while (std::next_permutation(perm.begin(), perm.end())) {
        if (perm.front() > perm.back()) continue;  // reversal twin already covered
        const double s = scores.adjacent_sum(perm);
        if (s > best || (s == best && perm < best_perm)) {
            best = s;
            best_perm = perm;
        }
    }
    OrderingResult result;
    result.list.reserve(k);
    for (int idx : best_perm) result.list.push_back(scores.ids[std::size_t(idx)]);
    result.score = k >= 2 ? w_score(result.list, {2}, f, ds) : 0.0;
    result.optimal = true;
    return result;
}

bool decide_2_ordering(std::span<const RecordId> block, const ScoringHeuristic& f,
                       const Dataset& ds, double k) {
    return brute_force_best_2_ordering(block, f, ds).score >= k;
}

OrderingResult order_block_tsp(std::span<const RecordId> block, const ScoringHeuristic& f,
                               const Dataset& ds, const MaxTourSolver& solver) {
    if (block.empty()) throw contract_error("cannot order an empty block");
    OrderingResult result;
    if (block.size() == 1) {
        result.list.assign(block.begin(), block.end());
        result.score = 0.0;
        result.optimal = true;
        return result;
    }
    const TspGraph g = records_to_graph(block, f, ds, /*with_dummy=*/true);
    const Tour tour = solver.solve(g);
    result.list = tour_to_list(tour, g);
    result.score = w_score(result.list, {2}, f, ds);
    result.optimal = solver.profile().ratio == 1.0;
    return result;
}

}  // namespace snb
