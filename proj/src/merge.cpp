#include "snb/merge.hpp"

#include <algorithm>

#include "snb/errors.hpp"

namespace snb {

std::vector<IdPair> sn_merge(std::span<const RecordId> list, WindowConfig w) {
    if (w.w < 2) throw contract_error("window size must be >= 2, got " + std::to_string(w.w));
    if (list.empty()) throw contract_error("sn_merge on an empty list");
    const std::size_t n = list.size();
    const std::size_t ww = std::size_t(w.w);
    std::vector<IdPair> pairs;
    if (n <= ww) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                pairs.push_back(make_id_pair(list[i], list[j]));
        canonicalize_pairs(pairs);
        return pairs;
    }
    // sliding steps: first record of each window paired with the other w-1
    for (std::size_t i = 0; i + ww <= n; ++i)
        for (std::size_t j = i + 1; j < i + ww; ++j)
            pairs.push_back(make_id_pair(list[i], list[j]));
    // final window: all pairs among the last w-1 records
    for (std::size_t i = n - ww + 1; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            pairs.push_back(make_id_pair(list[i], list[j]));
    canonicalize_pairs(pairs);
    return pairs;
}

std::uint64_t candidate_size(std::uint64_t n, int w) {
    if (n < 1) throw contract_error("candidate_size needs n >= 1");
    if (w < 2) throw contract_error("candidate_size needs w >= 2");
    const std::uint64_t uw = std::uint64_t(w);
    if (n <= uw) return n * (n - 1) / 2;
    return (n - uw) * (uw - 1) + uw * (uw - 1) / 2;
}

double pairwise_sum(std::span<const double> values) {
    if (values.size() <= 16) {
        double s = 0.0;
        for (double v : values) s += v;
        return s;
    }
    const std::size_t half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

double w_score(std::span<const RecordId> list, WindowConfig w, const ScoringHeuristic& f,
               const Dataset& ds) {
    const std::vector<IdPair> pairs = sn_merge(list, w);
    std::vector<double> scores;
    scores.reserve(pairs.size());
    for (const IdPair& p : pairs)
        scores.push_back(score_pair(f, ds.by_id(p.lo), ds.by_id(p.hi)));
    return pairwise_sum(scores);
}

}  // namespace snb
