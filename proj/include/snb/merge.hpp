#pragma once

#include <cstdint>
#include <span>

#include "snb/candidate_set.hpp"
#include "snb/scoring.hpp"

namespace snb {

struct WindowConfig {
    int w = 2;  // window size, >= 2
};

// The sliding-window merge step. Lists no longer than w emit all pairs;
// otherwise each sliding step pairs the window's first record with the other
// w-1, and the final window emits all w(w-1)/2 pairs. Output is canonical
// (sorted, no duplicates).
std::vector<IdPair> sn_merge(std::span<const RecordId> list, WindowConfig w);

// Candidate-set size: n(n-1)/2 when n <= w, else (n-w)(w-1) + w(w-1)/2.
std::uint64_t candidate_size(std::uint64_t n, int w);

// Sum of f over the sn_merge pairs of the list (pairwise summation).
double w_score(std::span<const RecordId> list, WindowConfig w,
               const ScoringHeuristic& f, const Dataset& ds);

// Deterministic pairwise (tree) summation.
double pairwise_sum(std::span<const double> values);

}  // namespace snb
