#pragma once

#include <span>
#include <vector>

#include "snb/record.hpp"
#include "snb/scoring.hpp"
#include "snb/tsp.hpp"

namespace snb {

struct OrderingResult {
    std::vector<RecordId> list;
    double score = 0.0;   // 2-score of list
    bool optimal = false; // exhaustive search or exact solver
};

// Maximizes the 2-score over all permutations of the block (reversal
// symmetry halves the work). Ties break toward the lexicographically
// smallest id sequence. Blocks larger than the factorial budget (9) are a
// capacity error.
OrderingResult brute_force_best_2_ordering(std::span<const RecordId> block,
                                           const ScoringHeuristic& f, const Dataset& ds);

// Decision form: does any ordering reach 2-score >= k?
bool decide_2_ordering(std::span<const RecordId> block, const ScoringHeuristic& f,
                       const Dataset& ds, double k);

// Builds the dummy graph, runs the solver, converts the tour back to a list.
// Score >= ratio * optimum, with ratio from the solver's profile.
OrderingResult order_block_tsp(std::span<const RecordId> block, const ScoringHeuristic& f,
                               const Dataset& ds, const MaxTourSolver& solver);

}  // namespace snb
