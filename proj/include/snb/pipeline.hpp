#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "snb/block_index.hpp"
#include "snb/candidate_set.hpp"
#include "snb/merge.hpp"
#include "snb/ordering.hpp"

namespace snb {

// Multi-pass spec: c >= 1 distinct (blocking key, heuristic) pairs.
struct PassSpec {
    std::vector<std::pair<BlockingKeySpec, ScoringHeuristic>> passes;
};

// Final list plus block boundaries and the per-stage scores of the global-f
// pipeline (F1 = as ordered, F2 = forward GAS, F3 = backward GAS).
struct OrderedRunTrace {
    std::vector<RecordId> list;
    std::vector<std::size_t> block_begin;  // block i = [block_begin[i], block_begin[i+1])
    double f1 = 0.0, f2 = 0.0, f3 = 0.0;
    int chosen = 1;  // which candidate set Algorithm 5 returned

    std::size_t block_count() const {
        return block_begin.empty() ? 0 : block_begin.size() - 1;
    }
    std::span<const RecordId> block(std::size_t i) const;
};

struct SnRunResult {
    CandidateSet candidates;
    OrderedRunTrace trace;
};

// Single-pass sorted neighborhood with a local heuristic: per-block TSP
// ordering, concatenation in BKV order, sliding-window merge.
SnRunResult single_pass_local(const Dataset& ds, const BlockingKeySpec& b,
                              const ScoringHeuristic& f_local, const MaxTourSolver& solver,
                              WindowConfig w = {2});

// Union of per-pass candidate sets. Scores are per-pass quantities, so the
// union carries pairs plus per-pass provenance bits instead of one sum.
struct MultiPassResult {
    std::vector<IdPair> pairs;               // canonical
    std::vector<std::uint64_t> provenance;   // bit i set: produced by pass i
    std::vector<std::size_t> per_pass_sizes;
};
MultiPassResult multi_pass(const Dataset& ds, const PassSpec& spec,
                           const MaxTourSolver& solver, WindowConfig w = {2});

// Polarity selection for global f: keeps the canonical polarity when its
// first record scores strictly higher against the previous list tail,
// otherwise returns the reversed list (ties reverse; the strict > fails).
std::vector<RecordId> select_polarity(const Record& prev_tail, const Tour& circuit,
                                      const TspGraph& g, const ScoringHeuristic& f,
                                      const Dataset& ds);

enum class GasDirection { Forward, Backward };

// Greedy adjacent swapping. Forward scans block boundaries left to right:
// for block i's last record r and block i+1's first record s, the best
// in-block partner r' of s replaces r when the straddle gain
// f(r',s) - f(r,s) strictly exceeds block i's exact internal 2-score loss.
// The backward pass mirrors from the last block down to block 2. Swapped
// records stay eligible for later swaps (plain scan semantics).
OrderedRunTrace gas_pass(const OrderedRunTrace& trace, const ScoringHeuristic& f,
                         const Dataset& ds, GasDirection direction);

// Algorithm for a global heuristic: ordered run with polarity selection,
// then forward and backward GAS; returns the best of the three candidate
// sets with ties broken in that order. w = 2 throughout.
SnRunResult single_pass_global(const Dataset& ds, const BlockingKeySpec& b,
                               const ScoringHeuristic& f, const MaxTourSolver& solver);

}  // namespace snb
