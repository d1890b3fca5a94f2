#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "snb/ordering.hpp"
#include "snb/record.hpp"
#include "snb/scoring.hpp"
#include "snb/tsp.hpp"

namespace snb {

// Min path-TSP decision instance: does a Hamiltonian path of cost at most k
// exist? Weights must be non-negative integers (checked on construction).
struct PathTspInstance {
    TspGraph graph;  // no dummy
    std::int64_t k = 0;
};

// Maximum-score 2-/w-ordering decision instance: does an ordering with
// w-score at least k_prime exist?
struct OrderingInstance {
    Dataset records;
    ScoringHeuristic f;
    double k_prime = 0.0;
    int w = 2;
};

// Output of the 2-to-w scaling construction. Record ids are laid out
// set-major: s_i^c has id i*(w-1) + c.
struct ScaledInstance {
    Dataset records;         // m*(w-1) records
    ScoringHeuristic f_prime;
    double k_prime = 0.0;    // T1 + T2
    int w = 0;
    int m = 0;
    double rule1_score = 0.0;  // uniform in-set score: sum of all f entries
    double t1 = 0.0;
    double t2 = 0.0;
};

RecordId scaled_id(int set_id, int internal_id, int w);
int scaled_set_of(RecordId id, int w);
int scaled_internal_of(RecordId id, int w);

// Builds the lookup-table heuristic f(r_i,r_j) = W_E - W({v_i,v_j}) and the
// threshold k' = W_E*(m-1) - k, chosen so that "2-score >= k'" holds exactly
// when a Hamiltonian path of cost <= k exists.
OrderingInstance reduce_pathtsp_to_2ordering(const PathTspInstance& inst);

// Metric special case: f = 1 - f' for a metric weight function with range
// [0,1] (triangle inequality verified); k' = (m-1) - k.
OrderingInstance reduce_metric_to_2ordering(const TspGraph& metric_graph, double k);

// Scaling construction: maps each record to an internal set of w-1 records,
// scores per the three construction rules, k' = T1 + T2 with
// T1 = m * C(w-1,2) * rule1_score and T2 = k*(w-1). Requires w > 2.
ScaledInstance scale_2_to_w(const Dataset& records, const ScoringHeuristic& f, double k,
                            int w);

// ---- brute-force decision sides ----

// Exhaustive minimum Hamiltonian path cost; m <= 8.
double min_hamiltonian_path_cost(const TspGraph& g);

// Exhaustive maximum w-score over all orderings; |records| <= 9 for w == 2,
// <= 8 otherwise.
double best_w_ordering_score(const Dataset& records, const ScoringHeuristic& f, int w);

struct EquivalenceOutcome {
    bool lhs = false;  // source decision
    bool rhs = false;  // transformed decision
    bool boundary = false;
    double lhs_value = 0.0;  // min path cost / best 2-score
    double rhs_value = 0.0;  // best 2-score / best w-score
    bool agree() const { return lhs == rhs; }
};

EquivalenceOutcome check_theorem2_instance(const PathTspInstance& inst,
                                           double kprime_offset = 0.0);
EquivalenceOutcome check_corollary1_instance(const TspGraph& metric_graph, double k,
                                             double kprime_offset = 0.0);
EquivalenceOutcome check_theorem3_instance(const Dataset& records, const ScoringHeuristic& f,
                                           double k, int w, double kprime_offset = 0.0);

struct EquivalenceReport {
    std::string theorem;
    int instances = 0;
    int agreements = 0;
    int disagreements = 0;
    int boundary_excluded = 0;  // knife-edge real thresholds, reported not counted
    std::vector<std::string> witnesses;
    bool all_agree() const { return disagreements == 0; }
};

// Seeded drivers. kprime_offset deliberately corrupts k' (mutation testing).
EquivalenceReport verify_theorem2(std::uint64_t seed0, int seeds, int max_m,
                                  double kprime_offset = 0.0);
EquivalenceReport verify_corollary1(std::uint64_t seed0, int seeds, int max_m,
                                    double kprime_offset = 0.0);
EquivalenceReport verify_theorem3(std::uint64_t seed0, int seeds, int m, int w,
                                  double kprime_offset = 0.0);

// ---- ordering classification for the scaling construction ----

// Every permutation of the scaled record set classified as interleaved,
// stacked-aligned, or stacked-unaligned. The useful comparisons:
//   - class maxima: no interleaved list beats the best stacked list;
//   - every stacked-unaligned list scores no more than the best member of
//     its alignment set.
// The literal "every interleaved <= every stacked" comparison is also
// measured; it fails on ordinary instances (see forall_violations).
struct StackingReport {
    std::uint64_t total = 0;
    std::uint64_t interleaved = 0;
    std::uint64_t stacked_aligned = 0;
    std::uint64_t stacked_unaligned = 0;
    double max_overall = 0.0;
    double max_interleaved = 0.0;   // -inf when class empty
    double max_stacked = 0.0;
    double min_stacked = 0.0;
    bool partition_ok = false;
    bool p1_classmax_ok = false;    // max interleaved <= max stacked
    bool p2_ok = false;             // unaligned <= alignment-set max
    std::uint64_t p1_forall_violations = 0;  // interleaved lists above min_stacked
    std::uint64_t p2_violations = 0;
};

// Full enumeration; |S| <= 8.
StackingReport check_stacking_properties(const ScaledInstance& scaled);

std::string format_report(const EquivalenceReport& r);
std::string format_report(const StackingReport& r);

}  // namespace snb
