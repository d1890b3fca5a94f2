#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "snb/candidate_set.hpp"
#include "snb/record.hpp"

namespace snb {

// Partial harmonic sum H_u = sum_{i=1..u} 1/i.
double harmonic_sum(int u);

enum class Distribution { Uniform, Zipf };

// Zipf block sizes: the m-th largest block holds ~ n/(m*H_u) records,
// rounded with a largest-remainder correction so sizes sum to n and every
// block keeps at least one record. Non-increasing.
std::vector<std::uint64_t> zipf_block_sizes(std::uint64_t n, int u);

// Uniform sizes n/u, remainder spread over the first blocks.
std::vector<std::uint64_t> uniform_block_sizes(std::uint64_t n, int u);

struct GroundTruth {
    std::vector<IdPair> pairs;  // canonical
};

struct GeneratedData {
    Dataset dataset;
    GroundTruth truth;
    std::vector<std::uint64_t> planted_sizes;
    std::vector<std::string> planted_bkvs;  // ascending, aligned with sizes
};

// Synthetic records whose token-initials BKVs reproduce the planted block
// sizes exactly. dup_rate of each block is mutated copies (BKV-preserving
// typo/abbreviation/suffix perturbations) recorded in the ground truth.
GeneratedData generate_dataset(std::uint64_t n, int u, Distribution dist, double dup_rate,
                               std::uint64_t seed);

void write_truth(std::ostream& out, const GroundTruth& truth);
GroundTruth read_truth(std::istream& in);

struct PcResult {
    double pc = 0.0;           // |Γ ∩ truth| / |Γ|
    double recall = 0.0;       // |Γ ∩ truth| / |truth|; companion, not the paper metric
    bool recall_defined = false;
    std::uint64_t true_positives = 0;
};

// Pairs Completeness per the paper's definition; empty candidate sets are a
// contract error (undefined metric).
PcResult pairs_completeness(const CandidateSet& candidates, const GroundTruth& truth);

// ---- benchmark harness ----

struct BenchScenario {
    std::string module = "sn";  // "sn" (single-pass local) or "mapreduce"
    std::vector<std::uint64_t> sizes;
    int u = 10;
    Distribution dist = Distribution::Uniform;
    double dup_rate = 0.1;
    std::uint64_t seed = 1;
    std::string solver = "auto";
};

struct BenchRow {
    std::string module;
    std::string dist;
    std::uint64_t n = 0;
    int u = 0;
    std::uint64_t candidates = 0;
    double pc = 0.0;
    double wall_generate_ms = 0.0;
    double wall_block_ms = 0.0;
    double critical_path_units = 0.0;   // mapreduce only
    std::uint64_t largest_block = 0;
};

std::vector<BenchRow> bench(const BenchScenario& scenario);
void write_bench_table(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace snb
