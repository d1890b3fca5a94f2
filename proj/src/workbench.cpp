#include "snb/workbench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include "snb/block_index.hpp"
#include "snb/errors.hpp"
#include "snb/mapreduce.hpp"
#include "snb/pipeline.hpp"

namespace snb {

double harmonic_sum(int u) {
    if (u < 1) throw contract_error("harmonic_sum needs u >= 1");
    double h = 0.0;
    for (int i = u; i >= 1; --i) h += 1.0 / double(i);
    return h;
}

std::vector<std::uint64_t> uniform_block_sizes(std::uint64_t n, int u) {
    if (u < 1 || n < std::uint64_t(u)) throw contract_error("need n >= u >= 1");
    std::vector<std::uint64_t> sizes(std::size_t(u), n / std::uint64_t(u));
    for (std::size_t i = 0; i < n % std::uint64_t(u); ++i) ++sizes[i];
    return sizes;
}

std::vector<std::uint64_t> zipf_block_sizes(std::uint64_t n, int u) {
    if (u < 1 || n < std::uint64_t(u)) throw contract_error("need n >= u >= 1");
    const double h = harmonic_sum(u);
    std::vector<double> raw(static_cast<std::size_t>(u));
    std::vector<std::uint64_t> sizes(static_cast<std::size_t>(u));
    std::uint64_t assigned = 0;
    for (int m = 1; m <= u; ++m) {
        raw[std::size_t(m - 1)] = double(n) / (double(m) * h);
        sizes[std::size_t(m - 1)] = std::uint64_t(std::floor(raw[std::size_t(m - 1)] + 1e-9));
        assigned += sizes[std::size_t(m - 1)];
    }
    // largest-remainder correction (earlier block wins remainder ties, which
    // keeps sizes non-increasing)
    std::vector<std::size_t> order(static_cast<std::size_t>(u));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const double ra = raw[a] - std::floor(raw[a] + 1e-9);
        const double rb = raw[b] - std::floor(raw[b] + 1e-9);
        if (ra != rb) return ra > rb;
        return a < b;
    });
    if (assigned > n) throw contract_error("zipf rounding overflow");
    std::uint64_t leftover = n - assigned;
    for (std::size_t i = 0; leftover > 0; i = (i + 1) % order.size()) {
        ++sizes[order[i]];
        --leftover;
    }
    // every block keeps at least one record: take from the last maximal block
    for (std::size_t j = 0; j < sizes.size(); ++j) {
        while (sizes[j] == 0) {
            std::size_t donor = 0;
            for (std::size_t i = 1; i < j; ++i)
                if (sizes[i] >= sizes[donor]) donor = i;
            if (sizes[donor] < 2) throw contract_error("zipf sizes infeasible");
            --sizes[donor];
            ++sizes[j];
        }
    }
    return sizes;
}

namespace {

const char* const kFirstSuffixes[] = {"athy", "ohn", "anna", "erik", "ina", "omas"};
const char* const kLastSuffixes[] = {"ansom", "idley", "ogers", "arker", "ames", "ields"};

std::string block_bkv(int m) {
    std::string bkv;
    bkv.push_back(char('A' + (m / 26) % 26));
    bkv.push_back(char('A' + m % 26));
    bkv.push_back(char('0' + m % 10));
    return bkv;
}

// BKV-preserving perturbations: token initials and token count survive.
std::string mutate_value(const std::string& value, int style, std::mt19937_64& rng) {
    switch (style) {
        case 0: {  // swap two adjacent interior characters
            if (value.size() < 3) return value + "x";
            std::string out = value;
            const std::size_t p = 1 + rng() % (out.size() - 2);
            std::swap(out[p], out[p + 1]);
            return out;
        }
        case 1:  // abbreviation: John -> J.
            return value.substr(0, 1) + ".";
        default:  // suffix style, hyphenated to stay one token
            return value + "-Sr";
    }
}

}  // namespace

GeneratedData generate_dataset(std::uint64_t n, int u, Distribution dist, double dup_rate,
                               std::uint64_t seed) {
    if (dup_rate < 0.0 || dup_rate > 1.0) throw contract_error("dup_rate must lie in [0,1]");
    if (u > 676) throw contract_error("generator supports at most 676 blocks");
    GeneratedData out;
    out.planted_sizes =
        dist == Distribution::Uniform ? uniform_block_sizes(n, u) : zipf_block_sizes(n, u);
    std::mt19937_64 rng(seed);
    std::vector<Record> records;
    records.reserve(n);
    std::vector<IdPair> truth;
    RecordId next_id = 1;
    for (int m = 0; m < u; ++m) {
        const std::string bkv = block_bkv(m);
        out.planted_bkvs.push_back(bkv);
        const std::uint64_t size = out.planted_sizes[std::size_t(m)];
        std::uint64_t dups = std::uint64_t(std::floor(dup_rate * double(size) + 1e-9));
        if (dups >= size) dups = size - 1;  // a copy needs a source in its block
        const std::uint64_t originals = size - dups;
        std::vector<std::size_t> block_members;
        for (std::uint64_t i = 0; i < originals; ++i) {
            Record r;
            r.id = next_id++;
            r.attributes.resize(3);
            r.attributes[0] = bkv.substr(0, 1) +
                              kFirstSuffixes[rng() % std::size(kFirstSuffixes)];
            r.attributes[1] = bkv.substr(1, 1) +
                              kLastSuffixes[rng() % std::size(kLastSuffixes)];
            std::string zip = bkv.substr(2, 1);
            for (int d = 0; d < 4; ++d) zip.push_back(char('0' + rng() % 10));
            r.attributes[2] = zip;
            block_members.push_back(records.size());
            records.push_back(std::move(r));
        }
        for (std::uint64_t i = 0; i < dups; ++i) {
            const Record& source = records[block_members[rng() % block_members.size()]];
            Record dup = source;
            dup.id = next_id++;
            const int style = int(rng() % 3);
            const std::size_t attr = style == 2 ? 1 : rng() % 2;
            dup.attributes[attr] = mutate_value(dup.attributes[attr], style, rng);
            truth.push_back(make_id_pair(source.id, dup.id));
            records.push_back(std::move(dup));
        }
    }
    canonicalize_pairs(truth);
    out.dataset = Dataset(std::move(records));
    out.truth.pairs = std::move(truth);
    return out;
}

void write_truth(std::ostream& out, const GroundTruth& truth) {
    write_pairs(out, truth.pairs);
}

GroundTruth read_truth(std::istream& in) { return GroundTruth{read_pairs(in)}; }

PcResult pairs_completeness(const CandidateSet& candidates, const GroundTruth& truth) {
    if (candidates.pairs.empty())
        throw contract_error("pairs completeness is undefined for an empty candidate set");
    PcResult r;
    std::vector<IdPair> inter;
    std::set_intersection(candidates.pairs.begin(), candidates.pairs.end(),
                          truth.pairs.begin(), truth.pairs.end(), std::back_inserter(inter));
    r.true_positives = inter.size();
    r.pc = double(inter.size()) / double(candidates.pairs.size());
    r.recall_defined = !truth.pairs.empty();
    r.recall = r.recall_defined ? double(inter.size()) / double(truth.pairs.size()) : 0.0;
    return r;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

std::vector<BenchRow> bench(const BenchScenario& scenario) {
    std::vector<BenchRow> rows;
    const BlockingKeySpec key = BlockingKeySpec::parse("initials");
    const ThresholdTourSolver solver;
    for (std::uint64_t n : scenario.sizes) {
        BenchRow row;
        row.module = scenario.module;
        row.dist = scenario.dist == Distribution::Uniform ? "uniform" : "zipf";
        row.n = n;
        row.u = scenario.u;
        auto t0 = Clock::now();
        const GeneratedData data =
            generate_dataset(n, scenario.u, scenario.dist, scenario.dup_rate, scenario.seed);
        row.wall_generate_ms = ms_since(t0);
        row.largest_block =
            *std::max_element(data.planted_sizes.begin(), data.planted_sizes.end());
        t0 = Clock::now();
        if (scenario.module == "mapreduce") {
            const MapReduceConfig config{2, 4, scenario.seed};
            const MapReduceResult mr = run_mapreduce_blocking(
                data.dataset, key, ScoringHeuristic::token_jaccard(), config, solver);
            row.wall_block_ms = ms_since(t0);
            row.candidates = mr.scored.size();
            row.critical_path_units = mr.report.critical_path_units;
            if (!data.truth.pairs.empty() && !mr.scored.empty()) {
                CandidateSet cs;
                for (const auto& sp : mr.scored) cs.pairs.push_back(sp.pair);
                canonicalize_pairs(cs.pairs);
                row.pc = pairs_completeness(cs, data.truth).pc;
            }
        } else if (scenario.module == "sn") {
            const ScoringHeuristic f = localize(ScoringHeuristic::token_jaccard(), key);
            const SnRunResult run = single_pass_local(data.dataset, key, f, solver, {2});
            row.wall_block_ms = ms_since(t0);
            row.candidates = run.candidates.pairs.size();
            if (!data.truth.pairs.empty())
                row.pc = pairs_completeness(run.candidates, data.truth).pc;
        } else {
            throw contract_error("unknown bench module '" + scenario.module + "'");
        }
        rows.push_back(row);
    }
    return rows;
}

void write_bench_table(std::ostream& out, const std::vector<BenchRow>& rows) {
    out << "module\tdist\tn\tu\tcandidates\tpc\tgen_ms\tblock_ms\tcritical_units\tlargest_block\n";
    for (const BenchRow& r : rows) {
        std::ostringstream line;
        line << r.module << '\t' << r.dist << '\t' << r.n << '\t' << r.u << '\t' << r.candidates
             << '\t' << r.pc << '\t' << r.wall_generate_ms << '\t' << r.wall_block_ms << '\t'
             << r.critical_path_units << '\t' << r.largest_block;
        out << line.str() << '\n';
    }
}

}  // namespace snb
