#include "snb/pipeline.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "snb/errors.hpp"

namespace snb {

std::span<const RecordId> OrderedRunTrace::block(std::size_t i) const {
    return std::span<const RecordId>(list).subspan(block_begin[i],
                                                   block_begin[i + 1] - block_begin[i]);
}

namespace {

// Score cache keyed by canonical pair; GAS re-scores many pairs.
class PairScoreMemo {
public:
    PairScoreMemo(const ScoringHeuristic& f, const Dataset& ds) : f_(f), ds_(ds) {}

    double operator()(RecordId a, RecordId b) const {
        const IdPair p = make_id_pair(a, b);
        auto it = memo_.find(p);
        if (it != memo_.end()) return it->second;
        const double s = score_pair(f_, ds_.by_id(p.lo), ds_.by_id(p.hi));
        memo_.emplace(p, s);
        return s;
    }

private:
    const ScoringHeuristic& f_;
    const Dataset& ds_;
    mutable std::map<IdPair, double> memo_;
};

double adjacent_sum(std::span<const RecordId> list, const PairScoreMemo& score) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < list.size(); ++i) s += score(list[i], list[i + 1]);
    return s;
}

CandidateSet merge_and_score(std::span<const RecordId> list, WindowConfig w,
                             const ScoringHeuristic& f, const Dataset& ds) {
    CandidateSet cs;
    cs.pairs = sn_merge(list, w);
    cs.score = w_score(list, w, f, ds);
    return cs;
}

}  // namespace

SnRunResult single_pass_local(const Dataset& ds, const BlockingKeySpec& b,
                              const ScoringHeuristic& f_local, const MaxTourSolver& solver,
                              WindowConfig w) {
    if (!f_local.is_local())
        throw contract_error("single_pass_local requires a local scoring heuristic");
    const BlockIndex index = build_block_index(ds, b);
    SnRunResult result;
    result.trace.block_begin.push_back(0);
    for (const auto& block : index.blocks) {
        const OrderingResult ordered = order_block_tsp(block, f_local, ds, solver);
        result.trace.list.insert(result.trace.list.end(), ordered.list.begin(),
                                 ordered.list.end());
        result.trace.block_begin.push_back(result.trace.list.size());
    }
    result.candidates = merge_and_score(result.trace.list, w, f_local, ds);
    result.trace.f1 = result.candidates.score;
    return result;
}

MultiPassResult multi_pass(const Dataset& ds, const PassSpec& spec,
                           const MaxTourSolver& solver, WindowConfig w) {
    if (spec.passes.empty()) throw contract_error("multi-pass spec needs at least one pass");
    if (spec.passes.size() > 64) throw contract_error("multi-pass provenance caps at 64 passes");
    std::set<std::string> seen;
    for (const auto& [key, heuristic] : spec.passes) {
        if (!seen.insert(key.to_string() + "||" + heuristic.fingerprint()).second)
            throw contract_error("multi-pass (key, heuristic) pairs must be distinct");
        if (!heuristic.is_local())
            throw contract_error("multi-pass requires local scoring heuristics");
    }
    std::map<IdPair, std::uint64_t> merged;
    MultiPassResult out;
    for (std::size_t p = 0; p < spec.passes.size(); ++p) {
        const auto& [key, heuristic] = spec.passes[p];
        const SnRunResult run = single_pass_local(ds, key, heuristic, solver, w);
        out.per_pass_sizes.push_back(run.candidates.pairs.size());
        for (const IdPair& pair : run.candidates.pairs)
            merged[pair] |= std::uint64_t(1) << p;
    }
    out.pairs.reserve(merged.size());
    out.provenance.reserve(merged.size());
    for (const auto& [pair, mask] : merged) {
        out.pairs.push_back(pair);
        out.provenance.push_back(mask);
    }
    return out;
}

std::vector<RecordId> select_polarity(const Record& prev_tail, const Tour& circuit,
                                      const TspGraph& g, const ScoringHeuristic& f,
                                      const Dataset& ds) {
    auto [canonical, reversed] = tour_polarities(circuit, g);
    if (canonical.size() < 2) return canonical;
    const double head = score_pair(f, ds.by_id(canonical.front()), prev_tail);
    const double tail = score_pair(f, ds.by_id(canonical.back()), prev_tail);
    // strict: a tie returns the reversed list
    return head > tail ? canonical : reversed;
}

OrderedRunTrace gas_pass(const OrderedRunTrace& trace, const ScoringHeuristic& f,
                         const Dataset& ds, GasDirection direction) {
    OrderedRunTrace out = trace;
    const std::size_t u = out.block_count();
    if (u < 2) return out;
    const PairScoreMemo score(f, ds);
    auto block_span = [&](std::size_t i) {
        return std::span<RecordId>(out.list).subspan(out.block_begin[i],
                                                     out.block_begin[i + 1] - out.block_begin[i]);
    };
    auto try_swap = [&](std::size_t i, bool forward) {
        auto block = block_span(i);
        // forward: r is the block's last record, s the next block's first;
        // backward mirrors with r first and s the previous block's last.
        const std::size_t r_pos = forward ? block.size() - 1 : 0;
        const RecordId s = forward ? out.list[out.block_begin[i + 1]]
                                   : out.list[out.block_begin[i] - 1];
        std::size_t best_pos = 0;
        double best_score = -1.0;
        for (std::size_t p = 0; p < block.size(); ++p) {
            const double sc = score(block[p], s);
            if (sc > best_score) {
                best_score = sc;
                best_pos = p;
            }
        }
        if (best_pos == r_pos) return;
        const double gain = best_score - score(block[r_pos], s);
        const double before = adjacent_sum(block, score);
        std::swap(block[best_pos], block[r_pos]);
        const double loss = before - adjacent_sum(block, score);
        if (!(gain > loss)) std::swap(block[best_pos], block[r_pos]);  // undo
    };
    if (direction == GasDirection::Forward) {
        for (std::size_t i = 0; i + 1 < u; ++i) try_swap(i, true);
    } else {
        for (std::size_t i = u - 1; i >= 1; --i) try_swap(i, false);
    }
    return out;
}

SnRunResult single_pass_global(const Dataset& ds, const BlockingKeySpec& b,
                               const ScoringHeuristic& f, const MaxTourSolver& solver) {
    const BlockIndex index = build_block_index(ds, b);
    const WindowConfig w{2};
    OrderedRunTrace trace;
    trace.block_begin.push_back(0);
    for (std::size_t bi = 0; bi < index.blocks.size(); ++bi) {
        const auto& block = index.blocks[bi];
        std::vector<RecordId> ordered;
        if (block.size() == 1) {
            ordered = block;
        } else {
            const TspGraph g = records_to_graph(block, f, ds, /*with_dummy=*/true);
            const Tour tour = solver.solve(g);
            if (trace.list.empty()) {
                ordered = tour_to_list(tour, g);  // first block: canonical polarity
            } else {
                ordered = select_polarity(ds.by_id(trace.list.back()), tour, g, f, ds);
            }
        }
        trace.list.insert(trace.list.end(), ordered.begin(), ordered.end());
        trace.block_begin.push_back(trace.list.size());
    }

    const CandidateSet gamma1 = merge_and_score(trace.list, w, f, ds);
    trace.f1 = gamma1.score;

    OrderedRunTrace fwd = gas_pass(trace, f, ds, GasDirection::Forward);
    const CandidateSet gamma2 = merge_and_score(fwd.list, w, f, ds);
    OrderedRunTrace bwd = gas_pass(trace, f, ds, GasDirection::Backward);
    const CandidateSet gamma3 = merge_and_score(bwd.list, w, f, ds);

    SnRunResult result;
    result.trace = trace;
    result.trace.f2 = gamma2.score;
    result.trace.f3 = gamma3.score;
    // highest score wins; ties break toward the earlier candidate set
    if (gamma2.score > gamma1.score && gamma2.score >= gamma3.score) {
        result.candidates = gamma2;
        result.trace.list = fwd.list;
        result.trace.chosen = 2;
    } else if (gamma3.score > gamma1.score && gamma3.score > gamma2.score) {
        result.candidates = gamma3;
        result.trace.list = bwd.list;
        result.trace.chosen = 3;
    } else {
        result.candidates = gamma1;
        result.trace.chosen = 1;
    }
    return result;
}

}  // namespace snb
