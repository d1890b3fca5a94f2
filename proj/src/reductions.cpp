#include "snb/reductions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "snb/errors.hpp"
#include "snb/merge.hpp"

namespace snb {

namespace {

constexpr double kBoundaryEps = 1e-9;

Dataset bare_records(int m) {
    std::vector<Record> records(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) records[std::size_t(i)].id = RecordId(i);
    return Dataset(std::move(records));
}

void require_integer_weights(const TspGraph& g) {
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j) {
            const double w = g.weight(i, j);
            if (w < 0.0 || w != std::floor(w))
                throw contract_error("path-TSP weights must be non-negative integers");
        }
}

double edge_weight_sum(const TspGraph& g) {
    double total = 0.0;
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j) total += g.weight(i, j);
    return total;
}

std::int64_t binomial2(std::int64_t x) { return x * (x - 1) / 2; }

}  // namespace

RecordId scaled_id(int set_id, int internal_id, int w) {
    return RecordId(set_id * (w - 1) + internal_id);
}
int scaled_set_of(RecordId id, int w) { return int(id) / (w - 1); }
int scaled_internal_of(RecordId id, int w) { return int(id) % (w - 1); }

OrderingInstance reduce_pathtsp_to_2ordering(const PathTspInstance& inst) {
    const TspGraph& g = inst.graph;
    if (g.dummy) throw contract_error("path-TSP instance must not carry a dummy vertex");
    if (g.n < 2) throw contract_error("path-TSP reduction needs at least 2 vertices");
    if (inst.k < 0) throw contract_error("path-TSP threshold k must be non-negative");
    require_integer_weights(g);
    const double we = edge_weight_sum(g);
    auto table = std::make_shared<LookupTable>();
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            table->set(RecordId(i), RecordId(j), we - g.weight(i, j));
    OrderingInstance out;
    out.records = bare_records(g.n);
    out.f = ScoringHeuristic::lookup(std::move(table));
    // Tight threshold: a 2-score of at least k' exists exactly when a
    // Hamiltonian path of cost at most k does. (The additive +1 variant
    // flips the decision whenever the minimum path cost equals k.)
    out.k_prime = we * double(g.n - 1) - double(inst.k);
    out.w = 2;
    return out;
}

OrderingInstance reduce_metric_to_2ordering(const TspGraph& metric_graph, double k) {
    const TspGraph& g = metric_graph;
    if (g.dummy) throw contract_error("metric instance must not carry a dummy vertex");
    if (g.n < 2) throw contract_error("metric reduction needs at least 2 vertices");
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j) {
            const double w = g.weight(i, j);
            if (w < 0.0 || w > 1.0)
                throw contract_error("metric weights must lie in [0,1]");
        }
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            for (int l = 0; l < g.n; ++l) {
                if (i == j || j == l || i == l) continue;
                if (g.weight(i, l) > g.weight(i, j) + g.weight(j, l) + 1e-12)
                    throw contract_error("weight function violates the triangle inequality");
            }
    auto table = std::make_shared<LookupTable>();
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            table->set(RecordId(i), RecordId(j), 1.0 - g.weight(i, j));
    OrderingInstance out;
    out.records = bare_records(g.n);
    out.f = ScoringHeuristic::lookup(std::move(table));
    out.k_prime = double(g.n - 1) - k;
    out.w = 2;
    return out;
}

ScaledInstance scale_2_to_w(const Dataset& records, const ScoringHeuristic& f, double k,
                            int w) {
    if (w <= 2) throw contract_error("scaling construction needs w > 2");
    const int m = int(records.size());
    if (m < 2) throw contract_error("scaling construction needs at least 2 records");
    // rule 1 score: the halved symmetric double sum = sum over unordered pairs
    double b = 0.0;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            b += score_pair(f, records.records()[std::size_t(i)],
                            records.records()[std::size_t(j)]);
    auto table = std::make_shared<LookupTable>();
    for (int i = 0; i < m; ++i) {
        for (int c = 0; c < w - 1; ++c) {
            for (int d = c + 1; d < w - 1; ++d)  // rule 1: within an internal set
                table->set(scaled_id(i, c, w), scaled_id(i, d, w), b);
            for (int j = i + 1; j < m; ++j)  // rule 2: same internal id across sets
                table->set(scaled_id(i, c, w), scaled_id(j, c, w),
                           score_pair(f, records.records()[std::size_t(i)],
                                      records.records()[std::size_t(j)]));
        }
    }
    // rule 3: everything else defaults to 0
    ScaledInstance out;
    out.records = bare_records(m * (w - 1));
    out.f_prime = ScoringHeuristic::lookup(std::move(table));
    out.w = w;
    out.m = m;
    out.rule1_score = b;
    out.t1 = double(m) * double(binomial2(w - 1)) * b;
    out.t2 = k * double(w - 1);
    out.k_prime = out.t1 + out.t2;
    return out;
}

double min_hamiltonian_path_cost(const TspGraph& g) {
    const int m = g.n;
    if (m > 8) throw capacity_error("path enumeration budget is 8 vertices");
    if (m < 2) throw contract_error("need at least 2 vertices for a path");
    std::vector<int> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), 0);
    double best = std::numeric_limits<double>::infinity();
    do {
        if (perm.front() > perm.back()) continue;
        double cost = 0.0;
        for (int i = 0; i + 1 < m; ++i) cost += g.weight(perm[std::size_t(i)], perm[std::size_t(i) + 1]);
        best = std::min(best, cost);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

double best_w_ordering_score(const Dataset& records, const ScoringHeuristic& f, int w) {
    const int n = int(records.size());
    const std::size_t budget = (w == 2) ? 9 : 8;
    if (std::size_t(n) > budget)
        throw capacity_error("w-ordering enumeration budget exceeded");
    if (n == 1) return 0.0;
    // dense matrix + the position-pair set of the merge step
    std::vector<double> m(std::size_t(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            m[std::size_t(i) * n + j] = m[std::size_t(j) * n + i] =
                score_pair(f, records.records()[std::size_t(i)], records.records()[std::size_t(j)]);
    std::vector<RecordId> positions(static_cast<std::size_t>(n));
    std::iota(positions.begin(), positions.end(), 0);
    const std::vector<IdPair> window_pairs = sn_merge(positions, {w});
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    double best = -std::numeric_limits<double>::infinity();
    do {
        // w-scores are reversal-invariant, so half the permutations suffice
        if (perm.front() > perm.back()) continue;
        double score = 0.0;
        for (const IdPair& p : window_pairs)
            score += m[std::size_t(perm[std::size_t(p.lo)]) * n + perm[std::size_t(p.hi)]];
        best = std::max(best, score);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

EquivalenceOutcome check_theorem2_instance(const PathTspInstance& inst, double kprime_offset) {
    const OrderingInstance ordering = reduce_pathtsp_to_2ordering(inst);
    EquivalenceOutcome out;
    out.lhs_value = min_hamiltonian_path_cost(inst.graph);
    out.rhs_value = best_w_ordering_score(ordering.records, ordering.f, 2);
    const double kp = ordering.k_prime + kprime_offset;
    out.lhs = out.lhs_value <= double(inst.k);
    out.rhs = out.rhs_value >= kp;
    out.boundary = std::abs(out.lhs_value - double(inst.k)) < kBoundaryEps ||
                   std::abs(out.rhs_value - kp) < kBoundaryEps;
    return out;
}

EquivalenceOutcome check_corollary1_instance(const TspGraph& metric_graph, double k,
                                             double kprime_offset) {
    const OrderingInstance ordering = reduce_metric_to_2ordering(metric_graph, k);
    EquivalenceOutcome out;
    out.lhs_value = min_hamiltonian_path_cost(metric_graph);
    out.rhs_value = best_w_ordering_score(ordering.records, ordering.f, 2);
    const double kp = ordering.k_prime + kprime_offset;
    out.lhs = out.lhs_value <= k;
    out.rhs = out.rhs_value >= kp;
    out.boundary = std::abs(out.lhs_value - k) < kBoundaryEps ||
                   std::abs(out.rhs_value - kp) < kBoundaryEps;
    return out;
}

EquivalenceOutcome check_theorem3_instance(const Dataset& records, const ScoringHeuristic& f,
                                           double k, int w, double kprime_offset) {
    ScaledInstance scaled = scale_2_to_w(records, f, k, w);
    EquivalenceOutcome out;
    out.lhs_value = best_w_ordering_score(records, f, 2);
    out.rhs_value = best_w_ordering_score(scaled.records, scaled.f_prime, w);
    const double kp = scaled.k_prime + kprime_offset;
    out.lhs = out.lhs_value >= k;
    out.rhs = out.rhs_value >= kp;
    out.boundary = std::abs(out.lhs_value - k) < kBoundaryEps ||
                   std::abs(out.rhs_value - kp) < kBoundaryEps;
    return out;
}

namespace {

std::string dump_graph_inline(const TspGraph& g) {
    std::ostringstream out;
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j) out << i << '-' << j << ':' << g.weight(i, j) << ' ';
    return out.str();
}

void record_outcome(EquivalenceReport& report, const EquivalenceOutcome& outcome,
                    bool exclude_boundary, const std::string& context) {
    if (exclude_boundary && outcome.boundary) {
        ++report.boundary_excluded;
        return;
    }
    if (outcome.agree()) {
        ++report.agreements;
    } else {
        ++report.disagreements;
        if (report.witnesses.size() < 10) {
            std::ostringstream w;
            w << context << " lhs=" << (outcome.lhs ? "true" : "false")
              << " (value " << outcome.lhs_value << ") rhs=" << (outcome.rhs ? "true" : "false")
              << " (value " << outcome.rhs_value << ")";
            report.witnesses.push_back(w.str());
        }
    }
}

}  // namespace

EquivalenceReport verify_theorem2(std::uint64_t seed0, int seeds, int max_m,
                                  double kprime_offset) {
    if (max_m < 4 || max_m > 7) throw contract_error("theorem-2 verifier expects 4 <= max_m <= 7");
    EquivalenceReport report;
    report.theorem = "theorem-2";
    for (int s = 0; s < seeds; ++s) {
        std::mt19937_64 rng(seed0 + std::uint64_t(s));
        const int m = 4 + int(rng() % std::uint64_t(max_m - 3));
        TspGraph g(m);
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) g.set_weight(i, j, double(rng() % 10));
        ++report.instances;
        const double mincost = min_hamiltonian_path_cost(g);
        std::set<std::int64_t> ks;
        for (std::int64_t d = -2; d <= 2; ++d) {
            const std::int64_t k = std::int64_t(mincost) + d;
            if (k >= 0) ks.insert(k);
        }
        const std::uint64_t k_limit = std::uint64_t(edge_weight_sum(g)) * std::uint64_t(m - 1) + 1;
        ks.insert(std::int64_t(rng() % k_limit));
        ks.insert(std::int64_t(rng() % k_limit));
        for (std::int64_t k : ks) {
            PathTspInstance inst{g, k};
            std::ostringstream ctx;
            ctx << "seed=" << (seed0 + std::uint64_t(s)) << " m=" << m << " k=" << k << " ["
                << dump_graph_inline(g) << "]";
            record_outcome(report, check_theorem2_instance(inst, kprime_offset),
                           /*exclude_boundary=*/false, ctx.str());
        }
    }
    return report;
}

EquivalenceReport verify_corollary1(std::uint64_t seed0, int seeds, int max_m,
                                    double kprime_offset) {
    if (max_m < 3 || max_m > 7) throw contract_error("corollary-1 verifier expects 3 <= max_m <= 7");
    EquivalenceReport report;
    report.theorem = "corollary-1";
    for (int s = 0; s < seeds; ++s) {
        std::mt19937_64 rng(seed0 + std::uint64_t(s));
        const int m = 3 + int(rng() % std::uint64_t(max_m - 2));
        // random points in the unit square; scaled Euclidean distance is a
        // metric with range [0,1]
        std::vector<std::pair<double, double>> pts(static_cast<std::size_t>(m));
        auto coord = [&rng] { return double(rng() % 1000000) / 1000000.0; };
        for (auto& p : pts) p = {coord(), coord()};
        TspGraph g(m);
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                const double dx = pts[std::size_t(i)].first - pts[std::size_t(j)].first;
                const double dy = pts[std::size_t(i)].second - pts[std::size_t(j)].second;
                g.set_weight(i, j, std::sqrt(dx * dx + dy * dy) / std::sqrt(2.0));
            }
        ++report.instances;
        const double mincost = min_hamiltonian_path_cost(g);
        std::vector<double> ks = {mincost - 0.25, mincost, mincost + 0.25,
                                  double(rng() % 1000) / 1000.0 * double(m - 1),
                                  double(rng() % 1000) / 1000.0 * double(m - 1)};
        for (double k : ks) {
            if (k < 0.0) continue;
            std::ostringstream ctx;
            ctx << "seed=" << (seed0 + std::uint64_t(s)) << " m=" << m << " k=" << k;
            record_outcome(report, check_corollary1_instance(g, k, kprime_offset),
                           /*exclude_boundary=*/true, ctx.str());
        }
    }
    return report;
}

EquivalenceReport verify_theorem3(std::uint64_t seed0, int seeds, int m, int w,
                                  double kprime_offset) {
    if (m > 3 || w != 3)
        throw capacity_error("theorem-3 verifier budget is m <= 3, w = 3");
    if (m < 2) throw contract_error("theorem-3 verifier needs m >= 2");
    EquivalenceReport report;
    report.theorem = "theorem-3";
    for (int s = 0; s < seeds; ++s) {
        std::mt19937_64 rng(seed0 + std::uint64_t(s));
        const Dataset records = bare_records(m);
        auto table = std::make_shared<LookupTable>();
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                table->set(RecordId(i), RecordId(j), double(rng() % 10));
        const ScoringHeuristic f = ScoringHeuristic::lookup(table);
        ++report.instances;
        // sweep k over every achievable 2-score plus one on each side
        std::set<double> achievable;
        std::vector<int> perm(static_cast<std::size_t>(m));
        std::iota(perm.begin(), perm.end(), 0);
        do {
            double sc = 0.0;
            for (int i = 0; i + 1 < m; ++i)
                sc += table->get(RecordId(perm[std::size_t(i)]), RecordId(perm[std::size_t(i) + 1]));
            achievable.insert(sc);
        } while (std::next_permutation(perm.begin(), perm.end()));
        std::set<double> ks = achievable;
        ks.insert(*achievable.begin() - 1.0);
        ks.insert(*achievable.rbegin() + 1.0);
        for (double k : ks) {
            if (k < 0.0) continue;
            std::ostringstream ctx;
            ctx << "seed=" << (seed0 + std::uint64_t(s)) << " m=" << m << " w=" << w
                << " k=" << k;
            record_outcome(report, check_theorem3_instance(records, f, k, w, kprime_offset),
                           /*exclude_boundary=*/false, ctx.str());
        }
    }
    return report;
}

StackingReport check_stacking_properties(const ScaledInstance& scaled) {
    const int w = scaled.w;
    const int m = scaled.m;
    const int n = m * (w - 1);
    if (n > 8) throw capacity_error("stacking enumeration budget is |S| <= 8");
    const LookupTable& table = *scaled.f_prime.table;
    std::vector<double> mat(std::size_t(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            mat[std::size_t(i) * n + j] = mat[std::size_t(j) * n + i] =
                table.get(RecordId(i), RecordId(j));
    std::vector<RecordId> positions(static_cast<std::size_t>(n));
    std::iota(positions.begin(), positions.end(), 0);
    const std::vector<IdPair> window_pairs = sn_merge(positions, {w});

    auto wscore_of = [&](const std::vector<int>& perm) {
        double s = 0.0;
        for (const IdPair& p : window_pairs)
            s += mat[std::size_t(perm[std::size_t(p.lo)]) * n + perm[std::size_t(p.hi)]];
        return s;
    };

    StackingReport report;
    const double ninf = -std::numeric_limits<double>::infinity();
    report.max_interleaved = ninf;
    report.max_stacked = ninf;
    report.min_stacked = std::numeric_limits<double>::infinity();
    report.max_overall = ninf;

    struct Entry {
        double score;
        bool interleaved;
    };
    std::vector<Entry> entries;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> first_pos(static_cast<std::size_t>(m)), last_pos(static_cast<std::size_t>(m));
    do {
        ++report.total;
        const double score = wscore_of(perm);
        report.max_overall = std::max(report.max_overall, score);
        std::fill(first_pos.begin(), first_pos.end(), n);
        std::fill(last_pos.begin(), last_pos.end(), -1);
        for (int pos = 0; pos < n; ++pos) {
            const int set = scaled_set_of(RecordId(perm[std::size_t(pos)]), w);
            first_pos[std::size_t(set)] = std::min(first_pos[std::size_t(set)], pos);
            last_pos[std::size_t(set)] = std::max(last_pos[std::size_t(set)], pos);
        }
        bool stacked = true;
        for (int set = 0; set < m; ++set)
            if (last_pos[std::size_t(set)] - first_pos[std::size_t(set)] != w - 2) stacked = false;
        if (!stacked) {
            ++report.interleaved;
            report.max_interleaved = std::max(report.max_interleaved, score);
            entries.push_back({score, true});
            continue;
        }
        report.max_stacked = std::max(report.max_stacked, score);
        report.min_stacked = std::min(report.min_stacked, score);
        entries.push_back({score, false});
        // aligned: every sub-list spells the same internal-id sequence
        bool aligned = true;
        for (int set = 1; set < m && aligned; ++set)
            for (int c = 0; c < w - 1; ++c) {
                const int ref = scaled_internal_of(
                    RecordId(perm[std::size_t(first_pos[0] + c)]), w);
                const int cur = scaled_internal_of(
                    RecordId(perm[std::size_t(first_pos[std::size_t(set)] + c)]), w);
                if (ref != cur) {
                    aligned = false;
                    break;
                }
            }
        if (aligned) {
            ++report.stacked_aligned;
        } else {
            ++report.stacked_unaligned;
            // alignment set: realign every sub-list to each pivot's order
            double align_max = ninf;
            for (int pivot = 0; pivot < m; ++pivot) {
                std::vector<int> pivot_order(static_cast<std::size_t>(w - 1));
                for (int c = 0; c < w - 1; ++c)
                    pivot_order[std::size_t(c)] = scaled_internal_of(
                        RecordId(perm[std::size_t(first_pos[std::size_t(pivot)] + c)]), w);
                std::vector<int> aligned_perm = perm;
                for (int set = 0; set < m; ++set) {
                    if (set == pivot) continue;
                    for (int c = 0; c < w - 1; ++c)
                        aligned_perm[std::size_t(first_pos[std::size_t(set)] + c)] =
                            int(scaled_id(set, pivot_order[std::size_t(c)], w));
                }
                align_max = std::max(align_max, wscore_of(aligned_perm));
            }
            if (score > align_max + kBoundaryEps) ++report.p2_violations;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    for (const Entry& e : entries)
        if (e.interleaved && e.score > report.min_stacked + kBoundaryEps)
            ++report.p1_forall_violations;

    report.partition_ok =
        report.interleaved + report.stacked_aligned + report.stacked_unaligned == report.total;
    report.p1_classmax_ok = report.max_interleaved <= report.max_stacked + kBoundaryEps;
    report.p2_ok = report.p2_violations == 0;
    return report;
}

std::string format_report(const EquivalenceReport& r) {
    std::ostringstream out;
    out << r.theorem << ": instances=" << r.instances << " checks="
        << (r.agreements + r.disagreements) << " agreements=" << r.agreements
        << " disagreements=" << r.disagreements;
    if (r.boundary_excluded > 0) out << " boundary_excluded=" << r.boundary_excluded;
    out << " => " << (r.all_agree() ? "PASS" : "FAIL") << '\n';
    for (const auto& w : r.witnesses) out << "  witness: " << w << '\n';
    return out.str();
}

std::string format_report(const StackingReport& r) {
    std::ostringstream out;
    out << "stacking: total=" << r.total << " interleaved=" << r.interleaved
        << " aligned=" << r.stacked_aligned << " unaligned=" << r.stacked_unaligned
        << " partition=" << (r.partition_ok ? "ok" : "BROKEN")
        << " classmax_p1=" << (r.p1_classmax_ok ? "ok" : "VIOLATED")
        << " p2=" << (r.p2_ok ? "ok" : "VIOLATED")
        << " forall_p1_violations=" << r.p1_forall_violations << '\n';
    return out.str();
}

}  // namespace snb
