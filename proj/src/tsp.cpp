#include "snb/tsp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <ostream>

#include "snb/errors.hpp"

namespace snb {

void TspGraph::set_weight(int i, int j, double w) {
    if (i == j) throw contract_error("self-loop weight in TSP graph");
    if (w < 0.0) throw contract_error("negative TSP edge weight");
    weights[std::size_t(i) * n + j] = w;
    weights[std::size_t(j) * n + i] = w;
}

double Tour::weight(const TspGraph& g) const {
    double total = 0.0;
    const std::size_t n = order.size();
    for (std::size_t i = 0; i < n; ++i)
        total += g.weight(order[i], order[(i + 1) % n]);
    return total;
}

Tour ExactTourSolver::solve(const TspGraph& g) const {
    const int n = g.n;
    if (n > budget_)
        throw capacity_error("exact tour solver budget is " + std::to_string(budget_) +
                             " vertices, got " + std::to_string(n));
    Tour t;
    if (n <= 0) throw contract_error("empty TSP graph");
    if (n <= 3) {
        // a single cycle up to rotation and direction
        t.order.resize(n);
        std::iota(t.order.begin(), t.order.end(), 0);
        return t;
    }
    // Held-Karp over paths anchored at vertex 0.
    const std::size_t full = std::size_t(1) << n;
    constexpr double kNone = -1.0;
    std::vector<double> dp(full * n, kNone);
    std::vector<std::int8_t> parent(full * n, -1);
    dp[std::size_t(1) * n + 0] = 0.0;
    for (std::size_t mask = 1; mask < full; ++mask) {
        if (!(mask & 1)) continue;
        for (int last = 0; last < n; ++last) {
            const double cur = dp[mask * n + last];
            if (cur == kNone || !(mask & (std::size_t(1) << last))) continue;
            for (int next = 1; next < n; ++next) {
                if (mask & (std::size_t(1) << next)) continue;
                const std::size_t nmask = mask | (std::size_t(1) << next);
                double cand = cur + g.weight(last, next);
                double& slot = dp[nmask * n + next];
                if (cand > slot) {
                    slot = cand;
                    parent[nmask * n + next] = std::int8_t(last);
                }
            }
        }
    }
    const std::size_t all = full - 1;
    double best = kNone;
    int best_last = -1;
    for (int last = 1; last < n; ++last) {
        const double cur = dp[all * n + last];
        if (cur == kNone) continue;
        const double cand = cur + g.weight(last, 0);
        if (cand > best) {
            best = cand;
            best_last = last;
        }
    }
    // walk parents back to vertex 0
    std::vector<int> rev;
    std::size_t mask = all;
    int v = best_last;
    while (v != -1) {
        rev.push_back(v);
        int p = parent[mask * n + v];
        mask &= ~(std::size_t(1) << v);
        v = p;
        if (v == 0) {
            rev.push_back(0);
            break;
        }
    }
    std::reverse(rev.begin(), rev.end());
    t.order = std::move(rev);
    return t;
}

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

Tour GreedyTourSolver::solve(const TspGraph& g) const {
    const int n = g.n;
    if (n <= 0) throw contract_error("empty TSP graph");
    Tour t;
    if (n <= 3) {
        t.order.resize(n);
        std::iota(t.order.begin(), t.order.end(), 0);
        return t;
    }
    struct Edge {
        double w;
        int i, j;
    };
    std::vector<Edge> edges;
    edges.reserve(std::size_t(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({g.weight(i, j), i, j});
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        if (a.w != b.w) return a.w > b.w;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    });
    std::vector<int> deg(n, 0);
    std::vector<std::vector<int>> adj(n);
    Dsu dsu(n);
    int accepted = 0;
    for (const Edge& e : edges) {
        if (accepted == n - 1) break;
        if (deg[e.i] >= 2 || deg[e.j] >= 2) continue;
        if (dsu.find(e.i) == dsu.find(e.j)) continue;  // would close a short cycle
        dsu.unite(e.i, e.j);
        ++deg[e.i];
        ++deg[e.j];
        adj[e.i].push_back(e.j);
        adj[e.j].push_back(e.i);
        ++accepted;
    }
    // stitch remaining fragments end to end, heaviest feasible edge first
    while (accepted < n) {
        double bw = -1.0;
        int bi = -1, bj = -1;
        for (int i = 0; i < n; ++i) {
            if (deg[i] >= 2) continue;
            for (int j = i + 1; j < n; ++j) {
                if (deg[j] >= 2) continue;
                if (dsu.find(i) == dsu.find(j) && accepted != n - 1) continue;
                if (g.weight(i, j) > bw) {
                    bw = g.weight(i, j);
                    bi = i;
                    bj = j;
                }
            }
        }
        dsu.unite(bi, bj);
        ++deg[bi];
        ++deg[bj];
        adj[bi].push_back(bj);
        adj[bj].push_back(bi);
        ++accepted;
    }
    // walk the forced cycle from vertex 0
    t.order.reserve(n);
    int prev = -1, cur = 0;
    for (int step = 0; step < n; ++step) {
        t.order.push_back(cur);
        int next = (adj[cur][0] != prev) ? adj[cur][0] : adj[cur][1];
        prev = cur;
        cur = next;
    }
    return t;
}

int ThresholdTourSolver::record_count(const TspGraph& g) const {
    return g.n - (g.dummy ? 1 : 0);
}

Tour ThresholdTourSolver::solve(const TspGraph& g) const {
    if (record_count(g) <= cutoff_) return exact_.solve(g);
    return greedy_.solve(g);
}

ApproxProfile ThresholdTourSolver::profile() const {
    // the pipeline-level guarantee is the weaker of the two
    ApproxProfile p = greedy_.profile();
    p.name = "auto(exact<=" + std::to_string(cutoff_) + ",greedy)";
    return p;
}

TspGraph records_to_graph(std::span<const RecordId> block, const ScoringHeuristic& f,
                          const Dataset& ds, bool with_dummy) {
    if (block.empty()) throw contract_error("records_to_graph on an empty block");
    const int m = int(block.size());
    TspGraph g(with_dummy ? m + 1 : m);
    g.vertex_to_record.assign(block.begin(), block.end());
    if (with_dummy) g.dummy = m;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            g.set_weight(i, j, score_pair(f, ds.by_id(block[i]), ds.by_id(block[j])));
    return g;
}

std::pair<std::vector<RecordId>, std::vector<RecordId>> tour_polarities(const Tour& t,
                                                                        const TspGraph& g) {
    if (!g.dummy) throw contract_error("tour_to_list requires a dummy vertex");
    const int n = g.n;
    if (int(t.order.size()) != n) throw contract_error("tour does not visit every vertex");
    auto it = std::find(t.order.begin(), t.order.end(), *g.dummy);
    if (it == t.order.end()) throw contract_error("tour misses the dummy vertex");
    const std::size_t at = std::size_t(it - t.order.begin());
    std::vector<RecordId> list;
    list.reserve(std::size_t(n) - 1);
    for (int step = 1; step < n; ++step)
        list.push_back(g.vertex_to_record[t.order[(at + step) % n]]);
    std::vector<RecordId> reversed(list.rbegin(), list.rend());
    if (!list.empty() && reversed.front() < list.front()) std::swap(list, reversed);
    return {std::move(list), std::move(reversed)};
}

std::vector<RecordId> tour_to_list(const Tour& t, const TspGraph& g) {
    return tour_polarities(t, g).first;
}

void write_graph(std::ostream& out, const TspGraph& g) {
    char buf[64];
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j) {
            std::snprintf(buf, sizeof buf, "%.17g", g.weight(i, j));
            out << i << ' ' << j << ' ' << buf << '\n';
        }
}

}  // namespace snb
