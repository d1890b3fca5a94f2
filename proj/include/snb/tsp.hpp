#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "snb/record.hpp"
#include "snb/scoring.hpp"

namespace snb {

// Complete undirected graph with a symmetric non-negative weight matrix.
// When built from a block with a dummy vertex, every dummy edge is 0, which
// lets a tour solver answer the path question.
struct TspGraph {
    int n = 0;
    std::vector<double> weights;  // n*n, symmetric, diagonal unused
    std::optional<int> dummy;
    std::vector<RecordId> vertex_to_record;  // empty if not record-backed

    explicit TspGraph(int n_ = 0) : n(n_), weights(std::size_t(n_) * n_, 0.0) {}

    double weight(int i, int j) const { return weights[std::size_t(i) * n + j]; }
    void set_weight(int i, int j, double w);
};

// Hamiltonian cycle, interpreted cyclically.
struct Tour {
    std::vector<int> order;
    double weight(const TspGraph& g) const;
};

// Declared quality of a tour subroutine: approximation ratio in (0,1] and
// the polynomial exponent used by the run-time model.
struct ApproxProfile {
    double ratio = 1.0;
    int exponent = 3;
    std::string name;
};

// Max tour-TSP subroutine interface. Any solver with a declared profile can
// drop in; pipelines only rely on this contract.
class MaxTourSolver {
public:
    virtual ~MaxTourSolver() = default;
    virtual Tour solve(const TspGraph& g) const = 0;
    virtual ApproxProfile profile() const = 0;
};

// Held-Karp bitmask dynamic program; exact oracle up to the vertex budget.
class ExactTourSolver : public MaxTourSolver {
public:
    explicit ExactTourSolver(int max_vertices = 18) : budget_(max_vertices) {}
    Tour solve(const TspGraph& g) const override;
    ApproxProfile profile() const override { return {1.0, 3, "exact-dp"}; }

private:
    int budget_;
};

// Greedy edge selection, descending weight, lexicographic tie-break; ratio
// 1/2 for non-negative weights. Leftover path fragments are stitched with
// the heaviest feasible endpoint edges.
class GreedyTourSolver : public MaxTourSolver {
public:
    Tour solve(const TspGraph& g) const override;
    ApproxProfile profile() const override { return {0.5, 2, "greedy-edge"}; }
};

// Exact below the record-count cutoff, greedy above it.
class ThresholdTourSolver : public MaxTourSolver {
public:
    explicit ThresholdTourSolver(int exact_record_cutoff = 12)
        : cutoff_(exact_record_cutoff) {}
    Tour solve(const TspGraph& g) const override;
    ApproxProfile profile() const override;

private:
    int record_count(const TspGraph& g) const;
    int cutoff_;
    ExactTourSolver exact_;
    GreedyTourSolver greedy_;
};

// Bijectively maps block records to vertices; edge weights are f scores.
// with_dummy appends a zero-weighted dummy vertex (path-TSP-ready when
// with_dummy is false). Any nonzero score makes the dummy-extended weight
// function non-metric, so solvers must not assume the triangle inequality.
TspGraph records_to_graph(std::span<const RecordId> block, const ScoringHeuristic& f,
                          const Dataset& ds, bool with_dummy);

// Rotates the cycle so the dummy leads, drops it, and reverse-maps vertices
// to record ids. Of the two score-equal polarities returns the canonical one
// (lower first record id); sn_pipeline overrides polarity for global f.
std::vector<RecordId> tour_to_list(const Tour& t, const TspGraph& g);

// Both polarities as lists, canonical first.
std::pair<std::vector<RecordId>, std::vector<RecordId>> tour_polarities(const Tour& t,
                                                                        const TspGraph& g);

// Debug dump, one "i j weight" line per edge.
void write_graph(std::ostream& out, const TspGraph& g);

}  // namespace snb
