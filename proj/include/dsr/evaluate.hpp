#pragma once

#include <optional>
#include <span>
#include <vector>

#include "dsr/graph.hpp"
#include "dsr/spectral.hpp"

namespace dsr {

/// Per-graph quantities the theorem sweep classifies on.
struct GraphEvaluation {
    double lambda1 = 0.0;
    int min_degree = 0;
    std::optional<int> ckappa;
    int witness_components = 0;     // components of G - witness, 0 when undefined
    int witness_min_component = 0;  // smallest of them, 0 when undefined

    friend bool operator==(const GraphEvaluation&, const GraphEvaluation&) = default;
};

GraphEvaluation evaluate_graph(const Graph& g, int r, int h, const PowerIterationOptions& power);

// Both kernels return results in input order and agree bit for bit; the serial
// one is the reference the parallel one is tested against.
std::vector<GraphEvaluation> evaluate_serial(std::span<const Graph> graphs, int r, int h,
                                             const PowerIterationOptions& power);
std::vector<GraphEvaluation> evaluate_parallel(std::span<const Graph> graphs, int r, int h,
                                               const PowerIterationOptions& power, int jobs);

/// Edge-deletion statistics for one graph: every edge whose removal keeps the
/// graph connected must strictly raise lambda1.
struct EdgeDeletionStats {
    long long checked = 0;
    long long skipped = 0;    // deletion disconnects
    long long violations = 0; // margin <= threshold
    double min_margin = 0.0;  // over checked edges; +inf when none
    Edge worst_edge{-1, -1};
};

EdgeDeletionStats edge_deletion_stats(const Graph& g, const PowerIterationOptions& power,
                                      double threshold);

std::vector<EdgeDeletionStats> edge_deletion_serial(std::span<const Graph> graphs,
                                                    const PowerIterationOptions& power,
                                                    double threshold);
std::vector<EdgeDeletionStats> edge_deletion_parallel(std::span<const Graph> graphs,
                                                      const PowerIterationOptions& power,
                                                      double threshold, int jobs);

/// Number of worker threads OpenMP would use for `jobs` (1 without OpenMP).
int effective_jobs(int jobs);

} // namespace dsr
