#include "dsr/evaluate.hpp"

#include <algorithm>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "dsr/connectivity.hpp"

namespace dsr {

GraphEvaluation evaluate_graph(const Graph& g, int r, int h, const PowerIterationOptions& power)
{
    GraphEvaluation e;
    e.lambda1 = distance_spectral_radius(g, power).lambda1;
    e.min_degree = min_degree(g);
    const CkappaResult ck = ckappa(g, r, h);
    e.ckappa = ck.value;
    if (ck.witness) {
        e.witness_components = ck.witness->component_count();
        e.witness_min_component = ck.witness->component_sizes.front();
    }
    return e;
}

std::vector<GraphEvaluation> evaluate_serial(std::span<const Graph> graphs, int r, int h,
                                             const PowerIterationOptions& power)
{
    std::vector<GraphEvaluation> out;
    out.reserve(graphs.size());
    for (const Graph& g : graphs)
        out.push_back(evaluate_graph(g, r, h, power));
    return out;
}

std::vector<GraphEvaluation> evaluate_parallel(std::span<const Graph> graphs, int r, int h,
                                               const PowerIterationOptions& power, int jobs)
{
    std::vector<GraphEvaluation> out(graphs.size());
    const long long count = static_cast<long long>(graphs.size());
    bool failed = false;
    std::string message;
#pragma omp parallel for schedule(dynamic, 16) num_threads(effective_jobs(jobs))
    for (long long i = 0; i < count; ++i) {
        try {
            out[i] = evaluate_graph(graphs[i], r, h, power);
        } catch (const Error& e) {
#pragma omp critical(dsr_evaluate_error)
            if (!failed) {
                failed = true;
                message = e.what();
            }
        }
    }
    if (failed)
        throw Error(message);
    return out;
}

EdgeDeletionStats edge_deletion_stats(const Graph& g, const PowerIterationOptions& power,
                                      double threshold)
{
    EdgeDeletionStats s;
    s.min_margin = std::numeric_limits<double>::infinity();
    const double base = distance_spectral_radius(g, power).lambda1;
    for (const Edge& e : g.edges()) {
        const Graph reduced = delete_edge(g, e);
        if (!is_connected(reduced)) {
            ++s.skipped;
            continue;
        }
        ++s.checked;
        const double margin = distance_spectral_radius(reduced, power).lambda1 - base;
        if (margin <= threshold)
            ++s.violations;
        if (margin < s.min_margin) {
            s.min_margin = margin;
            s.worst_edge = e;
        }
    }
    return s;
}

std::vector<EdgeDeletionStats> edge_deletion_serial(std::span<const Graph> graphs,
                                                    const PowerIterationOptions& power,
                                                    double threshold)
{
    std::vector<EdgeDeletionStats> out;
    out.reserve(graphs.size());
    for (const Graph& g : graphs)
        out.push_back(edge_deletion_stats(g, power, threshold));
    return out;
}

std::vector<EdgeDeletionStats> edge_deletion_parallel(std::span<const Graph> graphs,
                                                      const PowerIterationOptions& power,
                                                      double threshold, int jobs)
{
    std::vector<EdgeDeletionStats> out(graphs.size());
    const long long count = static_cast<long long>(graphs.size());
    bool failed = false;
    std::string message;
#pragma omp parallel for schedule(dynamic, 8) num_threads(effective_jobs(jobs))
    for (long long i = 0; i < count; ++i) {
        try {
            out[i] = edge_deletion_stats(graphs[i], power, threshold);
        } catch (const Error& e) {
#pragma omp critical(dsr_edge_error)
            if (!failed) {
                failed = true;
                message = e.what();
            }
        }
    }
    if (failed)
        throw Error(message);
    return out;
}

int effective_jobs(int jobs)
{
#ifdef _OPENMP
    return jobs > 0 ? jobs : omp_get_max_threads();
#else
    (void)jobs;
    return 1;
#endif
}

} // namespace dsr
