#include "dsr/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "dsr/connectivity.hpp"
#include "dsr/enumeration.hpp"
#include "dsr/graph6.hpp"

namespace dsr {

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::Match: return "MATCH";
    case Verdict::TieAmbiguous: return "TIE_AMBIGUOUS";
    case Verdict::Mismatch: return "MISMATCH";
    case Verdict::ClassEmpty: return "CLASS_EMPTY";
    case Verdict::HypothesisUnmet: return "HYPOTHESIS_UNMET";
    }
    return "?";
}

bool TheoremSweep::all_match() const
{
    return std::all_of(reports.begin(), reports.end(), [](const VerificationReport& r) {
        return r.verdict == Verdict::Match || r.verdict == Verdict::ClassEmpty ||
               r.verdict == Verdict::HypothesisUnmet;
    }) && consistency_failures.empty();
}

bool TheoremSweep::any_failure() const { return !all_match(); }

namespace {

using Clock = std::chrono::steady_clock;

std::string class_label(const ClassKey& k)
{
    return "class (n=" + std::to_string(k.n) + ", delta=" + std::to_string(k.delta) +
           ", ckappa=" + std::to_string(k.ckappa) + ")";
}

struct Member {
    Graph graph;
    std::string g6;
    GraphEvaluation eval;
};

// Collects minimisers within the tie tolerance, then settles near-ties with
// the Jacobi spectrum so only members within the escalation tolerance on
// both solvers remain.
std::vector<const Member*> minimisers(const std::vector<const Member*>& members,
                                      const TheoremOptions& opts)
{
    double best = std::numeric_limits<double>::infinity();
    for (const Member* m : members)
        best = std::min(best, m->eval.lambda1);
    std::vector<const Member*> near;
    for (const Member* m : members)
        if (m->eval.lambda1 <= best + opts.tie_tolerance)
            near.push_back(m);
    if (near.size() <= 1)
        return near;

    std::vector<double> jacobi;
    for (const Member* m : near)
        jacobi.push_back(full_spectrum(distance_matrix(m->graph)).front());
    const double jbest = *std::min_element(jacobi.begin(), jacobi.end());
    std::vector<const Member*> out;
    for (std::size_t i = 0; i < near.size(); ++i)
        if (near[i]->eval.lambda1 <= best + opts.escalation_tolerance &&
            jacobi[i] <= jbest + opts.escalation_tolerance)
            out.push_back(near[i]);
    return out;
}

std::vector<GraphEvaluation> evaluate_with_cache(const std::vector<Graph>& graphs,
                                                 const std::vector<std::string>& keys, int r,
                                                 int h, const TheoremOptions& opts,
                                                 EvaluationCache* cache)
{
    std::vector<GraphEvaluation> out(graphs.size());
    std::vector<std::size_t> missing;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        std::optional<GraphEvaluation> hit = cache ? cache->find(keys[i], r, h) : std::nullopt;
        if (hit)
            out[i] = *hit;
        else
            missing.push_back(i);
    }
    std::vector<Graph> todo;
    todo.reserve(missing.size());
    for (std::size_t i : missing)
        todo.push_back(graphs[i]);
    const std::vector<GraphEvaluation> fresh =
        opts.jobs == 1 ? evaluate_serial(todo, r, h, opts.power)
                       : evaluate_parallel(todo, r, h, opts.power, opts.jobs);
    for (std::size_t k = 0; k < missing.size(); ++k) {
        out[missing[k]] = fresh[k];
        if (cache)
            cache->store(keys[missing[k]], r, h, fresh[k]);
    }
    return out;
}

} // namespace

TheoremSweep verify_theorem(std::span<const Graph> source, int n, int r, int h,
                            const TheoremOptions& opts, EvaluationCache* cache)
{
    if (h < 1)
        throw Error("theorem sweep needs h >= 1, got " + std::to_string(h));
    if (r < 2)
        throw Error("theorem sweep needs r >= 2, got " + std::to_string(r));
    if (n < 2 || n > kMaxCanonicalOrder)
        throw Error("theorem sweep supports 2 <= n <= " + std::to_string(kMaxCanonicalOrder));

    TheoremSweep sweep;
    sweep.n = n;
    sweep.r = r;
    sweep.h = h;

    // Canonical representatives, deduplicated and in key order.
    std::set<std::uint64_t> keys;
    for (const Graph& g : source) {
        if (g.order() != n || !is_connected(g)) {
            ++sweep.skipped_inputs;
            continue;
        }
        if (!keys.insert(canonical_form(g).bits).second)
            ++sweep.skipped_inputs;
    }
    std::vector<Graph> graphs;
    std::vector<std::string> g6;
    for (std::uint64_t bits : keys) {
        graphs.push_back(CanonicalForm{n, bits}.graph());
        g6.push_back(emit_graph6(graphs.back()));
    }
    sweep.graphs = static_cast<int>(graphs.size());

    const std::vector<GraphEvaluation> evals = evaluate_with_cache(graphs, g6, r, h, opts, cache);
    std::vector<Member> members;
    members.reserve(graphs.size());
    for (std::size_t i = 0; i < graphs.size(); ++i)
        members.push_back({graphs[i], g6[i], evals[i]});

    std::map<std::pair<int, int>, std::vector<const Member*>> classes;
    for (const Member& m : members) {
        if (!m.eval.ckappa) {
            ++sweep.undefined_ckappa;
            continue;
        }
        classes[{m.eval.min_degree, *m.eval.ckappa}].push_back(&m);
        // Every component after a minimum cut holds at least delta - ckappa + 1
        // vertices, since a vertex there sees at most |B| - 1 + ckappa others.
        if (m.eval.witness_min_component < m.eval.min_degree - *m.eval.ckappa + 1)
            sweep.consistency_failures.push_back(m.g6 + ": witness component of order " +
                                                 std::to_string(m.eval.witness_min_component) +
                                                 " below delta - ckappa + 1");
    }

    sweep.grid_infeasible = true;
    for (int delta = 1; delta <= n - 1; ++delta) {
        for (int ck = 1; ck <= std::max(1, n - r * (h + 1)); ++ck) {
            const auto t0 = Clock::now();
            VerificationReport rep;
            rep.key = {n, delta, r, h, ck};
            const FamilyParams params{n, r, h, delta, ck};
            const auto it = classes.find({delta, ck});
            const std::vector<const Member*> empty;
            const std::vector<const Member*>& cls = it == classes.end() ? empty : it->second;
            rep.class_size = static_cast<int>(cls.size());

            if (!cls.empty()) {
                double lo = std::numeric_limits<double>::infinity();
                for (const Member* m : cls)
                    lo = std::min(lo, m->eval.lambda1);
                rep.min_lambda1 = lo;
            }

            if (!hypothesis_met(params)) {
                rep.verdict = Verdict::HypothesisUnmet;
                rep.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
                sweep.reports.push_back(std::move(rep));
                continue;
            }
            sweep.grid_infeasible = false;

            std::optional<Graph> predicted;
            if (feasible(params)) {
                const FamilyGraph fam = extremal_graph(params);
                predicted = canonical_form(fam.graph).graph();
                rep.predicted = emit_graph6(*predicted);
                rep.predicted_case = fam.which;
                rep.predicted_member = validate_family(fam.graph, params).all_pass();
            }

            if (cls.empty()) {
                rep.verdict = Verdict::ClassEmpty;
                if (rep.predicted_member)
                    sweep.consistency_failures.push_back(
                        class_label(rep.key) + ": family graph is a member but the source has none");
            } else {
                const std::vector<const Member*> best = minimisers(cls, opts);
                for (const Member* m : best)
                    rep.minimizers.push_back(m->g6);
                const bool predicted_in =
                    rep.predicted && std::find(rep.minimizers.begin(), rep.minimizers.end(),
                                               *rep.predicted) != rep.minimizers.end();
                if (best.size() == 1 && predicted_in)
                    rep.verdict = Verdict::Match;
                else if (predicted_in)
                    rep.verdict = Verdict::TieAmbiguous;
                else
                    rep.verdict = Verdict::Mismatch;

                if (rep.predicted && !rep.predicted_member)
                    sweep.consistency_failures.push_back(
                        class_label(rep.key) + ": family graph " + *rep.predicted +
                        " is not a member of its own class");
                for (const Member* m : best)
                    if (m->eval.witness_components != r)
                        sweep.consistency_failures.push_back(
                            class_label(rep.key) + ": minimiser " + m->g6 + " has " +
                            std::to_string(m->eval.witness_components) +
                            " components after its minimum cut, expected " + std::to_string(r));
                if (rep.verdict == Verdict::Match) {
                    const double direct = distance_spectral_radius(*predicted, opts.power).lambda1;
                    if (std::abs(direct - *rep.min_lambda1) > opts.escalation_tolerance)
                        sweep.consistency_failures.push_back(
                            class_label(rep.key) + ": family lambda1 differs from class minimum");
                }
            }
            rep.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
            sweep.reports.push_back(std::move(rep));
        }
    }
    return sweep;
}

int minimal_cut_component_count(const Graph& g, int r, int h)
{
    const CkappaResult ck = ckappa(g, r, h);
    if (!ck.witness)
        throw Error("no h-extra r-component cut exists for this graph");
    return ck.witness->component_count();
}

EdgeLemmaReport verify_edge_deletion_lemma(std::span<const Graph> graphs, int jobs,
                                           double threshold, const PowerIterationOptions& power)
{
    const std::vector<EdgeDeletionStats> stats =
        jobs == 1 ? edge_deletion_serial(graphs, power, threshold)
                  : edge_deletion_parallel(graphs, power, threshold, jobs);
    EdgeLemmaReport out;
    out.graphs = static_cast<int>(graphs.size());
    out.min_margin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < stats.size(); ++i) {
        out.pairs_checked += stats[i].checked;
        out.pairs_skipped += stats[i].skipped;
        out.violations += stats[i].violations;
        if (stats[i].checked > 0 && stats[i].min_margin < out.min_margin) {
            out.min_margin = stats[i].min_margin;
            out.worst_graph = emit_graph6(graphs[i]);
            out.worst_edge = stats[i].worst_edge;
        }
    }
    return out;
}

namespace {

void descending_partitions(int remaining, int parts_left, int lo, int hi, std::vector<int>& cur,
                           std::vector<std::vector<int>>& out)
{
    if (parts_left == 0) {
        if (remaining == 0)
            out.push_back(cur);
        return;
    }
    for (int v = std::min(hi, remaining - lo * (parts_left - 1)); v >= lo; --v) {
        cur.push_back(v);
        descending_partitions(remaining - v, parts_left - 1, lo, v, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<JoinInstance> join_lemma_instances(int n_max)
{
    if (n_max > kMaxJoinLemmaOrder)
        throw Error("join lemma grid supports n_max <= " + std::to_string(kMaxJoinLemmaOrder));
    std::vector<JoinInstance> out;
    for (int n = 3; n <= n_max; ++n)
        for (int s = 1; s <= n - 2; ++s)
            for (int c = 2; c <= n - s; ++c)
                for (int p = 1; p * c <= n - s; ++p) {
                    const int bound = n - s - (c - 1) * p;
                    std::vector<std::vector<int>> parts;
                    std::vector<int> cur;
                    descending_partitions(n - s, c, p, n - s, cur, parts);
                    for (auto& ps : parts)
                        if (ps.front() < bound)
                            out.push_back({n, s, p, std::move(ps)});
                }
    return out;
}

JoinLemmaReport verify_join_lemma(int n_max, int jobs, double threshold,
                                  const PowerIterationOptions& power)
{
    const std::vector<JoinInstance> inst = join_lemma_instances(n_max);
    const long long count = static_cast<long long>(inst.size());
    std::vector<double> margin(inst.size());
    auto margin_of = [&](const JoinInstance& j) {
        const int c = static_cast<int>(j.parts.size());
        std::vector<int> extremal{j.n - j.s - j.p * (c - 1)};
        extremal.insert(extremal.end(), c - 1, j.p);
        return distance_spectral_radius(clique_join(j.s, j.parts), power).lambda1 -
               distance_spectral_radius(clique_join(j.s, extremal), power).lambda1;
    };
    if (jobs == 1) {
        for (long long i = 0; i < count; ++i)
            margin[i] = margin_of(inst[i]);
    } else {
#pragma omp parallel for schedule(dynamic, 8) num_threads(effective_jobs(jobs))
        for (long long i = 0; i < count; ++i)
            margin[i] = margin_of(inst[i]);
    }

    JoinLemmaReport out;
    out.n_max = n_max;
    out.instances = count;
    out.min_margin = std::numeric_limits<double>::infinity();
    for (long long i = 0; i < count; ++i) {
        if (margin[i] <= threshold)
            ++out.violations;
        if (margin[i] < out.min_margin) {
            out.min_margin = margin[i];
            out.worst = inst[i];
        }
    }
    return out;
}

} // namespace dsr
