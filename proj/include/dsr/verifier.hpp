#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dsr/evaluate.hpp"
#include "dsr/families.hpp"
#include "dsr/graph.hpp"
#include "dsr/spectral.hpp"

namespace dsr {

enum class Verdict { Match, TieAmbiguous, Mismatch, ClassEmpty, HypothesisUnmet };

std::string to_string(Verdict v);

struct ClassKey {
    int n = 0;
    int delta = 0;
    int r = 2;
    int h = 1;
    int ckappa = 0;

    friend auto operator<=>(const ClassKey&, const ClassKey&) = default;
};

struct VerificationReport {
    ClassKey key;
    int class_size = 0;
    std::optional<double> min_lambda1;
    std::vector<std::string> minimizers; // canonical graph6 keys
    std::optional<std::string> predicted; // canonical graph6 of the family graph
    std::optional<FamilyCase> predicted_case;
    bool predicted_member = false; // family graph passes validate_family
    Verdict verdict = Verdict::ClassEmpty;
    double seconds = 0.0; // kept out of the deterministic report body
};

/// Canonical graph6 -> evaluation, keyed per (r, h).
class EvaluationCache {
public:
    std::optional<GraphEvaluation> find(const std::string& g6, int r, int h) const;
    void store(const std::string& g6, int r, int h, const GraphEvaluation& e);
    std::size_t size() const { return entries_.size(); }
    bool dirty() const { return dirty_; }

    /// Missing files load as empty. Lines: g6 r h lambda1(hexfloat) delta
    /// ckappa|- witness_components witness_min_component, tab separated.
    void load(const std::string& path);
    void save(const std::string& path) const;

private:
    std::map<std::string, GraphEvaluation> entries_;
    bool dirty_ = false;
};

struct TheoremOptions {
    int jobs = 1;
    double tie_tolerance = 1e-7;
    double escalation_tolerance = 1e-9;
    PowerIterationOptions power;
};

struct TheoremSweep {
    int n = 0;
    int r = 2;
    int h = 1;
    int graphs = 0;              // distinct connected graphs of order n examined
    int skipped_inputs = 0;      // wrong order, disconnected, or duplicates
    int undefined_ckappa = 0;    // excluded: no valid cut exists
    bool grid_infeasible = false; // no (delta, ckappa) meets the order hypothesis
    std::vector<VerificationReport> reports;
    std::vector<std::string> consistency_failures;

    bool all_match() const;     // every hypothesis-met nonempty class is MATCH
    bool any_failure() const;   // MISMATCH, TIE_AMBIGUOUS or consistency failure
};

/// Classifies `source` (graphs of order n; others are skipped) by (delta,
/// ckappa_r^h) and compares each class's lambda1 minimiser with the extremal
/// family graph. The grid covers 1 <= delta <= n-1 and
/// 1 <= ckappa <= max(1, n - r(h+1)); when even ckappa = 1 breaks the order
/// hypothesis every row is HYPOTHESIS_UNMET and grid_infeasible is set.
TheoremSweep verify_theorem(std::span<const Graph> source, int n, int r, int h,
                            const TheoremOptions& opts, EvaluationCache* cache = nullptr);

/// Component count of G minus its minimum h-extra r-component cut witness.
int minimal_cut_component_count(const Graph& g, int r, int h);

struct EdgeLemmaReport {
    int graphs = 0;
    long long pairs_checked = 0;
    long long pairs_skipped = 0;
    long long violations = 0;
    double min_margin = 0.0;
    std::string worst_graph;
    Edge worst_edge{-1, -1};

    bool holds() const { return violations == 0; }
};

EdgeLemmaReport verify_edge_deletion_lemma(std::span<const Graph> graphs, int jobs = 1,
                                           double threshold = 1e-9,
                                           const PowerIterationOptions& power = {});

inline constexpr int kMaxJoinLemmaOrder = 10;

/// One admissible comparison: K_s v (K_{parts...}) against the extremal shape
/// K_s v (K_{n-s-p(c-1)} u (c-1) K_p).
struct JoinInstance {
    int n = 0;
    int s = 0;
    int p = 0;
    std::vector<int> parts; // descending
};

/// All (n <= n_max, s, c >= 2, p, parts) with parts descending, each >= p and
/// parts[0] < n - s - (c-1)p.
std::vector<JoinInstance> join_lemma_instances(int n_max);

struct JoinLemmaReport {
    int n_max = 0;
    long long instances = 0;
    long long violations = 0;
    double min_margin = 0.0;
    std::optional<JoinInstance> worst;

    bool holds() const { return violations == 0; }
};

JoinLemmaReport verify_join_lemma(int n_max, int jobs = 1, double threshold = 1e-9,
                                  const PowerIterationOptions& power = {});

} // namespace dsr
