#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dsr/graph.hpp"

namespace dsr {

enum class FamilyCase { I, II, III };

std::string to_string(FamilyCase c);
FamilyCase family_case_from_string(const std::string& s); // "i", "ii", "iii"

/// Parameters of a class G(n, delta, ckappa) for fixed (r, h).
struct FamilyParams {
    int n = 0;
    int r = 2;
    int h = 1;
    int delta = 1;
    int ckappa = 1;

    friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

/// Throws Error naming the first violated inequality (domain, order bound).
void check_hypothesis(const FamilyParams& p);
bool hypothesis_met(const FamilyParams& p);

/// Case by delta: (i) delta <= h, (ii) h < delta < ckappa + h, (iii) otherwise.
FamilyCase classify(const FamilyParams& p);

/// Case (iii) additionally needs the leading block to be the largest one.
bool feasible(const FamilyParams& p);

/// A constructed extremal graph plus the cut it was built around.
struct FamilyGraph {
    Graph graph;
    VertexMask designed_cut = 0;
    FamilyCase which = FamilyCase::I;
};

/// K_s joined with K_{parts[0]} u K_{parts[1]} u ...; labels: the K_s block
/// first, then each part in the listed order.
Graph clique_join(int s, const std::vector<int>& parts);

// Labels for cases (i) and (ii): K_ckappa, K_h, (r-2) K_{h+1}, the big block,
// then the low-degree vertex u last.
FamilyGraph family_case_i(const FamilyParams& p);
FamilyGraph family_case_ii(const FamilyParams& p);
FamilyGraph family_case_iii(const FamilyParams& p);

/// Dispatches on classify(p).
FamilyGraph extremal_graph(const FamilyParams& p);

struct FamilyValidation {
    int order = 0;
    int min_degree = 0;
    bool connected = false;
    std::optional<int> ckappa;

    bool order_ok = false;
    bool min_degree_ok = false;
    bool ckappa_ok = false;

    bool all_pass() const { return order_ok && min_degree_ok && ckappa_ok && connected; }
};

FamilyValidation validate_family(const Graph& g, const FamilyParams& p);

} // namespace dsr
