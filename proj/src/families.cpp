#include "dsr/families.hpp"

#include "dsr/connectivity.hpp"

namespace dsr {

namespace {

std::string fmt_params(const FamilyParams& p)
{
    return "(n=" + std::to_string(p.n) + ", r=" + std::to_string(p.r) + ", h=" +
           std::to_string(p.h) + ", delta=" + std::to_string(p.delta) + ", ckappa=" +
           std::to_string(p.ckappa) + ")";
}

int case_iii_small_block(const FamilyParams& p) { return p.delta - p.ckappa + 1; }

int case_iii_big_block(const FamilyParams& p)
{
    return p.n - p.ckappa - (p.r - 1) * case_iii_small_block(p);
}

// Shared skeleton of cases (i) and (ii): the clique join core plus an isolated
// vertex u at label n-1. The K_h block starts at label ckappa.
Graph core_with_isolated_vertex(const FamilyParams& p)
{
    std::vector<int> parts{p.h};
    for (int i = 0; i < p.r - 2; ++i)
        parts.push_back(p.h + 1);
    parts.push_back(p.n - p.ckappa - (p.r - 1) * (p.h + 1));
    return disjoint_union(clique_join(p.ckappa, parts), Graph(1));
}

void require_case(const FamilyParams& p, FamilyCase want)
{
    check_hypothesis(p);
    const FamilyCase got = classify(p);
    if (got != want)
        throw Error("parameters " + fmt_params(p) + " belong to case " + to_string(got) +
                    ", not case " + to_string(want));
}

} // namespace

std::string to_string(FamilyCase c)
{
    switch (c) {
    case FamilyCase::I: return "i";
    case FamilyCase::II: return "ii";
    case FamilyCase::III: return "iii";
    }
    return "?";
}

FamilyCase family_case_from_string(const std::string& s)
{
    if (s == "i")
        return FamilyCase::I;
    if (s == "ii")
        return FamilyCase::II;
    if (s == "iii")
        return FamilyCase::III;
    throw Error("unknown family case '" + s + "' (expected i, ii or iii)");
}

void check_hypothesis(const FamilyParams& p)
{
    if (p.r < 2)
        throw Error("r >= 2 violated: r=" + std::to_string(p.r));
    if (p.h < 1)
        throw Error("h >= 1 violated: h=" + std::to_string(p.h));
    if (p.delta < 1)
        throw Error("delta >= 1 violated: delta=" + std::to_string(p.delta));
    if (p.ckappa < 1)
        throw Error("ckappa >= 1 violated: ckappa=" + std::to_string(p.ckappa));
    if (p.n < p.ckappa + p.r * (p.h + 1))
        throw Error("n >= ckappa + r(h+1) violated: " + std::to_string(p.n) + " < " +
                    std::to_string(p.ckappa + p.r * (p.h + 1)));
    if (p.n > kMaxVertices)
        throw Error("n <= " + std::to_string(kMaxVertices) + " violated");
}

bool hypothesis_met(const FamilyParams& p)
{
    try {
        check_hypothesis(p);
        return true;
    } catch (const Error&) {
        return false;
    }
}

FamilyCase classify(const FamilyParams& p)
{
    if (p.delta <= p.h)
        return FamilyCase::I;
    if (p.delta < p.ckappa + p.h)
        return FamilyCase::II;
    return FamilyCase::III;
}

bool feasible(const FamilyParams& p)
{
    if (!hypothesis_met(p))
        return false;
    if (classify(p) == FamilyCase::III)
        return case_iii_big_block(p) >= case_iii_small_block(p);
    return true;
}

Graph clique_join(int s, const std::vector<int>& parts)
{
    if (s < 1)
        throw Error("clique join needs s >= 1");
    if (parts.empty())
        throw Error("clique join needs at least one part");
    Graph rest;
    bool first = true;
    for (int k : parts) {
        if (k < 1)
            throw Error("clique join parts must be positive, got " + std::to_string(k));
        rest = first ? clique(k) : disjoint_union(rest, clique(k));
        first = false;
    }
    return join(clique(s), rest);
}

FamilyGraph family_case_i(const FamilyParams& p)
{
    require_case(p, FamilyCase::I);
    const Graph base = core_with_isolated_vertex(p);
    const int u = p.n - 1;
    std::vector<Edge> extra;
    for (int i = 0; i < p.delta; ++i)
        extra.emplace_back(p.ckappa + i, u);
    return {add_edges(base, extra), low_mask(p.ckappa), FamilyCase::I};
}

FamilyGraph family_case_ii(const FamilyParams& p)
{
    require_case(p, FamilyCase::II);
    const Graph base = core_with_isolated_vertex(p);
    const int u = p.n - 1;
    std::vector<Edge> extra;
    for (int i = 0; i < p.h; ++i)
        extra.emplace_back(p.ckappa + i, u);
    for (int i = 0; i < p.delta - p.h; ++i)
        extra.emplace_back(i, u);
    return {add_edges(base, extra), low_mask(p.ckappa), FamilyCase::II};
}

FamilyGraph family_case_iii(const FamilyParams& p)
{
    require_case(p, FamilyCase::III);
    const int small = case_iii_small_block(p);
    const int big = case_iii_big_block(p);
    if (big < small)
        throw Error("n - ckappa - (r-1)(delta-ckappa+1) >= delta-ckappa+1 violated: " +
                    std::to_string(big) + " < " + std::to_string(small));
    std::vector<int> parts{big};
    for (int i = 0; i < p.r - 1; ++i)
        parts.push_back(small);
    return {clique_join(p.ckappa, parts), low_mask(p.ckappa), FamilyCase::III};
}

FamilyGraph extremal_graph(const FamilyParams& p)
{
    check_hypothesis(p);
    switch (classify(p)) {
    case FamilyCase::I: return family_case_i(p);
    case FamilyCase::II: return family_case_ii(p);
    case FamilyCase::III: return family_case_iii(p);
    }
    throw Error("unreachable family case");
}

FamilyValidation validate_family(const Graph& g, const FamilyParams& p)
{
    FamilyValidation v;
    v.order = g.order();
    v.order_ok = v.order == p.n;
    if (v.order == 0)
        return v;
    v.min_degree = min_degree(g);
    v.min_degree_ok = v.min_degree == p.delta;
    v.connected = is_connected(g);
    if (v.connected && v.order <= kMaxCutSearchOrder && p.r >= 2 && p.h >= 0)
        v.ckappa = ckappa(g, p.r, p.h).value;
    v.ckappa_ok = v.ckappa && *v.ckappa == p.ckappa;
    return v;
}

} // namespace dsr
