#include "dsr/connectivity.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace dsr {

namespace {

void check_params(const Graph& g, int r, int h)
{
    if (r < 2)
        throw Error("component count r must be at least 2, got " + std::to_string(r));
    if (h < 0)
        throw Error("extra parameter h must be non-negative, got " + std::to_string(h));
    if (!is_connected(g))
        throw Error("cut search needs a connected graph, components " +
                    describe_components(components(g)));
}

// Visits k-subsets of {0..n-1} in lexicographic order of their sorted vertex
// lists until `visit` returns true.
template <typename Visit>
bool for_each_subset(int n, int k, Visit&& visit)
{
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        VertexMask m = 0;
        for (int v : idx)
            m |= bit(v);
        if (visit(m))
            return true;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i)
            --i;
        if (i < 0)
            return false;
        ++idx[i];
        for (int j = i + 1; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

} // namespace

int ComponentCut::size() const { return std::popcount(s); }

CutCheck is_valid_cut(const Graph& g, VertexMask s, int r, int h)
{
    const VertexMask all = g.all_vertices();
    if (s == 0)
        throw Error("cut set is empty");
    if (s & ~all)
        throw Error("cut set references vertices outside the graph");
    if (s == all)
        throw Error("cut set covers every vertex");

    const ComponentDecomposition dec = components_within(g, all & ~s);
    CutCheck out;
    out.cut.s = s;
    out.cut.component_sizes = dec.sizes;
    std::sort(out.cut.component_sizes.begin(), out.cut.component_sizes.end());
    out.valid = dec.count >= r && out.cut.component_sizes.front() >= h + 1;
    return out;
}

CkappaResult ckappa(const Graph& g, int r, int h)
{
    check_params(g, r, h);
    const int n = g.order();
    if (n > kMaxCutSearchOrder)
        throw Error("exhaustive cut search is capped at " + std::to_string(kMaxCutSearchOrder) +
                    " vertices");

    CkappaResult out;
    const int largest = n - r * (h + 1);
    for (int k = 1; k <= largest; ++k) {
        const bool found = for_each_subset(n, k, [&](VertexMask s) {
            CutCheck c = is_valid_cut(g, s, r, h);
            if (!c.valid)
                return false;
            out.value = k;
            out.witness = std::move(c.cut);
            return true;
        });
        if (found)
            break;
    }
    return out;
}

int kappa(const Graph& g)
{
    if (!is_connected(g))
        throw Error("vertex connectivity needs a connected graph");
    if (is_complete(g))
        return g.order() - 1;
    return *ckappa(g, 2, 0).value;
}

} // namespace dsr
