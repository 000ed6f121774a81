#include "dsr/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace dsr {

namespace {

void check_order(int n)
{
    if (n < 0 || n > kMaxVertices)
        throw Error("graph order " + std::to_string(n) + " outside 0.." +
                    std::to_string(kMaxVertices));
}

void check_vertex(const Graph& g, int v)
{
    if (v < 0 || v >= g.order())
        throw Error("vertex " + std::to_string(v) + " out of range for order " +
                    std::to_string(g.order()));
}

} // namespace

std::vector<int> mask_to_vertices(VertexMask m)
{
    std::vector<int> out;
    out.reserve(std::popcount(m));
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

VertexMask vertices_to_mask(std::span<const int> vertices)
{
    VertexMask m = 0;
    for (int v : vertices) {
        if (v < 0 || v >= kMaxVertices)
            throw Error("vertex " + std::to_string(v) + " out of range");
        m |= bit(v);
    }
    return m;
}

Graph::Graph(int n)
{
    check_order(n);
    rows_.assign(n, 0);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges)
{
    return add_edges(Graph(n), edges);
}

Graph Graph::from_rows(std::vector<VertexMask> rows)
{
    const int n = static_cast<int>(rows.size());
    check_order(n);
    const VertexMask all = low_mask(n);
    for (int i = 0; i < n; ++i) {
        if (rows[i] & ~all)
            throw Error("adjacency row " + std::to_string(i) + " references missing vertex");
        if (rows[i] & bit(i))
            throw Error("self-loop at vertex " + std::to_string(i));
        for (int j : mask_to_vertices(rows[i]))
            if (!(rows[j] & bit(i)))
                throw Error("adjacency rows are not symmetric");
    }
    Graph g;
    g.rows_ = std::move(rows);
    return g;
}

int Graph::degree(int v) const { return std::popcount(rows_[v]); }

int Graph::edge_count() const
{
    int twice = 0;
    for (VertexMask r : rows_)
        twice += std::popcount(r);
    return twice / 2;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    for (int u = 0; u < order(); ++u)
        for (int v : mask_to_vertices(rows_[u] & ~low_mask(u + 1)))
            out.emplace_back(u, v);
    return out;
}

Graph clique(int k)
{
    if (k < 1)
        throw Error("clique needs at least one vertex");
    check_order(k);
    std::vector<VertexMask> rows(k);
    for (int i = 0; i < k; ++i)
        rows[i] = low_mask(k) & ~bit(i);
    return Graph::from_rows(std::move(rows));
}

Graph edgeless(int n) { return Graph(n); }

Graph path_graph(int n)
{
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

Graph cycle_graph(int n)
{
    if (n < 3)
        throw Error("cycle needs at least 3 vertices");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        e.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, e);
}

Graph disjoint_union(const Graph& a, const Graph& b)
{
    const int na = a.order();
    check_order(na + b.order());
    std::vector<VertexMask> rows = a.rows();
    for (VertexMask r : b.rows())
        rows.push_back(r << na);
    return Graph::from_rows(std::move(rows));
}

Graph join(const Graph& a, const Graph& b)
{
    const int na = a.order();
    const int nb = b.order();
    check_order(na + nb);
    std::vector<VertexMask> rows = disjoint_union(a, b).rows();
    const VertexMask a_side = low_mask(na);
    const VertexMask b_side = low_mask(nb) << na;
    for (int i = 0; i < na; ++i)
        rows[i] |= b_side;
    for (int i = na; i < na + nb; ++i)
        rows[i] |= a_side;
    return Graph::from_rows(std::move(rows));
}

Graph add_edges(const Graph& g, std::span<const Edge> pairs)
{
    std::vector<VertexMask> rows = g.rows();
    for (auto [u, v] : pairs) {
        check_vertex(g, u);
        check_vertex(g, v);
        if (u == v)
            throw Error("self-loop pair (" + std::to_string(u) + "," + std::to_string(v) + ")");
        rows[u] |= bit(v);
        rows[v] |= bit(u);
    }
    return Graph::from_rows(std::move(rows));
}

Graph delete_edge(const Graph& g, Edge e)
{
    auto [u, v] = e;
    check_vertex(g, u);
    check_vertex(g, v);
    if (!g.has_edge(u, v))
        throw Error("edge (" + std::to_string(u) + "," + std::to_string(v) + ") not present");
    std::vector<VertexMask> rows = g.rows();
    rows[u] &= ~bit(v);
    rows[v] &= ~bit(u);
    return Graph::from_rows(std::move(rows));
}

Graph delete_vertices(const Graph& g, VertexMask s)
{
    const VertexMask all = g.all_vertices();
    if (s & ~all)
        throw Error("vertex set references vertices outside the graph");
    if (s == all && g.order() > 0)
        throw Error("cannot delete every vertex");
    const std::vector<int> keep = mask_to_vertices(all & ~s);
    std::vector<VertexMask> rows(keep.size(), 0);
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = 0; j < keep.size(); ++j)
            if (g.has_edge(keep[i], keep[j]))
                rows[i] |= bit(static_cast<int>(j));
    return Graph::from_rows(std::move(rows));
}

Graph relabel(const Graph& g, std::span<const int> perm)
{
    const int n = g.order();
    if (static_cast<int>(perm.size()) != n)
        throw Error("permutation length does not match graph order");
    VertexMask seen = 0;
    for (int p : perm) {
        if (p < 0 || p >= n || (seen & bit(p)))
            throw Error("not a permutation");
        seen |= bit(p);
    }
    std::vector<VertexMask> rows(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v : mask_to_vertices(g.neighbours(u)))
            rows[perm[u]] |= bit(perm[v]);
    return Graph::from_rows(std::move(rows));
}

ComponentDecomposition components_within(const Graph& g, VertexMask alive)
{
    ComponentDecomposition out;
    out.membership.assign(g.order(), -1);
    VertexMask left = alive & g.all_vertices();
    while (left) {
        VertexMask comp = left & (~left + 1);
        VertexMask frontier = comp;
        while (frontier) {
            const int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            const VertexMask fresh = g.neighbours(v) & left & ~comp;
            comp |= fresh;
            frontier |= fresh;
        }
        left &= ~comp;
        for (int v : mask_to_vertices(comp))
            out.membership[v] = out.count;
        out.sizes.push_back(std::popcount(comp));
        out.masks.push_back(comp);
        ++out.count;
    }
    return out;
}

ComponentDecomposition components(const Graph& g)
{
    return components_within(g, g.all_vertices());
}

bool is_connected(const Graph& g)
{
    return g.order() > 0 && components(g).count == 1;
}

bool is_complete(const Graph& g)
{
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) != g.order() - 1)
            return false;
    return true;
}

int min_degree(const Graph& g)
{
    if (g.order() == 0)
        throw Error("minimum degree of the empty graph");
    int best = g.order();
    for (int v = 0; v < g.order(); ++v)
        best = std::min(best, g.degree(v));
    return best;
}

int max_degree(const Graph& g)
{
    int best = 0;
    for (int v = 0; v < g.order(); ++v)
        best = std::max(best, g.degree(v));
    return best;
}

std::string describe_components(const ComponentDecomposition& c)
{
    std::ostringstream os;
    for (int i = 0; i < c.count; ++i) {
        if (i)
            os << ' ';
        os << '{';
        const auto vs = mask_to_vertices(c.masks[i]);
        for (std::size_t k = 0; k < vs.size(); ++k)
            os << (k ? "," : "") << vs[k];
        os << '}';
    }
    return os.str();
}

} // namespace dsr
