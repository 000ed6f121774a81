#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dsr {

// Thrown on any contract violation in the library (bad vertex, cap exceeded,
// disconnected input where a distance is needed, ...).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kMaxVertices = 64;

// Set of vertices of a graph with at most 64 vertices; bit i is vertex i.
using VertexMask = std::uint64_t;

inline constexpr VertexMask bit(int v) { return VertexMask{1} << v; }
inline constexpr VertexMask low_mask(int n)
{
    return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

std::vector<int> mask_to_vertices(VertexMask m);
VertexMask vertices_to_mask(std::span<const int> vertices);

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1 stored as packed adjacency rows.
///
/// Values are immutable once built; every transformation below returns a new
/// graph, so instances can be shared freely between threads.
class Graph {
public:
    Graph() = default;

    /// Edgeless graph on n vertices.
    explicit Graph(int n);

    static Graph from_edges(int n, std::span<const Edge> edges);
    static Graph from_rows(std::vector<VertexMask> rows);

    int order() const { return static_cast<int>(rows_.size()); }
    bool has_edge(int u, int v) const { return (rows_[u] >> v) & 1U; }
    VertexMask neighbours(int v) const { return rows_[v]; }
    VertexMask all_vertices() const { return low_mask(order()); }
    const std::vector<VertexMask>& rows() const { return rows_; }

    int degree(int v) const;
    int edge_count() const;
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<VertexMask> rows_;
};

struct ComponentDecomposition {
    int count = 0;
    std::vector<int> sizes;        // indexed by component id
    std::vector<int> membership;   // vertex -> component id, -1 for removed vertices
    std::vector<VertexMask> masks; // vertex set of each component
};

Graph clique(int k);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph edgeless(int n);

Graph disjoint_union(const Graph& a, const Graph& b);
Graph join(const Graph& a, const Graph& b);
Graph add_edges(const Graph& g, std::span<const Edge> pairs);
Graph delete_edge(const Graph& g, Edge e);
Graph delete_vertices(const Graph& g, VertexMask s);

/// Graph with vertex v of g renamed to perm[v].
Graph relabel(const Graph& g, std::span<const int> perm);

/// Components ordered by their least vertex.
ComponentDecomposition components(const Graph& g);

/// Components of the subgraph induced by `alive`; vertices outside it get
/// membership -1.
ComponentDecomposition components_within(const Graph& g, VertexMask alive);

bool is_connected(const Graph& g);
bool is_complete(const Graph& g);
int min_degree(const Graph& g);
int max_degree(const Graph& g);

std::string describe_components(const ComponentDecomposition& c);

} // namespace dsr
