#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "dsr/graph.hpp"
#include "dsr/graph6.hpp"

namespace dsr {

inline constexpr int kMaxCanonicalOrder = 10;
inline constexpr int kMaxEnumerationOrder = 8;

/// Lexicographically least upper-triangle bit string (graph6 pair order) over
/// the relabelings that respect the equitable degree refinement. The first pair sits in the most significant used bit, so
/// integer order on `bits` is lexicographic order on the string.
struct CanonicalForm {
    int n = 0;
    std::uint64_t bits = 0;

    Graph graph() const;
    std::string graph6() const { return emit_graph6(graph()); }

    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical_form(const Graph& g);

/// perm[v] is the canonical position of vertex v: relabel(g, perm) decodes to
/// canonical_form(g).
std::vector<int> canonical_labeling(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

/// Every connected graph of order n exactly once up to isomorphism, as
/// canonical representatives in ascending key order. Built by adding one
/// vertex with a nonempty neighbourhood to each connected graph of order n-1
/// (every connected graph has a non-cut vertex), deduplicated by key.
std::vector<Graph> enumerate_connected(int n);

struct IngestError {
    int line = 0;
    std::string message;
};

struct IngestResult {
    std::vector<Graph> graphs;
    std::vector<IngestError> errors;
};

/// Blank lines are skipped. In strict mode the first malformed line throws
/// ParseError prefixed with "line N: "; otherwise it is recorded and skipped.
IngestResult ingest_graph6_stream(std::istream& in, bool strict);

void write_graph6_stream(std::ostream& out, std::span<const Graph> graphs);

} // namespace dsr
