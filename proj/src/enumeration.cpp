#include "dsr/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <set>

namespace dsr {

namespace {

using Cells = std::vector<std::vector<int>>;

int pair_count(int n) { return n * (n - 1) / 2; }

VertexMask cell_mask(const std::vector<int>& cell)
{
    VertexMask m = 0;
    for (int v : cell)
        m |= bit(v);
    return m;
}

// Coarsest equitable refinement of `cells`. Split cells are ordered by their
// neighbour count into the splitter, which keeps the result label-invariant.
void refine(const Graph& g, Cells& cells)
{
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t w = 0; w < cells.size() && !changed; ++w) {
            const VertexMask splitter = cell_mask(cells[w]);
            Cells next;
            next.reserve(cells.size() + 4);
            for (const auto& cell : cells) {
                if (cell.size() == 1) {
                    next.push_back(cell);
                    continue;
                }
                std::vector<std::pair<int, int>> keyed;
                keyed.reserve(cell.size());
                for (int v : cell)
                    keyed.emplace_back(std::popcount(g.neighbours(v) & splitter), v);
                std::stable_sort(keyed.begin(), keyed.end(),
                                 [](auto a, auto b) { return a.first < b.first; });
                if (keyed.front().first == keyed.back().first) {
                    next.push_back(cell);
                    continue;
                }
                changed = true;
                std::size_t i = 0;
                while (i < keyed.size()) {
                    std::vector<int> part;
                    const int k = keyed[i].first;
                    while (i < keyed.size() && keyed[i].first == k)
                        part.push_back(keyed[i++].second);
                    next.push_back(std::move(part));
                }
            }
            if (changed)
                cells = std::move(next);
        }
    }
}

bool twins(const Graph& g, int u, int w)
{
    return (g.neighbours(u) & ~bit(w)) == (g.neighbours(w) & ~bit(u));
}

class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {}

    void run()
    {
        Cells cells{{}};
        for (int v = 0; v < n_; ++v)
            cells[0].push_back(v);
        descend(std::move(cells));
    }

    std::uint64_t best_bits() const { return best_bits_; }
    const std::vector<int>& best_order() const { return best_order_; }

private:
    // Bits of the pairs (i, j) with j < k under `order`, left aligned as in the
    // full key so they compare directly against the best key's prefix.
    std::uint64_t prefix_bits(const std::vector<int>& order, int k) const
    {
        std::uint64_t bits = 0;
        int idx = 0;
        const int total = pair_count(n_);
        for (int j = 1; j < k; ++j)
            for (int i = 0; i < j; ++i, ++idx)
                if (g_.has_edge(order[i], order[j]))
                    bits |= std::uint64_t{1} << (total - 1 - idx);
        return bits;
    }

    static std::uint64_t prefix_mask(int total, int k)
    {
        const int used = pair_count(k);
        if (used == 0)
            return 0;
        return ((std::uint64_t{1} << used) - 1) << (total - used);
    }

    void descend(Cells cells)
    {
        refine(g_, cells);

        std::size_t target = cells.size();
        for (std::size_t c = 0; c < cells.size(); ++c)
            if (cells[c].size() > 1) {
                target = c;
                break;
            }

        // Leading singleton cells fix positions 0..fixed-1.
        std::vector<int> order;
        order.reserve(n_);
        for (std::size_t c = 0; c < target; ++c)
            order.push_back(cells[c][0]);
        const int fixed = static_cast<int>(order.size());

        if (have_best_) {
            const std::uint64_t mask = prefix_mask(pair_count(n_), fixed);
            const std::uint64_t mine = prefix_bits(order, fixed);
            if (mine > (best_bits_ & mask))
                return;
        }

        if (target == cells.size()) {
            const std::uint64_t bits = prefix_bits(order, n_);
            if (!have_best_ || bits < best_bits_) {
                have_best_ = true;
                best_bits_ = bits;
                best_order_ = order;
            }
            return;
        }

        const std::vector<int> cell = cells[target];
        std::vector<int> tried;
        for (int v : cell) {
            if (std::any_of(tried.begin(), tried.end(), [&](int t) { return twins(g_, v, t); }))
                continue;
            tried.push_back(v);
            Cells child;
            child.reserve(cells.size() + 1);
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (c != target) {
                    child.push_back(cells[c]);
                    continue;
                }
                child.push_back({v});
                std::vector<int> rest;
                for (int w : cell)
                    if (w != v)
                        rest.push_back(w);
                child.push_back(std::move(rest));
            }
            descend(std::move(child));
        }
    }

    const Graph& g_;
    int n_;
    bool have_best_ = false;
    std::uint64_t best_bits_ = 0;
    std::vector<int> best_order_;
};

void check_canonical_order(const Graph& g)
{
    if (g.order() > kMaxCanonicalOrder)
        throw Error("canonical form is capped at " + std::to_string(kMaxCanonicalOrder) +
                    " vertices, got " + std::to_string(g.order()));
}

Graph add_vertex(const Graph& g, VertexMask neighbourhood)
{
    std::vector<VertexMask> rows = g.rows();
    const int v = g.order();
    for (int u : mask_to_vertices(neighbourhood))
        rows[u] |= bit(v);
    rows.push_back(neighbourhood);
    return Graph::from_rows(std::move(rows));
}

} // namespace

Graph CanonicalForm::graph() const
{
    std::vector<VertexMask> rows(n, 0);
    const int total = pair_count(n);
    int idx = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++idx)
            if ((bits >> (total - 1 - idx)) & 1U) {
                rows[i] |= bit(j);
                rows[j] |= bit(i);
            }
    return Graph::from_rows(std::move(rows));
}

CanonicalForm canonical_form(const Graph& g)
{
    check_canonical_order(g);
    if (g.order() <= 1)
        return {g.order(), 0};
    CanonicalSearch search(g);
    search.run();
    return {g.order(), search.best_bits()};
}

std::vector<int> canonical_labeling(const Graph& g)
{
    check_canonical_order(g);
    std::vector<int> perm(g.order(), 0);
    if (g.order() <= 1)
        return perm;
    CanonicalSearch search(g);
    search.run();
    const auto& order = search.best_order();
    for (int pos = 0; pos < g.order(); ++pos)
        perm[order[pos]] = pos;
    return perm;
}

bool is_isomorphic(const Graph& a, const Graph& b)
{
    if (a.order() != b.order() || a.edge_count() != b.edge_count())
        return false;
    return canonical_form(a) == canonical_form(b);
}

std::vector<Graph> enumerate_connected(int n)
{
    if (n < 1 || n > kMaxEnumerationOrder)
        throw Error("in-process enumeration supports 1 <= n <= " +
                    std::to_string(kMaxEnumerationOrder) + ", got " + std::to_string(n));
    std::vector<Graph> level{Graph(1)};
    for (int k = 2; k <= n; ++k) {
        std::set<std::uint64_t> keys;
        for (const Graph& g : level) {
            const VertexMask all = g.all_vertices();
            for (VertexMask s = 1; s <= all; ++s)
                keys.insert(canonical_form(add_vertex(g, s)).bits);
        }
        level.clear();
        for (std::uint64_t bits : keys)
            level.push_back(CanonicalForm{k, bits}.graph());
    }
    return level;
}

IngestResult ingest_graph6_stream(std::istream& in, bool strict)
{
    IngestResult out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        if (line.empty())
            continue;
        try {
            out.graphs.push_back(parse_graph6(line));
        } catch (const ParseError& e) {
            if (strict)
                throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
            out.errors.push_back({lineno, e.what()});
        }
    }
    return out;
}

void write_graph6_stream(std::ostream& out, std::span<const Graph> graphs)
{
    for (const Graph& g : graphs)
        out << emit_graph6(g) << '\n';
}

} // namespace dsr
