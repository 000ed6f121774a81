#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "dsr/enumeration.hpp"
#include "dsr/graph6.hpp"
#include "oracles.hpp"

using namespace dsr;

TEST_CASE("isomorphism examples")
{
    CHECK(is_isomorphic(path_graph(4), relabel(path_graph(4), std::vector<int>{2, 0, 3, 1})));
    CHECK_FALSE(is_isomorphic(path_graph(4), join(clique(1), edgeless(3))));
    CHECK_FALSE(is_isomorphic(cycle_graph(6),
                              disjoint_union(cycle_graph(3), cycle_graph(3))));
    CHECK_FALSE(is_isomorphic(clique(3), clique(4)));
    CHECK(canonical_form(clique(4)).graph6() == emit_graph6(clique(4)));
}

TEST_CASE("canonical labeling reproduces the canonical form")
{
    const Graph g = path_graph(5);
    const auto perm = canonical_labeling(g);
    CHECK(relabel(g, perm) == canonical_form(g).graph());
}

TEST_CASE("order cap")
{
    CHECK_THROWS_AS(canonical_form(path_graph(kMaxCanonicalOrder + 1)), Error);
    CHECK_THROWS_AS(enumerate_connected(kMaxEnumerationOrder + 1), Error);
}

TEST_CASE("census of connected graphs")
{
    const std::vector<std::size_t> expected{1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n) {
        const auto graphs = enumerate_connected(n);
        CHECK(graphs.size() == expected[n - 1]);
        std::set<CanonicalForm> keys;
        for (const auto& g : graphs) {
            CHECK(g.order() == n);
            CHECK(is_connected(g));
            CHECK(canonical_form(g).graph() == g);
            keys.insert(canonical_form(g));
        }
        CHECK(keys.size() == graphs.size());
    }
}

TEST_CASE("census matches the orbit-marking oracle")
{
    for (int n = 1; n <= 6; ++n)
        CHECK(static_cast<int>(enumerate_connected(n).size()) == oracle::connected_census(n));
}

TEST_CASE("property: canonical form is relabeling invariant")
{
    std::mt19937 rng(23);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 1 + static_cast<int>(rng() % kMaxCanonicalOrder);
        const Graph g = oracle::random_graph(rng, n, 0.45);
        const Graph h = relabel(g, oracle::random_permutation(rng, n));
        CHECK(canonical_form(g) == canonical_form(h));
        CHECK(is_isomorphic(g, h));
        const Graph c = canonical_form(g).graph();
        CHECK(c.edge_count() == g.edge_count());
        CHECK(canonical_form(c) == canonical_form(g));
    }
}

TEST_CASE("property: keys agree with brute-force isomorphism")
{
    // Two graphs share a key exactly when some permutation maps one onto the
    // other.
    auto brute_iso = [](const Graph& a, const Graph& b) {
        if (a.order() != b.order() || a.edge_count() != b.edge_count())
            return false;
        std::vector<int> perm(a.order());
        std::iota(perm.begin(), perm.end(), 0);
        do {
            if (relabel(a, perm) == b)
                return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return false;
    };
    std::mt19937 rng(29);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const Graph a = oracle::random_graph(rng, n, 0.5);
        const Graph b = oracle::random_graph(rng, n, 0.5);
        CHECK((canonical_form(a) == canonical_form(b)) == brute_iso(a, b));
        CHECK(brute_iso(a, canonical_form(a).graph()));
    }
}

TEST_CASE("stream ingest")
{
    std::istringstream ok("Bw\n\nBg\n");
    const auto res = ingest_graph6_stream(ok, true);
    CHECK(res.graphs.size() == 2);
    CHECK(res.errors.empty());

    std::istringstream bad("Bw\nB\nBg\n");
    const auto lax = ingest_graph6_stream(bad, false);
    CHECK(lax.graphs.size() == 2);
    REQUIRE(lax.errors.size() == 1);
    CHECK(lax.errors[0].line == 2);

    std::istringstream bad2("Bw\nB\nBg\n");
    try {
        ingest_graph6_stream(bad2, true);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).rfind("line 2: ", 0) == 0);
    }

    std::ostringstream out;
    const std::vector<Graph> gs{clique(3), path_graph(3)};
    write_graph6_stream(out, gs);
    CHECK(out.str() == "Bw\nBg\n");
}
