#include <doctest.h>

#include <random>

#include "dsr/graph6.hpp"
#include "oracles.hpp"

using namespace dsr;

TEST_CASE("known encodings")
{
    CHECK(emit_graph6(clique(3)) == "Bw");
    CHECK(emit_graph6(path_graph(3)) == "Bg");
    CHECK(emit_graph6(clique(2)) == "A_");
    CHECK(emit_graph6(edgeless(2)) == "A?");
    CHECK(emit_graph6(Graph(0)) == "?");
    CHECK(emit_graph6(clique(1)) == "@");

    CHECK(parse_graph6("Bw") == clique(3));
    CHECK(parse_graph6("Bg") == path_graph(3));
    CHECK(parse_graph6(">>graph6<<Bw") == clique(3));
    CHECK(parse_graph6("Bw\r\n") == clique(3));
}

TEST_CASE("large order header")
{
    const Graph g = path_graph(64);
    const std::string s = emit_graph6(g);
    CHECK(s.substr(0, 4) == "~?@?");
    CHECK(parse_graph6(s) == g);

    const Graph h = cycle_graph(62);
    CHECK(emit_graph6(h)[0] == static_cast<char>(62 + 63));
    CHECK(parse_graph6(emit_graph6(h)) == h);
}

TEST_CASE("malformed input is rejected")
{
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("B"), ParseError);     // truncated
    CHECK_THROWS_AS(parse_graph6("Bww"), ParseError);   // trailing byte
    CHECK_THROWS_AS(parse_graph6("B "), ParseError);    // byte below 63
    CHECK_THROWS_AS(parse_graph6("~~??????"), ParseError);
    CHECK_THROWS_AS(parse_graph6("~?A?"), ParseError);  // n = 65
}

TEST_CASE("property: round trip")
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = static_cast<int>(rng() % 20);
        const Graph g = oracle::random_graph(rng, n, 0.5);
        const std::string s = emit_graph6(g);
        for (char c : s)
            CHECK((c >= 63 && c <= 126));
        CHECK(parse_graph6(s) == g);
        CHECK(emit_graph6(parse_graph6(s)) == s);
    }
}
