#include <doctest.h>

#include <cmath>
#include <filesystem>

#include "dsr/enumeration.hpp"
#include "dsr/report.hpp"
#include "dsr/verifier.hpp"
#include "oracles.hpp"

using namespace dsr;

namespace {

const VerificationReport& row(const TheoremSweep& s, int delta, int ck)
{
    for (const auto& r : s.reports)
        if (r.key.delta == delta && r.key.ckappa == ck)
            return r;
    throw std::runtime_error("missing row");
}

} // namespace

TEST_CASE("order six sweep, r = 2, h = 1")
{
    const auto graphs = enumerate_connected(6);
    const auto s = verify_theorem(graphs, 6, 2, 1, {});
    CHECK(s.graphs == 112);
    CHECK(s.skipped_inputs == 0);
    CHECK_FALSE(s.grid_infeasible);
    CHECK(s.consistency_failures.empty());
    CHECK(s.reports.size() == 10);

    // Observed: the case (i) family graph is not the minimiser in either
    // delta = 1 class.
    CHECK(row(s, 1, 1).verdict == Verdict::Mismatch);
    CHECK(row(s, 1, 1).minimizers == std::vector<std::string>{"E@pw"});
    CHECK(row(s, 1, 1).predicted == "E`Lw");
    CHECK(row(s, 1, 2).verdict == Verdict::Mismatch);
    CHECK(row(s, 1, 2).minimizers == std::vector<std::string>{"E@Rw"});

    CHECK(row(s, 2, 1).verdict == Verdict::Match);
    CHECK(row(s, 2, 1).predicted_case == FamilyCase::III);
    CHECK(row(s, 2, 2).verdict == Verdict::Match);
    CHECK(row(s, 2, 2).predicted_case == FamilyCase::II);
    CHECK(row(s, 3, 2).verdict == Verdict::Match);
    CHECK(row(s, 3, 1).verdict == Verdict::ClassEmpty);

    int members = 0;
    for (const auto& r : s.reports)
        members += r.class_size;
    CHECK(members + s.undefined_ckappa == 112);
    CHECK(s.any_failure());
    CHECK_FALSE(s.all_match());
}

TEST_CASE("class minima agree with a brute-force classification")
{
    const auto graphs = enumerate_connected(6);
    const auto s = verify_theorem(graphs, 6, 2, 1, {});
    for (const auto& r : s.reports) {
        if (!r.min_lambda1)
            continue;
        double best = INFINITY;
        int size = 0;
        for (const auto& g : graphs) {
            if (min_degree(g) != r.key.delta || oracle::ckappa(g, 2, 1) != r.key.ckappa)
                continue;
            ++size;
            best = std::min(best, oracle::eigen_lambda1(g));
        }
        CHECK(size == r.class_size);
        CHECK(std::abs(best - *r.min_lambda1) < 1e-9);
    }
}

TEST_CASE("unmet hypothesis grid")
{
    const auto graphs = enumerate_connected(5);
    const auto s = verify_theorem(graphs, 5, 2, 2, {});
    CHECK(s.grid_infeasible);
    REQUIRE_FALSE(s.reports.empty());
    for (const auto& r : s.reports)
        CHECK(r.verdict == Verdict::HypothesisUnmet);
    CHECK_FALSE(s.any_failure());
}

TEST_CASE("inputs of the wrong order or disconnected are skipped")
{
    std::vector<Graph> input = enumerate_connected(5);
    input.push_back(path_graph(4));
    input.push_back(edgeless(5));
    input.push_back(relabel(input.front(), std::vector<int>{4, 3, 2, 1, 0}));
    const auto s = verify_theorem(input, 5, 2, 1, {});
    CHECK(s.graphs == 21);
    CHECK(s.skipped_inputs == 3);
}

TEST_CASE("serial and parallel sweeps produce the same report body")
{
    const auto graphs = enumerate_connected(6);
    TheoremOptions one;
    TheoremOptions four;
    four.jobs = 4;
    CHECK(to_json(verify_theorem(graphs, 6, 2, 1, one)).dump() ==
          to_json(verify_theorem(graphs, 6, 2, 1, four)).dump());
}

TEST_CASE("evaluation cache round trip")
{
    const auto dir = std::filesystem::temp_directory_path() / "dsr-cache-test";
    std::filesystem::create_directories(dir);
    const auto path = (dir / "cache.tsv").string();
    std::filesystem::remove(path);

    const auto graphs = enumerate_connected(5);
    EvaluationCache cache;
    cache.load(path);
    CHECK(cache.size() == 0);
    const auto first = verify_theorem(graphs, 5, 2, 1, {}, &cache);
    CHECK(cache.size() == 21);
    CHECK(cache.dirty());
    cache.save(path);

    EvaluationCache reloaded;
    reloaded.load(path);
    CHECK(reloaded.size() == 21);
    for (const auto& g : graphs) {
        const auto g6 = canonical_form(g).graph6();
        CHECK(reloaded.find(g6, 2, 1) == cache.find(g6, 2, 1));
    }
    CHECK_FALSE(reloaded.find(canonical_form(graphs[0]).graph6(), 3, 1));
    const auto second = verify_theorem(graphs, 5, 2, 1, {}, &reloaded);
    CHECK(to_json(first).dump() == to_json(second).dump());
    std::filesystem::remove_all(dir);
}

TEST_CASE("minimal cut component count")
{
    CHECK(minimal_cut_component_count(cycle_graph(6), 2, 1) == 2);
    CHECK(minimal_cut_component_count(join(clique(1), edgeless(3)), 2, 0) == 3);
}

TEST_CASE("edge lemma on small graphs")
{
    const std::vector<Graph> c4{cycle_graph(4)};
    const auto rep = verify_edge_deletion_lemma(c4);
    CHECK(rep.pairs_checked == 4);
    CHECK(rep.holds());
    CHECK(rep.min_margin > 0);

    const std::vector<Graph> k2{clique(2)};
    const auto trivial = verify_edge_deletion_lemma(k2);
    CHECK(trivial.pairs_checked == 0);
    CHECK(trivial.pairs_skipped == 1);
    CHECK(trivial.holds());
}

TEST_CASE("join lemma")
{
    // Balanced parts lose to the lopsided extremal shape.
    const double balanced = oracle::eigen_lambda1(clique_join(1, {3, 3}));
    const double lopsided = oracle::eigen_lambda1(clique_join(1, {4, 2}));
    CHECK(balanced > lopsided);

    const auto instances = join_lemma_instances(7);
    REQUIRE_FALSE(instances.empty());
    for (const auto& in : instances) {
        int total = in.s;
        for (int part : in.parts) {
            total += part;
            CHECK(part >= in.p);
        }
        CHECK(total == in.n);
        CHECK(in.parts.size() >= 2);
        CHECK(std::is_sorted(in.parts.rbegin(), in.parts.rend()));
        const int c = static_cast<int>(in.parts.size());
        CHECK(in.parts[0] < in.n - in.s - (c - 1) * in.p);
    }

    const auto rep = verify_join_lemma(7);
    CHECK(rep.instances == static_cast<long long>(instances.size()));
    CHECK(rep.holds());
    CHECK(rep.min_margin > 0);
    CHECK_THROWS_AS(verify_join_lemma(kMaxJoinLemmaOrder + 1), Error);
}
