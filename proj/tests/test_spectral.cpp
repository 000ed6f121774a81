#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "dsr/spectral.hpp"
#include "oracles.hpp"

using namespace dsr;

namespace {

void check_spectrum(const Graph& g, std::vector<double> expected)
{
    const auto got = full_spectrum(distance_matrix(g));
    REQUIRE(got.size() == expected.size());
    for (std::size_t i = 0; i < got.size(); ++i)
        CHECK(got[i] == doctest::Approx(expected[i]).epsilon(1e-10));
}

} // namespace

TEST_CASE("distance matrix of P4")
{
    const DistanceMatrix d = distance_matrix(path_graph(4));
    CHECK(d.at(0, 3) == 3);
    CHECK(d.at(1, 3) == 2);
    CHECK(d.row_sum(0) == 6);
    CHECK(d.row_sum(1) == 4);
    CHECK_THROWS_AS(distance_matrix(edgeless(2)), Error);
}

TEST_CASE("closed form spectral radii")
{
    for (int n = 2; n <= 12; ++n)
        CHECK(std::abs(distance_spectral_radius(clique(n)).lambda1 - (n - 1)) < 1e-10);
    CHECK(std::abs(distance_spectral_radius(path_graph(3)).lambda1 - (1 + std::sqrt(3.0))) < 1e-10);
    CHECK(std::abs(distance_spectral_radius(cycle_graph(4)).lambda1 - 4) < 1e-10);

    const auto k1 = distance_spectral_radius(clique(1));
    CHECK(k1.lambda1 == 0.0);
    CHECK(k1.perron == std::vector<double>{1.0});
}

TEST_CASE("full spectra")
{
    const double r3 = std::sqrt(3.0);
    check_spectrum(clique(3), {2, -1, -1});
    check_spectrum(path_graph(3), {1 + r3, 1 - r3, -2});
    check_spectrum(cycle_graph(4), {4, 0, -2, -2});
}

TEST_CASE("perron vector is positive and normalised")
{
    const auto res = distance_spectral_radius(path_graph(5));
    double top = 0;
    for (double x : res.perron) {
        CHECK(x > 0);
        top = std::max(top, x);
    }
    CHECK(top == doctest::Approx(1.0));
    CHECK(res.residual <= 1e-12 * res.lambda1);
    // Endpoints are the farthest vertices and carry the largest entries.
    CHECK(res.perron[0] == doctest::Approx(1.0));
    CHECK(res.perron[0] == doctest::Approx(res.perron[4]));
}

TEST_CASE("non-convergence is reported")
{
    PowerIterationOptions opts;
    opts.max_iterations = 1;
    CHECK_THROWS_AS(distance_spectral_radius(path_graph(6), opts), Error);
}

TEST_CASE("jacobi on a generic symmetric matrix")
{
    const std::vector<double> a{4, 1, 2, 1, 3, 0, 2, 0, 1};
    const auto ev = symmetric_eigenvalues(a, 3);
    Eigen::Matrix3d m;
    m << 4, 1, 2, 1, 3, 0, 2, 0, 1;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(m);
    for (int i = 0; i < 3; ++i)
        CHECK(ev[i] == doctest::Approx(es.eigenvalues()[2 - i]).epsilon(1e-12));
}

TEST_CASE("rayleigh quotient")
{
    const DistanceMatrix d = distance_matrix(path_graph(3));
    const std::vector<double> ones(3, 1.0);
    CHECK(rayleigh_quotient(d, ones) == doctest::Approx(8.0 / 3.0));
    const std::vector<double> zero(3, 0.0);
    CHECK_THROWS_AS(rayleigh_quotient(d, zero), Error);
}

TEST_CASE("property: random connected graphs against the Eigen oracle")
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 11);
        const Graph g = oracle::random_connected_graph(rng, n, 0.35);
        const auto dm = distance_matrix(g);
        const auto ref = oracle::distances(oracle::adjacency(g));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                REQUIRE(dm.at(i, j) == ref[i][j]);

        const auto res = spectral_radius(dm);
        const auto eig = oracle::eigen_spectrum(ref);
        CHECK(std::abs(res.lambda1 - eig.front()) < 1e-9 * eig.front());

        const auto jac = full_spectrum(dm);
        for (int i = 0; i < n; ++i)
            CHECK(std::abs(jac[i] - eig[i]) < 1e-9 * eig.front());

        // Trace of D is zero.
        CHECK(std::abs(std::accumulate(jac.begin(), jac.end(), 0.0)) < 1e-8 * n * eig.front());

        // Row sums bracket the spectral radius.
        int lo = dm.row_sum(0), hi = dm.row_sum(0);
        long long total = 0;
        for (int i = 0; i < n; ++i) {
            lo = std::min(lo, dm.row_sum(i));
            hi = std::max(hi, dm.row_sum(i));
            total += dm.row_sum(i);
        }
        CHECK(res.lambda1 >= lo - 1e-9);
        CHECK(res.lambda1 <= hi + 1e-9);
        CHECK(res.lambda1 >= static_cast<double>(total) / n - 1e-9);

        // Rayleigh quotients never exceed lambda1.
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        for (int k = 0; k < 5; ++k) {
            std::vector<double> x(n);
            for (double& v : x)
                v = u(rng);
            CHECK(rayleigh_quotient(dm, x) <= res.lambda1 + 1e-9);
        }
        CHECK(rayleigh_quotient(dm, res.perron) == doctest::Approx(res.lambda1).epsilon(1e-10));
    }
}
