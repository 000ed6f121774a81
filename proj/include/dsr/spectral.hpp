#pragma once

#include <optional>
#include <span>
#include <vector>

#include "dsr/graph.hpp"

namespace dsr {

/// Hop-count distance matrix of a connected graph. Entries are exact integers.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    DistanceMatrix(int n, std::vector<int> entries);

    int order() const { return n_; }
    int at(int i, int j) const { return d_[static_cast<std::size_t>(i) * n_ + j]; }
    int row_sum(int i) const;
    const std::vector<int>& entries() const { return d_; }

    /// Entries converted to double, row-major.
    std::vector<double> to_dense() const;

    friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

private:
    int n_ = 0;
    std::vector<int> d_;
};

struct PowerIterationOptions {
    double tolerance = 1e-12; // relative: residual <= tolerance * lambda1
    int max_iterations = 100000;
};

struct SpectralResult {
    double lambda1 = 0.0;
    std::vector<double> perron; // strictly positive, max entry 1
    int iterations = 0;
    double residual = 0.0; // ||D x - lambda1 x||_inf with ||x||_inf = 1
    std::optional<std::vector<double>> full_spectrum;
};

struct JacobiOptions {
    double tolerance = 1e-14; // off-diagonal Frobenius norm relative to ||A||_F
    int max_sweeps = 100;
};

DistanceMatrix distance_matrix(const Graph& g);

/// Dominant eigenvalue of D(g) by power iteration from the all-ones vector.
SpectralResult distance_spectral_radius(const Graph& g, const PowerIterationOptions& opts = {});
SpectralResult spectral_radius(const DistanceMatrix& m, const PowerIterationOptions& opts = {});

/// Every eigenvalue of a dense symmetric row-major matrix, descending, by
/// cyclic Jacobi rotations.
std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n,
                                          const JacobiOptions& opts = {});
std::vector<double> full_spectrum(const DistanceMatrix& m, const JacobiOptions& opts = {});

double rayleigh_quotient(const DistanceMatrix& m, std::span<const double> x);

} // namespace dsr
