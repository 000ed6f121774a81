#include "dsr/spectral.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <numeric>

namespace dsr {

DistanceMatrix::DistanceMatrix(int n, std::vector<int> entries) : n_(n), d_(std::move(entries))
{
    if (n < 0 || d_.size() != static_cast<std::size_t>(n) * n)
        throw Error("distance matrix size mismatch");
}

int DistanceMatrix::row_sum(int i) const
{
    const auto first = d_.begin() + static_cast<std::ptrdiff_t>(i) * n_;
    return std::accumulate(first, first + n_, 0);
}

std::vector<double> DistanceMatrix::to_dense() const
{
    return {d_.begin(), d_.end()};
}

DistanceMatrix distance_matrix(const Graph& g)
{
    const int n = g.order();
    if (n == 0)
        throw Error("distance matrix of the empty graph");
    std::vector<int> d(static_cast<std::size_t>(n) * n, 0);
    for (int src = 0; src < n; ++src) {
        VertexMask seen = bit(src);
        VertexMask frontier = bit(src);
        int depth = 0;
        while (frontier) {
            ++depth;
            VertexMask next = 0;
            for (int v : mask_to_vertices(frontier))
                next |= g.neighbours(v);
            next &= ~seen;
            for (int v : mask_to_vertices(next))
                d[static_cast<std::size_t>(src) * n + v] = depth;
            seen |= next;
            frontier = next;
        }
        if (seen != g.all_vertices())
            throw Error("distance matrix undefined: graph is disconnected, components " +
                        describe_components(components(g)));
    }
    return DistanceMatrix(n, std::move(d));
}

namespace {

void multiply(const std::vector<double>& a, int n, std::span<const double> x, std::span<double> y)
{
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        const double* row = a.data() + static_cast<std::size_t>(i) * n;
        for (int j = 0; j < n; ++j)
            s += row[j] * x[j];
        y[i] = s;
    }
}

double inf_norm(std::span<const double> x)
{
    double m = 0.0;
    for (double v : x)
        m = std::max(m, std::abs(v));
    return m;
}

} // namespace

SpectralResult spectral_radius(const DistanceMatrix& m, const PowerIterationOptions& opts)
{
    if (!(opts.tolerance > 0.0))
        throw Error("power iteration tolerance must be positive");
    const int n = m.order();
    if (n == 0)
        throw Error("spectral radius of an empty matrix");
    SpectralResult out;
    if (n == 1) {
        out.perron = {1.0};
        return out;
    }

    const std::vector<double> a = m.to_dense();
    std::vector<double> x(n, 1.0);
    std::vector<double> y(n);
    for (int it = 1; it <= opts.max_iterations; ++it) {
        multiply(a, n, x, y);
        const double lambda = std::inner_product(x.begin(), x.end(), y.begin(), 0.0) /
                              std::inner_product(x.begin(), x.end(), x.begin(), 0.0);
        double residual = 0.0;
        for (int i = 0; i < n; ++i)
            residual = std::max(residual, std::abs(y[i] - lambda * x[i]));
        if (residual <= opts.tolerance * lambda) {
            out.lambda1 = lambda;
            out.iterations = it;
            out.residual = residual;
            out.perron = x;
            for (double v : out.perron)
                if (!(v > 0.0))
                    throw Error("power iteration produced a non-positive Perron entry");
            return out;
        }
        const double scale = inf_norm(y);
        for (int i = 0; i < n; ++i)
            x[i] = y[i] / scale;
    }
    throw Error("power iteration did not converge within " + std::to_string(opts.max_iterations) +
                " iterations");
}

SpectralResult distance_spectral_radius(const Graph& g, const PowerIterationOptions& opts)
{
    return spectral_radius(distance_matrix(g), opts);
}

std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n, const JacobiOptions& opts)
{
    if (a.size() != static_cast<std::size_t>(n) * n)
        throw Error("matrix size mismatch");
    auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (at(i, j) != at(j, i))
                throw Error("Jacobi eigensolver needs a symmetric matrix");

    double total = 0.0;
    for (double v : a)
        total += v * v;
    const double target = opts.tolerance * std::sqrt(total);

    auto off_norm = [&] {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                s += 2.0 * at(i, j) * at(i, j);
        return std::sqrt(s);
    };

    int sweep = 0;
    while (off_norm() > target) {
        if (++sweep > opts.max_sweeps)
            throw Error("Jacobi eigensolver did not converge");
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0)
                    continue;
                // Rotation angle that annihilates a(p,q); t is the smaller root.
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = std::copysign(1.0, theta) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = at(k, p);
                    const double akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = at(p, k);
                    const double aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
                at(p, q) = 0.0;
                at(q, p) = 0.0;
            }
        }
    }

    std::vector<double> eig(n);
    for (int i = 0; i < n; ++i)
        eig[i] = at(i, i);
    std::sort(eig.begin(), eig.end(), std::greater<>());
    return eig;
}

std::vector<double> full_spectrum(const DistanceMatrix& m, const JacobiOptions& opts)
{
    return symmetric_eigenvalues(m.to_dense(), m.order(), opts);
}

double rayleigh_quotient(const DistanceMatrix& m, std::span<const double> x)
{
    const int n = m.order();
    if (static_cast<int>(x.size()) != n)
        throw Error("vector length does not match matrix order");
    double num = 0.0;
    double den = 0.0;
    for (int i = 0; i < n; ++i) {
        den += x[i] * x[i];
        for (int j = 0; j < n; ++j)
            num += x[i] * m.at(i, j) * x[j];
    }
    if (den == 0.0)
        throw Error("Rayleigh quotient of the zero vector");
    return num / den;
}

} // namespace dsr
