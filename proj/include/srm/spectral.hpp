#pragma once

// Spectral radius (Perron root) via power iteration on A + I, and the
// closed-form values for the extremal family A(n, m, i).

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "srm/graph.hpp"

namespace srm {

inline constexpr double kDefaultTol = 1e-10;
inline constexpr std::uint64_t kIterationCap = 1'000'000;

class NonConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SpectralResult {
    double rho = 0.0;
    std::vector<double> vector;  // nonnegative, max entry 1 when rho > 0
    double residual = 0.0;       // infinity norm of A x - rho x
    std::uint64_t iterations = 0;
};

// Power iteration on A + I (the shift defeats the +/-rho oscillation of
// bipartite graphs), all-ones start, infinity-norm normalization. The
// eigenvalue estimate is the Rayleigh quotient; convergence is declared on
// the eigen-residual, giving a certified a-posteriori bound rather than a
// successive-iterate distance.
inline SpectralResult spectral_radius(const Graph& g, double tol = kDefaultTol) {
    if (!(tol > 0)) throw std::invalid_argument("spectral_radius: tolerance must be positive");
    const int n = g.n();
    if (edge_count(g) == 0) return {0.0, std::vector<double>(n, 1.0), 0.0, 0};

    std::vector<double> x(n, 1.0), y(n, 0.0);
    for (std::uint64_t iter = 1; iter <= kIterationCap; ++iter) {
        for (int u = 1; u <= n; ++u) {
            double acc = x[u - 1];  // the +I term
            g.for_each_neighbor(u, [&](int v) { acc += x[v - 1]; });
            y[u - 1] = acc;
        }
        double num = 0.0, den = 0.0;
        for (int i = 0; i < n; ++i) {
            num += x[i] * y[i];
            den += x[i] * x[i];
        }
        const double lambda = num / den;  // Rayleigh estimate for A + I
        double residual = 0.0, ymax = 0.0;
        for (int i = 0; i < n; ++i) {
            residual = std::max(residual, std::abs(y[i] - lambda * x[i]));
            ymax = std::max(ymax, y[i]);
        }
        const double rho = lambda - 1.0;
        if (residual <= tol * std::max(1.0, rho)) return {rho, x, residual, iter};
        for (int i = 0; i < n; ++i) x[i] = y[i] / ymax;
    }
    throw NonConvergenceError("spectral_radius: iteration cap reached (tolerance too tight or degenerate input)");
}

// Largest root of x^2 - (m-1)x - m(n-m): the spectral radius of the complete
// split graph K_m joined to n-m independent vertices.
inline double split_graph_rho(int n, int m) {
    const double d = static_cast<double>(m - 1) * (m - 1) + 4.0 * m * (n - m);
    return 0.5 * ((m - 1) + std::sqrt(d));
}

// max{2m, split_graph_rho(n, m)}; the branches cross exactly at n = 3m + 2,
// where the discriminant is the perfect square (3m+1)^2 and the value is 2m
// with no rounding.
inline double threshold(int n, int m) {
    if (m < 1 || n < 2 * m + 2)
        throw std::invalid_argument("threshold: need m >= 1 and n >= 2m + 2");
    return std::max(2.0 * m, split_graph_rho(n, m));
}

// Exact-arithmetic-free closed form for rho(A(n, m, i)):
//   i = 1     -> 2m                       (clique K_{2m+1} plus isolated vertices)
//   i = m+1   -> split_graph_rho(n, m)
//   otherwise -> largest root of the characteristic cubic of the 3x3 quotient
//                matrix of the equitable partition
//                  {[1..i-1], [i..2m-i+2], [2m-i+3..n]}:
//                  [[k-1, a, b], [k, a-1, 0], [k, 0, 0]]
//                with k = i-1, a = 2m-2i+3, b = n-2m+i-2, found by Newton
//                from lambda_0 = n (all roots real, largest is simple).
inline double closed_form_rho_extremal(ExtremalParams p) {
    p.validate();
    if (p.i == 1) return 2.0 * p.m;
    if (p.i == p.m + 1) return split_graph_rho(p.n, p.m);
    const double k = p.i - 1;
    const double a = 2 * p.m - 2 * p.i + 3;
    const double b = p.n - 2 * p.m + p.i - 2;
    const double a1 = k - 1, a2 = a - 1;
    const double c2 = -(a1 + a2);
    const double c1 = a1 * a2 - a * k - b * k;
    const double c0 = b * k * a2;
    double x = p.n;
    for (int it = 0; it < 200; ++it) {
        const double f = ((x + c2) * x + c1) * x + c0;
        const double fp = (3.0 * x + 2.0 * c2) * x + c1;
        const double step = f / fp;
        x -= step;
        if (std::abs(step) <= 1e-14 * std::max(1.0, std::abs(x))) break;
    }
    return x;
}

struct RhoMonotoneCheck {
    double rho_before = 0.0;
    double rho_after = 0.0;
    bool nondecreasing = false;  // rho_after >= rho_before - tol
    bool strict = false;         // rho_after >  rho_before + tol
};

inline RhoMonotoneCheck add_edge_rho_monotone_check(const Graph& g, int u, int v,
                                                    double tol = 1e-9) {
    if (g.has_edge(u, v))
        throw std::invalid_argument("add_edge_rho_monotone_check: edge already present");
    const double before = spectral_radius(g).rho;
    const double after = spectral_radius(add_edge(g, u, v)).rho;
    return {before, after, after >= before - tol, after > before + tol};
}

}  // namespace srm
