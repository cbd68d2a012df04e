#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace qha {

using cplx = std::complex<double>;

constexpr double kInf = std::numeric_limits<double>::infinity();

/**
 * Uniform centered grid t_j = (j - n/2) h for j = 0..n-1. n is even so the
 * origin is a sample (j = n/2) and the grid covers [-L/2, L/2) with L = n h.
 * All quadrature below is the plain Riemann sum with weight h.
 */
struct LineGrid {
    int n;
    double h;

    LineGrid(int n_, double h_) : n(n_), h(h_) {
        if (n < 4 || n % 2 != 0) {
            throw std::invalid_argument("LineGrid: n must be even and >= 4");
        }
        if (!(h > 0.0) || !std::isfinite(h)) {
            throw std::invalid_argument("LineGrid: spacing must be positive");
        }
    }

    double point(int j) const { return (j - n / 2) * h; }
    double length() const { return n * h; }

    /// Reciprocal spacing 1/(n h); the dual grid shares n, so frequencies
    /// run over xi_k = (k - n/2)/(n h) and n * h * dual spacing == 1.
    double dual_spacing() const { return 1.0 / (n * h); }
    LineGrid dual() const { return LineGrid(n, dual_spacing()); }

    /// Circular index for j + s (s may be negative).
    int wrap(int j) const {
        int r = j % n;
        return r < 0 ? r + n : r;
    }

    bool operator==(const LineGrid& o) const { return n == o.n && h == o.h; }
    bool operator!=(const LineGrid& o) const { return !(*this == o); }
};

/**
 * Phase-space lattice: the x axis paired with its reciprocal xi axis.
 * Swapping the two axes is an exact involution (pure member exchange),
 * which is the discrete form of Fourier reciprocity.
 */
struct PhaseGrid {
    LineGrid x;
    LineGrid xi;

    explicit PhaseGrid(const LineGrid& space) : x(space), xi(space.dual()) {}

    PhaseGrid swapped() const { return PhaseGrid(xi, x); }

    int n() const { return x.n; }
    double cell_area() const { return x.h * xi.h; }

    bool operator==(const PhaseGrid& o) const {
        return x == o.x && xi == o.xi;
    }
    bool operator!=(const PhaseGrid& o) const { return !(*this == o); }

private:
    PhaseGrid(const LineGrid& a, const LineGrid& b) : x(a), xi(b) {}
};

/// Complex samples of a signal on a LineGrid.
struct GridFunction {
    LineGrid grid;
    Eigen::VectorXcd values;

    explicit GridFunction(const LineGrid& g)
        : grid(g), values(Eigen::VectorXcd::Zero(g.n)) {}

    template <typename Fn>
    static GridFunction sample(const LineGrid& g, Fn&& fn) {
        GridFunction f(g);
        for (int j = 0; j < g.n; ++j) f.values[j] = fn(g.point(j));
        return f;
    }
};

/**
 * Complex table on the phase-space lattice, values(ix, ik) at the point
 * (x_ix, xi_ik). Row index is the x axis throughout the library.
 */
struct PhaseFunction {
    PhaseGrid grid;
    Eigen::MatrixXcd values;

    explicit PhaseFunction(const PhaseGrid& g)
        : grid(g), values(Eigen::MatrixXcd::Zero(g.n(), g.n())) {}

    template <typename Fn>
    static PhaseFunction sample(const PhaseGrid& g, Fn&& fn) {
        PhaseFunction f(g);
        for (int a = 0; a < g.n(); ++a) {
            const double xv = g.x.point(a);
            for (int b = 0; b < g.n(); ++b) {
                f.values(a, b) = fn(xv, g.xi.point(b));
            }
        }
        return f;
    }
};

/// <f, g> = h sum_j f_j conj(g_j); linear in f, conjugate-linear in g.
inline cplx inner_product(const GridFunction& f, const GridFunction& g) {
    if (f.grid != g.grid) {
        throw std::invalid_argument("inner_product: grids differ");
    }
    return f.grid.h * (g.values.adjoint() * f.values)(0);
}

inline double norm_l2(const GridFunction& f) {
    return std::sqrt(f.grid.h) * f.values.norm();
}

/// Phase-space pairing with cell-area weight.
inline cplx phase_inner_product(const PhaseFunction& F,
                                const PhaseFunction& G) {
    if (F.grid != G.grid) {
        throw std::invalid_argument("phase_inner_product: grids differ");
    }
    cplx acc = 0.0;
    for (int a = 0; a < F.grid.n(); ++a) {
        for (int b = 0; b < F.grid.n(); ++b) {
            acc += F.values(a, b) * std::conj(G.values(a, b));
        }
    }
    return F.grid.cell_area() * acc;
}

/// L^p norm over the lattice, Riemann-sum weighted; p = inf gives max |F|.
inline double function_norm(const PhaseFunction& F, double p) {
    if (std::isnan(p) || p < 1.0) {
        throw std::invalid_argument("function_norm: p must be in [1, inf]");
    }
    if (p == kInf) {
        return F.values.cwiseAbs().maxCoeff();
    }
    double acc = 0.0;
    for (int a = 0; a < F.grid.n(); ++a) {
        for (int b = 0; b < F.grid.n(); ++b) {
            acc += std::pow(std::abs(F.values(a, b)), p);
        }
    }
    return std::pow(F.grid.cell_area() * acc, 1.0 / p);
}

/**
 * Lorentz norm L^{p,q} of the lattice table, computed from the exact
 * decreasing rearrangement: the table defines a step function with mass
 * mu = cell_area per sample, so with sorted magnitudes a_1 >= a_2 >= ...
 *
 *   ||F||^q = sum_k a_k^q [ (k mu)^{q/p} - ((k-1) mu)^{q/p} ]   (q < inf)
 *   ||F||   = sup_k (k mu)^{1/p} a_k                            (q = inf)
 *
 * which reduces to the plain L^p norm when q = p.
 */
inline double lorentz_norm(const PhaseFunction& F, double p, double q) {
    if (std::isnan(p) || p < 1.0 || p == kInf) {
        throw std::invalid_argument("lorentz_norm: need 1 <= p < inf");
    }
    if (std::isnan(q) || q < 1.0) {
        throw std::invalid_argument("lorentz_norm: need 1 <= q <= inf");
    }
    const int n = F.grid.n();
    std::vector<double> mags;
    mags.reserve(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            mags.push_back(std::abs(F.values(a, b)));
        }
    }
    std::sort(mags.begin(), mags.end(), std::greater<double>());
    const double mu = F.grid.cell_area();
    if (q == kInf) {
        double best = 0.0;
        for (size_t k = 0; k < mags.size(); ++k) {
            if (mags[k] == 0.0) break;
            best = std::max(best,
                            std::pow((k + 1) * mu, 1.0 / p) * mags[k]);
        }
        return best;
    }
    double acc = 0.0;
    double prev = 0.0;
    for (size_t k = 0; k < mags.size(); ++k) {
        if (mags[k] == 0.0) break;
        const double cur = std::pow((k + 1) * mu, q / p);
        acc += std::pow(mags[k], q) * (cur - prev);
        prev = cur;
    }
    return std::pow(acc, 1.0 / q);
}

/// Mixed norm: L^p over x within each xi column, then L^q across xi.
inline double mixed_norm(const PhaseFunction& F, double p, double q) {
    if (std::isnan(p) || p < 1.0 || std::isnan(q) || q < 1.0) {
        throw std::invalid_argument("mixed_norm: exponents must be >= 1");
    }
    const int n = F.grid.n();
    const double hx = F.grid.x.h;
    const double hxi = F.grid.xi.h;
    std::vector<double> rows(static_cast<size_t>(n), 0.0);
    for (int b = 0; b < n; ++b) {
        if (p == kInf) {
            double m = 0.0;
            for (int a = 0; a < n; ++a) {
                m = std::max(m, std::abs(F.values(a, b)));
            }
            rows[b] = m;
        } else {
            double acc = 0.0;
            for (int a = 0; a < n; ++a) {
                acc += std::pow(std::abs(F.values(a, b)), p);
            }
            rows[b] = std::pow(hx * acc, 1.0 / p);
        }
    }
    if (q == kInf) {
        double m = 0.0;
        for (double r : rows) m = std::max(m, r);
        return m;
    }
    double acc = 0.0;
    for (double r : rows) acc += std::pow(r, q);
    return std::pow(hxi * acc, 1.0 / q);
}

/**
 * L^2-normalized Hermite functions for the e^{-pi t^2} convention:
 * hermite(g, 0) samples 2^{1/4} e^{-pi t^2} and the higher modes follow the
 * stable two-term recurrence
 *   f_{k+1} = sqrt(2/(k+1)) sqrt(2 pi) t f_k - sqrt(k/(k+1)) f_{k-1}.
 * Modes above n/4 are rejected: they are not resolved by the grid.
 */
inline GridFunction hermite(const LineGrid& g, int k) {
    if (k < 0 || k > g.n / 4) {
        throw std::invalid_argument(
            "hermite: mode index must be in [0, n/4]");
    }
    GridFunction prev(g);
    GridFunction cur(g);
    const double quarter_root_2 = std::pow(2.0, 0.25);
    for (int j = 0; j < g.n; ++j) {
        const double t = g.point(j);
        cur.values[j] = quarter_root_2 * std::exp(-std::numbers::pi * t * t);
    }
    for (int m = 0; m < k; ++m) {
        GridFunction next(g);
        const double a = std::sqrt(2.0 / (m + 1)) *
                         std::sqrt(2.0 * std::numbers::pi);
        const double b = m == 0 ? 0.0 : std::sqrt(double(m) / (m + 1));
        for (int j = 0; j < g.n; ++j) {
            next.values[j] =
                a * g.point(j) * cur.values[j] - b * prev.values[j];
        }
        prev = cur;
        cur = next;
    }
    return cur;
}

/// Standard Gaussian window, the k = 0 Hermite mode.
inline GridFunction gaussian_window(const LineGrid& g) {
    return hermite(g, 0);
}

}  // namespace qha
