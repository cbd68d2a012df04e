#pragma once

#include "qha/fft.hpp"
#include "qha/grid.hpp"
#include "qha/parallel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qha {

/// Indices of a phase-space lattice point (x axis, xi axis).
struct LatticePoint {
    int ix;
    int ik;
};

/// A phase-space point by value.
struct PhasePoint {
    double x;
    double xi;
};

inline PhasePoint point_at(const PhaseGrid& g, LatticePoint z) {
    return {g.x.point(z.ix), g.xi.point(z.ik)};
}

/// sigma((x,xi),(x',xi')) = x' xi - x xi'; antisymmetric, sigma(z,z) = 0.
inline double symplectic_form(PhasePoint z, PhasePoint zeta) {
    return zeta.x * z.xi - z.x * zeta.xi;
}

namespace detail {

/// e^{i pi p / n} with the integer p reduced mod 2n first, so the angle
/// stays in [0, 2 pi) and the phase is as accurate as sin/cos allow.
inline cplx half_unit_phase(long long p, int n) {
    long long r = p % (2LL * n);
    if (r < 0) r += 2LL * n;
    return std::polar(1.0, std::numbers::pi * double(r) / double(n));
}

}  // namespace detail

/**
 * Symmetric time-frequency shift on the lattice,
 *
 *   (rho(z) f)(t) = e^{-pi i x xi} e^{2 pi i xi t} f(t - x),
 *
 * with the translation realized circularly and both phases evaluated from
 * the exact integer products (x xi = P/n, xi t_l = Q_l/n on this grid).
 * The modulation phase has period L in t, so circular wrapping of the
 * translation is consistent with it; rho(z) is exactly unitary.
 */
inline GridFunction tf_shift(const GridFunction& f, LatticePoint z) {
    const int n = f.grid.n;
    if (z.ix < 0 || z.ix >= n || z.ik < 0 || z.ik >= n) {
        throw std::invalid_argument("tf_shift: lattice point out of range");
    }
    const int half = n / 2;
    const long long px = z.ix - half;
    const long long pk = z.ik - half;
    const cplx sym = detail::half_unit_phase(-px * pk, n);
    GridFunction out(f.grid);
    for (int l = 0; l < n; ++l) {
        const cplx mod = detail::half_unit_phase(2LL * pk * (l - half), n);
        out.values[l] =
            sym * mod * f.values[f.grid.wrap(l - static_cast<int>(px))];
    }
    return out;
}

/**
 * Cross-ambiguity table A(f,g)(z) = <f, rho(z) g>. Row a (the shift x_a) is
 * one centered DFT of f(t) conj(g(t - x_a)) times the symmetric phase:
 *
 *   A(x_a, xi_k) = e^{+pi i x_a xi_k} h sum_l f_l conj(g_{l-s_a}) e^{-2 pi i xi_k t_l}.
 */
inline PhaseFunction ambiguity(const GridFunction& f, const GridFunction& g) {
    if (f.grid != g.grid) {
        throw std::invalid_argument("ambiguity: grids differ");
    }
    const int n = f.grid.n;
    const int half = n / 2;
    const double h = f.grid.h;
    PhaseFunction A{PhaseGrid(f.grid)};
    detail::parallel_for(static_cast<std::size_t>(n), [&](std::size_t row) {
        const int a = static_cast<int>(row);
        std::vector<cplx> buf(static_cast<size_t>(n));
        for (int l = 0; l < n; ++l) {
            buf[l] = f.values[l] *
                     std::conj(g.values[f.grid.wrap(l - (a - half))]);
        }
        detail::centered_forward(buf.data(), n);
        for (int k = 0; k < n; ++k) {
            const cplx sym = detail::half_unit_phase(
                static_cast<long long>(a - half) * (k - half), n);
            A.values(a, k) = h * sym * buf[k];
        }
    });
    return A;
}

/**
 * Symplectic Fourier transform
 *
 *   (F_sigma Psi)(x', xi') = sum_z Psi(z) e^{-2 pi i (x xi' - x' xi)} dA,
 *
 * realized as an inverse centered DFT along xi followed by a forward one
 * along x. On this lattice it is exactly involutive and unitary (Parseval
 * with cell-area weight), because the two centered DFTs are mutually
 * inverse up to the factor n = 1/(h dxi).
 */
inline PhaseFunction symplectic_ft(const PhaseFunction& Psi) {
    const int n = Psi.grid.n();
    const double hx = Psi.grid.x.h;
    const double hxi = Psi.grid.xi.h;
    Eigen::MatrixXcd mid(n, n);  // mid(a, c) = dxi sum_b Psi(a,b) e^{2 pi i x_c xi_b}
    detail::parallel_for(static_cast<std::size_t>(n), [&](std::size_t row) {
        const int a = static_cast<int>(row);
        std::vector<cplx> buf(static_cast<size_t>(n));
        for (int b = 0; b < n; ++b) buf[b] = Psi.values(a, b);
        detail::centered_inverse_unnorm(buf.data(), n);
        for (int c = 0; c < n; ++c) mid(a, c) = hxi * buf[c];
    });
    PhaseFunction out(Psi.grid);
    detail::parallel_for(static_cast<std::size_t>(n), [&](std::size_t col) {
        const int c = static_cast<int>(col);
        std::vector<cplx> buf(static_cast<size_t>(n));
        for (int a = 0; a < n; ++a) buf[a] = mid(a, c);
        detail::centered_forward(buf.data(), n);
        for (int d = 0; d < n; ++d) out.values(c, d) = hx * buf[d];
    });
    return out;
}

/**
 * Cross-Wigner table, defined as the symplectic Fourier transform of the
 * ambiguity table. For the Gaussian window this evaluates to
 * 2 e^{-2 pi |z|^2} up to quadrature error.
 */
inline PhaseFunction wigner(const GridFunction& f, const GridFunction& g) {
    return symplectic_ft(ambiguity(f, g));
}

}  // namespace qha
