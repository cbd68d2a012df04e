#pragma once

#include "qha/random.hpp"
#include "qha/tf_core.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace qha {

/**
 * Dense matrix realization of an operator on the line grid. The kernel is
 * sampled at grid nodes and acts by quadrature,
 *
 *   (T f)(t_j) = h sum_k K(t_j, s_k) f(s_k),
 *
 * so the singular values of the weighted matrix h K are the operator's
 * singular values and grid ell^2 matches quadrature L^2 throughout.
 */
struct OperatorMatrix {
    LineGrid grid;
    Eigen::MatrixXcd kernel;

    OperatorMatrix(const LineGrid& g, Eigen::MatrixXcd k)
        : grid(g), kernel(std::move(k)) {
        if (kernel.rows() != grid.n || kernel.cols() != grid.n) {
            throw std::invalid_argument("OperatorMatrix: kernel shape");
        }
    }

    static OperatorMatrix zero(const LineGrid& g) {
        return OperatorMatrix(g, Eigen::MatrixXcd::Zero(g.n, g.n));
    }
};

/// Nonincreasing nonnegative singular values of an operator.
using SingularSpectrum = Eigen::VectorXd;

/// Rank-one operator f (x) g, acting as u -> <u, g> f.
inline OperatorMatrix rank_one(const GridFunction& f, const GridFunction& g) {
    if (f.grid != g.grid) {
        throw std::invalid_argument("rank_one: grids differ");
    }
    return OperatorMatrix(f.grid, f.values * g.values.adjoint());
}

inline OperatorMatrix identity_operator(const LineGrid& g) {
    return OperatorMatrix(
        g, Eigen::MatrixXcd::Identity(g.n, g.n) / g.h);
}

inline GridFunction apply(const OperatorMatrix& T, const GridFunction& f) {
    if (T.grid != f.grid) {
        throw std::invalid_argument("apply: grids differ");
    }
    GridFunction out(f.grid);
    out.values = T.grid.h * (T.kernel * f.values);
    return out;
}

/// Operator product S T (apply T first), via the h-weighted matrix product.
inline OperatorMatrix compose(const OperatorMatrix& S,
                              const OperatorMatrix& T) {
    if (S.grid != T.grid) {
        throw std::invalid_argument("compose: grids differ");
    }
    return OperatorMatrix(S.grid, S.grid.h * (S.kernel * T.kernel));
}

inline OperatorMatrix adjoint(const OperatorMatrix& T) {
    return OperatorMatrix(T.grid, T.kernel.adjoint());
}

inline cplx trace(const OperatorMatrix& T) {
    return T.grid.h * T.kernel.trace();
}

/// Hilbert-Schmidt pairing <T, S> = trace(S* T).
inline cplx hs_inner_product(const OperatorMatrix& T,
                             const OperatorMatrix& S) {
    if (T.grid != S.grid) {
        throw std::invalid_argument("hs_inner_product: grids differ");
    }
    const double h = T.grid.h;
    return h * h * S.kernel.conjugate().cwiseProduct(T.kernel).sum();
}

/// Parity conjugation P T P realized as the exact index permutation
/// K(t,s) -> K(-t,-s) with circular negation; an isometry of every
/// Schatten class.
inline OperatorMatrix parity_conjugate(const OperatorMatrix& T) {
    const int n = T.grid.n;
    OperatorMatrix out = OperatorMatrix::zero(T.grid);
    for (int l = 0; l < n; ++l) {
        for (int j = 0; j < n; ++j) {
            out.kernel(l, j) = T.kernel((n - l) % n, (n - j) % n);
        }
    }
    return out;
}

/// The parity operator P f(t) = f(-t) as a matrix.
inline OperatorMatrix parity_operator(const LineGrid& g) {
    OperatorMatrix out = OperatorMatrix::zero(g);
    for (int l = 0; l < g.n; ++l) out.kernel(l, (g.n - l) % g.n) = 1.0 / g.h;
    return out;
}

/// Matrix of the symmetric time-frequency shift rho(z); columns agree with
/// tf_shift applied to coordinate vectors.
inline OperatorMatrix shift_operator(const LineGrid& g, LatticePoint z) {
    const int n = g.n;
    if (z.ix < 0 || z.ix >= n || z.ik < 0 || z.ik >= n) {
        throw std::invalid_argument("shift_operator: point out of range");
    }
    const int half = n / 2;
    const long long px = z.ix - half;
    const long long pk = z.ik - half;
    const cplx sym = detail::half_unit_phase(-px * pk, n);
    OperatorMatrix out = OperatorMatrix::zero(g);
    for (int l = 0; l < n; ++l) {
        const cplx mod = detail::half_unit_phase(2LL * pk * (l - half), n);
        out.kernel(l, g.wrap(l - static_cast<int>(px))) = sym * mod / g.h;
    }
    return out;
}

/// Singular values of h K, sorted nonincreasing.
inline SingularSpectrum singular_values(const OperatorMatrix& T) {
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(T.kernel);
    if (svd.info() != Eigen::Success) {
        throw std::runtime_error("singular_values: SVD did not converge");
    }
    return T.grid.h * svd.singularValues();
}

/// ell^p norm of a nonincreasing singular value vector; p = inf gives s_1.
inline double schatten_norm(const SingularSpectrum& s, double p) {
    if (!(p >= 1.0)) {
        throw std::invalid_argument("schatten_norm: p must be >= 1");
    }
    if (s.size() == 0) return 0.0;
    const double top = s(0);
    if (p == kInf || top == 0.0) return top;
    double sum = 0.0;
    for (Eigen::Index i = 0; i < s.size(); ++i) {
        sum += std::pow(s(i) / top, p);
    }
    return top * std::pow(sum, 1.0 / p);
}

inline double schatten_norm(const OperatorMatrix& T, double p) {
    return schatten_norm(singular_values(T), p);
}

/**
 * Lorentz-Schatten quasinorm on the singular values,
 *
 *   (sum_n n^{q/p-1} s_n^q)^{1/q},   q = inf: sup_n n^{1/p} s_n,
 *
 * with n counted from 1. For q = p this collapses to the Schatten p-norm.
 */
inline double lorentz_schatten_norm(const SingularSpectrum& s, double p,
                                    double q) {
    if (!(p >= 1.0) || p == kInf || !(q >= 1.0)) {
        throw std::invalid_argument("lorentz_schatten_norm: exponents");
    }
    if (q == kInf) {
        double sup = 0.0;
        for (Eigen::Index i = 0; i < s.size(); ++i) {
            sup = std::max(sup, std::pow(double(i + 1), 1.0 / p) * s(i));
        }
        return sup;
    }
    double sum = 0.0;
    for (Eigen::Index i = 0; i < s.size(); ++i) {
        sum += std::pow(double(i + 1), q / p - 1.0) * std::pow(s(i), q);
    }
    return std::pow(sum, 1.0 / q);
}

inline double lorentz_schatten_norm(const OperatorMatrix& T, double p,
                                    double q) {
    return lorentz_schatten_norm(singular_values(T), p, q);
}

/**
 * Eigenvalues of a self-adjoint operator, ascending. The kernel must be
 * self-adjoint to within 1e-8 in the max entry norm; it is then Hermitian
 * symmetrized before the solve, so roundoff asymmetry cannot leak in.
 */
inline Eigen::VectorXd eigenvalues(const OperatorMatrix& T) {
    const double dev = (T.kernel - T.kernel.adjoint()).cwiseAbs().maxCoeff();
    if (!(dev < 1e-8)) {
        throw std::invalid_argument("eigenvalues: kernel is not self-adjoint");
    }
    const Eigen::MatrixXcd H = 0.5 * (T.kernel + T.kernel.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
        H, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigenvalues: solver did not converge");
    }
    return T.grid.h * solver.eigenvalues();
}

namespace detail {

/**
 * Spreading table of an operator: row x_a of F(x, xi) is one centered DFT
 * of the shifted kernel diagonal,
 *
 *   F(x, xi) = e^{-pi i x xi} h sum_s K(s + x, s) e^{-2 pi i xi s},
 *
 * with s + x wrapped circularly.
 */
inline PhaseFunction spreading_of_kernel(const OperatorMatrix& T) {
    const int n = T.grid.n;
    const int half = n / 2;
    const double h = T.grid.h;
    PhaseFunction F{PhaseGrid(T.grid)};
    parallel_for(static_cast<std::size_t>(n), [&](std::size_t row) {
        const int a = static_cast<int>(row);
        std::vector<cplx> buf(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) {
            buf[j] = T.kernel(T.grid.wrap(j + (a - half)), j);
        }
        centered_forward(buf.data(), n);
        for (int k = 0; k < n; ++k) {
            const cplx sym = half_unit_phase(
                -static_cast<long long>(a - half) * (k - half), n);
            F.values(a, k) = h * sym * buf[k];
        }
    });
    return F;
}

/**
 * Kernel synthesized from a spreading table,
 *
 *   K(t, s) = dxi sum_xi F(x, xi) e^{pi i xi (x + 2s)},  x = (t - s) wrapped,
 *
 * which makes the result exactly the shift superposition
 * h dxi sum_z F(z) rho(z); the phase rides on the circular representative
 * of t - s, so wrapped entries stay consistent with the shifts. The
 * half-integer modulation is resolved by one zero-padded length-2n backward
 * FFT per row of F: with w = (a - n/2) + 2j - n,
 *
 *   K(t_p, s_j) = dxi i^{-w} Z_a[w mod 2n],  Z_a[m] = sum_k F(a,k) e^{i pi k m / n}.
 */
inline OperatorMatrix kernel_from_spreading(const PhaseFunction& F) {
    const int n = F.grid.n();
    const int half = n / 2;
    const double dxi = F.grid.xi.h;
    Eigen::MatrixXcd Z(n, 2 * n);
    parallel_for(static_cast<std::size_t>(n), [&](std::size_t row) {
        const int a = static_cast<int>(row);
        std::vector<cplx> buf(static_cast<size_t>(2 * n), cplx(0.0));
        for (int k = 0; k < n; ++k) buf[k] = F.values(a, k);
        FftEngine::instance().transform(buf.data(), 2 * n, FFTW_BACKWARD);
        for (int m = 0; m < 2 * n; ++m) Z(a, m) = buf[m];
    });
    static const cplx inv_i_pow[4] = {
        {1.0, 0.0}, {0.0, -1.0}, {-1.0, 0.0}, {0.0, 1.0}};
    OperatorMatrix out = OperatorMatrix::zero(F.grid.x);
    parallel_for(static_cast<std::size_t>(n), [&](std::size_t row) {
        const int p = static_cast<int>(row);
        for (int j = 0; j < n; ++j) {
            const int a = F.grid.x.wrap(p - j + half);
            const int w = (a - half) + 2 * j - n;
            const int m = ((w % (2 * n)) + 2 * n) % (2 * n);
            out.kernel(p, j) = dxi * inv_i_pow[((w % 4) + 4) % 4] * Z(a, m);
        }
    });
    return out;
}

}  // namespace detail

/// Weyl quantization: the operator whose Weyl symbol is a, assembled from
/// the spreading function F = F_sigma(a).
inline OperatorMatrix weyl_quantize(const PhaseFunction& a) {
    return detail::kernel_from_spreading(symplectic_ft(a));
}

/// Weyl symbol of an operator: the symplectic Fourier transform of its
/// spreading table. Inverse of weyl_quantize on the lattice.
inline PhaseFunction weyl_symbol(const OperatorMatrix& T) {
    return symplectic_ft(detail::spreading_of_kernel(T));
}

/// Random unit vector in the span of the first `modes` Hermite functions.
inline GridFunction hermite_span_sample(const LineGrid& g, int modes,
                                        detail::Rng& rng) {
    if (modes < 1) {
        throw std::invalid_argument("hermite_span_sample: modes < 1");
    }
    GridFunction f(g);
    f.values.setZero();
    for (int k = 0; k < modes; ++k) {
        f.values += rng.cnormal() * hermite(g, k).values;
    }
    f.values /= norm_l2(f);
    return f;
}

/**
 * Deterministic trace-class ensemble member sum_k c_k u_k (x) v_k with
 * random Hermite-span unit vectors and |c_k| = e^{-decay k}; the phases of
 * the c_k are random. Reproducible from the seed.
 */
inline OperatorMatrix random_trace_class(const LineGrid& g,
                                         std::uint64_t seed, double decay,
                                         int terms = 8, int modes = 8) {
    if (!(decay > 0.0)) {
        throw std::invalid_argument("random_trace_class: decay must be > 0");
    }
    detail::Rng rng(seed);
    OperatorMatrix T = OperatorMatrix::zero(g);
    for (int k = 0; k < terms; ++k) {
        GridFunction u = hermite_span_sample(g, modes, rng);
        GridFunction v = hermite_span_sample(g, modes, rng);
        const cplx c = std::exp(-decay * k) *
                       std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform());
        T.kernel += c * (u.values * v.values.adjoint());
    }
    return T;
}

}  // namespace qha
