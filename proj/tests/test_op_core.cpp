#include "qha/op_core.hpp"

#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

using namespace qha;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

const double pi = std::numbers::pi;

/// Dilated Gaussian eps^{-2} e^{-pi |z|^2 / eps^2} sampled on the lattice.
PhaseFunction gamma_table(const PhaseGrid& pg, double eps2) {
    return PhaseFunction::sample(pg, [eps2](double x, double xi) {
        return std::exp(-pi * (x * x + xi * xi) / eps2) / eps2;
    });
}

/// Eigenvalue of the quantized dilated Gaussian on the k-th Hermite mode.
double ladder_eigenvalue(double eps2, int k) {
    return std::pow(eps2 - 0.5, k) / std::pow(eps2 + 0.5, k + 1);
}

double max_kernel_diff(const OperatorMatrix& A, const OperatorMatrix& B) {
    return (A.kernel - B.kernel).cwiseAbs().maxCoeff();
}

Eigen::MatrixXcd random_unitary(int n, std::uint64_t seed) {
    detail::Rng rng(seed);
    Eigen::MatrixXcd A(n, n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) A(r, c) = rng.cnormal();
    }
    return Eigen::HouseholderQR<Eigen::MatrixXcd>(A).householderQ();
}

}  // namespace

TEST_CASE("rank one operators act, pair, and decompose as expected") {
    LineGrid g = qha::test::small_grid();
    GridFunction f = qha::test::random_hermite_span(g, 5, 201);
    GridFunction w = qha::test::random_hermite_span(g, 5, 202);
    OperatorMatrix T = rank_one(f, w);
    GridFunction u = qha::test::random_hermite_span(g, 5, 203);
    GridFunction Tu = apply(T, u);
    const cplx coeff = inner_product(u, w);
    CHECK_THAT((Tu.values - coeff * f.values).cwiseAbs().maxCoeff(),
               WithinAbs(0.0, 1e-12));
    CHECK_THAT(std::abs(trace(T) - inner_product(f, w)),
               WithinAbs(0.0, 1e-12));
    SingularSpectrum s = singular_values(T);
    CHECK_THAT(s(0), WithinAbs(norm_l2(f) * norm_l2(w), 1e-10));
    CHECK(s(1) < 1e-10 * s(0));
    GridFunction phi = gaussian_window(g);
    CHECK_THAT(schatten_norm(rank_one(phi, phi), 1.0), WithinAbs(1.0, 1e-8));
    GridFunction other(qha::test::default_grid());
    CHECK_THROWS_AS(rank_one(f, other), std::invalid_argument);
}

TEST_CASE("adjoint pairing and trace symmetry of compositions") {
    LineGrid g = qha::test::small_grid();
    OperatorMatrix T = random_trace_class(g, 301, 0.4);
    OperatorMatrix S = random_trace_class(g, 302, 0.4);
    GridFunction f = qha::test::random_hermite_span(g, 6, 303);
    GridFunction w = qha::test::random_hermite_span(g, 6, 304);
    CHECK_THAT(std::abs(inner_product(apply(T, f), w) -
                        inner_product(f, apply(adjoint(T), w))),
               WithinAbs(0.0, 1e-12));
    CHECK_THAT(std::abs(trace(compose(S, T)) - trace(compose(T, S))),
               WithinAbs(0.0, 1e-10));
    CHECK(max_kernel_diff(adjoint(adjoint(T)), T) == 0.0);
    CHECK_THAT(std::abs(trace(identity_operator(g)) - double(g.n)),
               WithinAbs(0.0, 1e-9));
    SingularSpectrum sT = singular_values(T);
    SingularSpectrum sTa = singular_values(adjoint(T));
    CHECK((sT - sTa).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("parity conjugation is an exact kernel symmetry") {
    LineGrid g = qha::test::small_grid();
    GridFunction f = qha::test::random_hermite_span(g, 5, 401);
    GridFunction w = qha::test::random_hermite_span(g, 5, 402);
    OperatorMatrix P = parity_operator(g);
    OperatorMatrix lhs = parity_conjugate(rank_one(f, w));
    OperatorMatrix rhs = rank_one(apply(P, f), apply(P, w));
    CHECK(max_kernel_diff(lhs, rhs) < 1e-12);
    OperatorMatrix T = random_trace_class(g, 403, 0.5);
    CHECK(max_kernel_diff(parity_conjugate(parity_conjugate(T)), T) == 0.0);
    CHECK(max_kernel_diff(parity_conjugate(T),
                          compose(P, compose(T, P))) < 1e-10);
    SingularSpectrum s = singular_values(T);
    SingularSpectrum sp = singular_values(parity_conjugate(T));
    CHECK((s - sp).cwiseAbs().maxCoeff() < 1e-10);
    for (double p : {1.0, 2.0, kInf}) {
        CHECK_THAT(schatten_norm(parity_conjugate(T), p),
                   WithinAbs(schatten_norm(T, p), 1e-10));
    }
}

TEST_CASE("shift operator matrices replicate the vector shifts") {
    LineGrid g = qha::test::small_grid();
    GridFunction f = qha::test::random_hermite_span(g, 6, 501);
    OperatorMatrix P = parity_operator(g);
    detail::Rng rng(502);
    for (int trial = 0; trial < 10; ++trial) {
        LatticePoint z{rng.uniform_int(1, g.n - 1), rng.uniform_int(1, g.n - 1)};
        OperatorMatrix R = shift_operator(g, z);
        GridFunction via_matrix = apply(R, f);
        GridFunction via_shift = tf_shift(f, z);
        CHECK((via_matrix.values - via_shift.values).cwiseAbs().maxCoeff() <
              1e-12);
        LatticePoint neg{g.n - z.ix, g.n - z.ik};
        OperatorMatrix lhs = shift_operator(g, neg);
        OperatorMatrix rhs = compose(P, compose(R, P));
        CHECK(max_kernel_diff(lhs, rhs) < 1e-10);
    }
}

TEST_CASE("singular values recover a prescribed spectrum") {
    LineGrid g = qha::test::small_grid();
    CHECK(singular_values(OperatorMatrix::zero(g)).cwiseAbs().maxCoeff() ==
          0.0);
    Eigen::VectorXd d(g.n);
    for (int i = 0; i < g.n; ++i) d(i) = std::exp(-0.11 * i);
    Eigen::MatrixXcd U = random_unitary(g.n, 601);
    Eigen::MatrixXcd V = random_unitary(g.n, 602);
    OperatorMatrix T(g, U * d.asDiagonal() * V.adjoint() / g.h);
    SingularSpectrum s = singular_values(T);
    CHECK((s - d).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("schatten norms follow the singular values") {
    LineGrid g = qha::test::small_grid();
    OperatorMatrix T = random_trace_class(g, 701, 0.3);
    CHECK_THROWS_AS(schatten_norm(T, 0.5), std::invalid_argument);
    CHECK_THAT(schatten_norm(T, 2.0),
               WithinAbs((g.h * T.kernel).norm(), 1e-12));
    SingularSpectrum s = singular_values(T);
    CHECK_THAT(schatten_norm(s, kInf), WithinAbs(s(0), 1e-15));
    double prev = schatten_norm(s, 1.0);
    for (double p : {1.5, 2.0, 3.0, 6.0, kInf}) {
        const double cur = schatten_norm(s, p);
        CHECK(cur <= prev * (1.0 + 1e-12));
        prev = cur;
    }
}

TEST_CASE("lorentz schatten norms implement the weighted counting sums") {
    LineGrid g = qha::test::small_grid();
    Eigen::MatrixXcd K = Eigen::MatrixXcd::Zero(g.n, g.n);
    K(0, 0) = 3.0 / g.h;
    K(1, 1) = 1.0 / g.h;
    OperatorMatrix T(g, K);
    CHECK_THAT(lorentz_schatten_norm(T, 1.0, kInf), WithinAbs(3.0, 1e-12));
    OperatorMatrix R = random_trace_class(g, 801, 0.3);
    SingularSpectrum s = singular_values(R);
    for (double p : {1.0, 2.0, 4.0}) {
        CHECK_THAT(lorentz_schatten_norm(s, p, p),
                   WithinAbs(schatten_norm(s, p), 1e-12));
    }
    GridFunction phi = gaussian_window(g);
    OperatorMatrix proj = rank_one(phi, phi);
    for (double p : {1.0, 1.5, 3.0}) {
        CHECK_THAT(lorentz_schatten_norm(proj, p, kInf),
                   WithinAbs(1.0, 1e-8));
    }
    CHECK_THROWS_AS(lorentz_schatten_norm(s, kInf, 2.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(lorentz_schatten_norm(s, 0.5, 2.0),
                    std::invalid_argument);
}

TEST_CASE("eigenvalues require self-adjointness and sum to the trace") {
    LineGrid g = qha::test::small_grid();
    OperatorMatrix T = random_trace_class(g, 901, 0.5);
    CHECK_THROWS_AS(eigenvalues(T), std::invalid_argument);
    OperatorMatrix H(g, 0.5 * (T.kernel + T.kernel.adjoint()));
    Eigen::VectorXd ev = eigenvalues(H);
    CHECK_THAT(ev.sum(), WithinAbs(trace(H).real(), 1e-8));
    CHECK(std::is_sorted(ev.data(), ev.data() + ev.size()));
}

TEST_CASE("weyl quantization of the gaussian wigner table") {
    LineGrid g = qha::test::default_grid();
    PhaseGrid pg(g);
    PhaseFunction a = PhaseFunction::sample(pg, [](double x, double xi) {
        return 2.0 * std::exp(-2.0 * pi * (x * x + xi * xi));
    });
    GridFunction phi = gaussian_window(g);
    OperatorMatrix proj = rank_one(phi, phi);
    CHECK(max_kernel_diff(weyl_quantize(a), proj) < 1e-6);
    PhaseFunction sym = weyl_symbol(proj);
    CHECK((sym.values - a.values).cwiseAbs().maxCoeff() < 1e-6);
}

TEST_CASE("weyl symbol of a rank one operator is the cross wigner table") {
    LineGrid g = qha::test::default_grid();
    GridFunction f = qha::test::random_hermite_span(g, 5, 1001);
    GridFunction w = qha::test::random_hermite_span(g, 5, 1002);
    PhaseFunction sym = weyl_symbol(rank_one(f, w));
    PhaseFunction W = wigner(f, w);
    CHECK((sym.values - W.values).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("weyl symbol and quantization invert each other") {
    LineGrid g = qha::test::default_grid();
    OperatorMatrix T = random_trace_class(g, 1101, 0.4);
    OperatorMatrix back = weyl_quantize(weyl_symbol(T));
    CHECK(max_kernel_diff(back, T) < 1e-9);
    PhaseGrid pg(g);
    PhaseFunction a = qha::test::pseudo_random_table(pg, 1102);
    PhaseFunction sym = weyl_symbol(weyl_quantize(a));
    CHECK((sym.values - a.values).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("quantization pairs with the cross wigner table") {
    LineGrid g = qha::test::default_grid();
    PhaseGrid pg(g);
    PhaseFunction a = PhaseFunction::sample(pg, [](double x, double xi) {
        return std::exp(-pi * 0.7 * (x * x + xi * xi)) *
               (1.0 + 0.3 * std::sin(x) * std::cos(xi));
    });
    OperatorMatrix L = weyl_quantize(a);
    for (int trial = 0; trial < 4; ++trial) {
        GridFunction f = qha::test::random_hermite_span(g, 5, 1200 + trial);
        GridFunction w = qha::test::random_hermite_span(g, 5, 1300 + trial);
        const cplx lhs = inner_product(apply(L, f), w);
        const cplx rhs = phase_inner_product(a, wigner(w, f));
        CHECK_THAT(std::abs(lhs - rhs), WithinAbs(0.0, 1e-8));
    }
}

TEST_CASE("quantized dilated gaussians carry the hermite ladder spectrum") {
    LineGrid g = qha::test::default_grid();
    PhaseGrid pg(g);

    SECTION("boundary case is the gaussian projector") {
        OperatorMatrix L = weyl_quantize(gamma_table(pg, 0.5));
        Eigen::VectorXd ev = eigenvalues(L);
        CHECK_THAT(ev(ev.size() - 1), WithinAbs(1.0, 1e-6));
        CHECK(ev(0) >= -1e-10);
        CHECK(std::abs(ev(ev.size() - 2)) < 1e-6);
        CHECK_THAT(schatten_norm(L, 1.0), WithinAbs(1.0, 1e-6));
    }

    SECTION("positive side has unit trace norm") {
        for (double eps2 : {0.55, 1.0}) {
            OperatorMatrix L = weyl_quantize(gamma_table(pg, eps2));
            CHECK(eigenvalues(L)(0) >= -1e-10);
            CHECK_THAT(schatten_norm(L, 1.0), WithinAbs(1.0, 1e-6));
        }
    }

    SECTION("negative side matches the ladder values") {
        for (double eps2 : {0.3, 0.45}) {
            OperatorMatrix L = weyl_quantize(gamma_table(pg, eps2));
            Eigen::VectorXd ev = eigenvalues(L);
            CHECK(ev(0) < -1e-8);
            CHECK_THAT(ev(0), WithinAbs(ladder_eigenvalue(eps2, 1), 1e-6));
            CHECK_THAT(ev(ev.size() - 1),
                       WithinAbs(ladder_eigenvalue(eps2, 0), 1e-6));
            CHECK_THAT(schatten_norm(L, 1.0),
                       WithinAbs(1.0 / (2.0 * eps2), 1e-5));
            CHECK_THAT(schatten_norm(L, 2.0),
                       WithinAbs(1.0 / std::sqrt(2.0 * eps2), 1e-6));
            CHECK_THAT(trace(L).real(), WithinAbs(1.0, 1e-6));
        }
    }

    SECTION("trace norm lower bound far on the negative side") {
        OperatorMatrix L = weyl_quantize(gamma_table(pg, 0.125));
        CHECK(schatten_norm(L, 1.0) >=
              (1.0 - 1e-6) / std::sqrt(2.0 * 0.125));
        CHECK_THAT(schatten_norm(L, 1.0), WithinAbs(4.0, 1e-4));
    }
}

TEST_CASE("random trace class ensembles are deterministic and decay") {
    LineGrid g = qha::test::small_grid();
    OperatorMatrix A = random_trace_class(g, 1401, 0.7);
    OperatorMatrix B = random_trace_class(g, 1401, 0.7);
    CHECK(max_kernel_diff(A, B) == 0.0);
    double bound = 0.0;
    for (int k = 0; k < 8; ++k) bound += std::exp(-0.7 * k);
    CHECK(schatten_norm(A, 1.0) <= bound + 1e-10);
    OperatorMatrix C = random_trace_class(g, 1402, 20.0);
    SingularSpectrum s = singular_values(C);
    CHECK(s(1) / s(0) < std::exp(-20.0) + 1e-10);
    CHECK_THROWS_AS(random_trace_class(g, 1403, -1.0), std::invalid_argument);
}
