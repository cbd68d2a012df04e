#pragma once

#include "qha/op_core.hpp"
#include "qha/report.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace qha {

/**
 * Fourier transform of an operator: the phase-space table of shift
 * coefficients F(z) = trace(T rho(z)*). Computed row by row from the kernel
 * with one centered DFT per shift offset; unitary from Hilbert-Schmidt
 * operators onto quadrature L^2 of the phase lattice.
 */
inline PhaseFunction fw_transform(const OperatorMatrix& T) {
    return detail::spreading_of_kernel(T);
}

/**
 * Literal trace oracle for fw_transform: builds the matrix of rho(-z)
 * entry by entry (offsets negated without circular reduction) and returns
 * trace(T rho(-z)). Used for cross-validation only.
 */
inline cplx fw_point_oracle(const OperatorMatrix& T, LatticePoint z) {
    const int n = T.grid.n;
    if (z.ix < 0 || z.ix >= n || z.ik < 0 || z.ik >= n) {
        throw std::invalid_argument("fw_point_oracle: point out of range");
    }
    const int half = n / 2;
    const long long px = z.ix - half;
    const long long pk = z.ik - half;
    OperatorMatrix R = OperatorMatrix::zero(T.grid);
    const cplx sym = detail::half_unit_phase(-px * pk, n);
    for (int l = 0; l < n; ++l) {
        const cplx mod = detail::half_unit_phase(-2LL * pk * (l - half), n);
        R.kernel(l, T.grid.wrap(l + static_cast<int>(px))) =
            sym * mod / T.grid.h;
    }
    return trace(compose(T, R));
}

/**
 * Inverse of fw_transform: synthesizes the operator h dxi sum_z F(z) rho(z)
 * whose spreading table is F. Exact two-sided inverse on the lattice.
 */
inline OperatorMatrix fw_inverse(const PhaseFunction& F) {
    return detail::kernel_from_spreading(F);
}

/**
 * Hausdorff-Young style ratio report over an operator ensemble for
 * 1 <= p <= 2 and its conjugate p'. Forward direction compares the Lorentz
 * L^{p',p} norm of the transform with the Schatten p-norm; the reverse
 * direction compares the Schatten p'-norm of the synthesized operator with
 * the Lorentz L^{p,p'} norm of the table. Asserted values: at p = 2 both
 * ratios are exactly 1 (unitarity); at p = 1 the forward ratio obeys
 * sup|F| <= trace norm and the operator norm obeys the plain L^1 bound.
 * The p = 1 forward ratio uses the sup norm directly, since the weighted
 * L^{inf,1} sum is degenerate on a finite atom lattice; the reverse weak
 * ratio at p = 1 is reported without assertion. Other p report finite
 * ratios only, as the comparison constants are not pinned down.
 */
inline ExperimentReport hausdorff_young_report(
    const std::vector<OperatorMatrix>& ensemble, double p) {
    if (ensemble.empty()) {
        throw std::invalid_argument("hausdorff_young_report: empty ensemble");
    }
    if (!(p >= 1.0 && p <= 2.0)) {
        throw std::invalid_argument("hausdorff_young_report: p outside [1,2]");
    }
    const double pc = (p == 1.0) ? kInf : p / (p - 1.0);
    ExperimentReport rep;
    rep.name = "hausdorff_young";
    rep.params["p"] = p;
    rep.params["ensemble_size"] = ensemble.size();
    rep.tolerance = (p == 2.0 || p == 1.0) ? 1e-8 : 0.0;
    bool finite = true;
    for (std::size_t i = 0; i < ensemble.size(); ++i) {
        const OperatorMatrix& T = ensemble[i];
        const PhaseFunction F = fw_transform(T);
        const double forward =
            (p == 1.0) ? function_norm(F, kInf) / schatten_norm(T, 1.0)
                       : lorentz_norm(F, pc, p) / schatten_norm(T, p);
        const OperatorMatrix back = fw_inverse(F);
        double reverse;
        if (p == 1.0) {
            reverse = schatten_norm(back, kInf) / function_norm(F, 1.0);
            rep.add_note("weak_reverse_ratio_" + std::to_string(i),
                         schatten_norm(back, kInf) /
                             lorentz_norm(F, 1.0, kInf));
        } else {
            reverse = schatten_norm(back, pc) / lorentz_norm(F, p, pc);
        }
        rep.ratios.push_back(forward);
        rep.ratios.push_back(reverse);
        finite = finite && std::isfinite(forward) && std::isfinite(reverse);
        if (p == 2.0) {
            rep.add_check("unitary_forward_" + std::to_string(i), forward,
                          std::abs(forward - 1.0) < 1e-8);
            rep.add_check("unitary_reverse_" + std::to_string(i), reverse,
                          std::abs(reverse - 1.0) < 1e-8);
        } else if (p == 1.0) {
            rep.add_check("sup_vs_trace_" + std::to_string(i), forward,
                          forward <= 1.0 + 1e-8);
            rep.add_check("opnorm_vs_l1_" + std::to_string(i), reverse,
                          reverse <= 1.0 + 1e-8);
        }
    }
    if (p != 1.0 && p != 2.0) {
        rep.add_check("ratios_finite", rep.max_ratio(), finite);
    }
    return rep;
}

}  // namespace qha
