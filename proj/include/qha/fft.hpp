#pragma once

#include <fftw3.h>

#include <complex>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qha::detail {

/**
 * Thin process-wide cache of FFTW plans, one per (length, sign). Plans are
 * created with FFTW_UNALIGNED so they can execute on any caller buffer, and
 * creation is serialized because the FFTW planner is not thread safe.
 * fftw_execute_dft itself is safe to call concurrently on distinct buffers.
 */
class FftEngine {
public:
    static FftEngine& instance() {
        static FftEngine engine;
        return engine;
    }

    /// In-place unnormalized DFT of length n; sign is FFTW_FORWARD or
    /// FFTW_BACKWARD.
    void transform(std::complex<double>* data, int n, int sign) {
        fftw_complex* buf = reinterpret_cast<fftw_complex*>(data);
        fftw_execute_dft(plan(n, sign), buf, buf);
    }

    FftEngine(const FftEngine&) = delete;
    FftEngine& operator=(const FftEngine&) = delete;

private:
    FftEngine() = default;

    ~FftEngine() {
        for (auto& [key, p] : plans_) fftw_destroy_plan(p);
    }

    fftw_plan plan(int n, int sign) {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = plans_.find({n, sign});
        if (it != plans_.end()) return it->second;
        std::vector<std::complex<double>> scratch(static_cast<size_t>(n));
        fftw_complex* buf = reinterpret_cast<fftw_complex*>(scratch.data());
        fftw_plan p = fftw_plan_dft_1d(n, buf, buf, sign,
                                       FFTW_ESTIMATE | FFTW_UNALIGNED);
        if (p == nullptr) {
            throw std::runtime_error("FftEngine: fftw_plan_dft_1d failed");
        }
        plans_.emplace(std::make_pair(n, sign), p);
        return p;
    }

    std::mutex mutex_;
    std::map<std::pair<int, int>, fftw_plan> plans_;
};

/**
 * Centered DFT pair for even n on the index convention t_l = (l - n/2) h,
 * xi_k = (k - n/2) / (n h). With P = (-1)^{n/2}:
 *
 *   forward:  V_k = sum_l v_l e^{-2 pi i (l-n/2)(k-n/2)/n}
 *                 = P (-1)^k FFT[(-1)^l v_l]_k
 *   inverse:  n v_l = P (-1)^l IFFT_unnorm[(-1)^k V_k]_l
 *
 * so inverse(forward(v)) = n v exactly in exact arithmetic. Quadrature
 * weights (h, 1/(n h)) are applied by callers.
 */
inline void centered_forward(std::complex<double>* v, int n) {
    const double parity = (n / 2) % 2 == 0 ? 1.0 : -1.0;
    for (int l = 1; l < n; l += 2) v[l] = -v[l];
    FftEngine::instance().transform(v, n, FFTW_FORWARD);
    for (int k = 0; k < n; ++k) v[k] *= (k % 2 == 0 ? parity : -parity);
}

/// Unnormalized inverse of centered_forward; composition scales by n.
inline void centered_inverse_unnorm(std::complex<double>* v, int n) {
    const double parity = (n / 2) % 2 == 0 ? 1.0 : -1.0;
    for (int k = 1; k < n; k += 2) v[k] = -v[k];
    FftEngine::instance().transform(v, n, FFTW_BACKWARD);
    for (int l = 0; l < n; ++l) v[l] *= (l % 2 == 0 ? parity : -parity);
}

}  // namespace qha::detail
