#include "dirac1d/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>

namespace dirac1d {

namespace {

// One estimate-mode plan pair per size, created lazily. FFTW_UNALIGNED lets
// the plan run on any std::vector buffer via the new-array interface.
struct PlanPair {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
};

std::map<std::size_t, PlanPair>& plan_cache() {
    static std::map<std::size_t, PlanPair> cache;
    return cache;
}

std::mutex& plan_mutex() {
    static std::mutex m;
    return m;
}

PlanPair get_plans(std::size_t n) {
    std::lock_guard<std::mutex> lock(plan_mutex());
    auto& cache = plan_cache();
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<cplx> tmp(n);
    auto* p = reinterpret_cast<fftw_complex*>(tmp.data());
    PlanPair pp;
    pp.fwd = fftw_plan_dft_1d(static_cast<int>(n), p, p, FFTW_FORWARD,
                              FFTW_ESTIMATE | FFTW_UNALIGNED);
    pp.bwd = fftw_plan_dft_1d(static_cast<int>(n), p, p, FFTW_BACKWARD,
                              FFTW_ESTIMATE | FFTW_UNALIGNED);
    cache[n] = pp;
    return pp;
}

} // namespace

void fft_forward(std::vector<cplx>& data) {
    if (data.empty()) return;
    auto plans = get_plans(data.size());
    auto* p = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(plans.fwd, p, p);
}

void fft_backward(std::vector<cplx>& data) {
    if (data.empty()) return;
    auto plans = get_plans(data.size());
    auto* p = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(plans.bwd, p, p);
    const double inv = 1.0 / static_cast<double>(data.size());
    for (auto& z : data) z *= inv;
}

std::vector<double> wavenumbers(const Grid& g) {
    std::vector<double> k(g.N);
    for (std::size_t j = 0; j < g.N; ++j) k[j] = g.wavenumber(j);
    return k;
}

std::vector<cplx> spectral_derivative(const Grid& g, const std::vector<cplx>& f) {
    if (f.size() != g.N) throw std::invalid_argument("spectral_derivative: size mismatch");
    std::vector<cplx> out = f;
    fft_forward(out);
    for (std::size_t j = 0; j < g.N; ++j) {
        if (j == g.N / 2) {
            out[j] = 0.0;  // Nyquist: keep the operator antisymmetric
        } else {
            out[j] *= cplx(0.0, g.wavenumber(j));
        }
    }
    fft_backward(out);
    return out;
}

std::vector<cplx> apply_fourier_multiplier(const Grid& g, const std::vector<cplx>& f,
                                           const std::vector<double>& mult) {
    if (f.size() != g.N || mult.size() != g.N)
        throw std::invalid_argument("apply_fourier_multiplier: size mismatch");
    std::vector<cplx> out = f;
    fft_forward(out);
    for (std::size_t j = 0; j < g.N; ++j) out[j] *= mult[j];
    fft_backward(out);
    return out;
}

} // namespace dirac1d
