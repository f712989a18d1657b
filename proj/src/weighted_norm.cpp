#include "dirac1d/weighted_norm.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace dirac1d {

SpinorField apply_weight(const SpinorField& f, double tau) {
    SpinorField out = f;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double x = f.grid.node(i);
        const double w = std::pow(1.0 + x * x, tau / 2.0);
        out.up[i] *= w;
        out.down[i] *= w;
    }
    return out;
}

double weighted_norm(const SpinorField& f, const WeightSpec& w) {
    if (!(w.s == 0 || w.s == 1))
        throw std::invalid_argument("weighted_norm: s must be 0 or 1");
    if (!std::isfinite(w.sigma))
        throw std::invalid_argument("weighted_norm: sigma must be finite");
    if (!f.all_finite())
        throw std::invalid_argument("weighted_norm: non-finite field");

    SpinorField g = f;
    if (w.s == 1) {
        // <grad>^1 as Fourier multiplier (1 + k^2)^{1/2}
        std::vector<double> mult(f.grid.N);
        for (std::size_t j = 0; j < f.grid.N; ++j) {
            const double k = f.grid.wavenumber(j);
            mult[j] = std::sqrt(1.0 + k * k);
        }
        g.up = apply_fourier_multiplier(f.grid, f.up, mult);
        g.down = apply_fourier_multiplier(f.grid, f.down, mult);
    }
    // weighted L2 with quadrature weight h; for s=0 and sigma=0 this is
    // exactly sqrt(<f,f>)
    std::vector<double> terms(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double x = f.grid.node(i);
        const double ww = std::pow(1.0 + x * x, w.sigma);
        terms[i] = ww * (std::norm(g.up[i]) + std::norm(g.down[i]));
    }
    return std::sqrt(f.grid.h * pairwise_sum(terms));
}

SpinorField seeded_field(const Grid& g, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> dist(0.0, 1.0);
    SpinorField f(g);
    for (std::size_t i = 0; i < g.N; ++i) {
        f.up[i] = cplx(dist(rng), dist(rng));
        f.down[i] = cplx(dist(rng), dist(rng));
    }
    return f;
}

OperatorNormResult weighted_operator_norm(const LinearOperator& A, double sigma,
                                          const Grid& g, double tol, int max_iter) {
    // B = W_{-sigma} A W_{-sigma}; power iteration on B*B
    auto applyB = [&](const SpinorField& f) {
        return apply_weight(A.apply(apply_weight(f, -sigma)), -sigma);
    };
    auto applyBadj = [&](const SpinorField& f) {
        return apply_weight(A.apply_adjoint(apply_weight(f, -sigma)), -sigma);
    };

    SpinorField v = seeded_field(g, 0x5eedu);
    double nv = l2_norm(v);
    if (nv == 0.0) return {0.0, true, 0};
    v *= cplx(1.0 / nv);

    OperatorNormResult res;
    double prev = -1.0;
    for (int it = 1; it <= max_iter; ++it) {
        SpinorField bv = applyB(v);
        const double nbv = l2_norm(bv);
        res.value = nbv;  // Rayleigh estimate of sigma_max
        res.iterations = it;
        if (nbv == 0.0) {
            res.converged = true;
            return res;
        }
        if (prev >= 0.0 && std::abs(nbv - prev) <= tol * std::max(nbv, 1e-300)) {
            res.converged = true;
            return res;
        }
        prev = nbv;
        SpinorField w = applyBadj(bv);
        const double nw = l2_norm(w);
        if (nw == 0.0) {
            res.converged = true;
            return res;
        }
        w *= cplx(1.0 / nw);
        v = std::move(w);
    }
    res.converged = false;  // report last iterate
    return res;
}

} // namespace dirac1d
