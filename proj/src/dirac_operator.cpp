#include "dirac1d/dirac_operator.hpp"

#include <stdexcept>

namespace dirac1d {

SpinorField apply_free_dirac(const SpinorField& f, double m) {
    if (!(m > 0.0)) throw std::invalid_argument("apply_dirac: mass must be positive");
    const Grid& g = f.grid;
    SpinorField out(g);
    // i*alpha*d/dx with alpha = diag(-1, 1)
    const auto du = spectral_derivative(g, f.up);
    const auto dd = spectral_derivative(g, f.down);
    for (std::size_t i = 0; i < g.N; ++i) {
        out.up[i] = cplx(0.0, -1.0) * du[i] + m * f.down[i];
        out.down[i] = cplx(0.0, 1.0) * dd[i] + m * f.up[i];
    }
    return out;
}

SpinorField apply_dirac(const SpinorField& f, const MatrixPotential& V, double m) {
    require_same_grid(f.grid, V.grid, "apply_dirac");
    SpinorField out = apply_free_dirac(f, m);
    for (std::size_t i = 0; i < f.size(); ++i) {
        out.up[i] += V.v11[i] * f.up[i] + V.v12[i] * f.down[i];
        out.down[i] += std::conj(V.v12[i]) * f.up[i] + V.v22[i] * f.down[i];
    }
    return out;
}

} // namespace dirac1d
