#include "dirac1d/matrix_potential.hpp"

#include <cmath>
#include <stdexcept>

namespace dirac1d {

bool MatrixPotential::is_zero(double tol) const {
    return max_abs() <= tol;
}

double MatrixPotential::max_abs() const {
    double m = 0.0;
    for (std::size_t i = 0; i < grid.N; ++i) {
        m = std::max(m, std::abs(v11[i]));
        m = std::max(m, std::abs(v22[i]));
        m = std::max(m, std::abs(v12[i]));
    }
    return m;
}

double MatrixPotential::decay_constant() const {
    double c = 0.0;
    for (std::size_t i = 0; i < grid.N; ++i) {
        const double x = grid.node(i);
        const double w = std::pow(1.0 + x * x, decay_rate / 2.0);
        const double e = std::abs(v11[i]) + std::abs(v22[i]) + std::abs(v12[i]) +
                         std::abs(d12[i]);
        c = std::max(c, e * w);
    }
    return c;
}

SpinorField MatrixPotential::apply(const SpinorField& f) const {
    require_same_grid(grid, f.grid, "MatrixPotential::apply");
    SpinorField out(grid);
    for (std::size_t i = 0; i < grid.N; ++i) {
        out.up[i] = v11[i] * f.up[i] + v12[i] * f.down[i];
        out.down[i] = std::conj(v12[i]) * f.up[i] + v22[i] * f.down[i];
    }
    return out;
}

void MatrixPotential::validate() const {
    if (v11.size() != grid.N || v22.size() != grid.N || v12.size() != grid.N ||
        d12.size() != grid.N)
        throw std::invalid_argument("MatrixPotential: entry arrays must match grid");
    if (!(decay_rate > 5.0))
        throw std::invalid_argument("MatrixPotential: decay rate must exceed 5");
    for (std::size_t i = 0; i < grid.N; ++i) {
        if (!std::isfinite(v11[i]) || !std::isfinite(v22[i]) ||
            !std::isfinite(v12[i].real()) || !std::isfinite(v12[i].imag()))
            throw std::invalid_argument("MatrixPotential: non-finite entry");
    }
    if (!std::isfinite(decay_constant()))
        throw std::invalid_argument("MatrixPotential: decay constant not finite");
}

MatrixPotential make_potential(const Grid& g,
                               const std::function<double(double)>& f11,
                               const std::function<double(double)>& f22,
                               const std::function<cplx(double)>& f12,
                               const std::function<cplx(double)>& df12,
                               double decay_rate) {
    MatrixPotential V(g);
    V.decay_rate = decay_rate;
    for (std::size_t i = 0; i < g.N; ++i) {
        const double x = g.node(i);
        V.v11[i] = f11(x);
        V.v22[i] = f22(x);
        V.v12[i] = f12(x);
        V.d12[i] = df12(x);
    }
    V.validate();
    return V;
}

MatrixPotential zero_potential(const Grid& g) { return MatrixPotential(g); }

} // namespace dirac1d
