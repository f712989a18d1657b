#ifndef DIRAC1D_MATRIX_POTENTIAL_HPP
#define DIRAC1D_MATRIX_POTENTIAL_HPP

#include <complex>
#include <functional>
#include <vector>

#include "dirac1d/grid.hpp"
#include "dirac1d/spinor_field.hpp"

namespace dirac1d {

// Hermitian 2x2 matrix potential sampled on a grid. The (2,1) entry is
// implicit (conjugate of v12). d12 carries the analytic derivative of the
// off-diagonal entry, used by the squared-operator reduction and by the
// decay check, so no numerical differentiation of the potential is needed.
struct MatrixPotential {
    Grid grid;
    std::vector<double> v11;
    std::vector<double> v22;
    std::vector<cplx> v12;
    std::vector<cplx> d12;       // d/dx of v12
    double decay_rate = 6.0;     // beta in the <x>^-beta bound, must be > 5

    MatrixPotential() = default;
    explicit MatrixPotential(const Grid& g)
        : grid(g), v11(g.N, 0.0), v22(g.N, 0.0), v12(g.N, cplx(0.0)),
          d12(g.N, cplx(0.0)) {}

    bool is_zero(double tol = 0.0) const;
    // max over nodes of entry magnitudes
    double max_abs() const;
    // sampled decay constant: max over nodes of |entries| * <x>^beta
    double decay_constant() const;

    // pointwise application V(x_i) * f(x_i)
    SpinorField apply(const SpinorField& f) const;

    void validate() const;  // throws on non-Hermitian data or beta <= 5
};

// Hermitian potential from closed-form entry functions (with analytic v12').
MatrixPotential make_potential(const Grid& g,
                               const std::function<double(double)>& f11,
                               const std::function<double(double)>& f22,
                               const std::function<cplx(double)>& f12,
                               const std::function<cplx(double)>& df12,
                               double decay_rate = 6.0);

MatrixPotential zero_potential(const Grid& g);

} // namespace dirac1d

#endif
