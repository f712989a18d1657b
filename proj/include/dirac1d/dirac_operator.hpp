#ifndef DIRAC1D_DIRAC_OPERATOR_HPP
#define DIRAC1D_DIRAC_OPERATOR_HPP

#include <array>

#include "dirac1d/matrix_potential.hpp"
#include "dirac1d/spinor_field.hpp"

namespace dirac1d {

// alpha = diag(-1, 1), beta = offdiag(1, 1); alpha^2 = beta^2 = I and
// alpha*beta + beta*alpha = 0.
inline constexpr std::array<std::array<double, 2>, 2> alpha_matrix{{{-1.0, 0.0}, {0.0, 1.0}}};
inline constexpr std::array<std::array<double, 2>, 2> beta_matrix{{{0.0, 1.0}, {1.0, 0.0}}};

// i*alpha*f' + m*beta*f + V*f with spectral differentiation.
SpinorField apply_dirac(const SpinorField& f, const MatrixPotential& V, double m);

// Free operator (V = 0).
SpinorField apply_free_dirac(const SpinorField& f, double m);

} // namespace dirac1d

#endif
