#ifndef DIRAC1D_WEIGHTED_NORM_HPP
#define DIRAC1D_WEIGHTED_NORM_HPP

#include <functional>

#include "dirac1d/spinor_field.hpp"

namespace dirac1d {

// Weighted Sobolev norm spec: || <x>^sigma <grad>^s f ||_{L^2}, s in {0,1}.
struct WeightSpec {
    double sigma = 0.0;
    int s = 0;
};

double weighted_norm(const SpinorField& f, const WeightSpec& w);

// Multiplication by <x>^tau.
SpinorField apply_weight(const SpinorField& f, double tau);

// A linear map on spinor fields together with its adjoint (needed for
// operator-norm estimation via the adjoint-square power iteration).
struct LinearOperator {
    std::function<SpinorField(const SpinorField&)> apply;
    std::function<SpinorField(const SpinorField&)> apply_adjoint;
};

struct OperatorNormResult {
    double value = 0.0;
    bool converged = false;
    int iterations = 0;
};

// Estimates ||A||_{L^2_sigma -> L^2_{-sigma}} = || W_{-sigma} A W_{-sigma} ||
// by power iteration on B*B, Rayleigh-quotient relative tolerance `tol`.
OperatorNormResult weighted_operator_norm(const LinearOperator& A, double sigma,
                                          const Grid& g, double tol = 1e-6,
                                          int max_iter = 500);

// Deterministic pseudo-random smooth-ish start field used by the iteration.
SpinorField seeded_field(const Grid& g, unsigned seed);

} // namespace dirac1d

#endif
