#ifndef DIRAC1D_GAUGE_REDUCTION_HPP
#define DIRAC1D_GAUGE_REDUCTION_HPP

#include "dirac1d/dirac_operator.hpp"
#include "dirac1d/matrix_potential.hpp"
#include "dirac1d/spinor_field.hpp"

namespace dirac1d {

// Gauge data of the diagonal-phase reduction: the unimodular matrix C that
// removes the diagonal potential entries, the off-diagonal transformed
// potential (which absorbs the mass term), and the multiplication-only
// potential of the squared (matrix Schrodinger) operator.
struct GaugeData {
    Grid grid;
    std::vector<cplx> c11, c22;          // diag entries of C, |.| = 1
    std::vector<double> phase11, phase22;  // cumulative integrals of V11, V22
    std::vector<cplx> tilde12;           // off-diagonal entry of V-tilde
    std::vector<cplx> tilde12_dx;        // its derivative (product rule, analytic)
    MatrixPotential squared;             // potential of the squared operator

    SpinorField apply_c(const SpinorField& f, bool inverse) const;
};

// C(x) = diag(exp(-i int V11), exp(+i int V22)), cumulative trapezoid from -L.
GaugeData gauge_matrix(const MatrixPotential& V);

// Adds the transformed potential: tilde12 = exp(i int(V11+V22)) (V12 + m),
// with the derivative assembled by the product rule from stored d12.
void build_tilde_potential(GaugeData& gd, const MatrixPotential& V, double m);

// Squared-operator potential: diagonal 2m Re V12 + |V12|^2, off-diagonal
// -+ i tilde12'; multiplication-only and Hermitian.
void build_squared_potential(GaugeData& gd, const MatrixPotential& V, double m);

// One-call assembly of the full reduction.
GaugeData gauge_reduce(const MatrixPotential& V, double m);

// H-tilde = i alpha d/dx + V-tilde (the mass sits inside tilde12).
SpinorField apply_tilde_dirac(const GaugeData& gd, const SpinorField& f);

// Matrix Schrodinger operator -d^2/dx^2 + V_sq, spectral second derivative.
SpinorField apply_matrix_schrodinger(const GaugeData& gd, const SpinorField& f);

// || (Ht-w)(Ht+w) f - (H_sq - (w^2-m^2)) f || / ||f||
double verify_factorization(const MatrixPotential& V, double m, cplx omega,
                            const SpinorField& f);

// || C^{-1} H (C f) - Ht f || / ||f||
double gauge_conjugation_check(const MatrixPotential& V, double m, const SpinorField& f);

} // namespace dirac1d

#endif
