#ifndef DIRAC1D_FREE_DIRAC_HPP
#define DIRAC1D_FREE_DIRAC_HPP

#include <array>
#include <vector>

#include "dirac1d/special_functions.hpp"
#include "dirac1d/spinor_field.hpp"
#include "dirac1d/weighted_norm.hpp"

namespace dirac1d {

using Mat2 = std::array<std::array<cplx, 2>, 2>;

// Spectral parameter of the scalar Schrodinger operator: zeta with the
// boundary-approach side relative to the cut [0, inf).
struct ZetaPoint {
    cplx zeta;
    BranchSide side = BranchSide::interior;

    cplx wavenumber() const;  // sqrt(zeta) on the selected branch
};

// A spectral parameter omega together with the boundary-approach side.
// zeta = omega^2 - m^2; on the continuous spectrum the zeta-approach side
// flips with sign(Re omega) because (omega +- i0)^2 crosses the cut with
// imaginary part of sign(+-omega).
struct SpectralPoint {
    cplx omega;
    BranchSide side = BranchSide::interior;
    double mass = 1.0;

    cplx zeta() const { return omega * omega - mass * mass; }
    BranchSide zeta_side() const;
    ZetaPoint zeta_point() const { return {zeta(), zeta_side()}; }
    // sqrt(zeta) on the branch selected by the approach side
    cplx wavenumber() const;
    void validate() const;  // rejects omega = +-m and inconsistent sides
};

SpectralPoint interior_point(cplx omega, double m);
SpectralPoint boundary_point(double omega, BranchSide side, double m);

// Toeplitz kernel application u_i = sum_j c(x_i - x_j) f_j via padded FFT.
class ToeplitzKernel {
  public:
    ToeplitzKernel() = default;
    ToeplitzKernel(const Grid& g, const std::function<cplx(double)>& kernel);
    std::vector<cplx> apply(const std::vector<cplx>& f) const;

  private:
    std::size_t n_ = 0;
    std::vector<cplx> kernel_hat_;  // padded, transformed
};

// Scalar free Schrodinger resolvent kernel -exp(i sqrt(zeta) r)/(2 i sqrt(zeta)).
cplx free_schrodinger_kernel(cplx zeta, BranchSide side, double r);

// R0(zeta) f by kernel quadrature (componentwise; kink-corrected trapezoid).
SpinorField free_schrodinger_resolvent_apply(const ZetaPoint& zp, const SpinorField& f);
SpinorField free_schrodinger_resolvent_apply(const SpectralPoint& p, const SpinorField& f);

// d/dx of R0(zeta) f using the analytic kernel derivative -sgn(r) e^{ik|r|}/2.
SpinorField free_schrodinger_resolvent_dx_apply(const ZetaPoint& zp, const SpinorField& f);
SpinorField free_schrodinger_resolvent_dx_apply(const SpectralPoint& p, const SpinorField& f);

// Free Dirac resolvent (i alpha d/dx + m beta + omega) R0(omega^2 - m^2) f.
SpinorField free_dirac_resolvent_apply(const SpectralPoint& p, const SpinorField& f);

// Boundary jump [R0(zeta + i0) - R0(zeta - i0)] f at omega on the continuous
// spectrum; the scalar jump kernel is i cos(k r)/k (smooth, no correction).
SpinorField free_schrodinger_jump_apply(double omega, double m, const SpinorField& f);
SpinorField free_dirac_jump_apply(double omega, double m, const SpinorField& f);

// Klein-Gordon fundamental solution (1/2) theta(t-|x|) J0(m sqrt(t^2-x^2)).
double kg_fundamental(double x, double t, double m);

// Exact free evolution by 2x2 symbol diagonalization per Fourier mode.
SpinorField free_evolve_fourier(const SpinorField& psi0, double t, double m);

// Free evolution through the integral kernel of (d_t + alpha d_x - i m beta) G:
// light-cone transport part in closed form plus trapezoid over the cone interior.
SpinorField free_propagator_kernel_apply(const SpinorField& psi0, double t, double m);

enum class Band { low, high, high_h1, full };

// Band-filtered free evolution in the symbol representation: the cutoff acts
// as multiplication by l/h/h1(+-E(k)) on the corresponding eigenmode.
SpinorField free_band_propagator(const SpinorField& psi0, double t, double m,
                                 const CutoffSpec& spec, Band band);

// Threshold expansion data at one spectral edge, extracted numerically in the
// variable s = |omega -+ m|^{1/2} along the +i0 approach. The resolvent near
// the edge behaves as A0/s + A1 + O(s), with A1 split into the |x-y| and
// sgn(x-y) kernel parts.
struct EdgeExpansion {
    int edge_sign = +1;          // which edge: +m or -m
    double mass = 1.0;
    Mat2 leading;                // constant-kernel matrix of the 1/s term
    Mat2 abs_coeff;              // coefficient of |x-y| in the s^0 term
    Mat2 sgn_coeff;              // coefficient of sgn(x-y) in the s^0 term
    double fit_residual = 0.0;   // max relative LS residual over sampled r
    double leading_spread = 0.0; // r-dependence of the extracted 1/s matrix

    Mat2 order0_kernel(double r) const;  // abs_coeff*|r| + sgn_coeff*sgn(r)
};

EdgeExpansion edge_expansion_free(int edge_sign, double m, double sigma);

// Applies the constant-kernel edge operator: u(x) = M * (h * sum_j f(x_j)).
SpinorField apply_constant_kernel(const Mat2& M, const SpinorField& f);
// Applies the order-zero edge kernel abs_coeff*|x-y| + sgn_coeff*sgn(x-y).
SpinorField apply_edge_order0(const EdgeExpansion& e, const SpinorField& f);

// LinearOperator wrappers (with adjoints) for norm estimation.
LinearOperator free_resolvent_operator(const SpectralPoint& p);

} // namespace dirac1d

#endif
