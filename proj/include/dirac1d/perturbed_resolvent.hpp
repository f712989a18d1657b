#ifndef DIRAC1D_PERTURBED_RESOLVENT_HPP
#define DIRAC1D_PERTURBED_RESOLVENT_HPP

#include <Eigen/Dense>

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dirac1d/free_dirac.hpp"
#include "dirac1d/gauge_reduction.hpp"
#include "dirac1d/matrix_potential.hpp"
#include "dirac1d/weighted_norm.hpp"

namespace dirac1d {

struct SolveReport {
    double residual = 0.0;   // ||(H - zeta) u - f|| / ||f||, spectral check
    double rcond = 1.0;      // reciprocal condition estimate of the solve
    bool near_singular = false;  // rcond below 1e-12: at/near an eigenvalue
};

// Factorized resolvent R(zeta) = (H_sq - zeta)^{-1} of the matrix Schrodinger
// operator, as R0 - R0 V R via a Lippmann-Schwinger system restricted to the
// nodes where the potential is numerically nonzero (w = V u vanishes off the
// support, so the restricted factorization solves the full dense system
// exactly up to the support truncation at relative 1e-13).
class SchrodingerResolvent {
  public:
    SchrodingerResolvent(const MatrixPotential& v_sq, const ZetaPoint& zp);

    SpinorField apply(const SpinorField& f) const;
    // - d/dx of the output, via the analytic kernel derivative
    SpinorField apply_dx(const SpinorField& f) const;
    // both at once (shares the inner solve)
    void apply_with_dx(const SpinorField& f, SpinorField& u, SpinorField& du) const;

    double rcond() const { return rcond_; }
    bool near_singular() const { return rcond_ < 1e-12; }
    // smallest singular value of the restricted system (I + V R0), scaled by
    // its largest; used by the eigenvalue cross-check
    double smallest_singular_scaled(int iterations = 60) const;
    const ZetaPoint& point() const { return zp_; }

  private:
    friend class DiracResolvent;
    SpinorField inner_solve(const SpinorField& f) const;  // returns w on full grid

    Grid grid_;
    ZetaPoint zp_;
    MatrixPotential v_sq_;
    std::vector<std::size_t> support_;
    ToeplitzKernel kernel_;
    ToeplitzKernel dkernel_;
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu_;
    double rcond_ = 1.0;
    double matrix_norm_ = 1.0;
};

// u = R(zeta) f with diagnostics. The full (I + R0 V) u = R0 f system is
// solved through the support-restricted factorization above.
SpinorField lippmann_schwinger_solve(const ZetaPoint& zp, const MatrixPotential& v_sq,
                                     const SpinorField& f, SolveReport* report = nullptr);

enum class Frame { tilde, original };

// Factorized perturbed Dirac resolvent at one spectral point:
// tilde frame (i alpha d/dx + Vt + omega) R(omega^2 - m^2), original frame
// conjugated by the gauge matrix C.
class DiracResolvent {
  public:
    DiracResolvent(std::shared_ptr<const GaugeData> gauge, const SpectralPoint& p);

    SpinorField apply(const SpinorField& f, Frame frame) const;
    const SpectralPoint& point() const { return p_; }
    bool near_singular() const { return schrodinger_.near_singular(); }
    double rcond() const { return schrodinger_.rcond(); }

  private:
    std::shared_ptr<const GaugeData> gauge_;
    SpectralPoint p_;
    SchrodingerResolvent schrodinger_;
};

// One-shot apply with residual diagnostics.
SpinorField dirac_resolvent_apply(const SpectralPoint& p, const MatrixPotential& V,
                                  const SpinorField& f, Frame frame,
                                  SolveReport* report = nullptr);

// LinearOperator (with adjoint at the conjugate point) for norm estimation.
LinearOperator perturbed_resolvent_operator(const MatrixPotential& V, double m,
                                            const SpectralPoint& p, Frame frame);

// ------------------------------------------------------------------ LAP probe

struct LapReport {
    std::vector<double> epsilons;
    std::vector<double> increments;  // ||(R(w+i e_k) - R(w+i e_{k+1})) f||_{-sigma}
    bool converged = false;
};

// Cauchy-sequence probe of the limiting absorption principle at omega on the
// continuous spectrum: converged iff increments decrease monotonically and
// end below 1e-4.
LapReport lap_probe(double omega, const MatrixPotential& V, double m, double sigma,
                    const std::vector<double>& eps_sequence);

// -------------------------------------------------------------- spectral data

struct EigenvalueRecord {
    double omega = 0.0;            // from the dense eigensolve oracle
    double fredholm_omega = 0.0;   // location of the Fredholm singularity
    double fredholm_gap = 0.0;     // |omega - fredholm_omega|
    double residual = 0.0;         // ||H psi - omega psi|| on the work grid
    bool cross_check_ok = true;    // agreement within 1e-4
};

struct SpectralData {
    double mass = 1.0;
    Grid grid;
    std::vector<double> eigenvalues;       // sorted, inside the gap
    std::vector<SpinorField> eigenfunctions;  // orthonormal, work grid
    std::vector<EigenvalueRecord> records;
    double gap_margin = 0.0;               // delta_gap = 10 h

    SpinorField project_discrete(const SpinorField& f) const;   // sum of P_j
    SpinorField project_continuous(const SpinorField& f) const; // 1 - P_d
    SpinorField project_eigen(std::size_t j, const SpinorField& f) const;
};

// Dense Hermitian eigensolve of the discretized operator on a coarsened copy
// of the grid, filtered to gap eigenvalues with localized eigenfunctions,
// prolonged back to the work grid and cross-checked against the Fredholm
// alternative of the Lippmann-Schwinger system.
SpectralData find_eigenvalues(const MatrixPotential& V, double m);

// ---------------------------------------------------------- Riesz projectors

// Contour-integral projector -(1/2 pi i) oint R(omega) d omega over the circle
// |omega - omega_j| = delta, trapezoid with M nodes; resolvents factorized
// once at construction.
class RieszProjector {
  public:
    RieszProjector(double omega_j, const MatrixPotential& V, double m, double delta,
                   int nodes);
    SpinorField apply(const SpinorField& f) const;

  private:
    double delta_;
    int nodes_;
    std::vector<cplx> phases_;
    std::vector<std::unique_ptr<DiracResolvent>> resolvents_;
};

// ---------------------------------------------------------- nonsingularity

struct NonsingularityReport {
    enum class Verdict { nonsingular, singular, indeterminate };
    Verdict verdict = Verdict::indeterminate;

    // prong (a): boundedness of R(+-m + i eps) in the weighted norm
    std::vector<double> norms_plus, norms_minus;  // per epsilon
    bool bounded_prong = false;
    // prong (b): triviality of the edge linear system built from the
    // extracted threshold operators
    double sigma_min_plus = 0.0, sigma_min_minus = 0.0;  // scaled
    bool algebraic_prong = false;
};

NonsingularityReport check_nonsingular(const MatrixPotential& V, double m, double sigma);

// ------------------------------------------------------- edge asymptotics

struct EdgeAsymptotics {
    double p0 = 0.0, p1 = 0.0, p2 = 0.0;  // fitted exponents
    double fit_residual0 = 0.0, fit_residual1 = 0.0, fit_residual2 = 0.0;
};

// Fits || R(omega) - R(edge) || ~ |omega -+ m|^{p0} (and the first and second
// derivative analogues) along the real approach omega = +-(m - s^2) inside
// the spectral gap; expects p0 ~ 1/2, p1 ~ -1/2, p2 ~ -3/2.
EdgeAsymptotics edge_asymptotics_perturbed(const MatrixPotential& V, double m,
                                           double sigma, int edge_sign = +1);

// ------------------------------------------------------------- persistence

std::string spectral_data_to_json(const SpectralData& sd, const std::string& potential_desc,
                                  const NonsingularityReport* ns = nullptr);
void save_spectral_data(const SpectralData& sd, const std::string& potential_desc,
                        const std::string& path, const NonsingularityReport* ns = nullptr);

} // namespace dirac1d

#endif
