#ifndef DIRAC1D_SPECIAL_FUNCTIONS_HPP
#define DIRAC1D_SPECIAL_FUNCTIONS_HPP

#include <complex>

namespace dirac1d {

using cplx = std::complex<double>;

// Which side of the cut [0, inf) a spectral parameter approaches from.
enum class BranchSide { above, below, interior };

struct BranchSqrtResult {
    cplx value;
    bool at_edge = false;  // input was (numerically) zero
};

// Square root with Im > 0 off the cut; on the positive real axis the value
// continues from the chosen half-plane: above -> +sqrt, below -> -sqrt.
BranchSqrtResult branch_sqrt(cplx zeta, BranchSide side);

// Bessel functions of the first kind, absolute error <= 1e-12 on u >= 0.
// Power series for u <= 12, Hankel asymptotic expansion beyond.
double bessel_j0(double u);
double bessel_j1(double u);

// Smooth spectral cutoffs around the band edges +-m. l is even, C-infinity,
// identically 1 on |w| <= m+eps and 0 beyond |w| = m+2eps; h = 1-l, h1 = sqrt(h).
struct CutoffSpec {
    double m = 1.0;
    double eps = 0.5;
};

enum class CutoffKind { l, h, h1 };

double cutoff(double omega, const CutoffSpec& spec, CutoffKind which);

} // namespace dirac1d

#endif
