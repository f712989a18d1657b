#ifndef DIRAC1D_FFT_HPP
#define DIRAC1D_FFT_HPP

#include <complex>
#include <vector>

#include "dirac1d/grid.hpp"

namespace dirac1d {

using cplx = std::complex<double>;

// Unnormalized forward/backward DFT (FFTW convention); backward divides by N.
void fft_forward(std::vector<cplx>& data);
void fft_backward(std::vector<cplx>& data);

// Spectral derivative on a periodic grid. The Nyquist mode derivative is
// zeroed so the operator stays real-antisymmetric on real data.
std::vector<cplx> spectral_derivative(const Grid& g, const std::vector<cplx>& f);

// Applies a real Fourier multiplier mult(k) mode-wise.
std::vector<cplx> apply_fourier_multiplier(const Grid& g, const std::vector<cplx>& f,
                                           const std::vector<double>& mult);

// Multiplier table evaluated at the grid wavenumbers (FFT ordering).
std::vector<double> wavenumbers(const Grid& g);

} // namespace dirac1d

#endif
