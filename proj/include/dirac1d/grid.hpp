#ifndef DIRAC1D_GRID_HPP
#define DIRAC1D_GRID_HPP

#include <cstddef>
#include <vector>

namespace dirac1d {

// Uniform periodic grid on [-L, L) with N nodes, x_i = -L + i*h, h = 2L/N.
// The endpoints +-L are identified for Fourier differentiation.
struct Grid {
    double L = 0.0;
    std::size_t N = 0;
    double h = 0.0;

    double node(std::size_t i) const { return -L + h * static_cast<double>(i); }
    std::vector<double> nodes() const;

    // Fourier wavenumber of mode index j (standard FFT ordering), k = pi*n/L.
    double wavenumber(std::size_t j) const;

    bool operator==(const Grid& o) const { return L == o.L && N == o.N; }
    bool operator!=(const Grid& o) const { return !(*this == o); }
};

// Builds a uniform grid. Rejects odd N, N < 16 and non-positive L.
Grid make_grid(double L, std::size_t N);

void require_same_grid(const Grid& a, const Grid& b, const char* where);

} // namespace dirac1d

#endif
