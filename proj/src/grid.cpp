#include "dirac1d/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace dirac1d {

std::vector<double> Grid::nodes() const {
    std::vector<double> x(N);
    for (std::size_t i = 0; i < N; ++i) x[i] = node(i);
    return x;
}

double Grid::wavenumber(std::size_t j) const {
    // FFT ordering: n = j for j < N/2, n = j - N otherwise.
    const auto half = N / 2;
    const double n = (j < half) ? static_cast<double>(j)
                                : static_cast<double>(j) - static_cast<double>(N);
    return std::numbers::pi * n / L;
}

Grid make_grid(double L, std::size_t N) {
    if (!(L > 0.0)) throw std::invalid_argument("make_grid: L must be positive");
    if (N % 2 != 0) throw std::invalid_argument("make_grid: N must be even");
    if (N < 16) throw std::invalid_argument("make_grid: N must be at least 16");
    Grid g;
    g.L = L;
    g.N = N;
    g.h = 2.0 * L / static_cast<double>(N);
    return g;
}

void require_same_grid(const Grid& a, const Grid& b, const char* where) {
    if (a != b)
        throw std::invalid_argument(std::string(where) + ": grid mismatch");
}

} // namespace dirac1d
