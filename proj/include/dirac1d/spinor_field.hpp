#ifndef DIRAC1D_SPINOR_FIELD_HPP
#define DIRAC1D_SPINOR_FIELD_HPP

#include <complex>
#include <functional>
#include <vector>

#include "dirac1d/fft.hpp"
#include "dirac1d/grid.hpp"

namespace dirac1d {

// Two-component complex field on a grid; components stored as separate
// contiguous arrays (FFT-friendly).
struct SpinorField {
    Grid grid;
    std::vector<cplx> up;    // component 1
    std::vector<cplx> down;  // component 2

    SpinorField() = default;
    explicit SpinorField(const Grid& g)
        : grid(g), up(g.N, cplx(0.0)), down(g.N, cplx(0.0)) {}

    std::size_t size() const { return grid.N; }
    bool all_finite() const;

    SpinorField& operator+=(const SpinorField& o);
    SpinorField& operator-=(const SpinorField& o);
    SpinorField& operator*=(cplx s);
};

SpinorField operator+(SpinorField a, const SpinorField& b);
SpinorField operator-(SpinorField a, const SpinorField& b);
SpinorField operator*(cplx s, SpinorField f);

// axpy: y += s * x
void add_scaled(SpinorField& y, cplx s, const SpinorField& x);

// L2 pairing h * sum <f(x_i), g(x_i)>_{C^2}, conjugate-linear in f.
cplx inner_product(const SpinorField& f, const SpinorField& g);

double l2_norm(const SpinorField& f);

// Builds a field from pointwise component functions of x.
SpinorField make_field(const Grid& g, const std::function<cplx(double)>& comp1,
                       const std::function<cplx(double)>& comp2);

// Deterministic pairwise summation over a fixed binary tree.
double pairwise_sum(const std::vector<double>& v);
cplx pairwise_sum(const std::vector<cplx>& v);

} // namespace dirac1d

#endif
