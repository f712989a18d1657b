#include "dirac1d/gauge_reduction.hpp"

#include <cmath>
#include <stdexcept>

namespace dirac1d {

namespace {

// cumulative trapezoid from the left grid edge
std::vector<double> cumtrapz(const Grid& g, const std::vector<double>& f) {
    std::vector<double> out(g.N, 0.0);
    for (std::size_t i = 1; i < g.N; ++i)
        out[i] = out[i - 1] + 0.5 * g.h * (f[i - 1] + f[i]);
    return out;
}

} // namespace

SpinorField GaugeData::apply_c(const SpinorField& f, bool inverse) const {
    require_same_grid(grid, f.grid, "GaugeData::apply_c");
    SpinorField out(grid);
    for (std::size_t i = 0; i < grid.N; ++i) {
        const cplx a = inverse ? std::conj(c11[i]) : c11[i];
        const cplx b = inverse ? std::conj(c22[i]) : c22[i];
        out.up[i] = a * f.up[i];
        out.down[i] = b * f.down[i];
    }
    return out;
}

GaugeData gauge_matrix(const MatrixPotential& V) {
    V.validate();
    GaugeData gd;
    gd.grid = V.grid;
    gd.phase11 = cumtrapz(V.grid, V.v11);
    gd.phase22 = cumtrapz(V.grid, V.v22);
    gd.c11.resize(V.grid.N);
    gd.c22.resize(V.grid.N);
    for (std::size_t i = 0; i < V.grid.N; ++i) {
        gd.c11[i] = std::polar(1.0, -gd.phase11[i]);
        gd.c22[i] = std::polar(1.0, gd.phase22[i]);
    }
    return gd;
}

void build_tilde_potential(GaugeData& gd, const MatrixPotential& V, double m) {
    const Grid& g = V.grid;
    gd.tilde12.resize(g.N);
    gd.tilde12_dx.resize(g.N);
    for (std::size_t i = 0; i < g.N; ++i) {
        const double ph = gd.phase11[i] + gd.phase22[i];
        const cplx e = std::polar(1.0, ph);
        gd.tilde12[i] = e * (V.v12[i] + m);
        // product rule with the stored analytic derivative of v12; the
        // assembled tilde12 tends to different constants at the two grid
        // ends when int(V11+V22) != 0, so spectral differentiation of it
        // would ring across the periodic seam
        gd.tilde12_dx[i] =
            e * (cplx(0.0, 1.0) * (V.v11[i] + V.v22[i]) * (V.v12[i] + m) + V.d12[i]);
    }
}

void build_squared_potential(GaugeData& gd, const MatrixPotential& V, double m) {
    const Grid& g = V.grid;
    gd.squared = MatrixPotential(g);
    gd.squared.decay_rate = V.decay_rate;
    for (std::size_t i = 0; i < g.N; ++i) {
        const double diag = 2.0 * m * V.v12[i].real() + std::norm(V.v12[i]);
        gd.squared.v11[i] = diag;
        gd.squared.v22[i] = diag;
        gd.squared.v12[i] = cplx(0.0, -1.0) * gd.tilde12_dx[i];
        gd.squared.d12[i] = cplx(0.0);  // not propagated further
    }
}

GaugeData gauge_reduce(const MatrixPotential& V, double m) {
    GaugeData gd = gauge_matrix(V);
    build_tilde_potential(gd, V, m);
    build_squared_potential(gd, V, m);
    return gd;
}

SpinorField apply_tilde_dirac(const GaugeData& gd, const SpinorField& f) {
    require_same_grid(gd.grid, f.grid, "apply_tilde_dirac");
    const Grid& g = gd.grid;
    const auto du = spectral_derivative(g, f.up);
    const auto dd = spectral_derivative(g, f.down);
    SpinorField out(g);
    for (std::size_t i = 0; i < g.N; ++i) {
        out.up[i] = cplx(0.0, -1.0) * du[i] + gd.tilde12[i] * f.down[i];
        out.down[i] = cplx(0.0, 1.0) * dd[i] + std::conj(gd.tilde12[i]) * f.up[i];
    }
    return out;
}

SpinorField apply_matrix_schrodinger(const GaugeData& gd, const SpinorField& f) {
    require_same_grid(gd.grid, f.grid, "apply_matrix_schrodinger");
    const Grid& g = gd.grid;
    std::vector<double> mult(g.N);
    for (std::size_t j = 0; j < g.N; ++j) {
        const double k = g.wavenumber(j);
        mult[j] = k * k;  // -d^2/dx^2
    }
    SpinorField out(g);
    out.up = apply_fourier_multiplier(g, f.up, mult);
    out.down = apply_fourier_multiplier(g, f.down, mult);
    out += gd.squared.apply(f);
    return out;
}

double verify_factorization(const MatrixPotential& V, double m, cplx omega,
                            const SpinorField& f) {
    const GaugeData gd = gauge_reduce(V, m);
    SpinorField hp = apply_tilde_dirac(gd, f);
    add_scaled(hp, omega, f);                   // (Ht + w) f
    SpinorField lhs = apply_tilde_dirac(gd, hp);
    add_scaled(lhs, -omega, hp);                // (Ht - w)(Ht + w) f
    SpinorField rhs = apply_matrix_schrodinger(gd, f);
    add_scaled(rhs, -(omega * omega - m * m), f);
    const double nf = l2_norm(f);
    if (nf == 0.0) throw std::invalid_argument("verify_factorization: zero field");
    return l2_norm(lhs - rhs) / nf;
}

double gauge_conjugation_check(const MatrixPotential& V, double m, const SpinorField& f) {
    const GaugeData gd = gauge_reduce(V, m);
    SpinorField cf = gd.apply_c(f, false);
    SpinorField hcf = apply_dirac(cf, V, m);
    SpinorField lhs = gd.apply_c(hcf, true);
    SpinorField rhs = apply_tilde_dirac(gd, f);
    const double nf = l2_norm(f);
    if (nf == 0.0) throw std::invalid_argument("gauge_conjugation_check: zero field");
    return l2_norm(lhs - rhs) / nf;
}

} // namespace dirac1d
