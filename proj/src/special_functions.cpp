#include "dirac1d/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dirac1d {

BranchSqrtResult branch_sqrt(cplx zeta, BranchSide side) {
    if (zeta == cplx(0.0)) return {cplx(0.0), true};

    const bool on_positive_axis = (zeta.imag() == 0.0 && zeta.real() > 0.0);
    if (on_positive_axis) {
        const double r = std::sqrt(zeta.real());
        switch (side) {
            case BranchSide::above: return {cplx(r, 0.0), false};
            case BranchSide::below: return {cplx(-r, 0.0), false};
            case BranchSide::interior:
                throw std::invalid_argument(
                    "branch_sqrt: interior point must lie off [0,inf)");
        }
    }
    // branch with Im > 0: argument taken in [0, 2pi)
    double arg = std::arg(zeta);
    if (arg < 0.0) arg += 2.0 * std::numbers::pi;
    const double r = std::sqrt(std::abs(zeta));
    return {cplx(r * std::cos(arg / 2.0), r * std::sin(arg / 2.0)), false};
}

namespace {

// power series sum_k (-1)^k (u/2)^{2k+nu} / (k! (k+nu)!), nu = 0 or 1.
// Accumulated in long double: the alternating terms reach ~1e5 near u = 16,
// so double accumulation alone would lose the 1e-12 absolute target.
double bessel_series(int nu, double u) {
    const long double q = 0.25L * static_cast<long double>(u) * u;
    long double term = (nu == 0) ? 1.0L : 0.5L * u;
    long double sum = term;
    for (int k = 1; k < 200; ++k) {
        term *= -q / (static_cast<long double>(k) * static_cast<long double>(k + nu));
        sum += term;
        if (std::abs(static_cast<double>(term)) < 1e-20 * (1.0 + std::abs(static_cast<double>(sum))))
            break;
    }
    return static_cast<double>(sum);
}

// Hankel asymptotic expansion: J_nu(u) = sqrt(2/(pi u)) [P cos(chi) - Q sin(chi)],
// chi = u - (2 nu + 1) pi / 4. Terms added while they keep shrinking.
double bessel_asymptotic(int nu, double u) {
    const double mu = 4.0 * nu * nu;
    double p = 1.0, q = 0.0;
    double term = 1.0;
    double prev = std::abs(term);
    for (int k = 1; k < 40; ++k) {
        const double f = (mu - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (8.0 * u * k);
        term *= f;
        if (std::abs(term) > prev) break;  // series turned divergent
        prev = std::abs(term);
        if (k % 2 == 1) {
            q += (((k - 1) / 2) % 2 == 0) ? term : -term;
        } else {
            p += ((k / 2) % 2 == 0) ? term : -term;
        }
        if (std::abs(term) < 1e-17) break;
    }
    const double chi = u - (2.0 * nu + 1.0) * std::numbers::pi / 4.0;
    return std::sqrt(2.0 / (std::numbers::pi * u)) *
           (p * std::cos(chi) - q * std::sin(chi));
}

double bessel_j(int nu, double u) {
    if (u < 0.0) throw std::invalid_argument("bessel: negative argument");
    if (u <= 16.0) return bessel_series(nu, u);
    return bessel_asymptotic(nu, u);
}

// exp-bump smoothstep: 0 for u <= 0, 1 for u >= 1, C-infinity in between
double smoothstep(double u) {
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return 1.0;
    const double a = std::exp(-1.0 / u);
    const double b = std::exp(-1.0 / (1.0 - u));
    return a / (a + b);
}

} // namespace

double bessel_j0(double u) { return bessel_j(0, u); }
double bessel_j1(double u) { return bessel_j(1, u); }

double cutoff(double omega, const CutoffSpec& spec, CutoffKind which) {
    if (!(spec.eps > 0.0)) throw std::invalid_argument("cutoff: eps must be positive");
    const double l = smoothstep((spec.m + 2.0 * spec.eps - std::abs(omega)) / spec.eps);
    switch (which) {
        case CutoffKind::l: return l;
        case CutoffKind::h: return 1.0 - l;
        case CutoffKind::h1: return std::sqrt(1.0 - l);
    }
    return 0.0;
}

} // namespace dirac1d
