#include "dirac1d/free_dirac.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace dirac1d {

// ---------------------------------------------------------------- SpectralPoint

cplx ZetaPoint::wavenumber() const {
    auto r = branch_sqrt(zeta, side);
    if (r.at_edge) throw std::invalid_argument("ZetaPoint: zeta at the edge 0");
    return r.value;
}

BranchSide SpectralPoint::zeta_side() const {
    if (side == BranchSide::interior) return BranchSide::interior;
    const bool above_in_zeta = (side == BranchSide::above) == (omega.real() > 0.0);
    return above_in_zeta ? BranchSide::above : BranchSide::below;
}

cplx SpectralPoint::wavenumber() const {
    auto r = branch_sqrt(zeta(), zeta_side());
    if (r.at_edge)
        throw std::invalid_argument("SpectralPoint: omega at a spectral edge (+-m)");
    return r.value;
}

void SpectralPoint::validate() const {
    if (!(mass > 0.0)) throw std::invalid_argument("SpectralPoint: mass must be positive");
    const double m = mass;
    if (side == BranchSide::interior) {
        if (omega.imag() == 0.0 && std::abs(omega.real()) >= m)
            throw std::invalid_argument(
                "SpectralPoint: interior point must lie off the closed continuous spectrum");
    } else {
        if (omega.imag() != 0.0 || std::abs(omega.real()) <= m)
            throw std::invalid_argument(
                "SpectralPoint: boundary side requires real omega with |omega| > m");
    }
}

SpectralPoint interior_point(cplx omega, double m) {
    SpectralPoint p{omega, BranchSide::interior, m};
    p.validate();
    return p;
}

SpectralPoint boundary_point(double omega, BranchSide side, double m) {
    SpectralPoint p{cplx(omega, 0.0), side, m};
    p.validate();
    return p;
}

// ---------------------------------------------------------------- ToeplitzKernel

ToeplitzKernel::ToeplitzKernel(const Grid& g, const std::function<cplx(double)>& kernel) {
    n_ = g.N;
    const std::size_t P = 2 * n_;
    kernel_hat_.assign(P, cplx(0.0));
    for (std::size_t l = 0; l < n_; ++l)
        kernel_hat_[l] = kernel(static_cast<double>(l) * g.h);
    for (std::size_t l = 1; l < n_; ++l)
        kernel_hat_[P - l] = kernel(-static_cast<double>(l) * g.h);
    fft_forward(kernel_hat_);
}

std::vector<cplx> ToeplitzKernel::apply(const std::vector<cplx>& f) const {
    if (f.size() != n_) throw std::invalid_argument("ToeplitzKernel::apply: size mismatch");
    const std::size_t P = 2 * n_;
    std::vector<cplx> buf(P, cplx(0.0));
    for (std::size_t i = 0; i < n_; ++i) buf[i] = f[i];
    fft_forward(buf);
    for (std::size_t i = 0; i < P; ++i) buf[i] *= kernel_hat_[i];
    fft_backward(buf);
    buf.resize(n_);
    return buf;
}

// ------------------------------------------------------------------- kernels

cplx free_schrodinger_kernel(cplx zeta, BranchSide side, double r) {
    auto k = branch_sqrt(zeta, side);
    if (k.at_edge)
        throw std::invalid_argument("free_schrodinger_kernel: zeta at the edge 0");
    if (r < 0.0) throw std::invalid_argument("free_schrodinger_kernel: r must be >= 0");
    const cplx ik = cplx(0.0, 1.0) * k.value;
    return -std::exp(ik * r) / (2.0 * ik);
}

namespace {

// Trapezoid quadrature of a |x-y|-type kernel has an O(h^2) defect from the
// kink at y = x; the Euler-Maclaurin jump term is -(h^2/12) f(x) for the
// resolvent kernel and +(h^2/12) f'(x) for its x-derivative kernel.
void apply_scalar_kernel_corrected(const Grid& g, const ToeplitzKernel& T,
                                   const std::vector<cplx>& f, std::vector<cplx>& out,
                                   double diag_correction) {
    out = T.apply(f);
    for (std::size_t i = 0; i < g.N; ++i)
        out[i] = g.h * out[i] + diag_correction * f[i];
}

} // namespace

SpinorField free_schrodinger_resolvent_apply(const ZetaPoint& zp, const SpinorField& f) {
    const Grid& g = f.grid;
    const cplx k = zp.wavenumber();
    const cplx ik = cplx(0.0, 1.0) * k;
    ToeplitzKernel T(g, [&](double r) { return -std::exp(ik * std::abs(r)) / (2.0 * ik); });
    SpinorField out(g);
    const double corr = -g.h * g.h / 12.0;
    apply_scalar_kernel_corrected(g, T, f.up, out.up, corr);
    apply_scalar_kernel_corrected(g, T, f.down, out.down, corr);
    return out;
}

SpinorField free_schrodinger_resolvent_apply(const SpectralPoint& p, const SpinorField& f) {
    return free_schrodinger_resolvent_apply(p.zeta_point(), f);
}

SpinorField free_schrodinger_resolvent_dx_apply(const ZetaPoint& zp, const SpinorField& f) {
    const Grid& g = f.grid;
    const cplx k = zp.wavenumber();
    const cplx ik = cplx(0.0, 1.0) * k;
    auto dker = [&](double r) -> cplx {
        if (r == 0.0) return cplx(0.0);  // principal-value convention at the jump
        const double s = (r > 0.0) ? 1.0 : -1.0;
        return -0.5 * s * std::exp(ik * std::abs(r));
    };
    ToeplitzKernel T(g, dker);
    SpinorField out(g);
    const double c2 = g.h * g.h / 12.0;
    auto dup = spectral_derivative(g, f.up);
    auto ddn = spectral_derivative(g, f.down);
    out.up = T.apply(f.up);
    out.down = T.apply(f.down);
    for (std::size_t i = 0; i < g.N; ++i) {
        out.up[i] = g.h * out.up[i] + c2 * dup[i];
        out.down[i] = g.h * out.down[i] + c2 * ddn[i];
    }
    return out;
}

SpinorField free_schrodinger_resolvent_dx_apply(const SpectralPoint& p, const SpinorField& f) {
    return free_schrodinger_resolvent_dx_apply(p.zeta_point(), f);
}

SpinorField free_dirac_resolvent_apply(const SpectralPoint& p, const SpinorField& f) {
    // (i alpha d/dx + m beta + omega) R0(zeta), derivative on the kernel
    SpinorField r0 = free_schrodinger_resolvent_apply(p, f);
    SpinorField dr0 = free_schrodinger_resolvent_dx_apply(p, f);
    const double m = p.mass;
    const cplx w = p.omega;
    SpinorField out(f.grid);
    for (std::size_t i = 0; i < f.size(); ++i) {
        out.up[i] = cplx(0.0, -1.0) * dr0.up[i] + m * r0.down[i] + w * r0.up[i];
        out.down[i] = cplx(0.0, 1.0) * dr0.down[i] + m * r0.up[i] + w * r0.down[i];
    }
    return out;
}

SpinorField free_schrodinger_jump_apply(double omega, double m, const SpinorField& f) {
    if (std::abs(omega) <= m)
        throw std::invalid_argument("free_schrodinger_jump_apply: omega must lie on the spectrum");
    const Grid& g = f.grid;
    const double k = std::sqrt(omega * omega - m * m);
    // jump kernel for zeta +- i0 in omega-orientation: sign flips on the
    // negative branch because (omega + i0)^2 approaches the cut from below
    const double orient = (omega > 0.0) ? 1.0 : -1.0;
    ToeplitzKernel T(g, [&](double r) { return cplx(0.0, orient) * std::cos(k * r) / k; });
    SpinorField out(g);
    out.up = T.apply(f.up);
    out.down = T.apply(f.down);
    for (std::size_t i = 0; i < g.N; ++i) {
        out.up[i] *= g.h;
        out.down[i] *= g.h;
    }
    return out;
}

SpinorField free_dirac_jump_apply(double omega, double m, const SpinorField& f) {
    if (std::abs(omega) <= m)
        throw std::invalid_argument("free_dirac_jump_apply: omega must lie on the spectrum");
    const Grid& g = f.grid;
    const double k = std::sqrt(omega * omega - m * m);
    const double orient = (omega > 0.0) ? 1.0 : -1.0;
    // scalar jump i*cos(kr)/k and its x-derivative -i*sin(kr); both smooth
    ToeplitzKernel Tj(g, [&](double r) { return cplx(0.0, orient) * std::cos(k * r) / k; });
    ToeplitzKernel Td(g, [&](double r) { return cplx(0.0, -orient) * std::sin(k * r); });
    SpinorField ju(g), jd(g);
    ju.up = Tj.apply(f.up);
    ju.down = Tj.apply(f.down);
    jd.up = Td.apply(f.up);
    jd.down = Td.apply(f.down);
    SpinorField out(g);
    const cplx w(omega, 0.0);
    for (std::size_t i = 0; i < g.N; ++i) {
        const cplx r0u = g.h * ju.up[i], r0d = g.h * ju.down[i];
        const cplx d0u = g.h * jd.up[i], d0d = g.h * jd.down[i];
        out.up[i] = cplx(0.0, -1.0) * d0u + m * r0d + w * r0u;
        out.down[i] = cplx(0.0, 1.0) * d0d + m * r0u + w * r0d;
    }
    return out;
}

// ------------------------------------------------------------------ KG kernel

double kg_fundamental(double x, double t, double m) {
    if (t < 0.0) throw std::invalid_argument("kg_fundamental: t must be >= 0");
    if (std::abs(x) > t) return 0.0;
    const double u = std::sqrt(std::max(0.0, t * t - x * x));
    return 0.5 * bessel_j0(m * u);
}

// ------------------------------------------------------------- free evolution

SpinorField free_evolve_fourier(const SpinorField& psi0, double t, double m) {
    const Grid& g = psi0.grid;
    std::vector<cplx> a = psi0.up, b = psi0.down;
    fft_forward(a);
    fft_forward(b);
    for (std::size_t j = 0; j < g.N; ++j) {
        const double k = g.wavenumber(j);
        const double E = std::sqrt(k * k + m * m);
        const double c = std::cos(E * t);
        const double s = std::sin(E * t) / E;
        // exp(-it M(k)) = cos(Et) I - i sin(Et)/E * M,  M = [[k, m],[m, -k]]
        const cplx aj = a[j], bj = b[j];
        a[j] = c * aj - cplx(0.0, s) * (k * aj + m * bj);
        b[j] = c * bj - cplx(0.0, s) * (m * aj - k * bj);
    }
    fft_backward(a);
    fft_backward(b);
    SpinorField out(g);
    out.up = std::move(a);
    out.down = std::move(b);
    return out;
}

SpinorField free_band_propagator(const SpinorField& psi0, double t, double m,
                                 const CutoffSpec& spec, Band band) {
    const Grid& g = psi0.grid;
    auto weight = [&](double om) -> double {
        switch (band) {
            case Band::low: return cutoff(om, spec, CutoffKind::l);
            case Band::high: return cutoff(om, spec, CutoffKind::h);
            case Band::high_h1: return cutoff(om, spec, CutoffKind::h1);
            case Band::full: return 1.0;
        }
        return 0.0;
    };
    std::vector<cplx> a = psi0.up, b = psi0.down;
    fft_forward(a);
    fft_forward(b);
    for (std::size_t j = 0; j < g.N; ++j) {
        const double k = g.wavenumber(j);
        const double E = std::sqrt(k * k + m * m);
        const cplx aj = a[j], bj = b[j];
        // eigenprojections Pi_+- = (I +- M/E)/2
        const cplx Ma = (k * aj + m * bj) / E;
        const cplx Mb = (m * aj - k * bj) / E;
        const cplx pa = 0.5 * (aj + Ma), pb = 0.5 * (bj + Mb);   // + branch
        const cplx qa = 0.5 * (aj - Ma), qb = 0.5 * (bj - Mb);   // - branch
        const cplx ep = std::polar(1.0, -E * t);
        const cplx em = std::polar(1.0, E * t);
        const double wp = weight(E), wm = weight(-E);
        a[j] = wp * ep * pa + wm * em * qa;
        b[j] = wp * ep * pb + wm * em * qb;
    }
    fft_backward(a);
    fft_backward(b);
    SpinorField out(g);
    out.up = std::move(a);
    out.down = std::move(b);
    return out;
}

// ---------------------------------------------------- kernel-route propagator

namespace {

// 4-point Lagrange interpolation of a grid function at an off-grid point;
// zero outside the grid (whole-line semantics, fields assumed decayed).
cplx interp4(const Grid& g, const std::vector<cplx>& f, double y) {
    const double pos = (y + g.L) / g.h;
    if (pos < 0.0 || pos > static_cast<double>(g.N - 1)) return cplx(0.0);
    long i1 = static_cast<long>(std::floor(pos));
    long i0 = i1 - 1;
    if (i0 < 0) i0 = 0;
    if (i0 + 3 > static_cast<long>(g.N - 1)) i0 = static_cast<long>(g.N) - 4;
    const double s = pos - static_cast<double>(i0);
    cplx acc(0.0);
    for (int a = 0; a < 4; ++a) {
        double w = 1.0;
        for (int c = 0; c < 4; ++c) {
            if (c == a) continue;
            w *= (s - c) / static_cast<double>(a - c);
        }
        acc += w * f[static_cast<std::size_t>(i0 + a)];
    }
    return acc;
}

double j1_over_u(double z) {
    // J1(z)/z, regular at 0
    if (std::abs(z) < 1e-8) return 0.5 - z * z / 16.0;
    return bessel_j1(z) / z;
}

} // namespace

SpinorField free_propagator_kernel_apply(const SpinorField& psi0, double t, double m) {
    if (!(t > 0.0))
        throw std::invalid_argument("free_propagator_kernel_apply: t must be positive");
    const Grid& g = psi0.grid;
    SpinorField out(g);

    // (a) light-cone transport: (1/2)(I - alpha) psi0(x-t) + (1/2)(I + alpha) psi0(x+t)
    //     = diag(1,0) psi0(x-t) + diag(0,1) psi0(x+t)
    for (std::size_t i = 0; i < g.N; ++i) {
        const double x = g.node(i);
        out.up[i] = interp4(g, psi0.up, x - t);
        out.down[i] = interp4(g, psi0.down, x + t);
    }

    // (b) regular interior kernel on |x-y| < t:
    //     K(r) = -(m/2) J1(mu)/u * diag(t+r, t-r) - (i m/2) J0(mu) * beta,
    //     u = sqrt(t^2 - r^2); J1(mu)/u -> m/2 on the cone.
    auto inside = [&](double r) { return std::abs(r) < t; };
    auto k_diag = [&](double r, double tpm) -> cplx {
        if (!inside(r)) return cplx(0.0);
        const double u = std::sqrt(t * t - r * r);
        return cplx(-0.5 * m * m * j1_over_u(m * u) * tpm, 0.0);
    };
    ToeplitzKernel K11(g, [&](double r) { return k_diag(r, t + r); });
    ToeplitzKernel K22(g, [&](double r) { return k_diag(r, t - r); });
    ToeplitzKernel K12(g, [&](double r) -> cplx {
        if (!inside(r)) return cplx(0.0);
        const double u = std::sqrt(t * t - r * r);
        return cplx(0.0, -0.5 * m) * bessel_j0(m * u);
    });

    auto a11 = K11.apply(psi0.up);
    auto a12 = K12.apply(psi0.down);
    auto a21 = K12.apply(psi0.up);
    auto a22 = K22.apply(psi0.down);
    for (std::size_t i = 0; i < g.N; ++i) {
        out.up[i] += g.h * (a11[i] + a12[i]);
        out.down[i] += g.h * (a21[i] + a22[i]);
    }

    // cone-edge correction: replace the crude node-indicator truncation near
    // y = x -+ t by exact partial-cell trapezoid with interpolated psi0
    auto kernel_at = [&](double r) -> Mat2 {
        const double u2 = std::max(0.0, t * t - r * r);
        const double u = std::sqrt(u2);
        const cplx d1(-0.5 * m * m * j1_over_u(m * u) * (t + r), 0.0);
        const cplx d2(-0.5 * m * m * j1_over_u(m * u) * (t - r), 0.0);
        const cplx od(0.0, -0.5 * m * bessel_j0(m * u));
        return Mat2{{{d1, od}, {od, d2}}};
    };
    auto mat_vec = [](const Mat2& M, cplx a, cplx b) {
        return std::array<cplx, 2>{M[0][0] * a + M[0][1] * b, M[1][0] * a + M[1][1] * b};
    };
    for (std::size_t i = 0; i < g.N; ++i) {
        const double x = g.node(i);
        for (int sgn : {-1, +1}) {
            const double yedge = x + sgn * t;  // exact cone edge
            if (yedge < -g.L || yedge > g.L - g.h) continue;
            // nearest node strictly inside the cone on this side
            const double pos = (yedge + g.L) / g.h;
            const long jn = (sgn < 0) ? static_cast<long>(std::ceil(pos))
                                      : static_cast<long>(std::floor(pos));
            if (jn < 0 || jn >= static_cast<long>(g.N)) continue;
            const double yn = g.node(static_cast<std::size_t>(jn));
            if (std::abs(x - yn) >= t) continue;  // node landed outside; skip
            const double gap = std::abs(yn - yedge);
            const auto Kedge = kernel_at(x - yedge);
            const auto Knode = kernel_at(x - yn);
            const cplx fu_e = interp4(g, psi0.up, yedge);
            const cplx fd_e = interp4(g, psi0.down, yedge);
            const cplx fu_n = psi0.up[static_cast<std::size_t>(jn)];
            const cplx fd_n = psi0.down[static_cast<std::size_t>(jn)];
            const auto ge = mat_vec(Kedge, fu_e, fd_e);
            const auto gn = mat_vec(Knode, fu_n, fd_n);
            // partial cell [yedge, yn] by trapezoid, and remove the plain-sum
            // overcount h/2 at the interior endpoint node
            out.up[i] += 0.5 * gap * (ge[0] + gn[0]) - 0.5 * g.h * gn[0];
            out.down[i] += 0.5 * gap * (ge[1] + gn[1]) - 0.5 * g.h * gn[1];
        }
    }
    return out;
}

// ------------------------------------------------------------- edge expansion

Mat2 EdgeExpansion::order0_kernel(double r) const {
    const double a = std::abs(r);
    const double s = (r > 0.0) ? 1.0 : (r < 0.0 ? -1.0 : 0.0);
    Mat2 out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out[i][j] = abs_coeff[i][j] * a + sgn_coeff[i][j] * s;
    return out;
}

namespace {

// full Dirac resolvent kernel matrix at separation r
Mat2 dirac_kernel_matrix(const SpectralPoint& p, double r) {
    const cplx k = p.wavenumber();
    const cplx ik = cplx(0.0, 1.0) * k;
    const cplx e = std::exp(ik * std::abs(r));
    const cplx kappa = -e / (2.0 * ik);
    const double s = (r > 0.0) ? 1.0 : (r < 0.0 ? -1.0 : 0.0);
    const cplx dkappa = -0.5 * s * e;
    const double m = p.mass;
    const cplx w = p.omega;
    // i alpha * dkappa + (m beta + omega) * kappa
    Mat2 K;
    K[0][0] = cplx(0.0, -1.0) * dkappa + w * kappa;
    K[1][1] = cplx(0.0, 1.0) * dkappa + w * kappa;
    K[0][1] = m * kappa;
    K[1][0] = m * kappa;
    return K;
}

} // namespace

EdgeExpansion edge_expansion_free(int edge_sign, double m, double sigma) {
    if (!(sigma > 2.5))
        throw std::invalid_argument("edge_expansion_free: sigma must exceed 5/2");
    if (edge_sign != 1 && edge_sign != -1)
        throw std::invalid_argument("edge_expansion_free: edge must be +1 or -1");

    // approach omega = +-(m + s^2) on the +i0 side; fit kernels in s
    std::vector<double> svals;
    for (int j = 0; j < 7; ++j) svals.push_back(0.2 * std::pow(0.5, j));
    std::vector<double> rvals;
    for (double r = 0.5; r <= 4.01; r += 0.5) {
        rvals.push_back(r);
        rvals.push_back(-r);
    }

    // per (r, entry): least squares on basis {1/s, 1, s, s^2}
    const int nb = 4;
    Eigen::MatrixXcd Vand(svals.size(), nb);
    for (std::size_t i = 0; i < svals.size(); ++i) {
        Vand(i, 0) = 1.0 / svals[i];
        Vand(i, 1) = 1.0;
        Vand(i, 2) = svals[i];
        Vand(i, 3) = svals[i] * svals[i];
    }
    const auto qr = Vand.colPivHouseholderQr();

    EdgeExpansion e;
    e.edge_sign = edge_sign;
    e.mass = m;
    std::vector<Mat2> c_m1(rvals.size()), c_0(rvals.size());
    double max_rel_res = 0.0;
    for (std::size_t ri = 0; ri < rvals.size(); ++ri) {
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                Eigen::VectorXcd rhs(svals.size());
                for (std::size_t si = 0; si < svals.size(); ++si) {
                    const double om = edge_sign * (m + svals[si] * svals[si]);
                    const auto p = boundary_point(om, BranchSide::above, m);
                    rhs(si) = dirac_kernel_matrix(p, rvals[ri])[a][b];
                }
                Eigen::VectorXcd coef = qr.solve(rhs);
                const double res = (Vand * coef - rhs).norm() / std::max(rhs.norm(), 1e-300);
                max_rel_res = std::max(max_rel_res, res);
                c_m1[ri][a][b] = coef(0);
                c_0[ri][a][b] = coef(1);
            }
    }
    e.fit_residual = max_rel_res;

    // leading kernel must be r-independent: average and record the spread
    double spread = 0.0, scale = 0.0;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            cplx mean(0.0);
            for (const auto& c : c_m1) mean += c[a][b];
            mean /= static_cast<double>(c_m1.size());
            e.leading[a][b] = mean;
            scale = std::max(scale, std::abs(mean));
            for (const auto& c : c_m1) spread = std::max(spread, std::abs(c[a][b] - mean));
        }
    e.leading_spread = (scale > 0.0) ? spread / scale : spread;

    // regress the s^0 kernel on {|r|, sgn(r), 1}
    Eigen::MatrixXcd R(rvals.size(), 3);
    for (std::size_t ri = 0; ri < rvals.size(); ++ri) {
        R(ri, 0) = std::abs(rvals[ri]);
        R(ri, 1) = (rvals[ri] > 0.0) ? 1.0 : -1.0;
        R(ri, 2) = 1.0;
    }
    const auto qr2 = R.colPivHouseholderQr();
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            Eigen::VectorXcd rhs(rvals.size());
            for (std::size_t ri = 0; ri < rvals.size(); ++ri) rhs(ri) = c_0[ri][a][b];
            Eigen::VectorXcd coef = qr2.solve(rhs);
            e.abs_coeff[a][b] = coef(0);
            e.sgn_coeff[a][b] = coef(1);
        }
    return e;
}

SpinorField apply_constant_kernel(const Mat2& M, const SpinorField& f) {
    const Grid& g = f.grid;
    const cplx su = g.h * pairwise_sum(f.up);
    const cplx sd = g.h * pairwise_sum(f.down);
    SpinorField out(g);
    const cplx u = M[0][0] * su + M[0][1] * sd;
    const cplx d = M[1][0] * su + M[1][1] * sd;
    for (std::size_t i = 0; i < g.N; ++i) {
        out.up[i] = u;
        out.down[i] = d;
    }
    return out;
}

SpinorField apply_edge_order0(const EdgeExpansion& e, const SpinorField& f) {
    const Grid& g = f.grid;
    ToeplitzKernel Tabs(g, [](double r) { return cplx(std::abs(r), 0.0); });
    ToeplitzKernel Tsgn(g, [](double r) {
        return cplx((r > 0.0) ? 1.0 : (r < 0.0 ? -1.0 : 0.0), 0.0);
    });
    auto au = Tabs.apply(f.up), ad = Tabs.apply(f.down);
    auto su = Tsgn.apply(f.up), sd = Tsgn.apply(f.down);
    SpinorField out(g);
    for (std::size_t i = 0; i < g.N; ++i) {
        const cplx fu = g.h * au[i], fd = g.h * ad[i];
        const cplx gu = g.h * su[i], gd = g.h * sd[i];
        out.up[i] = e.abs_coeff[0][0] * fu + e.abs_coeff[0][1] * fd +
                    e.sgn_coeff[0][0] * gu + e.sgn_coeff[0][1] * gd;
        out.down[i] = e.abs_coeff[1][0] * fu + e.abs_coeff[1][1] * fd +
                      e.sgn_coeff[1][0] * gu + e.sgn_coeff[1][1] * gd;
    }
    return out;
}

LinearOperator free_resolvent_operator(const SpectralPoint& p) {
    SpectralPoint padj = p;
    padj.omega = std::conj(p.omega);
    if (p.side == BranchSide::above) padj.side = BranchSide::below;
    else if (p.side == BranchSide::below) padj.side = BranchSide::above;
    LinearOperator op;
    op.apply = [p](const SpinorField& f) { return free_dirac_resolvent_apply(p, f); };
    op.apply_adjoint = [padj](const SpinorField& f) { return free_dirac_resolvent_apply(padj, f); };
    return op;
}

} // namespace dirac1d
