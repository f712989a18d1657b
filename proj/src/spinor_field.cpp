#include "dirac1d/spinor_field.hpp"

#include <cmath>
#include <stdexcept>

namespace dirac1d {

bool SpinorField::all_finite() const {
    for (std::size_t i = 0; i < size(); ++i) {
        if (!std::isfinite(up[i].real()) || !std::isfinite(up[i].imag()) ||
            !std::isfinite(down[i].real()) || !std::isfinite(down[i].imag()))
            return false;
    }
    return true;
}

SpinorField& SpinorField::operator+=(const SpinorField& o) {
    require_same_grid(grid, o.grid, "SpinorField::operator+=");
    for (std::size_t i = 0; i < size(); ++i) {
        up[i] += o.up[i];
        down[i] += o.down[i];
    }
    return *this;
}

SpinorField& SpinorField::operator-=(const SpinorField& o) {
    require_same_grid(grid, o.grid, "SpinorField::operator-=");
    for (std::size_t i = 0; i < size(); ++i) {
        up[i] -= o.up[i];
        down[i] -= o.down[i];
    }
    return *this;
}

SpinorField& SpinorField::operator*=(cplx s) {
    for (std::size_t i = 0; i < size(); ++i) {
        up[i] *= s;
        down[i] *= s;
    }
    return *this;
}

SpinorField operator+(SpinorField a, const SpinorField& b) { return a += b; }
SpinorField operator-(SpinorField a, const SpinorField& b) { return a -= b; }
SpinorField operator*(cplx s, SpinorField f) { return f *= s; }

void add_scaled(SpinorField& y, cplx s, const SpinorField& x) {
    require_same_grid(y.grid, x.grid, "add_scaled");
    for (std::size_t i = 0; i < y.size(); ++i) {
        y.up[i] += s * x.up[i];
        y.down[i] += s * x.down[i];
    }
}

double pairwise_sum(const std::vector<double>& v) {
    // fixed binary tree, independent of any chunking
    std::function<double(std::size_t, std::size_t)> rec =
        [&](std::size_t lo, std::size_t hi) -> double {
        if (hi - lo <= 8) {
            double s = 0.0;
            for (std::size_t i = lo; i < hi; ++i) s += v[i];
            return s;
        }
        const std::size_t mid = lo + (hi - lo) / 2;
        return rec(lo, mid) + rec(mid, hi);
    };
    return v.empty() ? 0.0 : rec(0, v.size());
}

cplx pairwise_sum(const std::vector<cplx>& v) {
    std::function<cplx(std::size_t, std::size_t)> rec =
        [&](std::size_t lo, std::size_t hi) -> cplx {
        if (hi - lo <= 8) {
            cplx s(0.0);
            for (std::size_t i = lo; i < hi; ++i) s += v[i];
            return s;
        }
        const std::size_t mid = lo + (hi - lo) / 2;
        return rec(lo, mid) + rec(mid, hi);
    };
    return v.empty() ? cplx(0.0) : rec(0, v.size());
}

cplx inner_product(const SpinorField& f, const SpinorField& g) {
    require_same_grid(f.grid, g.grid, "inner_product");
    std::vector<cplx> terms(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        terms[i] = std::conj(f.up[i]) * g.up[i] + std::conj(f.down[i]) * g.down[i];
    return f.grid.h * pairwise_sum(terms);
}

double l2_norm(const SpinorField& f) {
    std::vector<double> terms(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        terms[i] = std::norm(f.up[i]) + std::norm(f.down[i]);
    return std::sqrt(f.grid.h * pairwise_sum(terms));
}

SpinorField make_field(const Grid& g, const std::function<cplx(double)>& comp1,
                       const std::function<cplx(double)>& comp2) {
    SpinorField f(g);
    for (std::size_t i = 0; i < g.N; ++i) {
        const double x = g.node(i);
        f.up[i] = comp1(x);
        f.down[i] = comp2(x);
    }
    return f;
}

} // namespace dirac1d
