#include "rankone/space/laplacian.hpp"

#include <cmath>
#include <stdexcept>

namespace rankone {

namespace {

// 4th-order central stencils
template <typename Eval>
Cplx d1(const Eval& at, double h) {
    return (-at(2) + 8.0 * at(1) - 8.0 * at(-1) + at(-2)) / (12.0 * h);
}

template <typename Eval>
Cplx d2(const Eval& at, const Cplx& center, double h) {
    return (-at(2) + 16.0 * at(1) - 30.0 * center + 16.0 * at(-1) - at(-2)) / (12.0 * h * h);
}

}  // namespace

Cplx laplacian_apply(const ModelSpace& s, const ScalarField& f, const Point& pt,
                     double h_rel) {
    if (!(h_rel > 0.0)) throw std::invalid_argument("laplacian_apply: h_rel must be > 0");
    const int p = s.p(), q = s.q(), nx = s.nx();
    const double y = pt.y;
    const double rho = s.rho();

    double hy = h_rel * y;
    if (2.0 * hy >= y) hy = 0.4 * y;  // keep the stencil at positive height

    Vec hx(nx);
    for (int i = 0; i < nx; ++i) hx[i] = (i < p) ? h_rel * y : h_rel * y * y;

    auto shifted = [&](int dir, int step, double h) {
        Point pp = pt;
        if (dir == nx)
            pp.y += step * h;
        else
            pp.x[dir] += step * h;
        return pp;
    };

    const Cplx f0 = f(pt);

    auto at_y = [&](int k) { return f(shifted(nx, k, hy)); };
    const Cplx fy = d1(at_y, hy);
    const Cplx fyy = d2(at_y, f0, hy);

    // pure x second derivatives and first derivatives
    std::vector<Cplx> fi(nx), fii(nx);
    for (int i = 0; i < nx; ++i) {
        auto at = [&](int k) { return f(shifted(i, k, hx[i])); };
        fi[i] = d1(at, hx[i]);
        fii[i] = d2(at, f0, hx[i]);
    }

    // mixed derivatives where the structure constants demand them
    const Mat c = s.c_matrix(pt.x);
    auto mixed_d = [&](int a, int b) {
        auto outer = [&](int ka) {
            const Point base = shifted(a, ka, hx[a]);
            auto at = [&](int kb) {
                Point pp = base;
                pp.x[b] += kb * hx[b];
                return f(pp);
            };
            return d1(at, hx[b]);
        };
        return d1(outer, hx[a]);
    };

    Cplx l1 = 0.0;
    for (int j = 0; j < p; ++j) l1 += fii[j];
    for (int j = 0; j < p; ++j)
        for (int l = 0; l < q; ++l)
            if (c(j, l) != 0.0) l1 += 2.0 * c(j, l) * mixed_d(j, p + l);
    for (int l = 0; l < q; ++l) {
        double div = 0.0;
        for (int j = 0; j < p; ++j) div += s.b_const(j, j, l);
        if (div != 0.0) l1 += div * fi[p + l];
    }
    for (int l = 0; l < q; ++l)
        for (int m = 0; m < q; ++m) {
            double cc = 0.0;
            for (int j = 0; j < p; ++j) cc += c(j, l) * c(j, m);
            if (cc == 0.0) continue;
            l1 += cc * (l == m ? fii[p + l] : mixed_d(p + l, p + m));
        }

    Cplx l2 = 0.0;
    for (int l = p; l < nx; ++l) l2 += fii[l];

    const double y2 = y * y;
    return -y2 * fyy + (2.0 * rho - 1.0) * y * fy - y2 * l1 - y2 * y2 * l2;
}

double radial_drift(const ModelSpace& s, double r) {
    if (!(r > 0.0)) throw std::domain_error("radial_drift: r must be positive");
    return s.p() / std::tanh(r) + 2.0 * s.q() / std::tanh(2.0 * r);
}

}  // namespace rankone
