#ifndef RANKONE_SPACE_LAPLACIAN_HPP
#define RANKONE_SPACE_LAPLACIAN_HPP

#include <complex>
#include <functional>

#include "rankone/space/model_space.hpp"
#include "rankone/space/point.hpp"
#include "rankone/util/polynomial.hpp"

namespace rankone {

using Cplx = std::complex<double>;
using ScalarField = std::function<Cplx(const Point&)>;

// In normalized horospherical coordinates the positive Laplacian splits as
//   Delta = -y^2 d_y^2 + (2 rho - 1) y d_y - y^2 L1 - y^4 L2,
// with L2 = sum of d^2/dx_i^2 over the central coordinates and L1 the
// second-order operator in the x variables produced by the inverse metric.
// (The sign of L2 follows from expanding the divergence form of the
// operator with the inverse metric blocks; the opposite sign sometimes
// quoted does not reproduce the eigenvalue rho^2 - nu^2 on y^{rho+nu}.)
//
// Application is by 4th-order central finite differences with steps scaled
// by the height: h_y = h_rel*y, h_{x1} = h_rel*y, h_{x2} = h_rel*y^2.
Cplx laplacian_apply(const ModelSpace& s, const ScalarField& f, const Point& pt,
                     double h_rel = 1e-3);

// L1 and L2 as exact operators on polynomials in the x variables; used by
// the boundary-germ recursion.
template <typename C>
struct XOperators {
    // L2 p = sum_{i > p} d^2 p / dx_i^2
    static Polynomial<C> apply_l2(const ModelSpace& s, const Polynomial<C>& f) {
        Polynomial<C> r(s.nx());
        for (int i = s.p(); i < s.nx(); ++i) r = r + f.derivative(i).derivative(i);
        return r;
    }

    static Polynomial<C> apply_l1(const ModelSpace& s, const Polynomial<C>& f) {
        const int p = s.p(), q = s.q(), n = s.nx();
        Polynomial<C> r(n);
        for (int j = 0; j < p; ++j) r = r + f.derivative(j).derivative(j);
        // 2 sum_{j<=p, l>p} C_{j,l}(x) d_j d_l with the linear forms from b
        for (int j = 0; j < p; ++j)
            for (int l = 0; l < q; ++l) {
                Polynomial<C> cjl(n);
                for (int i = 0; i < p; ++i) {
                    const double coeff = s.b_const(i, j, l);
                    if (coeff != 0.0)
                        cjl = cjl + Polynomial<C>::variable(n, i, C(static_cast<int>(coeff)));
                }
                if (cjl.is_zero()) continue;
                r = r + (cjl * f.derivative(j).derivative(p + l)).scaled(C(2));
                // first order part: (d_j C_{j,l}) d_l
                const double diag = s.b_const(j, j, l);
                if (diag != 0.0)
                    r = r + f.derivative(p + l).scaled(C(static_cast<int>(diag)));
            }
        // sum_{l,m>p} (C^t C)_{l,m}(x) d_l d_m
        for (int l = 0; l < q; ++l)
            for (int m = 0; m < q; ++m) {
                Polynomial<C> clm(n);
                for (int j = 0; j < p; ++j) {
                    Polynomial<C> cjl(n), cjm(n);
                    for (int i = 0; i < p; ++i) {
                        const double bl = s.b_const(i, j, l), bm = s.b_const(i, j, m);
                        if (bl != 0.0)
                            cjl = cjl + Polynomial<C>::variable(n, i, C(static_cast<int>(bl)));
                        if (bm != 0.0)
                            cjm = cjm + Polynomial<C>::variable(n, i, C(static_cast<int>(bm)));
                    }
                    clm = clm + cjl * cjm;
                }
                if (clm.is_zero()) continue;
                r = r + clm * f.derivative(p + l).derivative(p + m);
            }
        return r;
    }
};

// coefficient of -d/dr in the radial part of the Laplacian at distance r
// from the center: p coth(r) + 2 q coth(2r)
double radial_drift(const ModelSpace& s, double r);

}  // namespace rankone

#endif
