#ifndef RANKONE_GERMS_GERM_HPP
#define RANKONE_GERMS_GERM_HPP

#include <map>
#include <stdexcept>
#include <vector>

#include "rankone/kernels/spectral.hpp"
#include "rankone/space/laplacian.hpp"
#include "rankone/space/model_space.hpp"
#include "rankone/util/polynomial.hpp"
#include "rankone/util/rational.hpp"

namespace rankone {

// Truncated expansion sum_k a_{2k}(x) y^{2k} of the analytic part of a
// boundary germ around a finite-chart patch. Odd coefficients vanish by
// construction; a_0 is the boundary restriction.
template <typename C>
struct GermSeries {
    C nu;
    int order = 0;  // K: coefficients a_0 .. a_{2K}
    std::vector<Polynomial<C>> a;
    double patch_radius = 1.0;
};

namespace germ_detail {

inline bool nu_excluded(const Rational& nu) {
    // nu in (1/2) Z_{<= -1}
    const Rational twice = nu * Rational(2);
    return twice.den() == 1 && twice.num() <= -1;
}
inline bool nu_excluded(const Cplx& nu) {
    return SpectralParameter(nu, 1.0).in_excluded_set();
}
inline Rational recursion_factor(const Rational& nu, int k) {
    return Rational(-1) / (Rational(4 * k) * (Rational(k) + nu));
}
inline Cplx recursion_factor(const Cplx& nu, int k) {
    return -1.0 / (4.0 * k * (static_cast<double>(k) + nu));
}

}  // namespace germ_detail

// a_0 = phi; a_{2k} = -(L1 a_{2(k-1)} + L2 a_{2(k-2)}) / (4k(k+nu))
template <typename C>
GermSeries<C> germ_from_boundary(const ModelSpace& s, const Polynomial<C>& phi,
                                 const C& nu, int order) {
    if (germ_detail::nu_excluded(nu))
        throw std::domain_error(
            "germ_from_boundary: nu lies in the excluded half-integers");
    if (phi.nvars() != s.nx())
        throw std::invalid_argument("germ_from_boundary: wrong number of variables");
    GermSeries<C> g;
    g.nu = nu;
    g.order = order;
    g.a.reserve(order + 1);
    g.a.push_back(phi);
    for (int k = 1; k <= order; ++k) {
        Polynomial<C> rhs = XOperators<C>::apply_l1(s, g.a[k - 1]);
        if (k >= 2) rhs = rhs + XOperators<C>::apply_l2(s, g.a[k - 2]);
        g.a.push_back(rhs.scaled(germ_detail::recursion_factor(nu, k)));
    }
    return g;
}

// analytic part B(x, y) = sum a_{2k}(x) y^{2k}; valid for negative y as well
template <typename C>
Cplx germ_analytic_part(const GermSeries<C>& g, const Vec& x, double y) {
    std::vector<Cplx> xc(x.begin(), x.end());
    Cplx acc = 0.0;
    double ypow = 1.0;
    for (int k = 0; k <= g.order; ++k) {
        acc += g.a[k].template evaluate<Cplx>(xc) * ypow;
        ypow *= y * y;
    }
    return acc;
}

struct GermValue {
    Cplx value;                    // y^{rho+nu} B(x, y); requires y > 0
    Cplx analytic_part;            // B(x, y); any sign of y
    double truncation_estimate;    // |a_{2K}(x)| y^{2K}
    bool outside_radius = false;
};

template <typename C>
GermValue germ_evaluate(const ModelSpace& s, const GermSeries<C>& g, const Vec& x,
                        double y) {
    GermValue out;
    out.analytic_part = germ_analytic_part(g, x, y);
    std::vector<Cplx> xc(x.begin(), x.end());
    out.truncation_estimate =
        std::abs(g.a[g.order].template evaluate<Cplx>(xc)) * std::pow(std::fabs(y), 2.0 * g.order);
    out.outside_radius = std::fabs(y) > g.patch_radius;
    if (y > 0.0) {
        Cplx nu_c;
        if constexpr (std::is_same_v<C, Rational>)
            nu_c = Cplx(g.nu.to_double(), 0.0);
        else
            nu_c = g.nu;
        out.value = std::pow(Cplx(y, 0.0), s.rho() + nu_c) * out.analytic_part;
    }
    return out;
}

// exact residual of the analytic-part equation
//   y B'' + (2 nu + 1) B' + y L1 B + y^3 L2 B = 0
// applied to the truncated series; vanishes through order 2K - 1 in y
template <typename C>
Cplx germ_pde_residual(const ModelSpace& s, const GermSeries<C>& g, const Vec& x,
                       double y) {
    // leftover terms: y^{2K+1} (L1 a_{2K} + L2 a_{2K-2}) + y^{2K+3} L2 a_{2K}
    std::vector<Cplx> xc(x.begin(), x.end());
    Polynomial<C> t1 = XOperators<C>::apply_l1(s, g.a[g.order]);
    if (g.order >= 1) t1 = t1 + XOperators<C>::apply_l2(s, g.a[g.order - 1]);
    const Polynomial<C> t2 = XOperators<C>::apply_l2(s, g.a[g.order]);
    const Cplx c1 = t1.template evaluate<Cplx>(xc);
    const Cplx c2 = t2.template evaluate<Cplx>(xc);
    return std::pow(y, 2.0 * g.order + 1.0) * (c1 + y * y * c2);
}

// The alternative organization of the series: partial sums of H = sum Lt^n phi,
// where Lt maps y^{2h} P to
//   -y^{2h+2} L1 P / (4(h+1)(h+1+nu)) - y^{2h+4} L2 P / (4(h+2)(h+2+nu)).
// Represented as a map from the y-power h to the polynomial coefficient.
template <typename C>
using YGradedPoly = std::map<int, Polynomial<C>>;

template <typename C>
YGradedPoly<C> lt_apply(const ModelSpace& s, const C& nu, const YGradedPoly<C>& f) {
    YGradedPoly<C> out;
    for (const auto& [h, poly] : f) {
        const Polynomial<C> l1 = XOperators<C>::apply_l1(s, poly);
        if (!l1.is_zero()) {
            const C c1 = C(-1) / (C(4 * (h + 1)) * (C(h + 1) + nu));
            auto it = out.find(h + 1);
            if (it == out.end())
                out[h + 1] = l1.scaled(c1);
            else
                it->second = it->second + l1.scaled(c1);
        }
        const Polynomial<C> l2 = XOperators<C>::apply_l2(s, poly);
        if (!l2.is_zero()) {
            const C c2 = C(-1) / (C(4 * (h + 2)) * (C(h + 2) + nu));
            auto it = out.find(h + 2);
            if (it == out.end())
                out[h + 2] = l2.scaled(c2);
            else
                it->second = it->second + l2.scaled(c2);
        }
    }
    // drop exact zeros
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

// partial sum H_n = sum_{j <= n} Lt^j phi, graded by the power of y^2
template <typename C>
YGradedPoly<C> lt_iterate(const ModelSpace& s, const Polynomial<C>& phi, const C& nu,
                          int n) {
    if (germ_detail::nu_excluded(nu))
        throw std::domain_error("lt_iterate: nu lies in the excluded half-integers");
    YGradedPoly<C> total, current;
    current[0] = phi;
    total = current;
    for (int j = 1; j <= n; ++j) {
        current = lt_apply(s, nu, current);
        if (current.empty()) break;
        for (const auto& [h, poly] : current) {
            auto it = total.find(h);
            if (it == total.end())
                total[h] = poly;
            else
                it->second = it->second + poly;
        }
    }
    return total;
}

}  // namespace rankone

#endif
