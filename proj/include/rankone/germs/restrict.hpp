#ifndef RANKONE_GERMS_RESTRICT_HPP
#define RANKONE_GERMS_RESTRICT_HPP

#include <functional>

#include "rankone/kernels/spectral.hpp"
#include "rankone/space/group.hpp"

namespace rankone {

// Boundary restriction of a function with germ behavior, recovered
// numerically at one finite-chart boundary point. Two normalizations are
// reported: `polar` is the limit of t^{rho+nu} u(k a(t) o) along the
// geodesic from the base point toward b, and `chart` is the limit of
// y^{-(rho+nu)} u(n(x_b) a(y) o) along the vertical ray. They differ by the
// analytic transfer factor DS; the germ-series coefficient a_0 is `chart`.
struct RestrictionValue {
    Cplx polar{};
    Cplx chart{};
    double error_estimate = 0.0;
    bool stabilized = false;
};

RestrictionValue restrict_at(const ModelSpace& s,
                             const std::function<Cplx(const Point&)>& u, const Vec& xb,
                             const SpectralParameter& snu, double t_start = 64.0,
                             int levels = 5);

// conversion factor between the polar and chart normalizations:
// exp((rho+nu)(-dist(o, pt) + dist(n_pt o, pt)))
Cplx transfer_DS(const ModelSpace& s, const Point& pt, const SpectralParameter& snu);

}  // namespace rankone

#endif
