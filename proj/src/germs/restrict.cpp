#include "rankone/germs/restrict.hpp"

#include <cmath>

#include "rankone/util/fit.hpp"

namespace rankone {

namespace {

// Richardson on samples v(h), v(h/2), ... with error expansion in powers of h
Cplx extrapolate(const std::vector<Cplx>& v, double& err) {
    std::vector<double> re(v.size()), im(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        re[i] = v[i].real();
        im[i] = v[i].imag();
    }
    const RichardsonResult rr = richardson(re, 1.0, 1.0);
    const RichardsonResult ri = richardson(im, 1.0, 1.0);
    err = std::max(rr.error_estimate, ri.error_estimate);
    return Cplx(rr.value, ri.value);
}

}  // namespace

RestrictionValue restrict_at(const ModelSpace& s,
                             const std::function<Cplx(const Point&)>& u, const Vec& xb,
                             const SpectralParameter& snu, double t_start, int levels) {
    RestrictionValue out;
    const Cplx mu = snu.rho + snu.nu;
    const BoundaryPoint b = BoundaryPoint::finite(xb);

    // polar samples along the unit-speed geodesic from the base point to b
    const Vec uo = embed_point(s, s.origin());
    const Vec xi = embed_boundary(s, b);
    const double q = minkowski(uo, xi);
    Vec w(uo.size());
    for (std::size_t r = 0; r < uo.size(); ++r) w[r] = -xi[r] / q - uo[r];

    std::vector<Cplx> polar;
    std::vector<Cplx> chart;
    for (int j = 0; j < levels; ++j) {
        const double t = t_start * std::pow(2.0, j);
        const double r = std::log(t);
        Vec upt(uo.size());
        for (std::size_t k = 0; k < uo.size(); ++k)
            upt[k] = std::cosh(r) * uo[k] + std::sinh(r) * w[k];
        polar.push_back(std::pow(Cplx(t, 0.0), mu) * u(unembed_point(s, upt)));

        const double y = 1.0 / t;
        chart.push_back(std::pow(Cplx(y, 0.0), -mu) * u(Point(xb, y)));
    }
    // sample j has step h_j = 1/t_j = h_0 / 2^j, already coarsest-first
    double ep = 0.0, ec = 0.0;
    out.polar = extrapolate(polar, ep);
    out.chart = extrapolate(chart, ec);
    out.error_estimate = std::max(ep, ec);
    const double scale = std::max({1.0, std::abs(out.polar), std::abs(out.chart)});
    out.stabilized = out.error_estimate <= 1e-6 * scale;
    // no-germ input: the scaled samples keep growing instead of settling
    const double growth =
        std::abs(polar.back()) / std::max(std::abs(polar.front()), 1e-300);
    if (!out.stabilized && growth > 1e3)
        throw std::runtime_error(
            "restrict_at: scaled values diverge; input has no germ behavior");
    return out;
}

Cplx transfer_DS(const ModelSpace& s, const Point& pt, const SpectralParameter& snu) {
    const double d_origin = distance(s, s.origin(), pt);
    // the N-part of pt sits on the vertical line through its chart point
    const double d_fiber = std::fabs(std::log(pt.y));
    return std::exp((snu.rho + snu.nu) * (-d_origin + d_fiber));
}

}  // namespace rankone
