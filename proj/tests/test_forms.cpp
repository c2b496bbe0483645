#include <doctest.h>

#include <cmath>

#include "rankone/forms/cell.hpp"
#include "rankone/forms/field.hpp"
#include "rankone/forms/green.hpp"
#include "rankone/forms/integrate.hpp"
#include "rankone/kernels/kernels.hpp"
#include "rankone/space/laplacian.hpp"
#include "rankone/util/rng.hpp"

using namespace rankone;

namespace {

// non-eigenfunction test fields with analytic gradients
Field smooth_field_a(const ModelSpace& s) {
    const int d = s.dim();
    Field f;
    f.value = [](const Point& p) {
        return std::exp(Cplx(0.0, 1.0) * p.x[0]) * Cplx(p.y, 0.0);
    };
    f.gradient = [d](const Point& p) {
        std::vector<Cplx> g(d, Cplx{});
        g[0] = Cplx(0.0, 1.0) * std::exp(Cplx(0.0, 1.0) * p.x[0]) * p.y;
        g[d - 1] = std::exp(Cplx(0.0, 1.0) * p.x[0]);
        return g;
    };
    return f;
}

Field smooth_field_b(const ModelSpace& s) {
    const int d = s.dim();
    Field f;
    f.value = [](const Point& p) { return Cplx(p.y * p.y + 0.3 * p.x[0], 0.0); };
    f.gradient = [d](const Point& p) {
        std::vector<Cplx> g(d, Cplx{});
        g[0] = 0.3;
        g[d - 1] = 2.0 * p.y;
        return g;
    };
    return f;
}

// coordinate derivative of the eta coefficients by central differences
Cplx exterior_derivative(const ModelSpace& s, const Field& f1, const Field& f2,
                         const Point& pt, double h) {
    const int d = s.dim();
    Cplx div = 0.0;
    for (int j = 0; j < d; ++j) {
        auto at = [&](int step) {
            Point pp = pt;
            if (j == d - 1)
                pp.y += step * h;
            else
                pp.x[j] += step * h;
            return green_form_eta(s, f1, f2, pp).coeff[j];
        };
        const Cplx dj = (-at(2) + 8.0 * at(1) - 8.0 * at(-1) + at(-2)) / (12.0 * h);
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;  // (-1)^{j-1}, 1-based
        div += sign * dj;
    }
    return div;
}

}  // namespace

TEST_CASE("green form: antisymmetry and bilinearity") {
    for (const ModelSpace& s : {ModelSpace::rh2(), ModelSpace::rh3()}) {
        const Field f = smooth_field_a(s), g = smooth_field_b(s);
        const Point pt(Vec(s.nx(), 0.4), 1.3);
        const FormValue ff = green_form_eta(s, f, f, pt);
        for (const Cplx& c : ff.coeff) CHECK(std::abs(c) < 1e-14);
        const FormValue fg = green_form_eta(s, f, g, pt);
        const FormValue gf = green_form_eta(s, g, f, pt);
        for (int j = 0; j < s.dim(); ++j)
            CHECK(std::abs(fg.coeff[j] + gf.coeff[j]) < 1e-13);
    }
}

TEST_CASE("d eta equals the Maass-Selberg density") {
    for (const ModelSpace& s : {ModelSpace::rh2(), ModelSpace::rh3()}) {
        const Field f = smooth_field_a(s), g = smooth_field_b(s);
        const Point pt(Vec(s.nx(), 0.2), 0.9);
        const Cplx dd = exterior_derivative(s, f, g, pt, 1e-3 * pt.y);
        // MS(f, g) sqrt(det) with the Laplacians from the stencil operator
        const Cplx lap_g = laplacian_apply(
            s, [&](const Point& p) { return g.value(p); }, pt);
        const Cplx lap_f = laplacian_apply(
            s, [&](const Point& p) { return f.value(p); }, pt);
        const Cplx ms = f.value(pt) * lap_g - g.value(pt) * lap_f;
        const double sq = metric_at(s, pt).sqrt_det;
        CHECK(std::abs(dd - ms * sq) < 1e-4 * std::max(1.0, std::abs(ms * sq)));
    }
}

TEST_CASE("omega_v: vanishes on its own kernel, closed for eigenfunctions") {
    for (const ModelSpace& s : {ModelSpace::rh2(), ModelSpace::rh3()}) {
        const SpectralParameter snu(Cplx(0.52, 0.0), s);
        const BoundaryPoint b = BoundaryPoint::finite(Vec(s.nx(), 0.7));
        const Field rb = field_poisson_kernel(s, b, snu);
        const Point pt(Vec(s.nx(), -0.3), 1.4);
        const FormValue same = omega_v(s, rb, b, pt, snu);
        for (const Cplx& c : same.coeff) CHECK(std::abs(c) < 1e-14);

        // closedness: d omega_v = 0 when the first argument is an eigenfunction
        const BoundaryPoint b2 = BoundaryPoint::finite(Vec(s.nx(), -1.1));
        const Field f = field_poisson_kernel(s, b2, snu);
        const Field rb_field = field_poisson_kernel(s, b, snu);
        const Cplx residual = exterior_derivative(s, f, rb_field, pt, 1e-3 * pt.y);
        CHECK(std::abs(residual) < 1e-4);
    }
}

TEST_CASE("eta is equivariant under the group action") {
    for (const ModelSpace& s : {ModelSpace::rh2(), ModelSpace::rh3()}) {
        Rng rng(31);
        const GroupElement h = GroupElement::random(s, rng);
        const Field f = smooth_field_a(s), g = smooth_field_b(s);
        const Field fh = field_with_fd_gradient(
            s, [&](const Point& p) { return f.value(h.act(s, p)); });
        const Field gh = field_with_fd_gradient(
            s, [&](const Point& p) { return g.value(h.act(s, p)); });

        // pullback property at the integral level: the integral of
        // eta(f h, g h) over a hypersurface patch equals the integral of
        // eta(f, g) over its image
        const CellPatch patch =
            cell_geodesic_sphere(s, Point(Vec(s.nx(), 0.2), 1.1), 0.7, 12);
        const CellPatch hpatch = transform_patch(s, h, patch);
        IntegrateOptions opts;
        const Cplx lhs = cycle_integral(s, fh, gh, patch, opts).value;
        const Cplx rhs = cycle_integral(s, f, g, hpatch, opts).value;
        CHECK(std::abs(lhs - rhs) < 1e-6 * std::max(1.0, std::abs(rhs)));
    }
}

TEST_CASE("cycle integral: orientation-odd and refinement-stable") {
    const ModelSpace s = ModelSpace::rh2();
    const SpectralParameter snu(Cplx(0.61, 0.0), s);
    const Field f = field_poisson_kernel(s, BoundaryPoint::finite({1.2}), snu);
    const Field k = field_poisson_kernel(s, BoundaryPoint::finite({-0.8}), snu);
    const CellPatch seg =
        cell_geodesic_segment(s, Point({0.0}, 1.0), Point({0.4}, 1.7));
    const IntegralResult a = cycle_integral(s, f, k, seg);
    const IntegralResult b = cycle_integral(s, f, k, seg.flipped());
    CHECK(std::abs(a.value + b.value) < 1e-15 + 1e-12 * std::abs(a.value));
    CHECK(a.refinement_error <= 1e-8 * std::max(1.0, std::abs(a.value)));
}

TEST_CASE("closed contour of omega_v vanishes (boundary-sum check)") {
    for (const ModelSpace& s : {ModelSpace::rh2(), ModelSpace::rh3()}) {
        const SpectralParameter snu(Cplx(0.45, 0.1), s);
        const Field f = field_poisson_kernel(s, BoundaryPoint::finite(Vec(s.nx(), 1.5)), snu);
        const Field k = field_poisson_kernel(s, BoundaryPoint::finite(Vec(s.nx(), -0.4)), snu);
        const CellPatch sphere =
            cell_geodesic_sphere(s, Point(Vec(s.nx(), 0.1), 1.2), 0.8, 12);
        const IntegralResult res = cycle_integral(s, f, k, sphere);
        CHECK(std::abs(res.value) < 1e-7);
    }
}

TEST_CASE("cusp cylinder integrals converge with a reported tail") {
    const ModelSpace s = ModelSpace::rh2();
    const SpectralParameter snu(Cplx(0.5, 0.0), s);
    // both kernel centers away from the cusp at infinity: the integrand
    // decays along the ray
    const Field f = field_poisson_kernel(s, BoundaryPoint::finite({0.9}), snu);
    const Field k = field_poisson_kernel(s, BoundaryPoint::finite({-0.6}), snu);
    const CellPatch ray = cell_vertical_ray(s, {0.2}, 4.0);
    const IntegralResult res = cycle_integral(s, f, k, ray);
    CHECK(res.tail_estimate < 1e-9);
    CHECK(res.t_cut > 4.0);

    // an eigenfunction that does not decay at the cusp triggers the decay error
    const Field bad = field_character(s, snu);  // y^{rho+nu} grows at infinity
    CHECK_THROWS_AS(cycle_integral(s, bad, k, ray), std::runtime_error);
}

TEST_CASE("reproducing formula: interior value, exterior zero") {
    for (const ModelSpace& s : {ModelSpace::rh2(), ModelSpace::rh3()}) {
        const Cplx nu(0.57, 0.0);
        const SpectralParameter snu(nu, s);
        auto prof = std::make_shared<RadialProfile>(s, nu, 1e-4, 40.0, 2400);
        const Point center(Vec(s.nx(), 0.15), 1.1);
        const std::vector<CellPatch> contour = {
            cell_geodesic_sphere(s, center, 0.9, s.dim() == 2 ? 16 : 12)};

        const Field h =
            field_poisson_kernel(s, BoundaryPoint::finite(Vec(s.nx(), 2.0)), snu);
        const Cplx expect = resolvent_constant(nu, s) * h.value(center);

        const ReproducingResult inside =
            reproducing_formula(s, h, contour, center, prof);
        CHECK(std::abs(inside.integral - expect) < 2e-4 * std::abs(expect));

        const Point outside_pt(Vec(s.nx(), 3.0), 0.4);
        const ReproducingResult outside =
            reproducing_formula(s, h, contour, outside_pt, prof);
        CHECK(std::abs(outside.integral) < 1e-5 * std::abs(expect));
    }
}

TEST_CASE("resolvent identity on RH2") {
    const ModelSpace s = ModelSpace::rh2();
    const Cplx nu(0.6, 0.0);
    const RadialProfile prof(s, nu, 1e-4, 40.0, 2400);
    const Point x({0.2}, 1.0);
    const Point x0({-0.1}, 1.3);
    const double radius = 1.1;
    const Cplx lhs = resolvent_identity_lhs(s, prof, x, x0, radius);
    const Cplx rhs = resolvent_constant(nu, s) * bump_chi(distance(s, x0, x), radius);
    CHECK(std::abs(lhs - rhs) < 1e-3 * std::abs(rhs));
}

TEST_CASE("the reproducing constant is pi * 2 nu c(nu): small-sphere flux oracle") {
    // Independent derivation of the measure normalization: the flux of the
    // resolvent kernel through a small sphere around its center equals the
    // delta-extraction constant. Constant across nu and across the spaces.
    for (const ModelSpace& s : {ModelSpace::rh2(), ModelSpace::rh3()}) {
        for (double nur : {0.31, 0.8}) {
            const Cplx nu(nur, 0.0);
            auto prof = std::make_shared<RadialProfile>(s, nu, 1e-4, 40.0, 2400);
            const Point x(Vec(s.nx(), 0.1), 1.0);
            // f identically 1 near x: eta(1, q) carries only the q-gradient
            Field onef;
            onef.value = [](const Point&) { return Cplx(1.0, 0.0); };
            onef.gradient = [&s](const Point&) {
                return std::vector<Cplx>(s.dim(), Cplx{});
            };
            const Field qf = field_q_kernel(s, prof, x);
            for (double eps : {1e-2, 5e-3}) {
                const CellPatch sphere = cell_geodesic_sphere(s, x, eps, 16);
                const Cplx flux = cycle_integral(s, onef, qf, sphere).value;
                const Cplx expect = M_PI * twonu_c(nu, s);
                CHECK(std::abs(flux - expect) < 2e-3 * std::abs(expect));
            }
        }
    }
}
