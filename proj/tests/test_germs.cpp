#include <doctest.h>

#include <cmath>

#include "rankone/forms/field.hpp"
#include "rankone/germs/germ.hpp"
#include "rankone/germs/restrict.hpp"
#include "rankone/kernels/kernels.hpp"
#include "rankone/kernels/resolvent.hpp"
#include "rankone/space/laplacian.hpp"
#include "rankone/util/fit.hpp"

using namespace rankone;

using PR = Polynomial<Rational>;

TEST_CASE("germ recursion: constants, quadratic and linear data") {
    const ModelSpace rh2 = ModelSpace::rh2();
    const Rational nu(1, 3);

    // constant data: all higher coefficients vanish
    const auto g1 = germ_from_boundary(rh2, PR::constant(1, Rational(1)), nu, 6);
    for (int k = 1; k <= 6; ++k) CHECK(g1.a[k].is_zero());

    // phi = x^2 on RH2: a_2 = -1/(2(1+nu)), a_4 = 0
    const PR x = PR::variable(1, 0);
    const auto g2 = germ_from_boundary(rh2, x * x, nu, 4);
    const Rational expect = Rational(-1) / (Rational(2) * (Rational(1) + nu));
    CHECK(g2.a[1] == PR::constant(1, expect));
    CHECK(g2.a[2].is_zero());

    // phi = x_1 on RH3: everything beyond a_0 vanishes
    const ModelSpace rh3 = ModelSpace::rh3();
    const auto g3 = germ_from_boundary(rh3, PR::variable(2, 0), nu, 5);
    for (int k = 1; k <= 5; ++k) CHECK(g3.a[k].is_zero());

    CHECK_THROWS_AS(germ_from_boundary(rh2, x, Rational(-1), 3), std::domain_error);
    CHECK_THROWS_AS(germ_from_boundary(rh2, x, Rational(-1, 2), 3), std::domain_error);
}

TEST_CASE("polynomial germs terminate on the q = 0 instances") {
    const ModelSpace s = ModelSpace::rh3();
    const PR x0 = PR::variable(2, 0), x1 = PR::variable(2, 1);
    const PR phi = x0 * x0 * x1 * x1 + x0 * x1.scaled(Rational(2));
    const auto g = germ_from_boundary(s, phi, Rational(2, 5), 8);
    // total degree drops by two per step: zero beyond degree/2
    CHECK_FALSE(g.a[1].is_zero());
    CHECK_FALSE(g.a[2].is_zero());
    for (int k = 3; k <= 8; ++k) CHECK(g.a[k].is_zero());
}

TEST_CASE("germ evaluation: restriction at y = 0, even analytic part") {
    const ModelSpace s = ModelSpace::rh2();
    const PR x = PR::variable(1, 0);
    const PR phi = x * x * x * x - x.scaled(Rational(3));
    const auto g = germ_from_boundary(s, phi, Rational(1, 4), 3);
    const Vec at = {0.7};
    CHECK(germ_evaluate(s, g, at, 0.0).analytic_part.real() ==
          doctest::Approx(0.7 * 0.7 * 0.7 * 0.7 - 3 * 0.7).epsilon(1e-14));
    // even series: B(x, -y) = B(x, y) exactly
    const Cplx plus = germ_evaluate(s, g, at, 0.4).analytic_part;
    const Cplx minus = germ_evaluate(s, g, at, -0.4).analytic_part;
    CHECK(plus == minus);
}

TEST_CASE("truncated germ PDE residual scales at the truncation order") {
    const ModelSpace s = ModelSpace::rh2();
    const double nu = 0.37;
    Polynomial<Cplx> phi(1);
    // x^6: nonterminating until order 3
    {
        Polynomial<Cplx>::Expo e = {6};
        phi.add_term(e, Cplx(1.0, 0.0));
    }
    const int K = 2;
    const auto g = germ_from_boundary<Cplx>(s, phi, Cplx(nu, 0.0), K);

    // exact residual of the analytic-part equation scales like y^{2K+1}
    std::vector<double> ys, res;
    for (double y : {0.2, 0.1, 0.05, 0.025}) {
        ys.push_back(y);
        res.push_back(std::abs(germ_pde_residual(s, g, {0.6}, y)));
    }
    const LineFit fit = fit_loglog(ys, res);
    CHECK(fit.slope == doctest::Approx(2.0 * K + 1.0).epsilon(0.05));

    // the full u = y^{rho+nu} B has laplacian residual of order 2K + rho + nu
    // against the eigenvalue; checked with the stencil laplacian
    const SpectralParameter snu(Cplx(nu, 0.0), s);
    std::vector<double> ys2, res2;
    for (double y : {0.4, 0.2, 0.1}) {
        const ScalarField u = [&](const Point& p) {
            return germ_evaluate(s, g, p.x, p.y).value;
        };
        const Point pt({0.6}, y);
        const Cplx lap = laplacian_apply(s, u, pt, 5e-4);
        const Cplx expect = snu.eigenvalue() * u(pt);
        ys2.push_back(y);
        res2.push_back(std::abs(lap - expect));
    }
    const LineFit fit2 = fit_loglog(ys2, res2);
    CHECK(fit2.slope == doctest::Approx(2.0 * K + 2.0 + s.rho() + nu).epsilon(0.2));
}

TEST_CASE("CH2 germ recursion couples through the metric cross terms") {
    const ModelSpace s = ModelSpace::ch2();
    const Rational nu(1, 2);
    const PR x0 = PR::variable(3, 0), x1 = PR::variable(3, 1), x2 = PR::variable(3, 2);
    // phi = x2^2 (central data): L1 phi = 2(x0^2 + x1^2) through the metric
    // coupling, so a_2 = -(x0^2 + x1^2)/(2(1+nu)) and a_4 = -1/30 at nu = 1/2
    const auto g = germ_from_boundary(s, x2 * x2, nu, 4);
    const PR expect_a2 = (x0 * x0 + x1 * x1).scaled(Rational(-1, 3));
    CHECK(g.a[1] == expect_a2);
    CHECK(g.a[2] == PR::constant(3, Rational(-1, 30)));
    CHECK(g.a[3].is_zero());  // central degree strictly decreases: terminates

    // truncating before termination leaves the expected residual slope
    Polynomial<Cplx> phic(3);
    {
        Polynomial<Cplx>::Expo e = {0, 0, 2};
        phic.add_term(e, Cplx(1.0, 0.0));
    }
    const auto gc = germ_from_boundary<Cplx>(s, phic, Cplx(0.5, 0.0), 1);
    std::vector<double> ys, res;
    for (double y : {0.2, 0.1, 0.05}) {
        ys.push_back(y);
        res.push_back(std::abs(germ_pde_residual(s, gc, {0.3, -0.2, 0.4}, y)));
    }
    const LineFit fit = fit_loglog(ys, res);
    CHECK(fit.slope == doctest::Approx(3.0).epsilon(0.05));
}

TEST_CASE("series organization through the iterated operator matches exactly") {
    const ModelSpace s = ModelSpace::rh2();
    const Rational nu(1, 3);
    const PR x = PR::variable(1, 0);
    // degree-20 data so that coefficients survive through order 10
    PR phi = PR::constant(1, Rational(1));
    for (int i = 0; i < 20; ++i) phi = phi * x;
    PR phi2 = PR::constant(1, Rational(1));
    for (int i = 0; i < 13; ++i) phi2 = phi2 * x;
    phi = phi - phi2.scaled(Rational(3)) + x.scaled(Rational(1, 5));

    const int order = 10;
    const auto g = germ_from_boundary(s, phi, nu, order);
    const auto h = lt_iterate(s, phi, nu, order);

    // n = 0 gives phi back
    const auto h0 = lt_iterate(s, phi, nu, 0);
    CHECK(h0.at(0) == phi);

    for (int m = 0; m <= order; ++m) {
        const auto it = h.find(m);
        if (it == h.end())
            CHECK(g.a[m].is_zero());
        else
            CHECK(it->second == g.a[m]);
    }
}

TEST_CASE("restriction recovers boundary data and kernel germs") {
    const ModelSpace s = ModelSpace::rh2();
    const Cplx nu(0.41, 0.0);
    const SpectralParameter snu(nu, s);

    // the character y^{rho+nu}: chart restriction identically 1
    const auto character = [&](const Point& p) {
        return std::pow(Cplx(p.y, 0.0), snu.rho + snu.nu);
    };
    for (double xb : {0.0, 0.8, -1.3}) {
        const RestrictionValue r = restrict_at(s, character, {xb}, snu);
        CHECK(std::abs(r.chart - 1.0) < 1e-8);
        CHECK(r.stabilized);
    }

    // the resolvent centered at the base point: polar restriction 1
    auto prof = std::make_shared<RadialProfile>(s, nu, 1e-4, 60.0, 3000);
    const auto qfun = [&](const Point& p) {
        return prof->value(distance(s, s.origin(), p));
    };
    for (double xb : {0.3, -0.9}) {
        const RestrictionValue r = restrict_at(s, qfun, {xb}, snu, 256.0, 5);
        CHECK(std::abs(r.polar - 1.0) < 1e-5);
    }

    // transfer factor consistency: chart = DS * polar for the character
    const RestrictionValue rr = restrict_at(s, character, {0.8}, snu);
    // DS along the ray to the boundary point, extrapolated near the boundary
    const Vec uo = embed_point(s, s.origin());
    const Vec xi = embed_boundary(s, BoundaryPoint::finite({0.8}));
    const double q = minkowski(uo, xi);
    Vec w(uo.size());
    for (std::size_t k = 0; k < uo.size(); ++k) w[k] = -xi[k] / q - uo[k];
    const double r = std::log(4096.0);
    Vec upt(uo.size());
    for (std::size_t k = 0; k < uo.size(); ++k)
        upt[k] = std::cosh(r) * uo[k] + std::sinh(r) * w[k];
    const Point near_b = unembed_point(s, upt);
    const Cplx ds = transfer_DS(s, near_b, snu);
    CHECK(std::abs(rr.chart - ds * rr.polar) < 1e-3 * std::abs(rr.chart));

    // DS tends to 1 on the vertical line above the chart origin
    CHECK(std::abs(transfer_DS(s, Point({0.0}, 0.01), snu) - 1.0) < 1e-12);
}

TEST_CASE("round trip: boundary data -> germ -> restriction") {
    const ModelSpace s = ModelSpace::rh3();
    const Cplx nu(0.29, 0.0);
    const SpectralParameter snu(nu, s);
    Polynomial<Cplx> phi(2);
    {
        Polynomial<Cplx>::Expo e = {2, 1};
        phi.add_term(e, Cplx(1.0, 0.0));
        e = {0, 1};
        phi.add_term(e, Cplx(-0.5, 0.0));
    }
    const auto g = germ_from_boundary<Cplx>(s, phi, nu, 4);  // terminating
    const auto u = [&](const Point& p) { return germ_evaluate(s, g, p.x, p.y).value; };
    for (const Vec& xb : {Vec{0.3, -0.4}, Vec{0.0, 0.9}}) {
        const RestrictionValue r = restrict_at(s, u, xb, snu);
        const Cplx expect = phi.evaluate<Cplx>({Cplx(xb[0], 0), Cplx(xb[1], 0)});
        CHECK(std::abs(r.chart - expect) < 1e-8 * std::max(1.0, std::abs(expect)));
    }
}

TEST_CASE("restriction flags non-germ input") {
    const ModelSpace s = ModelSpace::rh2();
    const SpectralParameter snu(Cplx(0.5, 0.0), s);
    // scaled by the wrong power: t^{rho+nu} u blows up
    const auto bad = [&](const Point& p) {
        return std::pow(Cplx(p.y, 0.0), -2.0 * (snu.rho + snu.nu));
    };
    CHECK_THROWS_AS(restrict_at(s, bad, {0.2}, snu), std::runtime_error);
}
