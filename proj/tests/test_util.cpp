#include <doctest.h>

#include <cmath>

#include "rankone/util/fit.hpp"
#include "rankone/util/gamma.hpp"
#include "rankone/util/polynomial.hpp"
#include "rankone/util/quadrature.hpp"
#include "rankone/util/rational.hpp"
#include "rankone/util/rng.hpp"

using namespace rankone;

namespace {

// Independent Gamma oracle: Stirling series with upward recurrence, kept in
// test code so the Lanczos path never checks against itself.
Cplx stirling_log_gamma(Cplx z) {
    int shifts = 0;
    while (z.real() < 20.0) {
        ++shifts;
        z += 1.0;
    }
    static const double b[] = {1.0 / 12, -1.0 / 360, 1.0 / 1260, -1.0 / 1680,
                               1.0 / 1188, -691.0 / 360360, 1.0 / 156};
    Cplx lg = (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * M_PI);
    Cplx zp = z;
    for (double coeff : b) {
        lg += coeff / zp;
        zp *= z * z;
    }
    for (int k = 0; k < shifts; ++k) lg -= std::log(z - Cplx(k + 1, 0.0));
    return lg;
}

}  // namespace

TEST_CASE("Lanczos gamma against the Stirling oracle") {
    Rng rng(401);
    for (int i = 0; i < 200; ++i) {
        const Cplx z(rng.uniform(0.05, 8.0), rng.uniform(-4.0, 4.0));
        const Cplx a = log_gamma(z);
        const Cplx b = stirling_log_gamma(z);
        CHECK(std::abs(a - b) < 1e-12 * std::max(1.0, std::abs(b)));
    }
    CHECK(std::abs(gamma_fn(Cplx(5.0, 0.0)) - 24.0) < 1e-12 * 24.0);
    CHECK(std::abs(gamma_fn(Cplx(0.5, 0.0)) - std::sqrt(M_PI)) < 1e-13);
}

TEST_CASE("Gauss-Legendre integrates polynomials exactly") {
    for (int order : {2, 5, 12, 20}) {
        // exact for degree 2*order - 1
        const int deg = 2 * order - 1;
        const double got = integrate_panels(
            [&](double x) { return std::pow(x, deg) + 3.0 * x * x; }, -1.0, 1.0, order, 1);
        CHECK(got == doctest::Approx(2.0).epsilon(1e-13));
    }
    const double v = integrate_adaptive([](double x) { return std::exp(-x * x); }, -8.0,
                                        8.0, 1e-12);
    CHECK(v == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-11));
}

TEST_CASE("rational arithmetic is exact") {
    const Rational a(1, 3), b(2, 5);
    CHECK((a + b) == Rational(11, 15));
    CHECK((a * b) == Rational(2, 15));
    CHECK((a - b) == Rational(-1, 15));
    CHECK((a / b) == Rational(5, 6));
    CHECK(Rational(4, -8) == Rational(-1, 2));
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);
}

TEST_CASE("multivariate polynomials differentiate and evaluate") {
    using P = Polynomial<Rational>;
    const P x = P::variable(2, 0), y = P::variable(2, 1);
    const P f = x * x * y + y.scaled(Rational(3));  // x^2 y + 3 y
    CHECK(f.derivative(0) == (x * y).scaled(Rational(2)));
    CHECK(f.derivative(1) == x * x + P::constant(2, Rational(3)));
    const auto v = f.evaluate<Rational>({Rational(2), Rational(5)});
    CHECK(v == Rational(35));
    CHECK(f.total_degree() == 3);
}

TEST_CASE("line fit and Richardson behave") {
    std::vector<double> xs, ys;
    for (int i = 1; i <= 6; ++i) {
        xs.push_back(0.1 * i);
        ys.push_back(std::pow(0.1 * i, 4.0) * 2.7);
    }
    const LineFit f = fit_loglog(xs, ys);
    CHECK(f.slope == doctest::Approx(4.0).epsilon(1e-10));

    // A(h) = 5 + h^2, halving h
    std::vector<double> samples;
    for (int i = 0; i < 5; ++i) samples.push_back(5.0 + std::pow(0.5, 2 * i));
    const RichardsonResult r = richardson(samples, 2.0, 2.0);
    CHECK(r.value == doctest::Approx(5.0).epsilon(1e-12));
}

TEST_CASE("rng is deterministic") {
    Rng a(7), b(7);
    for (int i = 0; i < 10; ++i) CHECK(a.next_u64() == b.next_u64());
}
