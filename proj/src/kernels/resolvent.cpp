#include "rankone/kernels/resolvent.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "rankone/space/laplacian.hpp"
#include "rankone/util/quadrature.hpp"

namespace rankone {

namespace {

using State = std::array<Cplx, 2>;  // (Q, Q')

State axpy(const State& a, double h, const State& b) {
    return {a[0] + h * b[0], a[1] + h * b[1]};
}

// Dormand-Prince 5(4) step; returns the error estimate
struct StepResult {
    State y5;
    double err;
};

template <typename F>
StepResult dopri_step(const F& f, double r, const State& y, double h) {
    static const double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    const State k1 = f(r, y);
    const State k2 = f(r + c2 * h, axpy(y, h / 5, k1));
    const State k3 = f(r + c3 * h, {y[0] + h * (3.0 / 40 * k1[0] + 9.0 / 40 * k2[0]),
                                    y[1] + h * (3.0 / 40 * k1[1] + 9.0 / 40 * k2[1])});
    const State k4 = f(r + c4 * h,
                       {y[0] + h * (44.0 / 45 * k1[0] - 56.0 / 15 * k2[0] + 32.0 / 9 * k3[0]),
                        y[1] + h * (44.0 / 45 * k1[1] - 56.0 / 15 * k2[1] + 32.0 / 9 * k3[1])});
    const State k5 =
        f(r + c5 * h, {y[0] + h * (19372.0 / 6561 * k1[0] - 25360.0 / 2187 * k2[0] +
                                   64448.0 / 6561 * k3[0] - 212.0 / 729 * k4[0]),
                       y[1] + h * (19372.0 / 6561 * k1[1] - 25360.0 / 2187 * k2[1] +
                                   64448.0 / 6561 * k3[1] - 212.0 / 729 * k4[1])});
    const State k6 =
        f(r + h, {y[0] + h * (9017.0 / 3168 * k1[0] - 355.0 / 33 * k2[0] +
                              46732.0 / 5247 * k3[0] + 49.0 / 176 * k4[0] -
                              5103.0 / 18656 * k5[0]),
                  y[1] + h * (9017.0 / 3168 * k1[1] - 355.0 / 33 * k2[1] +
                              46732.0 / 5247 * k3[1] + 49.0 / 176 * k4[1] -
                              5103.0 / 18656 * k5[1])});
    State y5;
    for (int i = 0; i < 2; ++i)
        y5[i] = y[i] + h * (35.0 / 384 * k1[i] + 500.0 / 1113 * k3[i] + 125.0 / 192 * k4[i] -
                            2187.0 / 6784 * k5[i] + 11.0 / 84 * k6[i]);
    const State k7 = f(r + h, y5);
    State y4;
    for (int i = 0; i < 2; ++i)
        y4[i] = y[i] + h * (5179.0 / 57600 * k1[i] + 7571.0 / 16695 * k3[i] +
                            393.0 / 640 * k4[i] - 92097.0 / 339200 * k5[i] +
                            187.0 / 2100 * k6[i] + 1.0 / 40 * k7[i]);
    StepResult res;
    res.y5 = y5;
    res.err = std::max(std::abs(y5[0] - y4[0]), std::abs(y5[1] - y4[1]));
    return res;
}

// integrates from r0 to r1 (either direction), adaptive
template <typename F>
State integrate_to(const F& f, double r0, const State& y0, double r1, double rel_tol) {
    State y = y0;
    double r = r0;
    const double dir = (r1 > r0) ? 1.0 : -1.0;
    double h = dir * std::min(0.05, std::fabs(r1 - r0));
    while (dir * (r1 - r) > 1e-15 * std::max(1.0, std::fabs(r1))) {
        if (dir * (r + h - r1) > 0) h = r1 - r;
        const StepResult step = dopri_step(f, r, y, h);
        const double scale =
            std::max({std::abs(step.y5[0]), std::abs(step.y5[1]), std::abs(y[0]), 1e-300});
        if (step.err <= rel_tol * scale || std::fabs(h) < 1e-13 * std::max(1.0, std::fabs(r))) {
            y = step.y5;
            r += h;
        }
        const double shrink =
            step.err > 0 ? 0.9 * std::pow(rel_tol * scale / step.err, 0.2) : 2.0;
        h *= std::min(2.0, std::max(0.2, shrink));
    }
    return y;
}

}  // namespace

RadialProfile::RadialProfile(const ModelSpace& s, Cplx nu, double r_min, double r_max,
                             int n)
    : r_min_(r_min), r_max_(r_max), nu_(nu), rho_(s.rho()), p_(s.p()) {
    const SpectralParameter snu(nu, s);
    if (snu.in_excluded_set())
        throw std::domain_error("resolvent_profile: nu lies in the excluded half-integers");
    if (snu.in_half_integers(1e-8) && nu.real() <= -0.5 + 1e-8) warn_ = true;
    if (std::abs(nu + 1.0) < 1e-6 || std::abs(nu + 0.5) < 1e-6) warn_ = true;

    const Cplx eig = snu.eigenvalue();
    auto rhs = [&](double r, const State& y) -> State {
        const double drift = radial_drift(s, r);
        return {y[1], -drift * y[1] - eig * y[0]};
    };

    r_.resize(n);
    u_.resize(n);
    du_.resize(n);
    const double lr0 = std::log(r_min), lr1 = std::log(r_max);
    for (int i = 0; i < n; ++i) r_[i] = std::exp(lr0 + (lr1 - lr0) * i / (n - 1.0));
    r_[n - 1] = r_max;

    const Cplx mu = rho_ + nu_;
    auto store = [&](int i, const State& y) {
        const Cplx scale = std::exp(mu * r_[i]);
        u_[i] = y[0] * scale;
        du_[i] = (y[1] + mu * y[0]) * scale;
    };
    State y = {asymptotic(r_max), asymptotic_d(r_max)};
    store(n - 1, y);
    for (int i = n - 2; i >= 0; --i) {
        y = integrate_to(rhs, r_[i + 1], y, r_[i], 1e-12);
        store(i, y);
    }
}

Cplx RadialProfile::asymptotic(double r) const {
    const Cplx a1 = static_cast<double>(p_) * (rho_ + nu_) / (2.0 * (nu_ + 1.0));
    return std::exp(-(rho_ + nu_) * r) * (1.0 + a1 * std::exp(-2.0 * r));
}

Cplx RadialProfile::asymptotic_d(double r) const {
    const Cplx a1 = static_cast<double>(p_) * (rho_ + nu_) / (2.0 * (nu_ + 1.0));
    return std::exp(-(rho_ + nu_) * r) *
           (-(rho_ + nu_) - (rho_ + nu_ + 2.0) * a1 * std::exp(-2.0 * r));
}

std::size_t RadialProfile::locate(double r) const {
    // log-uniform grid: direct index computation
    const double lr0 = std::log(r_min_), lr1 = std::log(r_max_);
    const double t = (std::log(r) - lr0) / (lr1 - lr0) * (r_.size() - 1.0);
    const auto i = static_cast<std::size_t>(std::max(0.0, std::floor(t)));
    return std::min(i, r_.size() - 2);
}

Cplx RadialProfile::u_at(double r) const {
    const std::size_t i = locate(r);
    const double h = r_[i + 1] - r_[i];
    const double t = (r - r_[i]) / h;
    const double t2 = t * t, t3 = t2 * t;
    return (2 * t3 - 3 * t2 + 1) * u_[i] + (t3 - 2 * t2 + t) * h * du_[i] +
           (-2 * t3 + 3 * t2) * u_[i + 1] + (t3 - t2) * h * du_[i + 1];
}

Cplx RadialProfile::du_at(double r) const {
    const std::size_t i = locate(r);
    const double h = r_[i + 1] - r_[i];
    const double t = (r - r_[i]) / h;
    const double t2 = t * t;
    return ((6 * t2 - 6 * t) * u_[i] + (3 * t2 - 4 * t + 1) * h * du_[i] +
            (-6 * t2 + 6 * t) * u_[i + 1] + (3 * t2 - 2 * t) * h * du_[i + 1]) /
           h;
}

Cplx RadialProfile::value(double r) const {
    if (r > r_max_) return asymptotic(r);
    if (r < r_min_)
        throw std::domain_error("RadialProfile: inside the singular region r < r_min");
    return u_at(r) * std::exp(-(rho_ + nu_) * r);
}

Cplx RadialProfile::derivative(double r) const {
    if (r > r_max_) return asymptotic_d(r);
    if (r < r_min_)
        throw std::domain_error("RadialProfile: inside the singular region r < r_min");
    const Cplx mu = rho_ + nu_;
    return (du_at(r) - mu * u_at(r)) * std::exp(-mu * r);
}

RadialProfile resolvent_profile(const ModelSpace& s, Cplx nu, double r_max, double r_min,
                                int n) {
    return RadialProfile(s, nu, r_min, r_max, n);
}

Cplx q_kernel(const ModelSpace& s, const RadialProfile& profile, const Point& p1,
              const Point& p2) {
    const double r = distance(s, p1, p2);
    if (r < profile.r_min())
        throw std::domain_error("q_kernel: coincident or nearly coincident points");
    return profile.value(r);
}

double bump_chi(double r, double radius) {
    const double u = (r / radius) * (r / radius);
    if (u >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - u));
}

namespace {

// chi'' and chi' of the bump, analytic
void bump_derivatives(double r, double radius, double& d1, double& d2) {
    const double w = (r / radius) * (r / radius);
    if (w >= 1.0) {
        d1 = d2 = 0.0;
        return;
    }
    const double chi = std::exp(1.0 - 1.0 / (1.0 - w));
    const double wp = 2.0 * r / (radius * radius);
    const double wpp = 2.0 / (radius * radius);
    const double om = 1.0 - w;
    const double phip = -wp / (om * om);
    const double phipp = -wpp / (om * om) - 2.0 * wp * wp / (om * om * om);
    d1 = phip * chi;
    d2 = (phipp + phip * phip) * chi;
}

}  // namespace

Cplx resolvent_identity_lhs(const ModelSpace& s, const RadialProfile& profile,
                            const Point& x, const Point& x0, double bump_radius,
                            int n_radial_panels, int n_angular) {
    if (s.q() != 0)
        throw std::domain_error("resolvent_identity_lhs: built for the q = 0 instances");
    const int d = s.dim();
    const Cplx lambda =
        s.rho() * s.rho() - profile.nu() * profile.nu();

    const auto frame = tangent_frame(s, x);
    const double r_out = distance(s, x, x0) + bump_radius;

    // (Delta - lambda) f at a point, via the radial form about x0
    auto defect = [&](const Point& pt) -> Cplx {
        const double r0 = distance(s, x0, pt);
        if (r0 >= bump_radius) return Cplx{};
        double d1, d2;
        bump_derivatives(r0, bump_radius, d1, d2);
        Cplx lap;
        if (r0 < 1e-8) {
            // at the center: Delta f = -d (chi'' at 0), with chi'(0) = 0
            lap = -static_cast<double>(d) * d2;
        } else {
            lap = -d2 - radial_drift(s, r0) * d1;
        }
        return lap - lambda * bump_chi(r0, bump_radius);
    };

    // angular nodes on the unit tangent sphere about x
    std::vector<Vec> dirs;
    std::vector<double> ang_w;
    if (d == 2) {
        for (int k = 0; k < n_angular; ++k) {
            const double th = 2.0 * M_PI * (k + 0.5) / n_angular;
            dirs.push_back({std::cos(th), std::sin(th)});
            ang_w.push_back(2.0 * M_PI / n_angular);
        }
    } else {
        const QuadRule& gl = gauss_legendre(n_angular / 2);
        for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
            const double mu = gl.nodes[i];
            const double st = std::sqrt(1.0 - mu * mu);
            for (int j = 0; j < n_angular; ++j) {
                const double ph = 2.0 * M_PI * (j + 0.5) / n_angular;
                dirs.push_back({st * std::cos(ph), st * std::sin(ph), mu});
                ang_w.push_back(gl.weights[i] * 2.0 * M_PI / n_angular);
            }
        }
    }

    // radial panels of Gauss-Legendre nodes on (0, r_out]
    const QuadRule& gl = gauss_legendre(12);
    std::vector<Cplx> parts;
    for (int panel = 0; panel < n_radial_panels; ++panel) {
        const double a = r_out * panel / n_radial_panels;
        const double b = r_out * (panel + 1) / n_radial_panels;
        for (std::size_t qi = 0; qi < gl.nodes.size(); ++qi) {
            const double r = 0.5 * (a + b) + 0.5 * (b - a) * gl.nodes[qi];
            const double wr = 0.5 * (b - a) * gl.weights[qi];
            const double density = std::pow(std::sinh(r), d - 1);
            const Cplx qv = profile.value(r);
            for (std::size_t ai = 0; ai < dirs.size(); ++ai) {
                Vec tangent(d);
                for (int k = 0; k < d; ++k) tangent[k] = r * dirs[ai][k];
                const Point pt = exp_map(s, x, frame, tangent);
                const Cplx g = defect(pt);
                if (g == Cplx{}) continue;
                parts.push_back(wr * ang_w[ai] * density * qv * g);
            }
        }
    }
    return pairwise_sum(parts);
}

std::vector<Cplx> q_kernel_gradient2(const ModelSpace& s, const RadialProfile& profile,
                                     const Point& p1, const Point& p2) {
    const Vec u1 = embed_point(s, p1);
    const Vec u2 = embed_point(s, p2);
    const double ch = -minkowski(u1, u2);
    const double r = std::acosh(std::max(1.0, ch));
    if (r < profile.r_min())
        throw std::domain_error("q_kernel_gradient2: inside the singular region");
    const Cplx dq = profile.derivative(r);
    const double denom = std::sqrt(std::max(ch * ch - 1.0, 1e-300));
    const Mat jac = embed_jacobian(s, p2);
    const int d = s.dim();
    std::vector<Cplx> grad(d);
    for (int col = 0; col < d; ++col) {
        Vec du(jac.rows());
        for (std::size_t row = 0; row < jac.rows(); ++row) du[row] = jac(row, col);
        const double dch = -minkowski(u1, du);
        grad[col] = dq * (dch / denom);
    }
    return grad;
}

}  // namespace rankone
