#ifndef RANKONE_KERNELS_RESOLVENT_HPP
#define RANKONE_KERNELS_RESOLVENT_HPP

#include <complex>
#include <vector>

#include "rankone/kernels/spectral.hpp"
#include "rankone/space/group.hpp"
#include "rankone/space/model_space.hpp"

namespace rankone {

// Tabulated radial resolvent Q_nu on a logarithmic grid, normalized so that
// Q_nu(r) e^{(rho+nu) r} -> 1 at the far end. Values between nodes come from
// cubic Hermite interpolation (the integrator also stores dQ/dr).
class RadialProfile {
public:
    RadialProfile(const ModelSpace& s, Cplx nu, double r_min, double r_max, int n);

    Cplx value(double r) const;
    Cplx derivative(double r) const;

    double r_min() const { return r_min_; }
    double r_max() const { return r_max_; }
    Cplx nu() const { return nu_; }
    bool conditioning_warning() const { return warn_; }

private:
    double r_min_, r_max_;
    Cplx nu_;
    double rho_;
    int p_;
    bool warn_ = false;
    std::vector<double> r_;
    // stored as u = Q e^{(rho+nu) r}, which varies slowly on the whole grid;
    // interpolating Q directly loses relative accuracy at the far end
    std::vector<Cplx> u_, du_;

    Cplx asymptotic(double r) const;
    Cplx asymptotic_d(double r) const;
    std::size_t locate(double r) const;
    Cplx u_at(double r) const;
    Cplx du_at(double r) const;
};

// Backward integration of the radial eigenfunction equation
//   Q'' + (p coth r + 2q coth 2r) Q' + (rho^2 - nu^2) Q = 0
// from r_max with the decaying-asymptotics seed.
RadialProfile resolvent_profile(const ModelSpace& s, Cplx nu, double r_max = 40.0,
                                double r_min = 1e-4, int n = 2400);

// q_nu(p1; p2) = Q_nu(dist(p1, p2)); symmetric and G-invariant
Cplx q_kernel(const ModelSpace& s, const RadialProfile& profile, const Point& p1,
              const Point& p2);
// gradient in the second argument, with respect to (x_1..x_{d-1}, y)
std::vector<Cplx> q_kernel_gradient2(const ModelSpace& s, const RadialProfile& profile,
                                     const Point& p1, const Point& p2);

// Left-hand side of the resolvent identity: the integral over S of
// q_nu(x; .) (Delta - rho^2 + nu^2) f against the invariant measure, for the
// radial bump f = chi(dist(x0, .) / bump_radius). The identity pins it to
// 2 nu c(nu) f(x). Quadrature is polar about the kernel center x (q = 0
// instances).
Cplx resolvent_identity_lhs(const ModelSpace& s, const RadialProfile& profile,
                            const Point& x, const Point& x0, double bump_radius,
                            int n_radial_panels = 32, int n_angular = 64);

// the same smooth bump, exposed for the right-hand side
double bump_chi(double r, double radius);

}  // namespace rankone

#endif
