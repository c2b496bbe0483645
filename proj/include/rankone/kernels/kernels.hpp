#ifndef RANKONE_KERNELS_KERNELS_HPP
#define RANKONE_KERNELS_KERNELS_HPP

#include <complex>

#include "rankone/kernels/boundary.hpp"
#include "rankone/kernels/spectral.hpp"
#include "rankone/space/group.hpp"

namespace rankone {

// factor of automorphy J(g, b) = tI(g k_b); computed through the invariant
// normalization of null vectors, J(g, b) = 2 u_0(g xi_b) for the
// representative with u_0(xi_b) = 1/2
double factor_J(const ModelSpace& s, const GroupElement& g, const BoundaryPoint& b);
double factor_J_sphere(const ModelSpace& s, const GroupElement& g, const Vec& omega);

// Poisson kernel r_nu(b; pt) in the K-normalization of the boundary sphere:
// r_nu(b; o) = 1 for every b. Equals pairing^{-(rho+nu)} with the Minkowski
// pairing of the embedded point against the normalized null vector.
Cplx poisson_kernel(const ModelSpace& s, const BoundaryPoint& b, const Point& pt,
                    const SpectralParameter& snu);
Cplx poisson_kernel_sphere(const ModelSpace& s, const Vec& omega, const Point& pt,
                           const SpectralParameter& snu);
// gradient with respect to (x_1..x_{d-1}, y)
std::vector<Cplx> poisson_kernel_gradient(const ModelSpace& s, const Vec& omega,
                                          const Point& pt, const SpectralParameter& snu);

// Line-model kernel y^{rho+nu} ((y^2+c|x'|^2)^2+4c|x''|^2)^{-(rho+nu)/2} with
// x' the N-translate of pt to the chart origin of b; valid for every q.
Cplx poisson_kernel_line(const ModelSpace& s, const Vec& xb, const Point& pt,
                         const SpectralParameter& snu);

// principal series action (tau_nu(g) f)(b) = J(g^-1,b)^{-(rho+nu)} f(g^-1 b),
// resampled on the grid of f
BoundaryFunction tau_action(const ModelSpace& s, const GroupElement& g,
                            const SpectralParameter& snu, const BoundaryFunction& f);

// Harish-Chandra c-function and the pole-free combination 2 nu c(nu)
struct CFunctionValue {
    Cplx value;
    bool pole = false;
};
CFunctionValue c_function(Cplx nu, const ModelSpace& s);
Cplx twonu_c(Cplx nu, const ModelSpace& s);

// The constant produced by closing the resolvent kernel around its pole
// under the zeta_S volume: the small-sphere flux of Q_nu. Equals
// pi * 2 nu c(nu) on the q = 0 instances (the Riemannian volume carries a
// factor pi against the Plancherel normalization implicit in the Gamma
// quotient). Every reproducing-type identity in this code uses it.
Cplx resolvent_constant(Cplx nu, const ModelSpace& s);

}  // namespace rankone

#endif
