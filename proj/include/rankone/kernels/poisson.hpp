#ifndef RANKONE_KERNELS_POISSON_HPP
#define RANKONE_KERNELS_POISSON_HPP

#include "rankone/kernels/boundary.hpp"
#include "rankone/kernels/kernels.hpp"
#include "rankone/kernels/spectral.hpp"

namespace rankone {

// P_nu phi (pt) = integral over the boundary of r_nu(b; pt) phi(b) db,
// evaluated on the grid carried by phi.
Cplx poisson_transform(const ModelSpace& s, const BoundaryFunction& phi, const Point& pt,
                       const SpectralParameter& snu);
std::vector<Cplx> poisson_transform_gradient(const ModelSpace& s,
                                             const BoundaryFunction& phi, const Point& pt,
                                             const SpectralParameter& snu);

// Doubles the grid until two successive estimates agree; throws a
// refinement-request error when the cap is reached without stabilizing.
Cplx poisson_transform_adaptive(const ModelSpace& s, const BoundaryFunction& phi,
                                const Point& pt, const SpectralParameter& snu,
                                double rel_tol = 1e-8, int max_doublings = 4);

}  // namespace rankone

#endif
