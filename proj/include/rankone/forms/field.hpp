#ifndef RANKONE_FORMS_FIELD_HPP
#define RANKONE_FORMS_FIELD_HPP

#include <functional>

#include "rankone/kernels/boundary.hpp"
#include "rankone/kernels/poisson.hpp"
#include "rankone/kernels/resolvent.hpp"
#include "rankone/kernels/spectral.hpp"
#include "rankone/space/point.hpp"

namespace rankone {

// A scalar field on S together with its coordinate gradient
// (d components ordered x_1..x_{d-1}, y).
struct Field {
    std::function<Cplx(const Point&)> value;
    std::function<std::vector<Cplx>(const Point&)> gradient;
};

// wraps a value-only function with 4th-order finite-difference gradients
Field field_with_fd_gradient(const ModelSpace& s,
                             std::function<Cplx(const Point&)> value,
                             double h_rel = 1e-4);

Field field_character(const ModelSpace& s, const SpectralParameter& snu);
Field field_poisson_kernel(const ModelSpace& s, const BoundaryPoint& b,
                           const SpectralParameter& snu);
Field field_q_kernel(const ModelSpace& s, std::shared_ptr<const RadialProfile> profile,
                     const Point& center);
Field field_poisson_transform(const ModelSpace& s,
                              std::shared_ptr<const BoundaryFunction> phi,
                              const SpectralParameter& snu);

}  // namespace rankone

#endif
