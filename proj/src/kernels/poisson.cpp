#include "rankone/kernels/poisson.hpp"

#include <cmath>
#include <stdexcept>

#include "rankone/util/quadrature.hpp"

namespace rankone {

Cplx poisson_transform(const ModelSpace& s, const BoundaryFunction& phi, const Point& pt,
                       const SpectralParameter& snu) {
    const BoundaryGrid& grid = phi.grid();
    std::vector<Cplx> parts(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        parts[i] = grid.weight[i] * phi.values()[i] *
                   poisson_kernel_sphere(s, grid.omega[i], pt, snu);
    return pairwise_sum(parts);
}

std::vector<Cplx> poisson_transform_gradient(const ModelSpace& s,
                                             const BoundaryFunction& phi, const Point& pt,
                                             const SpectralParameter& snu) {
    const BoundaryGrid& grid = phi.grid();
    const int d = s.dim();
    std::vector<std::vector<Cplx>> parts(d, std::vector<Cplx>(grid.size()));
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const std::vector<Cplx> g = poisson_kernel_gradient(s, grid.omega[i], pt, snu);
        for (int k = 0; k < d; ++k) parts[k][i] = grid.weight[i] * phi.values()[i] * g[k];
    }
    std::vector<Cplx> grad(d);
    for (int k = 0; k < d; ++k) grad[k] = pairwise_sum(parts[k]);
    return grad;
}

Cplx poisson_transform_adaptive(const ModelSpace& s, const BoundaryFunction& phi,
                                const Point& pt, const SpectralParameter& snu,
                                double rel_tol, int max_doublings) {
    Cplx prev = poisson_transform(s, phi, pt, snu);
    int nt = phi.grid().n_theta;
    for (int k = 0; k < max_doublings; ++k) {
        nt *= 2;
        auto finer = std::make_shared<BoundaryGrid>(
            s, nt, s.dim() == 2 ? 1 : 2 * nt);
        BoundaryFunction resampled = BoundaryFunction::sample(
            s, finer, [&](const Vec& omega) { return phi.evaluate(omega); },
            phi.smoothness());
        const Cplx cur = poisson_transform(s, resampled, pt, snu);
        if (std::abs(cur - prev) <= rel_tol * std::max(1.0, std::abs(cur))) return cur;
        prev = cur;
    }
    throw std::runtime_error(
        "poisson_transform_adaptive: grid refinement did not stabilize; "
        "the point sits too close to the boundary for this grid");
}

}  // namespace rankone
