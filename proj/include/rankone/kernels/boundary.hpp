#ifndef RANKONE_KERNELS_BOUNDARY_HPP
#define RANKONE_KERNELS_BOUNDARY_HPP

#include <complex>
#include <memory>
#include <vector>

#include "rankone/space/group.hpp"
#include "rankone/space/model_space.hpp"
#include "rankone/space/point.hpp"

namespace rankone {

// The boundary of a q = 0 instance is the unit sphere S^{d-1} of null rays,
// omega = (omega_vec, omega_d) with u_0 normalized to 1/2. The chart point x
// corresponds to omega = (2x, |x|^2 - 1)/(1 + |x|^2) and infinity to the
// north pole omega_d = 1.
Vec boundary_to_sphere(const ModelSpace& s, const BoundaryPoint& b);
BoundaryPoint sphere_to_boundary(const ModelSpace& s, const Vec& omega);
// null vector in light-cone coordinates with u_0 = 1/2
Vec sphere_to_null(const Vec& omega);

// Quadrature/interpolation grid on the boundary sphere. RH2: uniform angle
// grid; RH3: Gauss-Legendre in cos(theta) x uniform in phi. Weights sum to 1
// (the invariant probability measure db).
struct BoundaryGrid {
    const int n_theta;
    const int n_phi;  // 1 for d = 2
    std::vector<Vec> omega;
    std::vector<double> weight;

    BoundaryGrid(const ModelSpace& s, int n_theta, int n_phi);
    std::size_t size() const { return omega.size(); }
};

std::shared_ptr<const BoundaryGrid> make_boundary_grid(const ModelSpace& s, int n = 0);

// A sampled function on the boundary with interpolation between samples.
// The smoothness tag and the finite singular set carry the bookkeeping used
// by the cocycle machinery.
class BoundaryFunction {
public:
    enum class Smoothness { Analytic, Smooth, SmoothOffSingularSet };

    BoundaryFunction(const ModelSpace& s, std::shared_ptr<const BoundaryGrid> grid,
                     std::vector<Cplx> values,
                     Smoothness tag = Smoothness::Analytic);

    template <typename F>
    static BoundaryFunction sample(const ModelSpace& s,
                                   std::shared_ptr<const BoundaryGrid> grid, F f,
                                   Smoothness tag = Smoothness::Analytic) {
        std::vector<Cplx> vals(grid->size());
        for (std::size_t i = 0; i < grid->size(); ++i) vals[i] = f(grid->omega[i]);
        return BoundaryFunction(s, std::move(grid), std::move(vals), tag);
    }

    const BoundaryGrid& grid() const { return *grid_; }
    std::shared_ptr<const BoundaryGrid> grid_ptr() const { return grid_; }
    const std::vector<Cplx>& values() const { return values_; }
    std::vector<Cplx>& values() { return values_; }

    std::vector<BoundaryPoint>& singular_set() { return singular_set_; }
    const std::vector<BoundaryPoint>& singular_set() const { return singular_set_; }
    Smoothness smoothness() const { return tag_; }
    void set_smoothness(Smoothness t) { tag_ = t; }

    // interpolated evaluation at an arbitrary sphere point
    Cplx evaluate(const Vec& omega) const;
    Cplx evaluate(const BoundaryPoint& b) const;

    // quadrature against the invariant probability measure db
    Cplx integral() const;

private:
    const ModelSpace* space_;
    std::shared_ptr<const BoundaryGrid> grid_;
    std::vector<Cplx> values_;
    std::vector<BoundaryPoint> singular_set_;
    Smoothness tag_;

    // interpolation data, built lazily: Fourier coefficients for d = 2,
    // spherical-harmonic coefficients (orthonormal basis) for d = 3
    mutable std::vector<Cplx> fourier_;
    mutable std::vector<std::vector<Cplx>> sph_;  // sph_[m + L][l]
    mutable bool interp_ready_ = false;
    void build_interpolant() const;
};

}  // namespace rankone

#endif
