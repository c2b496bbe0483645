#ifndef RANKONE_FORMS_CELL_HPP
#define RANKONE_FORMS_CELL_HPP

#include <functional>
#include <optional>

#include "rankone/space/group.hpp"
#include "rankone/space/model_space.hpp"

namespace rankone {

// An oriented parameterized cell. Compact cells map from [0,1]^dim; cusp
// cylinders map from [0,1]^{dim-1} x [Y, infinity) with the height in the
// last chart coordinate, and are truncated by the integrator.
struct CellPatch {
    enum class Kind { Compact, CuspCylinder };

    int dim = 1;
    Kind kind = Kind::Compact;
    double orientation = 1.0;
    int quad_order = 12;
    std::optional<BoundaryPoint> cusp;
    double base_height = 0.0;  // Y for cusp cylinders

    std::function<Point(const Vec&)> map;
    std::function<Mat(const Vec&)> jacobian;  // d x dim; null -> finite differences

    CellPatch flipped() const {
        CellPatch c = *this;
        c.orientation = -c.orientation;
        return c;
    }
};

// d x dim Jacobian by central differences when no closed form is attached
Mat cell_jacobian(const ModelSpace& s, const CellPatch& c, const Vec& chart);

// sphere of geodesic radius r about a center, oriented by the outward normal
CellPatch cell_geodesic_sphere(const ModelSpace& s, const Point& center, double radius,
                               int quad_order = 12);

// geodesic segment between two interior points (1-cell)
CellPatch cell_geodesic_segment(const ModelSpace& s, const Point& a, const Point& b,
                                int quad_order = 12);

// straight coordinate segment at fixed height y = h (horocyclic for d = 2)
CellPatch cell_horocycle_segment(const ModelSpace& s, const Vec& x0, const Vec& x1,
                                 double h, int quad_order = 12);

// vertical ray {x0} x [Y, infinity), a cusp cylinder at the cusp infinity
CellPatch cell_vertical_ray(const ModelSpace& s, const Vec& x0, double Y,
                            int quad_order = 12);

// image of a patch under a group element (chart unchanged)
CellPatch transform_patch(const ModelSpace& s, const GroupElement& g, const CellPatch& c);

}  // namespace rankone

#endif
