#ifndef RANKONE_SPACE_POINT_HPP
#define RANKONE_SPACE_POINT_HPP

#include <stdexcept>
#include <vector>

#include "rankone/util/linalg.hpp"

namespace rankone {

// Normalized horospherical coordinates: x in R^{p+q}, y > 0. The origin o
// corresponds to (0, 1).
struct Point {
    Vec x;
    double y = 1.0;

    Point() = default;
    Point(Vec x_, double y_) : x(std::move(x_)), y(y_) {
        if (!(y > 0.0)) throw std::domain_error("Point: y must be positive");
    }

    static Point origin(int nx) { return Point(Vec(nx, 0.0), 1.0); }
};

// A point of the geodesic boundary: either a point of the N-orbit of 0
// (finite chart, coordinates in R^{p+q}) or the distinguished point infinity.
struct BoundaryPoint {
    bool infinite = false;
    Vec x;  // meaningful only when finite

    static BoundaryPoint infinity(int nx) {
        BoundaryPoint b;
        b.infinite = true;
        b.x = Vec(nx, 0.0);
        return b;
    }
    static BoundaryPoint finite(Vec x) {
        BoundaryPoint b;
        b.infinite = false;
        b.x = std::move(x);
        return b;
    }
    static BoundaryPoint zero(int nx) { return finite(Vec(nx, 0.0)); }
};

}  // namespace rankone

#endif
