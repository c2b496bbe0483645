#ifndef RANKONE_SPACE_METRIC_HPP
#define RANKONE_SPACE_METRIC_HPP

#include "rankone/space/model_space.hpp"
#include "rankone/space/point.hpp"
#include "rankone/util/linalg.hpp"

namespace rankone {

// The d x d matrix of inner products of the coordinate derivations in
// normalized horospherical coordinates, its closed-form inverse, and
// det^{1/2} = y^{-2 rho - 1}.
struct MetricMatrix {
    Mat g;
    Mat g_inv;
    double sqrt_det = 0.0;
};

MetricMatrix metric_at(const ModelSpace& s, const Point& pt);

}  // namespace rankone

#endif
