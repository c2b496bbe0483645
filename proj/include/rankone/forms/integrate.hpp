#ifndef RANKONE_FORMS_INTEGRATE_HPP
#define RANKONE_FORMS_INTEGRATE_HPP

#include "rankone/forms/cell.hpp"
#include "rankone/forms/green.hpp"

namespace rankone {

struct IntegralResult {
    Cplx value{};
    double refinement_error = 0.0;  // change under the last order doubling
    double tail_estimate = 0.0;     // cusp cylinders: bound on the dropped tail
    double t_cut = 0.0;             // height where the cylinder was truncated
    int order_used = 0;
};

struct IntegrateOptions {
    double rel_tol = 1e-8;
    int max_order = 48;
    double tail_tol = 1e-10;
    double t_cut_max = 1 << 20;
};

// integral over the cell of eta(f, kernel), orientation included
IntegralResult cycle_integral(const ModelSpace& s, const Field& f, const Field& kernel,
                              const CellPatch& cell, const IntegrateOptions& opts = {});

// contour integral of omega^W_nu(h; x, .) over a closed boundary given as
// oriented patches; 2 nu c(nu) h(x) for x inside, 0 outside
struct ReproducingResult {
    Cplx integral{};
    bool ill_conditioned = false;  // x within epsilon of the contour
};
ReproducingResult reproducing_formula(const ModelSpace& s, const Field& h,
                                      const std::vector<CellPatch>& boundary,
                                      const Point& x,
                                      std::shared_ptr<const RadialProfile> profile,
                                      const IntegrateOptions& opts = {});

}  // namespace rankone

#endif
