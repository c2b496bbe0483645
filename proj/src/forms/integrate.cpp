#include "rankone/forms/integrate.hpp"

#include <cmath>
#include <stdexcept>

#include "rankone/util/quadrature.hpp"

namespace rankone {

namespace {

// tensor Gauss-Legendre integral of the pulled-back form over [0,1]^dim
Cplx tensor_integral(const ModelSpace& s, const Field& f, const Field& kernel,
                     const CellPatch& cell, int order, double y_lo = 0.0,
                     double y_hi = 0.0) {
    const bool cylinder = cell.kind == CellPatch::Kind::CuspCylinder;
    const QuadRule& rule = gauss_legendre(order);
    const int dim = cell.dim;
    std::vector<int> idx(dim, 0);
    std::vector<Cplx> parts;
    parts.reserve(static_cast<std::size_t>(std::pow(order, dim)));
    while (true) {
        Vec chart(dim);
        double w = 1.0;
        for (int k = 0; k < dim; ++k) {
            const bool height_axis = cylinder && k == dim - 1;
            if (height_axis) {
                chart[k] = 0.5 * (y_lo + y_hi) + 0.5 * (y_hi - y_lo) * rule.nodes[idx[k]];
                w *= 0.5 * (y_hi - y_lo) * rule.weights[idx[k]];
            } else {
                chart[k] = 0.5 + 0.5 * rule.nodes[idx[k]];
                w *= 0.5 * rule.weights[idx[k]];
            }
        }
        const Point pt = cell.map(chart);
        const FormValue eta = green_form_eta(s, f, kernel, pt);
        const Mat jac = cell_jacobian(s, cell, chart);
        parts.push_back(w * eta.contract(jac));
        int k = 0;
        for (; k < dim; ++k) {
            if (++idx[k] < order) break;
            idx[k] = 0;
        }
        if (k == dim) break;
    }
    return pairwise_sum(parts);
}

}  // namespace

IntegralResult cycle_integral(const ModelSpace& s, const Field& f, const Field& kernel,
                              const CellPatch& cell, const IntegrateOptions& opts) {
    IntegralResult res;
    if (cell.kind == CellPatch::Kind::Compact) {
        int order = cell.quad_order;
        Cplx prev = tensor_integral(s, f, kernel, cell, order);
        while (order * 2 <= opts.max_order) {
            const Cplx cur = tensor_integral(s, f, kernel, cell, order * 2);
            res.refinement_error = std::abs(cur - prev);
            order *= 2;
            prev = cur;
            if (res.refinement_error <= opts.rel_tol * std::max(1.0, std::abs(cur))) break;
        }
        res.value = cell.orientation * prev;
        res.order_used = order;
        return res;
    }

    // cusp cylinder: panels [Y 2^j, Y 2^{j+1}] until the contributions decay
    // below the tail tolerance; the dropped tail is bounded by a geometric
    // extrapolation of the last panel
    const double Y = cell.base_height;
    int order = cell.quad_order;
    std::vector<Cplx> panels;
    double lo = Y;
    double prev_mag = -1.0;
    double ratio = 0.0;
    double total_mag = 0.0;
    while (lo < opts.t_cut_max) {
        const double hi = 2.0 * lo;
        Cplx panel = tensor_integral(s, f, kernel, cell, order, lo, hi);
        // refine the panel order once and keep the better estimate
        const Cplx fine = tensor_integral(s, f, kernel, cell, order * 2, lo, hi);
        res.refinement_error = std::max(res.refinement_error, std::abs(fine - panel));
        panel = fine;
        panels.push_back(panel);
        total_mag = std::max(total_mag, std::abs(pairwise_sum(panels)));
        const double mag = std::abs(panel);
        if (prev_mag >= 0.0 && prev_mag > 0.0) ratio = mag / prev_mag;
        prev_mag = mag;
        lo = hi;
        if (mag <= opts.tail_tol * std::max(1.0, total_mag) &&
            (ratio < 1.0 || mag == 0.0)) {
            res.tail_estimate = ratio < 1.0 ? mag * ratio / (1.0 - ratio) : mag;
            res.t_cut = hi;
            res.value = cell.orientation * pairwise_sum(panels);
            res.order_used = order * 2;
            return res;
        }
        if (panels.size() > 8 && ratio >= 1.0) {
            const std::string where =
                cell.cusp && !cell.cusp->infinite ? "finite cusp" : "cusp at infinity";
            throw std::runtime_error(
                "cycle_integral: integrand does not decay along the " + where +
                "; the eigenfunction lacks decay there");
        }
    }
    throw std::runtime_error(
        "cycle_integral: cusp tail still above tolerance at t_cut_max; "
        "increase t_cut_max");
}

ReproducingResult reproducing_formula(const ModelSpace& s, const Field& h,
                                      const std::vector<CellPatch>& boundary,
                                      const Point& x,
                                      std::shared_ptr<const RadialProfile> profile,
                                      const IntegrateOptions& opts) {
    ReproducingResult out;
    const Field qfield = field_q_kernel(s, profile, x);
    std::vector<Cplx> parts;
    for (const CellPatch& patch : boundary) {
        // proximity probe on a coarse chart sample
        for (double t : {0.0, 0.25, 0.5, 0.75}) {
            Vec chart(patch.dim, t);
            if (distance(s, patch.map(chart), x) < 1e-3) out.ill_conditioned = true;
        }
        parts.push_back(cycle_integral(s, h, qfield, patch, opts).value);
    }
    out.integral = pairwise_sum(parts);
    return out;
}

}  // namespace rankone
