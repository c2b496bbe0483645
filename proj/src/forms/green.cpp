#include "rankone/forms/green.hpp"

#include <stdexcept>

namespace rankone {

Cplx FormValue::contract(const Mat& jac) const {
    const std::size_t d = coeff.size();
    if (jac.rows() != d || jac.cols() != d - 1)
        throw std::invalid_argument(
            "FormValue::contract: a degree d-1 form needs d-1 tangent vectors");
    Cplx total = 0.0;
    // minor determinants of the Jacobian with row j removed
    for (std::size_t j = 0; j < d; ++j) {
        if (coeff[j] == Cplx{}) continue;
        Mat minor(d - 1, d - 1);
        std::size_t rr = 0;
        for (std::size_t r = 0; r < d; ++r) {
            if (r == j) continue;
            for (std::size_t c = 0; c + 1 < d; ++c) minor(rr, c) = jac(r, c);
            ++rr;
        }
        total += coeff[j] * det(minor);
    }
    return total;
}

FormValue green_form_eta(const ModelSpace& s, const Field& f1, const Field& f2,
                         const Point& pt) {
    const int d = s.dim();
    const MetricMatrix m = metric_at(s, pt);
    const Cplx v1 = f1.value(pt), v2 = f2.value(pt);
    const std::vector<Cplx> g1 = f1.gradient(pt), g2 = f2.gradient(pt);
    FormValue out;
    out.coeff.assign(d, Cplx{});
    for (int j = 0; j < d; ++j) {
        Cplx bj = 0.0;
        for (int i = 0; i < d; ++i) bj += m.g_inv(i, j) * (v2 * g1[i] - v1 * g2[i]);
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;  // (-1)^{j+1} with 1-based j
        out.coeff[j] = sign * m.sqrt_det * bj;
    }
    return out;
}

FormValue omega_v(const ModelSpace& s, const Field& f, const BoundaryPoint& b,
                  const Point& pt, const SpectralParameter& snu) {
    return green_form_eta(s, f, field_poisson_kernel(s, b, snu), pt);
}

FormValue omega_w(const ModelSpace& s, const Field& f,
                  std::shared_ptr<const RadialProfile> profile, const Point& x,
                  const Point& pt) {
    const double r = distance(s, x, pt);
    if (r < profile->r_min())
        throw std::domain_error("omega_w: evaluation point on the kernel diagonal");
    return green_form_eta(s, f, field_q_kernel(s, profile, x), pt);
}

}  // namespace rankone
