#ifndef RANKONE_FORMS_GREEN_HPP
#define RANKONE_FORMS_GREEN_HPP

#include "rankone/forms/field.hpp"
#include "rankone/space/metric.hpp"

namespace rankone {

// A (d-1)-form at a point, stored as the coefficients c_j of the basis forms
// dx_1 ^ ... ^ (dx_j omitted) ^ ... ^ dx_d (1-based j), signs included.
struct FormValue {
    std::vector<Cplx> coeff;

    // evaluation on d-1 tangent vectors given as the columns of a d x (d-1)
    // coordinate Jacobian
    Cplx contract(const Mat& jac) const;
};

// eta(f1, f2) = sum_j (-1)^{j+1} det(g)^{1/2} b_j zeta[j] with
// b_j = sum_i g^{ij} (f2 d_i f1 - f1 d_i f2); antisymmetric, d eta = MS zeta_S
FormValue green_form_eta(const ModelSpace& s, const Field& f1, const Field& f2,
                         const Point& pt);

// omega_nu(f; b, .) = eta(f, r_nu(b; .))
FormValue omega_v(const ModelSpace& s, const Field& f, const BoundaryPoint& b,
                  const Point& pt, const SpectralParameter& snu);

// omega^W_nu(f; x, .) = eta(f, q_nu(x; .)); singular on the diagonal
FormValue omega_w(const ModelSpace& s, const Field& f,
                  std::shared_ptr<const RadialProfile> profile, const Point& x,
                  const Point& pt);

}  // namespace rankone

#endif
