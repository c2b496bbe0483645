#ifndef RANKONE_SPACE_MODEL_SPACE_HPP
#define RANKONE_SPACE_MODEL_SPACE_HPP

#include <string>
#include <vector>

#include "rankone/space/point.hpp"
#include "rankone/util/linalg.hpp"

namespace rankone {

// A rank-one model space instance. p = dim of the alpha root space, q = dim
// of the 2*alpha root space; the bilinear map b: R^p x R^p -> R^q carries the
// nilpotent structure of N, and c is the constant in the explicit Iwasawa
// height formula. In normalized horospherical coordinates c = 1 for every
// instance built here; calibrate_c verifies that instead of assuming it.
class ModelSpace {
public:
    static ModelSpace rh2();  // p=1, q=0, the hyperbolic plane
    static ModelSpace rh3();  // p=2, q=0, hyperbolic 3-space
    static ModelSpace ch2();  // p=2, q=1, the complex hyperbolic plane

    const std::string& name() const { return name_; }
    int p() const { return p_; }
    int q() const { return q_; }
    int dim() const { return p_ + q_ + 1; }
    int nx() const { return p_ + q_; }
    double rho() const { return 0.5 * p_ + q_; }
    double c() const { return c_; }
    bool has_matrix_model() const { return q_ == 0; }

    // b(x, u) for x, u in R^p, result in R^q (empty when q = 0)
    Vec b_form(const Vec& x1, const Vec& u1) const;

    // structure constants b(e_i, e_j)_k
    double b_const(int i, int j, int k) const { return b_[(i * p_ + j) * std::max(q_, 1) + k]; }

    // C(x^(1)): p x q matrix with entries c_{j,l}(x^(1)) = b(x^(1), e_j)_l
    Mat c_matrix(const Vec& x) const;

    Point origin() const { return Point::origin(nx()); }

    // coordinate-level group operations of N (valid for every q):
    // n(u) n(x) = n(u+x with central correction b(u^(1), x^(1)))
    Vec n_compose(const Vec& u, const Vec& x) const;
    Vec n_inverse(const Vec& x) const;
    // left action of n(u) and a(t) on points in horospherical coordinates
    Point act_n(const Vec& u, const Point& pt) const;
    Point act_a(double t, const Point& pt) const;

    // Splits x into the norms entering the Iwasawa formula.
    double norm1_sq(const Vec& x) const;
    double norm2_sq(const Vec& x) const;

    // (y^2 + c |x1|^2)^2 + 4 c |x2|^2, the quartic in the kernel formulas
    double iwasawa_quartic(const Vec& x, double y) const;

    // y / sqrt(iwasawa_quartic), the explicit A-component of w n(x) a(y)
    double tJ_explicit(const Vec& x, double y) const;

private:
    ModelSpace(std::string name, int p, int q, std::vector<double> b, double c);

    std::string name_;
    int p_, q_;
    std::vector<double> b_;  // p*p*max(q,1) structure constants
    double c_;
};

}  // namespace rankone

#endif
