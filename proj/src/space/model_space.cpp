#include "rankone/space/model_space.hpp"

#include <cmath>
#include <stdexcept>

namespace rankone {

ModelSpace::ModelSpace(std::string name, int p, int q, std::vector<double> b, double c)
    : name_(std::move(name)), p_(p), q_(q), b_(std::move(b)), c_(c) {
    if (p_ < 1 || q_ < 0) throw std::invalid_argument("ModelSpace: need p >= 1, q >= 0");
    if (b_.size() != static_cast<std::size_t>(p_ * p_ * std::max(q_, 1)))
        throw std::invalid_argument("ModelSpace: wrong number of structure constants");
}

ModelSpace ModelSpace::rh2() { return ModelSpace("rh2", 1, 0, {0.0}, 1.0); }

ModelSpace ModelSpace::rh3() { return ModelSpace("rh3", 2, 0, std::vector<double>(4, 0.0), 1.0); }

ModelSpace ModelSpace::ch2() {
    // b(x, u) = x1 u2 - x2 u1; the skew structure of the Heisenberg group N.
    std::vector<double> b(4, 0.0);
    b[(0 * 2 + 1) * 1 + 0] = 1.0;   // b(e1, e2) = 1
    b[(1 * 2 + 0) * 1 + 0] = -1.0;  // b(e2, e1) = -1
    return ModelSpace("ch2", 2, 1, std::move(b), 1.0);
}

Vec ModelSpace::b_form(const Vec& x1, const Vec& u1) const {
    Vec r(q_, 0.0);
    for (int k = 0; k < q_; ++k)
        for (int i = 0; i < p_; ++i)
            for (int j = 0; j < p_; ++j) r[k] += b_const(i, j, k) * x1[i] * u1[j];
    return r;
}

Mat ModelSpace::c_matrix(const Vec& x) const {
    Mat c(p_, q_);
    for (int j = 0; j < p_; ++j)
        for (int l = 0; l < q_; ++l)
            for (int i = 0; i < p_; ++i) c(j, l) += b_const(i, j, l) * x[i];
    return c;
}

Vec ModelSpace::n_compose(const Vec& u, const Vec& x) const {
    Vec r(p_ + q_);
    for (int i = 0; i < p_ + q_; ++i) r[i] = u[i] + x[i];
    if (q_ > 0) {
        const Vec u1(u.begin(), u.begin() + p_), x1(x.begin(), x.begin() + p_);
        const Vec corr = b_form(u1, x1);
        for (int k = 0; k < q_; ++k) r[p_ + k] += corr[k];
    }
    return r;
}

Vec ModelSpace::n_inverse(const Vec& x) const {
    Vec r(p_ + q_);
    for (int i = 0; i < p_ + q_; ++i) r[i] = -x[i];
    return r;  // b(x,x) = 0 for the skew structures used here
}

Point ModelSpace::act_n(const Vec& u, const Point& pt) const {
    return Point(n_compose(u, pt.x), pt.y);
}

Point ModelSpace::act_a(double t, const Point& pt) const {
    if (!(t > 0.0)) throw std::domain_error("act_a: t must be positive");
    Vec x(p_ + q_);
    for (int i = 0; i < p_; ++i) x[i] = t * pt.x[i];
    for (int i = p_; i < p_ + q_; ++i) x[i] = t * t * pt.x[i];
    return Point(std::move(x), t * pt.y);
}

double ModelSpace::norm1_sq(const Vec& x) const {
    double s = 0.0;
    for (int i = 0; i < p_; ++i) s += x[i] * x[i];
    return s;
}

double ModelSpace::norm2_sq(const Vec& x) const {
    double s = 0.0;
    for (int i = p_; i < p_ + q_; ++i) s += x[i] * x[i];
    return s;
}

double ModelSpace::iwasawa_quartic(const Vec& x, double y) const {
    const double a = y * y + c_ * norm1_sq(x);
    return a * a + 4.0 * c_ * norm2_sq(x);
}

double ModelSpace::tJ_explicit(const Vec& x, double y) const {
    if (!(y > 0.0)) throw std::domain_error("tJ_explicit: y must be positive");
    return y / std::sqrt(iwasawa_quartic(x, y));
}

}  // namespace rankone
