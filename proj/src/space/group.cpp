#include "rankone/space/group.hpp"

#include <cmath>
#include <stdexcept>

namespace rankone {

namespace {

// form matrix S with u^T S u = -u_+ u_- + |u_vec|^2
Mat form_matrix(int n) {
    Mat s(n, n);
    s(0, 1) = -0.5;
    s(1, 0) = -0.5;
    for (int i = 2; i < n; ++i) s(i, i) = 1.0;
    return s;
}

Mat form_inverse(int n) {
    Mat s(n, n);
    s(0, 1) = -2.0;
    s(1, 0) = -2.0;
    for (int i = 2; i < n; ++i) s(i, i) = 1.0;
    return s;
}

double form_error(const Mat& m) {
    const int n = static_cast<int>(m.rows());
    const Mat s = form_matrix(n);
    return frobenius_distance(m.transposed() * s * m, s);
}

}  // namespace

GroupElement GroupElement::from_matrix(const ModelSpace& s, Mat m) {
    if (!s.has_matrix_model())
        throw std::domain_error("GroupElement: no matrix model for q > 0 instances");
    const int n = s.dim() + 1;
    if (static_cast<int>(m.rows()) != n || static_cast<int>(m.cols()) != n)
        throw std::invalid_argument("GroupElement: wrong matrix size");
    const double err = form_error(m);
    if (err > 1e-9 * std::max(1.0, m.max_abs()))
        throw std::invalid_argument("GroupElement: matrix does not preserve the form");
    // must preserve the upper sheet: image of the base point has u_+ > 0
    if (m(0, 0) + m(0, 1) <= 0.0)
        throw std::invalid_argument("GroupElement: matrix swaps hyperboloid sheets");
    GroupElement g;
    g.m_ = std::move(m);
    g.classify(s);
    return g;
}

GroupElement GroupElement::identity(const ModelSpace& s) {
    GroupElement g;
    g.m_ = Mat::identity(s.dim() + 1);
    g.kind_ = Kind::Identity;
    return g;
}

GroupElement GroupElement::n_element(const ModelSpace& s, const Vec& x) {
    const int n = s.dim() + 1;
    Mat m = Mat::identity(n);
    double nrm2 = 0.0;
    for (int i = 0; i < n - 2; ++i) nrm2 += x[i] * x[i];
    m(1, 0) = nrm2;
    for (int i = 0; i < n - 2; ++i) {
        m(1, 2 + i) = 2.0 * x[i];
        m(2 + i, 0) = x[i];
    }
    GroupElement g;
    g.m_ = std::move(m);
    g.kind_ = Kind::InN;
    return g;
}

GroupElement GroupElement::a_element(const ModelSpace& s, double t) {
    if (!(t > 0.0)) throw std::domain_error("a_element: t must be positive");
    const int n = s.dim() + 1;
    Mat m = Mat::identity(n);
    m(0, 0) = 1.0 / t;
    m(1, 1) = t;
    GroupElement g;
    g.m_ = std::move(m);
    g.kind_ = t == 1.0 ? Kind::Identity : Kind::InA;
    return g;
}

GroupElement GroupElement::weyl_w(const ModelSpace& s) {
    const int n = s.dim() + 1;
    Mat m(n, n);
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    m(2, 2) = -1.0;  // keeps the determinant +1
    for (int i = 3; i < n; ++i) m(i, i) = 1.0;
    GroupElement g;
    g.m_ = std::move(m);
    g.kind_ = Kind::InK;
    return g;
}

GroupElement GroupElement::m_rotation(const ModelSpace& s, int i, int j, double angle) {
    const int n = s.dim() + 1;
    if (i == j || i + 2 >= n || j + 2 >= n)
        throw std::invalid_argument("m_rotation: bad plane indices");
    Mat m = Mat::identity(n);
    m(2 + i, 2 + i) = std::cos(angle);
    m(2 + j, 2 + j) = std::cos(angle);
    m(2 + i, 2 + j) = -std::sin(angle);
    m(2 + j, 2 + i) = std::sin(angle);
    GroupElement g;
    g.m_ = std::move(m);
    g.kind_ = Kind::InK;
    return g;
}

GroupElement GroupElement::random(const ModelSpace& s, Rng& rng) {
    const int nx = s.nx();
    Vec v(nx), w(nx);
    for (int i = 0; i < nx; ++i) {
        v[i] = rng.uniform(-1.5, 1.5);
        w[i] = rng.uniform(-1.5, 1.5);
    }
    GroupElement g = n_element(s, v) * a_element(s, std::exp(rng.uniform(-1.2, 1.2)));
    g = g * weyl_w(s) * n_element(s, w);
    if (nx >= 2) g = g * m_rotation(s, 0, 1, rng.uniform(0.0, 2.0 * M_PI));
    g.classify(s);
    return g;
}

GroupElement GroupElement::random_k(const ModelSpace& s, Rng& rng) {
    const GroupElement g = random(s, rng);
    const IwasawaNAK dec = iwasawa_nak(s, g);
    return dec.k;
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
    GroupElement g;
    g.m_ = m_ * o.m_;
    g.kind_ = Kind::Generic;
    return g;
}

GroupElement GroupElement::inverse() const {
    // g^{-1} = S^{-1} g^T S for form-preserving g
    const int n = static_cast<int>(m_.rows());
    GroupElement g;
    g.m_ = form_inverse(n) * m_.transposed() * form_matrix(n);
    g.kind_ = kind_ == Kind::Generic ? Kind::Generic : kind_;
    return g;
}

void GroupElement::classify(const ModelSpace& s) {
    const Point o = s.origin();
    const double scale = std::max(1.0, m_.max_abs());
    const double tol = 1e-12 * scale;
    if (frobenius_distance(m_, Mat::identity(m_.rows())) <= tol) {
        kind_ = Kind::Identity;
        return;
    }
    const Vec uo = embed_point(s, o);
    const Vec img = m_ * uo;
    double fix_o = 0.0;
    for (std::size_t i = 0; i < uo.size(); ++i) fix_o = std::max(fix_o, std::fabs(img[i] - uo[i]));
    if (fix_o <= tol) {
        kind_ = Kind::InK;
        return;
    }
    // N fixes infinity and acts trivially on heights; A fixes 0 and infinity.
    bool fixes_inf = true;
    for (std::size_t i = 0; i < uo.size(); ++i) {
        const double expect = (i == 1) ? 1.0 : 0.0;
        if (std::fabs(m_(i, 1) - expect) > tol) fixes_inf = false;
    }
    if (fixes_inf) {
        kind_ = Kind::InN;
        return;
    }
    bool diag_a = true;
    for (std::size_t i = 0; i < m_.rows(); ++i)
        for (std::size_t j = 0; j < m_.cols(); ++j) {
            const double expect = (i == j && i >= 2) ? 1.0 : (i == j ? m_(i, j) : 0.0);
            if (std::fabs(m_(i, j) - expect) > tol) diag_a = false;
        }
    kind_ = diag_a ? Kind::InA : Kind::Generic;
}

Point GroupElement::act(const ModelSpace& s, const Point& pt) const {
    return unembed_point(s, m_ * embed_point(s, pt));
}

BoundaryPoint GroupElement::act_boundary(const ModelSpace& s, const BoundaryPoint& b) const {
    Vec u = m_ * embed_boundary(s, b);
    double scale = 0.0;
    for (double v : u) scale = std::max(scale, std::fabs(v));
    if (std::fabs(u[0]) <= 1e-13 * scale) return BoundaryPoint::infinity(s.nx());
    Vec x(s.nx());
    for (int i = 0; i < s.nx(); ++i) x[i] = u[2 + i] / u[0];
    return BoundaryPoint::finite(std::move(x));
}

IwasawaNAK iwasawa_nak(const ModelSpace& s, const GroupElement& g) {
    IwasawaNAK d;
    const Point img = g.act(s, s.origin());
    d.t = img.y;
    d.n = GroupElement::n_element(s, img.x);
    d.k = GroupElement::a_element(s, d.t).inverse() * d.n.inverse() * g;
    return d;
}

IwasawaKAN iwasawa_kan(const ModelSpace& s, const GroupElement& g) {
    // g^{-1} = n a(t) k gives g = k^{-1} a(1/t) n^{-1}, already in KAN order
    const IwasawaNAK opp = iwasawa_nak(s, g.inverse());
    IwasawaKAN d;
    d.k = opp.k.inverse();
    d.t = 1.0 / opp.t;
    d.n = opp.n.inverse();
    return d;
}

Vec embed_point(const ModelSpace& s, const Point& pt) {
    const int nx = s.nx();
    Vec u(nx + 2);
    double nrm2 = 0.0;
    for (int i = 0; i < nx; ++i) nrm2 += pt.x[i] * pt.x[i];
    u[0] = 1.0 / pt.y;
    u[1] = (pt.y * pt.y + nrm2) / pt.y;
    for (int i = 0; i < nx; ++i) u[2 + i] = pt.x[i] / pt.y;
    return u;
}

Point unembed_point(const ModelSpace& s, const Vec& u) {
    if (!(u[0] > 0.0)) throw std::domain_error("unembed_point: not on the upper sheet");
    Vec x(s.nx());
    for (int i = 0; i < s.nx(); ++i) x[i] = u[2 + i] / u[0];
    return Point(std::move(x), 1.0 / u[0]);
}

Vec embed_boundary(const ModelSpace& s, const BoundaryPoint& b) {
    const int nx = s.nx();
    Vec u(nx + 2, 0.0);
    if (b.infinite) {
        u[1] = 1.0;
        return u;
    }
    double nrm2 = 0.0;
    for (int i = 0; i < nx; ++i) nrm2 += b.x[i] * b.x[i];
    // scaled so that u_0 = (u_+ + u_-)/2 equals 1/2
    const double scale = 1.0 / (1.0 + nrm2);
    u[0] = scale;
    u[1] = nrm2 * scale;
    for (int i = 0; i < nx; ++i) u[2 + i] = b.x[i] * scale;
    return u;
}

double minkowski(const Vec& u, const Vec& v) {
    double s = -0.5 * (u[0] * v[1] + u[1] * v[0]);
    for (std::size_t i = 2; i < u.size(); ++i) s += u[i] * v[i];
    return s;
}

double distance(const ModelSpace& s, const Point& p1, const Point& p2) {
    const double q = -minkowski(embed_point(s, p1), embed_point(s, p2));
    return std::acosh(std::max(1.0, q));
}

std::vector<Vec> tangent_frame(const ModelSpace& s, const Point& center) {
    const Mat seed = embed_jacobian(s, center);
    const int d = s.dim();
    std::vector<Vec> frame;
    for (int c = 0; c < d; ++c) {
        Vec v(seed.rows());
        for (std::size_t r = 0; r < seed.rows(); ++r) v[r] = seed(r, c);
        for (const Vec& e : frame) {
            const double proj = minkowski(v, e);
            for (std::size_t r = 0; r < v.size(); ++r) v[r] -= proj * e[r];
        }
        const double nrm = std::sqrt(minkowski(v, v));
        for (double& x : v) x /= nrm;
        frame.push_back(std::move(v));
    }
    return frame;
}

Point exp_map(const ModelSpace& s, const Point& center, const std::vector<Vec>& frame,
              const Vec& v) {
    const Vec uc = embed_point(s, center);
    double nrm2 = 0.0;
    for (double c : v) nrm2 += c * c;
    const double r = std::sqrt(nrm2);
    if (r == 0.0) return center;
    Vec u(uc.size());
    const double ch = std::cosh(r), sh = std::sinh(r) / r;
    for (std::size_t a = 0; a < uc.size(); ++a) {
        u[a] = ch * uc[a];
        for (std::size_t k = 0; k < frame.size(); ++k) u[a] += sh * v[k] * frame[k][a];
    }
    return unembed_point(s, u);
}

Mat embed_jacobian(const ModelSpace& s, const Point& pt) {
    const int nx = s.nx();
    Mat j(nx + 2, nx + 1);
    const double y = pt.y;
    double nrm2 = 0.0;
    for (int i = 0; i < nx; ++i) nrm2 += pt.x[i] * pt.x[i];
    // columns 0..nx-1: d/dx_i; column nx: d/dy
    j(0, nx) = -1.0 / (y * y);
    for (int i = 0; i < nx; ++i) j(1, i) = 2.0 * pt.x[i] / y;
    j(1, nx) = 1.0 - nrm2 / (y * y);
    for (int i = 0; i < nx; ++i) {
        j(2 + i, i) = 1.0 / y;
        j(2 + i, nx) = -pt.x[i] / (y * y);
    }
    return j;
}

}  // namespace rankone
