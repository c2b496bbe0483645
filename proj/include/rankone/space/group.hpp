#ifndef RANKONE_SPACE_GROUP_HPP
#define RANKONE_SPACE_GROUP_HPP

#include <optional>

#include "rankone/space/model_space.hpp"
#include "rankone/space/point.hpp"
#include "rankone/util/linalg.hpp"
#include "rankone/util/rng.hpp"

namespace rankone {

// Matrix model of G for the q = 0 instances: the identity component of the
// indefinite orthogonal group of the form -u_+ u_- + |u_vec|^2 on R^{d+1},
// acting on the upper hyperboloid sheet. Coordinates are light-cone based:
// index 0 = u_+, index 1 = u_-, indices 2..d = u_vec.
//
// A point (x, y) embeds as (1/y, (y^2+|x|^2)/y, x/y); the boundary chart
// point x embeds as the null ray through (1, |x|^2, x) and infinity as the
// ray through (0, 1, 0).
class GroupElement {
public:
    enum class Kind { Identity, InN, InA, InK, Generic };

    GroupElement() = default;

    // Validates that the matrix preserves the quadratic form and the sheet.
    static GroupElement from_matrix(const ModelSpace& s, Mat m);

    static GroupElement identity(const ModelSpace& s);
    static GroupElement n_element(const ModelSpace& s, const Vec& x);
    static GroupElement a_element(const ModelSpace& s, double t);
    static GroupElement weyl_w(const ModelSpace& s);
    // rotation in the (u_i, u_j) plane of the u_vec block (an M-element for
    // i, j < p; general K needs conjugation, see random_k)
    static GroupElement m_rotation(const ModelSpace& s, int i, int j, double angle);

    static GroupElement random(const ModelSpace& s, Rng& rng);
    static GroupElement random_k(const ModelSpace& s, Rng& rng);

    const Mat& matrix() const { return m_; }
    int ambient_dim() const { return static_cast<int>(m_.rows()); }
    Kind kind() const { return kind_; }

    GroupElement operator*(const GroupElement& o) const;
    GroupElement inverse() const;

    Point act(const ModelSpace& s, const Point& pt) const;
    BoundaryPoint act_boundary(const ModelSpace& s, const BoundaryPoint& b) const;

private:
    Mat m_;
    Kind kind_ = Kind::Identity;

    void classify(const ModelSpace& s);
};

struct IwasawaNAK {
    GroupElement n;
    double t = 1.0;
    GroupElement k;
};

struct IwasawaKAN {
    GroupElement k;
    double t = 1.0;
    GroupElement n;
};

// g = n a(t) k, peeled off through the image of the base point.
IwasawaNAK iwasawa_nak(const ModelSpace& s, const GroupElement& g);

// g = k a(t) n via the opposite decomposition of g^{-1}.
IwasawaKAN iwasawa_kan(const ModelSpace& s, const GroupElement& g);

// Hyperboloid embedding helpers (also used by the kernel formulas).
Vec embed_point(const ModelSpace& s, const Point& pt);
Point unembed_point(const ModelSpace& s, const Vec& u);
// null vector normalized so that the u_0 component is 1/2
Vec embed_boundary(const ModelSpace& s, const BoundaryPoint& b);
// Minkowski pairing -u_+ v_-/2 - u_- v_+/2 + u_vec . v_vec
double minkowski(const Vec& u, const Vec& v);

double distance(const ModelSpace& s, const Point& p1, const Point& p2);

// Minkowski-orthonormal frame of the tangent space at a point, produced by
// Gram-Schmidt on the coordinate derivations
std::vector<Vec> tangent_frame(const ModelSpace& s, const Point& center);

// geodesic exponential: exp_center(sum_k v_k E_k) for the given frame
Point exp_map(const ModelSpace& s, const Point& center, const std::vector<Vec>& frame,
              const Vec& v);

// d(embedded point)/d(x_i, y): rows = ambient coordinates, columns = the d
// horospherical coordinates (x_1..x_{d-1}, y)
Mat embed_jacobian(const ModelSpace& s, const Point& pt);

}  // namespace rankone

#endif
