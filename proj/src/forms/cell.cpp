#include "rankone/forms/cell.hpp"

#include <cmath>
#include <stdexcept>

namespace rankone {

namespace {

// d x (d+1) Jacobian of the hyperboloid chart (u -> (x, y))
Mat unembed_jacobian(const ModelSpace& s, const Vec& u) {
    const int nx = s.nx();
    Mat j(nx + 1, nx + 2);
    const double up = u[0];
    for (int i = 0; i < nx; ++i) {
        j(i, 0) = -u[2 + i] / (up * up);
        j(i, 2 + i) = 1.0 / up;
    }
    j(nx, 0) = -1.0 / (up * up);
    return j;
}

}  // namespace

Mat cell_jacobian(const ModelSpace& s, const CellPatch& c, const Vec& chart) {
    if (c.jacobian) return c.jacobian(chart);
    const int d = s.dim();
    Mat j(d, c.dim);
    for (int k = 0; k < c.dim; ++k) {
        const double h = 1e-5 * std::max(1.0, std::fabs(chart[k]));
        Vec hi = chart, lo = chart;
        hi[k] += h;
        lo[k] -= h;
        const Point phi = c.map(hi), plo = c.map(lo);
        for (int r = 0; r < d - 1; ++r) j(r, k) = (phi.x[r] - plo.x[r]) / (2.0 * h);
        j(d - 1, k) = (phi.y - plo.y) / (2.0 * h);
    }
    return j;
}

CellPatch cell_geodesic_sphere(const ModelSpace& s, const Point& center, double radius,
                               int quad_order) {
    if (!(radius > 0.0)) throw std::domain_error("cell_geodesic_sphere: radius <= 0");
    const int d = s.dim();
    const Vec uc = embed_point(s, center);
    const auto frame = tangent_frame(s, center);
    const double ch = std::cosh(radius), sh = std::sinh(radius);

    CellPatch cell;
    cell.dim = d - 1;
    cell.quad_order = quad_order;

    auto ambient = [uc, frame, ch, sh, d](const Vec& chart, Vec& u, std::vector<Vec>& du) {
        // direction on the unit sphere of the tangent space and its chart
        // derivatives
        Vec dir(d, 0.0);
        std::vector<Vec> ddir;
        if (d == 2) {
            const double th = 2.0 * M_PI * chart[0];
            dir = {std::cos(th), std::sin(th)};
            ddir = {{-2.0 * M_PI * std::sin(th), 2.0 * M_PI * std::cos(th)}};
        } else {
            const double th = M_PI * chart[0], ph = 2.0 * M_PI * chart[1];
            dir = {std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph), std::cos(th)};
            ddir = {{M_PI * std::cos(th) * std::cos(ph), M_PI * std::cos(th) * std::sin(ph),
                     -M_PI * std::sin(th)},
                    {-2.0 * M_PI * std::sin(th) * std::sin(ph),
                     2.0 * M_PI * std::sin(th) * std::cos(ph), 0.0}};
        }
        u.assign(uc.size(), 0.0);
        for (std::size_t r = 0; r < uc.size(); ++r) {
            u[r] = ch * uc[r];
            for (int k = 0; k < d; ++k) u[r] += sh * dir[k] * frame[k][r];
        }
        du.assign(ddir.size(), Vec(uc.size(), 0.0));
        for (std::size_t a = 0; a < ddir.size(); ++a)
            for (std::size_t r = 0; r < uc.size(); ++r)
                for (int k = 0; k < d; ++k) du[a][r] += sh * ddir[a][k] * frame[k][r];
    };

    cell.map = [&s, ambient](const Vec& chart) {
        Vec u;
        std::vector<Vec> du;
        ambient(chart, u, du);
        return unembed_point(s, u);
    };
    cell.jacobian = [&s, ambient, d](const Vec& chart) {
        Vec u;
        std::vector<Vec> du;
        ambient(chart, u, du);
        const Mat uj = unembed_jacobian(s, u);
        Mat j(d, d - 1);
        for (int col = 0; col < d - 1; ++col)
            for (int r = 0; r < d; ++r) {
                double acc = 0.0;
                for (std::size_t a = 0; a < u.size(); ++a) acc += uj(r, a) * du[col][a];
                j(r, col) = acc;
            }
        return j;
    };

    // orient by the outward normal: det[radial | J] > 0 in coordinates
    const Vec probe(d - 1, 0.37);
    Vec u;
    std::vector<Vec> du;
    ambient(probe, u, du);
    Vec radial_u(u.size());
    for (std::size_t r = 0; r < u.size(); ++r) {
        // d/dr of cosh(r) uc + sinh(r) w = sinh(r) uc + cosh(r) w; recover w
        const double w = (u[r] - ch * uc[r]) / sh;
        radial_u[r] = sh * uc[r] + ch * w;
    }
    const Mat uj = unembed_jacobian(s, u);
    Mat check(d, d);
    for (int r = 0; r < d; ++r) {
        double acc = 0.0;
        for (std::size_t a = 0; a < u.size(); ++a) acc += uj(r, a) * radial_u[a];
        check(r, 0) = acc;
    }
    const Mat j = cell.jacobian(probe);
    for (int col = 0; col < d - 1; ++col)
        for (int r = 0; r < d; ++r) check(r, col + 1) = j(r, col);
    cell.orientation = det(check) > 0 ? 1.0 : -1.0;
    return cell;
}

CellPatch cell_geodesic_segment(const ModelSpace& s, const Point& a, const Point& b,
                                int quad_order) {
    const Vec ua = embed_point(s, a), ub = embed_point(s, b);
    const double len = distance(s, a, b);
    if (!(len > 0.0)) throw std::domain_error("cell_geodesic_segment: equal endpoints");
    // unit tangent at a toward b
    Vec w(ua.size());
    const double q = -minkowski(ua, ub);
    for (std::size_t r = 0; r < ua.size(); ++r) w[r] = (ub[r] - q * ua[r]) / std::sinh(len);

    CellPatch cell;
    cell.dim = 1;
    cell.quad_order = quad_order;
    cell.map = [&s, ua, w, len](const Vec& chart) {
        const double t = chart[0] * len;
        Vec u(ua.size());
        for (std::size_t r = 0; r < ua.size(); ++r)
            u[r] = std::cosh(t) * ua[r] + std::sinh(t) * w[r];
        return unembed_point(s, u);
    };
    cell.jacobian = [&s, ua, w, len](const Vec& chart) {
        const double t = chart[0] * len;
        Vec u(ua.size()), du(ua.size());
        for (std::size_t r = 0; r < ua.size(); ++r) {
            u[r] = std::cosh(t) * ua[r] + std::sinh(t) * w[r];
            du[r] = len * (std::sinh(t) * ua[r] + std::cosh(t) * w[r]);
        }
        const Mat uj = unembed_jacobian(s, u);
        const int d = s.dim();
        Mat j(d, 1);
        for (int r = 0; r < d; ++r) {
            double acc = 0.0;
            for (std::size_t a = 0; a < u.size(); ++a) acc += uj(r, a) * du[a];
            j(r, 0) = acc;
        }
        return j;
    };
    return cell;
}

CellPatch cell_horocycle_segment(const ModelSpace& s, const Vec& x0, const Vec& x1,
                                 double h, int quad_order) {
    CellPatch cell;
    cell.dim = 1;
    cell.quad_order = quad_order;
    const int d = s.dim();
    cell.map = [x0, x1, h](const Vec& chart) {
        Vec x(x0.size());
        for (std::size_t i = 0; i < x0.size(); ++i)
            x[i] = (1.0 - chart[0]) * x0[i] + chart[0] * x1[i];
        return Point(std::move(x), h);
    };
    cell.jacobian = [x0, x1, d](const Vec&) {
        Mat j(d, 1);
        for (int i = 0; i < d - 1; ++i) j(i, 0) = x1[i] - x0[i];
        return j;
    };
    return cell;
}

CellPatch cell_vertical_ray(const ModelSpace& s, const Vec& x0, double Y,
                            int quad_order) {
    CellPatch cell;
    cell.dim = 1;
    cell.kind = CellPatch::Kind::CuspCylinder;
    cell.base_height = Y;
    cell.cusp = BoundaryPoint::infinity(s.nx());
    cell.quad_order = quad_order;
    const int d = s.dim();
    cell.map = [x0](const Vec& chart) { return Point(x0, chart[0]); };
    cell.jacobian = [d](const Vec&) {
        Mat j(d, 1);
        j(d - 1, 0) = 1.0;
        return j;
    };
    return cell;
}

CellPatch transform_patch(const ModelSpace& s, const GroupElement& g, const CellPatch& c) {
    CellPatch out = c;
    const auto base_map = c.map;
    const auto base_jac = c.jacobian;
    out.map = [&s, g, base_map](const Vec& chart) { return g.act(s, base_map(chart)); };
    if (base_jac) {
        const int cdim = c.dim;
        out.jacobian = [&s, g, base_map, base_jac, cdim](const Vec& chart) {
            const Point p = base_map(chart);
            const Mat j = base_jac(chart);
            const Vec u = embed_point(s, p);
            Vec gu = g.matrix() * u;
            const Mat uj = unembed_jacobian(s, gu);
            const Mat chain = g.matrix() * embed_jacobian(s, p);
            const int d = s.dim();
            Mat res(d, cdim);
            for (int col = 0; col < cdim; ++col)
                for (int r = 0; r < d; ++r) {
                    double acc = 0.0;
                    for (std::size_t a = 0; a < u.size(); ++a)
                        for (int b = 0; b < d; ++b)
                            acc += uj(r, a) * chain(a, b) * j(b, col);
                    res(r, col) = acc;
                }
            return res;
        };
    } else {
        out.jacobian = nullptr;
    }
    if (c.cusp) out.cusp = g.act_boundary(s, *c.cusp);
    return out;
}

}  // namespace rankone
