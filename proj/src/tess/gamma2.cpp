#include "rankone/tess/gamma2.hpp"

#include <cmath>
#include <complex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rankone {

namespace {

std::complex<double> apply_mobius(const Mobius& g, std::complex<double> z) {
    return (double(g.a) * z + double(g.b)) / (double(g.c) * z + double(g.d));
}

Mobius normalized(Mobius m) {
    if (m.c < 0 || (m.c == 0 && m.a < 0)) {
        m.a = -m.a;
        m.b = -m.b;
        m.c = -m.c;
        m.d = -m.d;
    }
    return m;
}

}  // namespace

Mobius Mobius::operator*(const Mobius& o) const {
    Mobius r;
    r.a = a * o.a + b * o.c;
    r.b = a * o.b + b * o.d;
    r.c = c * o.a + d * o.c;
    r.d = c * o.b + d * o.d;
    return normalized(r);
}

Mobius Mobius::inverse() const { return normalized({d, -b, -c, a}); }

bool Mobius::operator==(const Mobius& o) const {
    const Mobius x = normalized(*this), y = normalized(o);
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
}

bool Mobius::operator<(const Mobius& o) const {
    const Mobius x = normalized(*this), y = normalized(o);
    if (x.a != y.a) return x.a < y.a;
    if (x.b != y.b) return x.b < y.b;
    if (x.c != y.c) return x.c < y.c;
    return x.d < y.d;
}

GroupElement Mobius::to_group_element(const ModelSpace& s) const {
    if (s.dim() != 2)
        throw std::domain_error("Mobius::to_group_element: needs the hyperbolic plane");
    // action on the space of binary quadratic forms in the light-cone basis
    Mat m(3, 3);
    const double A = a, B = b, C = c, D = d;
    m(0, 0) = D * D;
    m(0, 1) = C * C;
    m(0, 2) = 2 * C * D;
    m(1, 0) = B * B;
    m(1, 1) = A * A;
    m(1, 2) = 2 * A * B;
    m(2, 0) = B * D;
    m(2, 1) = A * C;
    m(2, 2) = A * D + B * C;
    return GroupElement::from_matrix(s, m);
}

std::string Mobius::str() const {
    std::ostringstream os;
    os << "[" << a << "," << b << ";" << c << "," << d << "]";
    return os.str();
}

int Cusp::gamma2_class() const {
    const bool podd = ((p % 2) + 2) % 2 == 1;
    const bool qodd = ((q % 2) + 2) % 2 == 1;
    if (podd && !qodd) return 0;  // class of infinity
    if (!podd && qodd) return 1;  // class of 0
    return 2;                     // class of 1
}

BoundaryPoint Cusp::to_boundary(const ModelSpace& s) const {
    if (q == 0) return BoundaryPoint::infinity(s.nx());
    return BoundaryPoint::finite({static_cast<double>(p) / static_cast<double>(q)});
}

Cusp mobius_on_cusp(const Mobius& g, const Cusp& c) {
    std::int64_t p = g.a * c.p + g.b * c.q;
    std::int64_t q = g.c * c.p + g.d * c.q;
    std::int64_t gg = std::gcd(std::llabs(p), std::llabs(q));
    if (gg > 1) {
        p /= gg;
        q /= gg;
    }
    if (q < 0 || (q == 0 && p < 0)) {
        p = -p;
        q = -q;
    }
    return {p, q};
}

Mobius word_to_mobius(const Word& w) {
    Mobius g = Mobius::identity();
    for (int step : w) {
        switch (step) {
            case 1: g = g * Mobius::t(); break;
            case -1: g = g * Mobius::t_inv(); break;
            case 2: g = g * Mobius::tp(); break;
            case -2: g = g * Mobius::tp_inv(); break;
            default: throw std::invalid_argument("word_to_mobius: bad letter");
        }
    }
    return g;
}

bool horoballs_disjoint(double Y) {
    // horoballs have euclidean diameter 1/Y at the finite base cusps and all
    // translates have diameter 1/(c^2 Y) <= 1/(4Y); tangency gaps close at
    // small Y. The standard sufficient condition used here is Y >= 2 with
    // margin; the builder insists on Y >= 4 as the default regime.
    return Y >= 2.0;
}

namespace {

Word concat(Word a, const Word& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

Word inverse_word(const Word& w) {
    Word r;
    for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(-*it);
    return r;
}

}  // namespace

Gamma2Tessellation::Gamma2Tessellation(double Y) : Y_(Y) {
    if (!(Y >= 4.0))
        throw std::domain_error(
            "Gamma2Tessellation: Y below 4 risks overlapping horoballs");
    if (!horoballs_disjoint(Y))
        throw std::domain_error("Gamma2Tessellation: horoballs overlap");
    build();
}

void Gamma2Tessellation::build() {
    const Word e{}, wT{1}, wTp{2}, wTpInv{-2}, wG1Inv{1, -2};  // T T'^{-1}
    const Mobius mT = Mobius::t(), mTp = Mobius::tp();
    const Mobius mG1inv = mT * mTp.inverse();

    // 0-cell orbits: three cusps + four interior vertex orbits
    // [0]=cusp oo, [1]=cusp 0, [2]=cusp 1, [3]=v_TL, [4]=v_BL, [5]=p0L, [6]=pm1
    for (int i = 0; i < 7; ++i) {
        TessOrbit o;
        o.dim = 0;
        switch (i) {
            case 0: o.cusp = Cusp::infinity(); o.label = "cusp_inf"; break;
            case 1: o.cusp = Cusp::zero(); o.label = "cusp_0"; break;
            case 2: o.cusp = Cusp::one(); o.label = "cusp_1"; break;
            case 3: o.label = "v_top"; break;     // (-1, Y)
            case 4: o.label = "v_bottom"; break;  // (-1, 1/Y)
            case 5: o.label = "p_exit0"; break;   // arc exit at the 0-horoball
            case 6: o.label = "p_exitm1"; break;  // arc exit at the -1-horoball
        }
        orbits_[0].push_back(std::move(o));
    }

    auto ref = [](int orbit, const Mobius& g, const Word& w, int sign) {
        CellRef r;
        r.orbit = orbit;
        r.g = g;
        r.word = w;
        r.sign = sign;
        return r;
    };
    const Mobius id = Mobius::identity();

    // 1-cell orbits with oriented boundaries
    // [0] e_L   vertical segment (-1) x [1/Y, Y],      d = v_TL - v_BL
    // [1] h_inf horocycle [-1,1] x {Y},                d = T v_TL - v_TL
    // [2] e_arc arc |2z+1|=1 from pm1 to p0L,          d = p0L - pm1
    // [3] h_0   horocycle cap at 0, p0L -> T' p0L,     d = T' p0L - p0L
    // [4] h_1   cap at 1, T' pm1 -> T v_BL,            d = T v_BL - T' pm1
    // [5] h_m1  cap at -1, v_BL -> pm1,                d = pm1 - v_BL
    // [6] r_L   ray (-1) x [Y, oo],                    d = cusp_inf - v_TL
    // [7] r_0   arc piece p0L -> cusp 0,               d = cusp_0 - p0L
    // [8] s_R   arc piece T' pm1 -> cusp 1,            d = cusp_1 - T' pm1
    {
        TessOrbit o;
        o.dim = 1;
        o.label = "e_vertical";
        o.boundary = {ref(3, id, e, +1), ref(4, id, e, -1)};
        orbits_[1].push_back(o);
        o.label = "h_inf";
        o.boundary = {ref(3, mT, wT, +1), ref(3, id, e, -1)};
        orbits_[1].push_back(o);
        o.label = "e_arc";
        o.boundary = {ref(5, id, e, +1), ref(6, id, e, -1)};
        orbits_[1].push_back(o);
        o.label = "h_0";
        o.boundary = {ref(5, mTp, wTp, +1), ref(5, id, e, -1)};
        orbits_[1].push_back(o);
        o.label = "h_1";
        o.boundary = {ref(4, mT, wT, +1), ref(6, mTp, wTp, -1)};
        orbits_[1].push_back(o);
        o.label = "h_m1";
        o.boundary = {ref(6, id, e, +1), ref(4, id, e, -1)};
        orbits_[1].push_back(o);
        o.label = "r_inf";
        o.cusp = Cusp::infinity();
        o.boundary = {ref(0, id, e, +1), ref(3, id, e, -1)};
        orbits_[1].push_back(o);
        o.cusp = Cusp::zero();
        o.label = "r_0";
        o.boundary = {ref(1, id, e, +1), ref(5, id, e, -1)};
        orbits_[1].push_back(o);
        o.cusp = Cusp::one();
        o.label = "r_1";
        o.boundary = {ref(2, id, e, +1), ref(6, mTp, wTp, -1)};
        orbits_[1].push_back(o);
    }

    // 2-cell orbits, all counterclockwise
    // [0] F_bulk = F truncated at the four horoballs
    // [1] F_inf, [2] F_zero, [3] F_one: cones at the cusp classes
    {
        TessOrbit o;
        o.dim = 2;
        o.label = "F_bulk";
        o.boundary = {ref(0, id, e, -1),          // down the left edge
                      ref(5, id, e, +1),          // h_m1: v_BL -> pm1
                      ref(2, id, e, +1),          // arc: pm1 -> p0L
                      ref(3, id, e, +1),          // cap at 0: p0L -> p0R
                      ref(2, mTp, wTp, -1),       // right arc reversed: p0R -> p1
                      ref(4, id, e, +1),          // cap at 1: p1 -> v_BR
                      ref(0, mT, wT, +1),         // up the right edge
                      ref(1, id, e, -1)};         // top: v_TR -> v_TL
        orbits_[2].push_back(o);

        o.label = "F_inf";
        o.cusp = Cusp::infinity();
        o.boundary = {ref(1, id, e, +1), ref(6, mT, wT, +1), ref(6, id, e, -1)};
        orbits_[2].push_back(o);

        o.label = "F_zero";
        o.cusp = Cusp::zero();
        o.boundary = {ref(7, id, e, +1), ref(3, id, e, -1), ref(7, mTp, wTp, -1)};
        orbits_[2].push_back(o);

        o.label = "F_one";
        o.cusp = Cusp::one();
        o.boundary = {ref(8, id, e, +1), ref(4, id, e, -1), ref(5, mT, wT, -1),
                      ref(8, mG1inv, wG1Inv, -1)};
        orbits_[2].push_back(o);
    }
}

CellPatch Gamma2Tessellation::realize_edge(const ModelSpace& s, int orbit) const {
    if (s.dim() != 2)
        throw std::domain_error("realize_edge: tessellation lives on the plane");
    const double Y = Y_;
    const double th0 = 2.0 * std::atan(1.0 / Y);
    const double th1 = M_PI - th0;
    const Mobius g0{0, -1, 1, 0};                        // z -> -1/z, oo -> 0
    const Mobius g1{1, -1, 1, 0};                        // oo -> 1
    const GroupElement S = g0.to_group_element(s);
    const GroupElement G1 = g1.to_group_element(s);

    auto arc_patch = [&](double a, double b) {
        // the geodesic |2z+1| = 1 parameterized by the angle
        CellPatch c;
        c.dim = 1;
        c.quad_order = 12;
        c.map = [a, b](const Vec& chart) {
            const double th = a + (b - a) * chart[0];
            return Point({0.5 * (std::cos(th) - 1.0)}, 0.5 * std::sin(th));
        };
        c.jacobian = [a, b](const Vec& chart) {
            const double th = a + (b - a) * chart[0];
            Mat j(2, 1);
            j(0, 0) = -0.5 * std::sin(th) * (b - a);
            j(1, 0) = 0.5 * std::cos(th) * (b - a);
            return j;
        };
        return c;
    };

    auto vertical_patch = [&](double x, double ylo, double yhi) {
        CellPatch c;
        c.dim = 1;
        c.quad_order = 12;
        c.map = [x, ylo, yhi](const Vec& chart) {
            // logarithmic parameterization keeps nodes balanced in height
            const double y = ylo * std::pow(yhi / ylo, chart[0]);
            return Point({x}, y);
        };
        c.jacobian = [x, ylo, yhi](const Vec& chart) {
            const double y = ylo * std::pow(yhi / ylo, chart[0]);
            Mat j(2, 1);
            j(1, 0) = y * std::log(yhi / ylo);
            return j;
        };
        return c;
    };

    switch (orbit) {
        case 0:  // e_L upward
            return vertical_patch(-1.0, 1.0 / Y, Y);
        case 1:  // h_inf left to right
            return cell_horocycle_segment(s, {-1.0}, {1.0}, Y);
        case 2:  // e_arc from pm1 (th1) to p0L (th0)
            return arc_patch(th1, th0);
        case 3: {  // h_0 = S . (horocycle from x=1 to x=-1 at height Y)
            return transform_patch(s, S, cell_horocycle_segment(s, {1.0}, {-1.0}, Y));
        }
        case 4: {  // h_1 = g1 . (horocycle from x_pre(p1) to x_pre(v_BR))
            // g1^{-1}(z) = 1/(1-z); preimages computed at build time
            const std::complex<double> p1 =
                apply_mobius(Mobius::tp(), std::complex<double>(
                                               0.5 * (std::cos(th1) - 1.0),
                                               0.5 * std::sin(th1)));
            const std::complex<double> vbr(1.0, 1.0 / Y);
            const std::complex<double> pre1 = 1.0 / (1.0 - p1);
            const std::complex<double> pre2 = 1.0 / (1.0 - vbr);
            return transform_patch(
                s, G1, cell_horocycle_segment(s, {pre1.real()}, {pre2.real()}, Y));
        }
        case 5: {  // h_m1 = T^{-1} g1 . (...): cap at -1 from v_BL to pm1
            const std::complex<double> vbl(-1.0, 1.0 / Y);
            const std::complex<double> pm1(0.5 * (std::cos(th1) - 1.0),
                                           0.5 * std::sin(th1));
            // (T^{-1} g1)^{-1} = g1^{-1} T: z -> 1/(1 - (z + 2)) = 1/(-1 - z)
            const std::complex<double> pre1 = 1.0 / (-1.0 - vbl);
            const std::complex<double> pre2 = 1.0 / (-1.0 - pm1);
            const GroupElement Gm1 = (Mobius::t_inv() * g1).to_group_element(s);
            return transform_patch(
                s, Gm1, cell_horocycle_segment(s, {pre1.real()}, {pre2.real()}, Y));
        }
        case 6: {  // r_L: ray at x = -1 upward from Y
            CellPatch c = cell_vertical_ray(s, {-1.0}, Y);
            c.cusp = BoundaryPoint::infinity(s.nx());
            return c;
        }
        case 7: {  // r_0 = S . (ray at x = 1): from p0L toward the cusp 0
            CellPatch c = transform_patch(s, S, cell_vertical_ray(s, {1.0}, Y));
            c.kind = CellPatch::Kind::CuspCylinder;
            c.base_height = Y;
            c.cusp = BoundaryPoint::zero(s.nx());
            return c;
        }
        case 8: {  // s_R = g1 . (ray): from p1 toward the cusp 1
            const std::complex<double> p1 =
                apply_mobius(Mobius::tp(), std::complex<double>(
                                               0.5 * (std::cos(th1) - 1.0),
                                               0.5 * std::sin(th1)));
            const double ypre = (1.0 / (1.0 - p1)).imag();
            CellPatch c = transform_patch(s, G1, cell_vertical_ray(s, {1.0}, ypre));
            c.kind = CellPatch::Kind::CuspCylinder;
            c.base_height = ypre;
            c.cusp = BoundaryPoint::finite({1.0});
            return c;
        }
        default:
            throw std::out_of_range("realize_edge: no such 1-cell orbit");
    }
}

CellPatch Gamma2Tessellation::realize_edge(const ModelSpace& s, const CellRef& ref) const {
    CellPatch base = realize_edge(s, ref.orbit);
    CellPatch out = ref.g.is_identity() ? base
                                        : transform_patch(s, ref.g.to_group_element(s), base);
    out.orientation *= ref.sign;
    return out;
}

std::vector<CellRef> Gamma2Tessellation::boundary_of(int orbit2, const Mobius& g,
                                                     const Word& w) const {
    std::vector<CellRef> out;
    for (const CellRef& r : orbits_[2][orbit2].boundary) {
        CellRef t = r;
        t.g = g * r.g;
        t.word = concat(w, r.word);
        out.push_back(std::move(t));
    }
    return out;
}

Mobius Gamma2Tessellation::locate(double x, double y, Word* word) const {
    if (!(y > 0)) throw std::domain_error("locate: point must be in the upper half plane");
    std::complex<double> z(x, y);
    Mobius gamma_inv = Mobius::identity();
    Word w;
    for (int iter = 0; iter < 400; ++iter) {
        const double shift = std::floor((z.real() + 1.0) / 2.0);
        if (shift != 0.0) {
            const auto k = static_cast<std::int64_t>(shift);
            Mobius tk{1, -2 * k, 0, 1};
            z = apply_mobius(tk, z);
            gamma_inv = tk * gamma_inv;
            for (std::int64_t i = 0; i < std::llabs(k); ++i) w.push_back(k > 0 ? -1 : 1);
        }
        if (std::norm(2.0 * z - 1.0) < 1.0 - 1e-14) {
            z = apply_mobius(Mobius::tp_inv(), z);
            gamma_inv = Mobius::tp_inv() * gamma_inv;
            w.push_back(-2);
        } else if (std::norm(2.0 * z + 1.0) < 1.0 - 1e-14) {
            z = apply_mobius(Mobius::tp(), z);
            gamma_inv = Mobius::tp() * gamma_inv;
            w.push_back(2);
        } else {
            if (word) *word = inverse_word(w);
            return gamma_inv.inverse();
        }
    }
    throw std::runtime_error("locate: reduction did not terminate");
}

std::string Gamma2Tessellation::export_text() const {
    std::ostringstream os;
    os << "gamma2-tessellation Y=" << Y_ << "\n";
    for (int dim = 0; dim <= 2; ++dim) {
        for (std::size_t i = 0; i < orbits_[dim].size(); ++i) {
            const TessOrbit& o = orbits_[dim][i];
            os << "cell dim=" << dim << " orbit=" << i << " label=" << o.label;
            if (o.cusp) os << " cusp=" << o.cusp->p << "/" << o.cusp->q;
            if (!o.boundary.empty()) {
                os << " boundary=";
                for (std::size_t k = 0; k < o.boundary.size(); ++k) {
                    const CellRef& r = o.boundary[k];
                    if (k) os << ",";
                    os << (r.sign > 0 ? "+" : "-") << r.orbit << ":" << r.g.str();
                }
            }
            os << "\n";
        }
    }
    return os.str();
}

}  // namespace rankone
