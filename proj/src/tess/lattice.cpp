#include "rankone/tess/lattice.hpp"

#include <cmath>
#include <stdexcept>

namespace rankone {

namespace {

// the central shear picked up when the generator of the given axis moves a
// face point: b(e_axis, x^(1))
Vec central_shear(const ModelSpace& s, int axis, const Vec& x) {
    Vec e(s.p(), 0.0);
    e[axis] = 1.0;
    Vec x1(x.begin(), x.begin() + s.p());
    return s.b_form(e, x1);
}

}  // namespace

bool NFacePiece::contains(const ModelSpace& s, const Vec& face_point) const {
    if (axis >= s.p()) return true;  // central faces never subdivide
    const Vec shear = central_shear(s, axis, face_point);
    for (int l = 0; l < s.q(); ++l) {
        const double target = face_point[s.p() + l] + shear[l];
        if (std::floor(target) != central_k[l]) return false;
    }
    return true;
}

std::vector<const NFacePiece*> NLatticeTessellation::face_pieces(int axis) const {
    std::vector<const NFacePiece*> out;
    for (const NFacePiece& piece : pieces)
        if (piece.axis == axis) out.push_back(&piece);
    return out;
}

NLatticeTessellation build_lattice_tessellation(const ModelSpace& s) {
    std::vector<Vec> gens;
    for (int j = 0; j < s.nx(); ++j) {
        Vec e(s.nx(), 0.0);
        e[j] = 1.0;
        gens.push_back(std::move(e));
    }
    return build_lattice_tessellation(s, gens);
}

NLatticeTessellation build_lattice_tessellation(const ModelSpace& s,
                                                const std::vector<Vec>& generators) {
    const int p = s.p(), q = s.q();
    if (static_cast<int>(generators.size()) != p + q)
        throw std::invalid_argument("build_lattice_tessellation: need p+q generators");
    // validation: generators in the square-bracket normal form (unit steps)
    // and closed central products
    for (int j = 0; j < p + q; ++j) {
        for (int i = 0; i < p + q; ++i) {
            const double expect = (i == j) ? 1.0 : 0.0;
            if (std::fabs(generators[j][i] - expect) > 1e-12)
                throw std::invalid_argument(
                    "build_lattice_tessellation: generators must be unit steps in "
                    "square-bracket coordinates");
        }
    }
    // central closure: b(e_i, e_j) must be integral for the group generated
    // to be a lattice
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) {
            Vec ei(p, 0.0), ej(p, 0.0);
            ei[i] = 1.0;
            ej[j] = 1.0;
            for (double c : s.b_form(ei, ej))
                if (std::fabs(c - std::round(c)) > 1e-12)
                    throw std::invalid_argument(
                        "build_lattice_tessellation: non-integral central products; "
                        "not a cocompact lattice");
        }

    NLatticeTessellation tess;
    tess.p = p;
    tess.q = q;
    for (int axis = 0; axis < p + q; ++axis) {
        if (axis >= p || q == 0) {
            // central or abelian direction: single piece, plain translation
            NFacePiece piece;
            piece.axis = axis;
            piece.central_k.assign(q, 0);
            piece.pairing = generators[axis];
            tess.pieces.push_back(std::move(piece));
            continue;
        }
        // range of floor(x_{p+l} + shear_l(x)) over the unit face: evaluate
        // the linear shear at the corners of [0,1]^p and add x_{p+l} in [0,1]
        Vec shear_min(q, 0.0), shear_max(q, 0.0);
        for (int corner = 0; corner < (1 << p); ++corner) {
            Vec x(p + q, 0.0);
            for (int i = 0; i < p; ++i) x[i] = (corner >> i) & 1;
            const Vec sh = central_shear(s, axis, x);
            for (int l = 0; l < q; ++l) {
                shear_min[l] = std::min(shear_min[l], sh[l]);
                shear_max[l] = std::max(shear_max[l], sh[l]);
            }
        }
        // enumerate floor vectors over the product of ranges
        std::vector<std::vector<int>> floors(q);
        for (int l = 0; l < q; ++l) {
            const int lo = static_cast<int>(std::floor(shear_min[l]));
            const int hi = static_cast<int>(std::floor(shear_max[l] + 1.0 - 1e-12));
            for (int k = lo; k <= hi; ++k) floors[l].push_back(k);
        }
        std::vector<int> idx(q, 0);
        while (true) {
            NFacePiece piece;
            piece.axis = axis;
            piece.central_k.resize(q);
            for (int l = 0; l < q; ++l) piece.central_k[l] = floors[l][idx[l]];
            // pairing element: mu^{-k} lambda_axis in coordinates
            Vec mu(p + q, 0.0);
            for (int l = 0; l < q; ++l) mu[p + l] = -piece.central_k[l];
            piece.pairing = s.n_compose(mu, generators[axis]);
            tess.pieces.push_back(std::move(piece));
            int l = 0;
            for (; l < q; ++l) {
                if (++idx[l] < static_cast<int>(floors[l].size())) break;
                idx[l] = 0;
            }
            if (l == q) break;
        }
    }
    return tess;
}

}  // namespace rankone
