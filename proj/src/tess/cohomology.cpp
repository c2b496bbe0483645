#include "rankone/tess/cohomology.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace rankone {

MatQ MatQ::identity(std::size_t n) {
    MatQ m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
}

MatQ MatQ::operator*(const MatQ& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("MatQ: size mismatch");
    MatQ r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& v = (*this)(i, k);
            if (v.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += v * o(k, j);
        }
    return r;
}

MatQ MatQ::operator+(const MatQ& o) const {
    MatQ r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

MatQ MatQ::operator-(const MatQ& o) const {
    MatQ r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

MatQ MatQ::scaled(const Rational& s) const {
    MatQ r = *this;
    for (auto& v : r.a_) v *= s;
    return r;
}

bool MatQ::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Rational& v) { return v.is_zero(); });
}

std::size_t rank_exact(MatQ m) {
    std::size_t rank = 0;
    const std::size_t rows = m.rows(), cols = m.cols();
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && m(piv, col).is_zero()) ++piv;
        if (piv == rows) continue;
        if (piv != rank)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(piv, j), m(rank, j));
        const Rational inv = Rational(1) / m(rank, col);
        for (std::size_t j = col; j < cols; ++j) m(rank, j) *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m(r, col).is_zero()) continue;
            const Rational f = m(r, col);
            for (std::size_t j = col; j < cols; ++j) m(r, j) -= f * m(rank, j);
        }
        ++rank;
    }
    return rank;
}

MatQ inverse_exact(MatQ m) {
    const std::size_t n = m.rows();
    MatQ inv = MatQ::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m(piv, col).is_zero()) ++piv;
        if (piv == n) throw std::domain_error("inverse_exact: singular");
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(piv, j), m(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        const Rational d = Rational(1) / m(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            m(col, j) *= d;
            inv(col, j) *= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m(r, col).is_zero()) continue;
            const Rational f = m(r, col);
            for (std::size_t j = 0; j < n; ++j) {
                m(r, j) -= f * m(col, j);
                inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

MatQ vstack(const MatQ& a, const MatQ& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack: size mismatch");
    MatQ r(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, j) = b(i, j);
    return r;
}

GroupModule GroupModule::trivial() {
    GroupModule v;
    v.tag = "trivial";
    v.dim = 1;
    v.gen_t = MatQ::identity(1);
    v.gen_tp = MatQ::identity(1);
    return v;
}

GroupModule GroupModule::standard2() {
    GroupModule v;
    v.tag = "sym1";
    v.dim = 2;
    v.gen_t = MatQ(2, 2);
    v.gen_t(0, 0) = Rational(1);
    v.gen_t(0, 1) = Rational(2);
    v.gen_t(1, 1) = Rational(1);
    v.gen_tp = MatQ(2, 2);
    v.gen_tp(0, 0) = Rational(1);
    v.gen_tp(1, 0) = Rational(2);
    v.gen_tp(1, 1) = Rational(1);
    return v;
}

GroupModule GroupModule::permutation3() {
    GroupModule v;
    v.tag = "perm3";
    v.dim = 3;
    v.gen_t = MatQ(3, 3);   // 3-cycle (0 1 2)
    v.gen_t(1, 0) = Rational(1);
    v.gen_t(2, 1) = Rational(1);
    v.gen_t(0, 2) = Rational(1);
    v.gen_tp = MatQ(3, 3);  // transposition (0 1)
    v.gen_tp(1, 0) = Rational(1);
    v.gen_tp(0, 1) = Rational(1);
    v.gen_tp(2, 2) = Rational(1);
    return v;
}

MatQ GroupModule::act(const Word& w) const {
    MatQ m = MatQ::identity(dim);
    for (int step : w) {
        switch (step) {
            case 1: m = m * gen_t; break;
            case -1: m = m * inverse_exact(gen_t); break;
            case 2: m = m * gen_tp; break;
            case -2: m = m * inverse_exact(gen_tp); break;
            default: throw std::invalid_argument("GroupModule::act: bad letter");
        }
    }
    return m;
}

MatQ boundary_matrix(const Gamma2Tessellation& tess, int degree, const GroupModule& v) {
    if (degree < 1 || degree > 2)
        throw std::invalid_argument("boundary_matrix: degree must be 1 or 2");
    const auto& targets = tess.orbits(degree);
    const auto& sources = tess.orbits(degree - 1);
    const int n = v.dim;
    MatQ d(targets.size() * n, sources.size() * n);
    for (std::size_t t = 0; t < targets.size(); ++t) {
        for (const CellRef& r : targets[t].boundary) {
            const MatQ block = v.act(r.word).scaled(Rational(r.sign));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    d(t * n + i, r.orbit * n + j) += block(i, j);
        }
    }
    return d;
}

namespace {

// basis of the nullspace by reduced row echelon form
std::vector<std::vector<Rational>> kernel_basis(const MatQ& m) {
    std::vector<std::vector<Rational>> basis;
    MatQ rref = m;
    std::vector<int> pivot_col;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < rref.cols() && rank < rref.rows(); ++c) {
        std::size_t piv = rank;
        while (piv < rref.rows() && rref(piv, c).is_zero()) ++piv;
        if (piv == rref.rows()) continue;
        if (piv != rank)
            for (std::size_t j = 0; j < rref.cols(); ++j)
                std::swap(rref(piv, j), rref(rank, j));
        const Rational invp = Rational(1) / rref(rank, c);
        for (std::size_t j = 0; j < rref.cols(); ++j) rref(rank, j) *= invp;
        for (std::size_t r2 = 0; r2 < rref.rows(); ++r2) {
            if (r2 == rank || rref(r2, c).is_zero()) continue;
            const Rational f = rref(r2, c);
            for (std::size_t j = 0; j < rref.cols(); ++j) rref(r2, j) -= f * rref(rank, j);
        }
        pivot_col.push_back(static_cast<int>(c));
        ++rank;
    }
    for (int free_c = 0; free_c < static_cast<int>(rref.cols()); ++free_c) {
        if (std::find(pivot_col.begin(), pivot_col.end(), free_c) != pivot_col.end())
            continue;
        std::vector<Rational> vec(rref.cols());
        vec[free_c] = Rational(1);
        for (std::size_t r2 = 0; r2 < rank; ++r2)
            vec[pivot_col[r2]] = Rational(0) - rref(r2, free_c);
        basis.push_back(std::move(vec));
    }
    return basis;
}

// rows expressing the cusp-stabilizer invariance of degree-0 cochains
MatQ cusp_constraints(const Gamma2Tessellation& tess, const GroupModule& v) {
    const int n = v.dim;
    const std::size_t n0 = tess.orbits(0).size();
    // stabilizer generator words at the three cusp classes
    const std::map<int, Word> stab = {
        {0, Word{1}},        // infinity: T
        {1, Word{2}},        // zero: T'
        {2, Word{2, -1}}};   // one: T' T^{-1}
    MatQ rows(3 * n, n0 * n);
    int written = 0;
    for (std::size_t o = 0; o < n0; ++o) {
        if (!tess.orbits(0)[o].cusp) continue;
        const int cls = tess.orbits(0)[o].cusp->gamma2_class();
        const MatQ m = v.act(stab.at(cls)) - MatQ::identity(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) rows(written * n + i, o * n + j) = m(i, j);
        ++written;
    }
    return rows;
}

std::size_t kernel_dim(const MatQ& m) { return m.cols() - rank_exact(m); }

}  // namespace

CohomologyDims parabolic_cohomology_dims(const Gamma2Tessellation& tess,
                                         const GroupModule& v) {
    const MatQ d0 = boundary_matrix(tess, 1, v);
    const MatQ d1 = boundary_matrix(tess, 2, v);
    const MatQ constraints = cusp_constraints(tess, v);

    // sanity: d1 d0 = 0 exactly
    if (!(d1 * d0).is_zero())
        throw std::logic_error("parabolic_cohomology_dims: d^2 is not zero");

    CohomologyDims dims;
    dims.h0 = kernel_dim(vstack(d0, constraints));
    const std::size_t c0_pb = kernel_dim(constraints);
    const std::size_t im_d0 = c0_pb - dims.h0;
    dims.h1 = kernel_dim(d1) - im_d0;
    dims.h2 = d1.rows() - rank_exact(d1);
    return dims;
}

CohomologyDims ordinary_cohomology_dims(const Gamma2Tessellation& tess,
                                        const GroupModule& v) {
    // subcomplex inside S(Y): vertex orbits 3..6, edge orbits 0..5, face orbit 0
    const int n = v.dim;
    const MatQ d0_full = boundary_matrix(tess, 1, v);
    const MatQ d1_full = boundary_matrix(tess, 2, v);
    MatQ d0(6 * n, 4 * n);
    for (int e = 0; e < 6; ++e)
        for (int vo = 0; vo < 4; ++vo)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    d0(e * n + i, vo * n + j) = d0_full(e * n + i, (vo + 3) * n + j);
    MatQ d1(1 * n, 6 * n);
    for (int e = 0; e < 6; ++e)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) d1(i, e * n + j) = d1_full(i, e * n + j);

    if (!(d1 * d0).is_zero())
        throw std::logic_error("ordinary_cohomology_dims: d^2 is not zero");

    CohomologyDims dims;
    dims.h0 = kernel_dim(d0);
    dims.h1 = kernel_dim(d1) - (d0.cols() - dims.h0);
    dims.h2 = d1.rows() - rank_exact(d1);
    return dims;
}

std::size_t invariants_dim(const GroupModule& v) {
    const MatQ a = v.gen_t - MatQ::identity(v.dim);
    const MatQ b = v.gen_tp - MatQ::identity(v.dim);
    return kernel_dim(vstack(a, b));
}

std::size_t coinvariants_dim(const GroupModule& v) {
    // V / ((T - 1)V + (T' - 1)V): columns of both span the augmentation image
    const int n = v.dim;
    MatQ cols(n, 2 * n);
    const MatQ a = v.gen_t - MatQ::identity(n);
    const MatQ b = v.gen_tp - MatQ::identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cols(i, j) = a(i, j);
            cols(i, n + j) = b(i, j);
        }
    return n - rank_exact(cols);
}

FreeGroupOracle free_group_h1(const GroupModule& v) {
    // cocycles on the free group are free: u is determined by (u(T), u(T')).
    // ordinary H^1 = 2 dim V - dim B^1 with B^1 = V / V^Gamma.
    FreeGroupOracle r;
    const std::size_t inv = invariants_dim(v);
    r.h1_ordinary = 2 * v.dim - (v.dim - inv);

    // parabolic: u(T) in (T-1)V, u(T') in (T'-1)V, u(T'T^{-1}) in (g1-1)V
    // with u(T'T^{-1}) = u(T') - T'T^{-1} u(T). Unknowns (u_T, u_T', w0, w1,
    // w_inf) with the three coboundary conditions; quotient by coboundaries.
    const int n = v.dim;
    const MatQ I = MatQ::identity(n);
    const MatQ mT = v.gen_t, mTp = v.gen_tp;
    const MatQ g1 = v.act(Word{2, -1});
    // unknown layout: u_T, u_Tp, w_inf, w0, w1 (5 blocks)
    MatQ sys(3 * n, 5 * n);
    auto put = [&](int row, int col, const MatQ& m, const Rational& s) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) sys(row * n + i, col * n + j) += m(i, j) * s;
    };
    // u_T - (1 - T) w_inf = 0
    put(0, 0, I, Rational(1));
    put(0, 2, I - mT, Rational(-1));
    // u_Tp - (1 - T') w0 = 0
    put(1, 1, I, Rational(1));
    put(1, 3, I - mTp, Rational(-1));
    // u_Tp - g1 u_T - (1 - g1) w1 = 0   (g1 = T' T^{-1}; u(g1) = u(T') - g1 u(T))
    put(2, 1, I, Rational(1));
    put(2, 0, g1, Rational(-1));
    put(2, 4, I - g1, Rational(-1));
    const std::size_t z_dim = kernel_dim(sys);

    // coboundaries inside the same coordinates: v in V gives u_T = (T-1)v,
    // u_Tp = (T'-1)v, and w_* shifted by (v - invariant parts); the w blocks
    // absorb any choice, so the coboundary space in (u, w) coordinates is
    // the image of v -> ((T-1)v, (T'-1)v, *, *, *) plus the pure-w kernel
    // directions. Quotient carefully: H1 = Z / (B + W0) where W0 is the
    // space of solutions with u = 0.
    MatQ bmap(5 * n, n);
    const MatQ tminus = mT - I, tpminus = mTp - I;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            bmap(i, j) = tminus(i, j);
            bmap(n + i, j) = tpminus(i, j);
            // w_inf = w0 = w1 = v solves all three conditions:
            // (T-1)v = (1-T)(-v), etc.
            bmap(2 * n + i, j) = (i == j) ? Rational(-1) : Rational(0);
            bmap(3 * n + i, j) = (i == j) ? Rational(-1) : Rational(0);
            bmap(4 * n + i, j) = (i == j) ? Rational(-1) : Rational(0);
        }
    // solutions with u = 0: w_inf in ker(1-T), w0 in ker(1-T'), w1 in ker(1-g1)
    const auto winf_b = kernel_basis(I - mT);
    const auto w0_b = kernel_basis(I - mTp);
    const auto w1_b = kernel_basis(I - g1);
    MatQ span(5 * n, n + winf_b.size() + w0_b.size() + w1_b.size());
    for (int i = 0; i < 5 * n; ++i)
        for (int j = 0; j < n; ++j) span(i, j) = bmap(i, j);
    std::size_t col = n;
    auto embed = [&](const std::vector<std::vector<Rational>>& basis, int block) {
        for (const auto& vec : basis) {
            for (int i = 0; i < n; ++i) span((2 + block) * n + i, col) = vec[i];
            ++col;
        }
    };
    embed(winf_b, 0);
    embed(w0_b, 1);
    embed(w1_b, 2);
    r.h1_parabolic = z_dim - rank_exact(span);
    return r;
}

FpbDims cusp_resolution_dims(const GroupModule& v) {
    FpbDims out;
    out.h0 = invariants_dim(v);

    // Degree 1 through the base-cusp reduction of equivariant maps on cusp
    // pairs: a cocycle is the data (a, w0, w1) with a = (1 - T') w0 and
    // a = (1 - g1) w1; coboundaries come from (v_inf, v_0, v_1) in the
    // respective stabilizer invariants.
    const int n = v.dim;
    const MatQ I = MatQ::identity(n);
    const MatQ mTp = v.gen_tp;
    const MatQ g1 = v.act(Word{2, -1});
    // unknowns (w0, w1): constraint (1-T') w0 - (1-g1) w1 = 0
    MatQ sys(n, 2 * n);
    const MatQ a0 = I - mTp, a1 = I - g1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            sys(i, j) = a0(i, j);
            sys(i, n + j) = Rational(0) - a1(i, j);
        }
    const std::size_t z_dim = 2 * n - rank_exact(sys);

    // coboundaries: v_inf in V^T, v_0 in V^{T'}, v_1 in V^{g1} give
    // w0 = v_0 - v_inf, w1 = v_1 - v_inf
    const MatQ mT = v.gen_t;
    const auto binf = kernel_basis(mT - I);
    const auto b0 = kernel_basis(mTp - I);
    const auto b1 = kernel_basis(g1 - I);
    MatQ bspan(2 * n, binf.size() + b0.size() + b1.size());
    std::size_t col = 0;
    for (const auto& vv : binf) {
        for (int i = 0; i < n; ++i) {
            bspan(i, col) = Rational(0) - vv[i];
            bspan(n + i, col) = Rational(0) - vv[i];
        }
        ++col;
    }
    for (const auto& vv : b0) {
        for (int i = 0; i < n; ++i) bspan(i, col) = vv[i];
        ++col;
    }
    for (const auto& vv : b1) {
        for (int i = 0; i < n; ++i) bspan(n + i, col) = vv[i];
        ++col;
    }
    out.h1 = z_dim - rank_exact(bspan);
    return out;
}

CuspChain fpb_boundary(const CuspChain& c) {
    CuspChain out;
    for (const auto& [tuple, coeff] : c.terms) {
        if (tuple.size() < 2) continue;
        for (std::size_t j = 0; j < tuple.size(); ++j) {
            std::vector<Cusp> omitted;
            for (std::size_t k = 0; k < tuple.size(); ++k)
                if (k != j) omitted.push_back(tuple[k]);
            const Rational sign = (j % 2 == 0) ? Rational(1) : Rational(-1);
            out.terms.emplace_back(std::move(omitted), coeff * sign);
        }
    }
    return out;
}

CuspChain fpb_homotopy(const CuspChain& c, const Cusp& base) {
    CuspChain out;
    for (const auto& [tuple, coeff] : c.terms) {
        std::vector<Cusp> extended;
        extended.push_back(base);
        extended.insert(extended.end(), tuple.begin(), tuple.end());
        out.terms.emplace_back(std::move(extended), coeff);
    }
    return out;
}

bool fpb_chains_equal(const CuspChain& a, const CuspChain& b) {
    std::map<std::vector<std::pair<std::int64_t, std::int64_t>>, Rational> acc;
    auto add = [&](const CuspChain& c, const Rational& s) {
        for (const auto& [tuple, coeff] : c.terms) {
            std::vector<std::pair<std::int64_t, std::int64_t>> key;
            for (const Cusp& cu : tuple) key.emplace_back(cu.p, cu.q);
            acc[key] += coeff * s;
        }
    };
    add(a, Rational(1));
    add(b, Rational(-1));
    for (const auto& [k, vv] : acc)
        if (!vv.is_zero()) return false;
    return true;
}

}  // namespace rankone
