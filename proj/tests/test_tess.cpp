#include <doctest.h>

#include <cmath>
#include <map>

#include "rankone/tess/cohomology.hpp"
#include "rankone/tess/gamma2.hpp"
#include "rankone/tess/lattice.hpp"
#include "rankone/util/rng.hpp"

using namespace rankone;

namespace {

using ChainKey = std::tuple<int, std::string>;

std::string mkey(const Mobius& g) { return g.str(); }

// formal integer chain on (orbit, translate)
using Chain = std::map<std::pair<int, std::string>, int>;

Chain boundary_chain(const Gamma2Tessellation& tess, int dim, int orbit,
                     const Mobius& g) {
    Chain out;
    for (const CellRef& r : tess.orbits(dim)[orbit].boundary) {
        const Mobius t = g * r.g;
        out[{r.orbit, mkey(t)}] += r.sign;
    }
    return out;
}

}  // namespace

TEST_CASE("mobius arithmetic and the matrix realization") {
    const ModelSpace s = ModelSpace::rh2();
    const Mobius t = Mobius::t(), tp = Mobius::tp();
    CHECK((t * t.inverse()).is_identity());
    CHECK((tp * tp.inverse()).is_identity());
    CHECK(word_to_mobius({1, 2, -1}) == t * tp * t.inverse());

    // matrix realization acts like the fractional-linear action
    Rng rng(41);
    for (int i = 0; i < 20; ++i) {
        Word w;
        for (int k = 0; k < 6; ++k) w.push_back((rng.uniform() < 0.5 ? 1 : 2) *
                                                 (rng.uniform() < 0.5 ? 1 : -1));
        const Mobius g = word_to_mobius(w);
        const GroupElement ge = g.to_group_element(s);
        const double x = rng.uniform(-2.0, 2.0), y = std::exp(rng.uniform(-1.0, 1.0));
        const Point img = ge.act(s, Point({x}, y));
        const std::complex<double> z(x, y);
        const std::complex<double> expect =
            (double(g.a) * z + double(g.b)) / (double(g.c) * z + double(g.d));
        CHECK(img.x[0] == doctest::Approx(expect.real()).epsilon(1e-11));
        CHECK(img.y == doctest::Approx(expect.imag()).epsilon(1e-11));
    }
}

TEST_CASE("cusp classes of Gamma(2)") {
    CHECK(Cusp::infinity().gamma2_class() == 0);
    CHECK(Cusp::zero().gamma2_class() == 1);
    CHECK(Cusp::one().gamma2_class() == 2);
    CHECK(Cusp{-1, 1}.gamma2_class() == 2);  // -1 is equivalent to 1
    CHECK(Cusp{1, 2}.gamma2_class() == 0);
    // the class is invariant along orbits
    Rng rng(42);
    for (int i = 0; i < 50; ++i) {
        Word w;
        for (int k = 0; k < 8; ++k) w.push_back((rng.uniform() < 0.5 ? 1 : 2) *
                                                 (rng.uniform() < 0.5 ? 1 : -1));
        const Mobius g = word_to_mobius(w);
        for (const Cusp& c : {Cusp::infinity(), Cusp::zero(), Cusp::one()})
            CHECK(mobius_on_cusp(g, c).gamma2_class() == c.gamma2_class());
    }
}

TEST_CASE("tessellation combinatorics: counts, d^2 = 0, interface cancellation") {
    const Gamma2Tessellation tess(4.0);
    CHECK(tess.cusp_orbit_count() == 3);
    CHECK(tess.orbits(2).size() == 4);  // bulk cell + one cone per cusp class
    CHECK(tess.orbits(1).size() == 9);
    CHECK(tess.orbits(0).size() == 7);

    // boundary of boundary cancels exactly, including the translates
    for (std::size_t f = 0; f < tess.orbits(2).size(); ++f) {
        Chain total;
        for (const CellRef& r : tess.orbits(2)[f].boundary) {
            const Chain dd = boundary_chain(tess, 1, r.orbit, r.g);
            for (const auto& [key, coeff] : dd) total[key] += r.sign * coeff;
        }
        for (const auto& [key, coeff] : total) CHECK(coeff == 0);
    }

    // every 1-cell orbit appears in some 2-cell boundary, and the incident
    // cofaces carry cancelling signs (two cofaces per interior cell)
    for (std::size_t e = 0; e < tess.orbits(1).size(); ++e) {
        int count = 0, signsum = 0;
        for (std::size_t f = 0; f < tess.orbits(2).size(); ++f)
            for (const CellRef& r : tess.orbits(2)[f].boundary)
                if (r.orbit == static_cast<int>(e)) {
                    ++count;
                    signsum += r.sign;
                }
        CHECK(count == 2);
        CHECK(signsum == 0);
    }

    // word data matches the exact matrices
    for (int dim = 1; dim <= 2; ++dim)
        for (const TessOrbit& o : tess.orbits(dim))
            for (const CellRef& r : o.boundary) CHECK(word_to_mobius(r.word) == r.g);

    CHECK_THROWS_AS(Gamma2Tessellation(1.0), std::domain_error);
}

TEST_CASE("geometric realization: boundary chains close up") {
    const ModelSpace s = ModelSpace::rh2();
    const Gamma2Tessellation tess(4.0);
    // walk the bulk 2-cell boundary; consecutive endpoints must agree
    const auto& refs = tess.orbits(2)[0].boundary;
    std::vector<std::pair<Point, Point>> oriented;
    for (const CellRef& r : refs) {
        const CellPatch patch = tess.realize_edge(s, r);
        Point from = patch.map({0.0});
        Point to = patch.map({1.0});
        if (r.sign < 0) std::swap(from, to);
        oriented.emplace_back(from, to);
    }
    for (std::size_t i = 0; i < oriented.size(); ++i) {
        const Point& to = oriented[i].second;
        const Point& next = oriented[(i + 1) % oriented.size()].first;
        CHECK(std::fabs(to.x[0] - next.x[0]) < 1e-10);
        CHECK(std::fabs(to.y - next.y) < 1e-10);
    }
}

TEST_CASE("locate reduces points to the fundamental domain") {
    const Gamma2Tessellation tess(4.0);
    Rng rng(43);
    for (int i = 0; i < 300; ++i) {
        const double x = rng.uniform(-8.0, 8.0);
        const double y = std::exp(rng.uniform(-3.0, 2.0));
        Word w;
        const Mobius g = tess.locate(x, y, &w);
        CHECK(word_to_mobius(w) == g);
        const Mobius ginv = g.inverse();
        const std::complex<double> z(x, y);
        const std::complex<double> red =
            (double(ginv.a) * z + double(ginv.b)) / (double(ginv.c) * z + double(ginv.d));
        CHECK(std::fabs(red.real()) <= 1.0 + 1e-9);
        CHECK(std::norm(2.0 * red - 1.0) >= 1.0 - 1e-9);
        CHECK(std::norm(2.0 * red + 1.0) >= 1.0 - 1e-9);
    }
}

TEST_CASE("boundary matrices: d^2 = 0 and rank bookkeeping") {
    const Gamma2Tessellation tess(4.0);
    for (const GroupModule& v :
         {GroupModule::trivial(), GroupModule::standard2(), GroupModule::permutation3()}) {
        const MatQ d0 = boundary_matrix(tess, 1, v);
        const MatQ d1 = boundary_matrix(tess, 2, v);
        CHECK((d1 * d0).is_zero());
        // rank-nullity across the complex
        const std::size_t r0 = rank_exact(d0), r1 = rank_exact(d1);
        CHECK(r0 + (d0.cols() - r0) == d0.cols());
        CHECK(r1 <= d1.rows());
    }
}

TEST_CASE("parabolic cohomology dimensions on the trivial module") {
    const Gamma2Tessellation tess(4.0);
    const GroupModule v = GroupModule::trivial();
    const CohomologyDims dims = parabolic_cohomology_dims(tess, v);
    CHECK(dims.h0 == 1);
    CHECK(dims.h1 == 0);
    CHECK(dims.h2 == 1);
    // ordinary cohomology of the free group of rank 2
    const CohomologyDims ord = ordinary_cohomology_dims(tess, v);
    CHECK(ord.h0 == 1);
    CHECK(ord.h1 == 2);
    const FreeGroupOracle oracle = free_group_h1(v);
    CHECK(oracle.h1_ordinary == 2);
    CHECK(oracle.h1_parabolic == 0);
}

TEST_CASE("cohomology dims agree across methods for three modules") {
    const Gamma2Tessellation tess(4.0);
    for (const GroupModule& v :
         {GroupModule::trivial(), GroupModule::standard2(), GroupModule::permutation3()}) {
        const CohomologyDims dims = parabolic_cohomology_dims(tess, v);
        // boundary values
        CHECK(dims.h0 == invariants_dim(v));
        CHECK(dims.h2 == coinvariants_dim(v));
        // free-group oracle for the middle degree
        const FreeGroupOracle oracle = free_group_h1(v);
        CHECK(dims.h1 == oracle.h1_parabolic);
        const CohomologyDims ord = ordinary_cohomology_dims(tess, v);
        CHECK(ord.h1 == oracle.h1_ordinary);
        // cusp-based resolution agrees in degrees 0 and 1
        const FpbDims fpb = cusp_resolution_dims(v);
        CHECK(fpb.h0 == dims.h0);
        CHECK(fpb.h1 == dims.h1);
    }
}

TEST_CASE("cusp resolution homotopy identity on random chains") {
    Rng rng(44);
    const Cusp base = Cusp::infinity();
    for (int trial = 0; trial < 20; ++trial) {
        CuspChain c;
        const int deg = rng.uniform_int(1, 3);
        for (int t = 0; t < 4; ++t) {
            std::vector<Cusp> tuple;
            for (int j = 0; j <= deg; ++j)
                tuple.push_back({rng.uniform_int(-3, 3), rng.uniform_int(0, 3)});
            c.terms.emplace_back(std::move(tuple),
                                 Rational(rng.uniform_int(-5, 5), rng.uniform_int(1, 4)));
        }
        // d h(c) + h(d c) = c
        const CuspChain lhs_a = fpb_boundary(fpb_homotopy(c, base));
        const CuspChain lhs_b = fpb_homotopy(fpb_boundary(c), base);
        CuspChain sum;
        sum.terms = lhs_a.terms;
        sum.terms.insert(sum.terms.end(), lhs_b.terms.begin(), lhs_b.terms.end());
        CHECK(fpb_chains_equal(sum, c));
    }
}

TEST_CASE("lattice tessellation of N: abelian and Heisenberg cases") {
    // q = 0: plain unit translations, one piece per axis
    const NLatticeTessellation flat = build_lattice_tessellation(ModelSpace::rh3());
    CHECK(flat.pieces.size() == 2);
    for (const NFacePiece& piece : flat.pieces) {
        CHECK(piece.central_k.empty());
    }

    // CH2 Heisenberg lattice: the transverse faces subdivide in two
    const ModelSpace ch2 = ModelSpace::ch2();
    const NLatticeTessellation heis = build_lattice_tessellation(ch2);
    CHECK(heis.face_pieces(0).size() == 2);
    CHECK(heis.face_pieces(1).size() == 2);
    CHECK(heis.face_pieces(2).size() == 1);

    // pairings carry face points into the fundamental cube
    Rng rng(45);
    for (int axis = 0; axis < 2; ++axis) {
        for (int i = 0; i < 200; ++i) {
            Vec x(3, 0.0);
            x[axis] = 0.0;
            x[1 - axis] = rng.uniform(0.0, 1.0);
            x[2] = rng.uniform(0.0, 1.0);
            const NFacePiece* owner = nullptr;
            for (const NFacePiece* piece : heis.face_pieces(axis))
                if (piece->contains(ch2, x)) {
                    CHECK(owner == nullptr);  // pieces tile without overlap
                    owner = piece;
                }
            REQUIRE(owner != nullptr);
            const Vec image = ch2.n_compose(owner->pairing, x);
            CHECK(image[axis] == doctest::Approx(1.0));
            for (int c = 0; c < 3; ++c) {
                CHECK(image[c] > -1e-12);
                CHECK(image[c] < 1.0 + 1e-12);
            }
        }
    }

    // lattice invariance: a translated piece is still matched by a piece
    for (int i = 0; i < 50; ++i) {
        Vec x = {0.0, rng.uniform(0.0, 1.0), rng.uniform(0.0, 1.0)};
        Vec lat = {0.0, double(rng.uniform_int(-2, 2)), double(rng.uniform_int(-2, 2))};
        const Vec moved = ch2.n_compose(lat, x);
        // bring back into the cube coordinates modulo the lattice, center first
        Vec folded = moved;
        folded[2] -= std::floor(folded[2]);
        folded[1] -= std::floor(folded[1]);
        bool found = false;
        for (const NFacePiece* piece : heis.face_pieces(0))
            if (piece->contains(ch2, folded)) found = true;
        CHECK(found);
    }

    // non-lattice input is rejected
    std::vector<Vec> bad = {{0.5, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}};
    CHECK_THROWS_AS(build_lattice_tessellation(ch2, bad), std::invalid_argument);
}

TEST_CASE("tessellation export is deterministic and structured") {
    const Gamma2Tessellation tess(4.0);
    const std::string a = tess.export_text();
    const std::string b = tess.export_text();
    CHECK(a == b);
    CHECK(a.find("cusp=1/0") != std::string::npos);
    CHECK(a.find("F_bulk") != std::string::npos);
    CHECK(a.find("boundary=") != std::string::npos);
}
