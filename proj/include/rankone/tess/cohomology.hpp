#ifndef RANKONE_TESS_COHOMOLOGY_HPP
#define RANKONE_TESS_COHOMOLOGY_HPP

#include <array>
#include <string>
#include <vector>

#include "rankone/tess/gamma2.hpp"
#include "rankone/util/rational.hpp"

namespace rankone {

// dense rational matrix, exact arithmetic only
class MatQ {
public:
    MatQ() = default;
    MatQ(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c) {}
    static MatQ identity(std::size_t n);

    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const {
        return a_[i * cols_ + j];
    }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    MatQ operator*(const MatQ& o) const;
    MatQ operator+(const MatQ& o) const;
    MatQ operator-(const MatQ& o) const;
    MatQ scaled(const Rational& s) const;
    bool is_zero() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

// rank by exact Gaussian elimination
std::size_t rank_exact(MatQ m);
MatQ inverse_exact(MatQ m);
// stack vertically
MatQ vstack(const MatQ& a, const MatQ& b);

// A finite-dimensional module over Gamma(2) given by exact matrices for the
// two generators; Gamma(2) is free on them, so any assignment of invertible
// matrices extends to the group.
struct GroupModule {
    std::string tag;
    int dim = 1;
    MatQ gen_t, gen_tp;  // images of z+2 and z/(2z+1)

    static GroupModule trivial();
    static GroupModule standard2();     // the integral symmetric power of degree 1
    static GroupModule permutation3();  // a 3-letter permutation action

    MatQ act(const Word& w) const;
};

// coboundary d^{i}: equivariant cochains on i-cell orbits to (i+1)-cell
// orbits, as a block matrix over the module
MatQ boundary_matrix(const Gamma2Tessellation& tess, int degree, const GroupModule& v);

struct CohomologyDims {
    std::size_t h0 = 0, h1 = 0, h2 = 0;
};

// parabolic cohomology from the tessellation complex: degree-0 cochains at
// cusp cells are constrained to stabilizer invariants
CohomologyDims parabolic_cohomology_dims(const Gamma2Tessellation& tess,
                                         const GroupModule& v);

// ordinary group cohomology from the truncated subcomplex inside S(Y)
CohomologyDims ordinary_cohomology_dims(const Gamma2Tessellation& tess,
                                        const GroupModule& v);

// dims via the cusp-based resolution, degrees 0 and 1
struct FpbDims {
    std::size_t h0 = 0, h1 = 0;
};
FpbDims cusp_resolution_dims(const GroupModule& v);

// chains on cusp tuples, for the homotopy identity check of the resolution
struct CuspChain {
    // a formal sum of (i+1)-tuples of cusps with rational coefficients
    std::vector<std::pair<std::vector<Cusp>, Rational>> terms;
};
CuspChain fpb_boundary(const CuspChain& c);
CuspChain fpb_homotopy(const CuspChain& c, const Cusp& base);
bool fpb_chains_equal(const CuspChain& a, const CuspChain& b);

// invariants and coinvariants of a module (for the expected dimensions)
std::size_t invariants_dim(const GroupModule& v);
std::size_t coinvariants_dim(const GroupModule& v);

// free-group oracle: Gamma(2) is free on the two generators, so ordinary and
// parabolic H^1 reduce to explicit linear algebra on cocycle values
struct FreeGroupOracle {
    std::size_t h1_ordinary = 0;
    std::size_t h1_parabolic = 0;
};
FreeGroupOracle free_group_h1(const GroupModule& v);

}  // namespace rankone

#endif
