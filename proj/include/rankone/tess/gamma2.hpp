#ifndef RANKONE_TESS_GAMMA2_HPP
#define RANKONE_TESS_GAMMA2_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rankone/forms/cell.hpp"
#include "rankone/space/group.hpp"

namespace rankone {

// Element of PSL(2, Z) in exact integer arithmetic, kept in a canonical
// sign normalization so that equality and ordering work.
struct Mobius {
    std::int64_t a = 1, b = 0, c = 0, d = 1;

    static Mobius identity() { return {}; }
    static Mobius t() { return {1, 2, 0, 1}; }        // z + 2
    static Mobius tp() { return {1, 0, 2, 1}; }       // z / (2z + 1)
    static Mobius t_inv() { return {1, -2, 0, 1}; }
    static Mobius tp_inv() { return {1, 0, -2, 1}; }

    Mobius operator*(const Mobius& o) const;
    Mobius inverse() const;
    bool operator==(const Mobius& o) const;
    bool operator<(const Mobius& o) const;  // lexicographic on the normal form
    bool is_identity() const { return *this == identity(); }

    // action on the upper half plane through the quadratic-form realization
    GroupElement to_group_element(const ModelSpace& s) const;
    std::string str() const;
};

// A cusp of Gamma(2): a rational p/q in lowest terms, infinity = 1/0.
struct Cusp {
    std::int64_t p = 1, q = 0;

    static Cusp infinity() { return {1, 0}; }
    static Cusp zero() { return {0, 1}; }
    static Cusp one() { return {1, 1}; }

    bool operator==(const Cusp& o) const { return p == o.p && q == o.q; }
    bool operator<(const Cusp& o) const { return p < o.p || (p == o.p && q < o.q); }

    // Gamma(2) class: 0 = class of infinity, 1 = class of 0, 2 = class of 1
    int gamma2_class() const;
    BoundaryPoint to_boundary(const ModelSpace& s) const;
};

Cusp mobius_on_cusp(const Mobius& g, const Cusp& c);

// A generator word in T = z+2 and T' = z/(2z+1): entries +1/-1 for T^{+-1},
// +2/-2 for T'^{+-1}. Carried next to the exact matrix so that module
// actions can be evaluated on arbitrary translates.
using Word = std::vector<int>;
Mobius word_to_mobius(const Word& w);

// Reference to a cell: the translate g . (representative of orbit), with an
// orientation sign.
struct CellRef {
    int orbit = 0;
    Mobius g;
    Word word;  // g as a word in the generators
    int sign = 1;
};

struct TessOrbit {
    int dim = 0;
    std::vector<CellRef> boundary;  // decomposition of the oriented boundary
    std::optional<Cusp> cusp;       // the unique cusp the closure touches
    // a short label for export and debugging
    std::string label;
};

// The standard Gamma(2)-invariant tessellation of the extended upper half
// plane split at height Y: one bulk 2-cell orbit (the truncated fundamental
// quadrilateral) plus one cone per cusp class.
class Gamma2Tessellation {
public:
    explicit Gamma2Tessellation(double Y = 4.0);

    double Y() const { return Y_; }
    const std::vector<TessOrbit>& orbits(int dim) const { return orbits_[dim]; }
    int cusp_orbit_count() const { return 3; }

    // geometric realization of a 1-cell orbit representative (RH2 patches)
    CellPatch realize_edge(const ModelSpace& s, int orbit) const;
    // realization of the translate g . (orbit rep)
    CellPatch realize_edge(const ModelSpace& s, const CellRef& ref) const;

    // d-cell bookkeeping for the inverse construction: the list of oriented
    // boundary edges of the translate g . F_orbit
    std::vector<CellRef> boundary_of(int orbit2, const Mobius& g, const Word& w) const;

    // locate: returns gamma with gamma^{-1} z in the closed fundamental
    // domain F' (|Re| <= 1 outside the two disks, with the cusp-1 wedge
    // glued from the -1 side)
    Mobius locate(double x, double y, Word* word = nullptr) const;

    // line-oriented text export (cells, kinds, boundary lists with signs)
    std::string export_text() const;

private:
    double Y_;
    std::vector<TessOrbit> orbits_[3];
    void build();
};

// horoballs at the three cusp classes are pairwise disjoint iff Y is large
// enough; the constructor checks this
bool horoballs_disjoint(double Y);

}  // namespace rankone

#endif
