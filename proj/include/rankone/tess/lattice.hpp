#ifndef RANKONE_TESS_LATTICE_HPP
#define RANKONE_TESS_LATTICE_HPP

#include <vector>

#include "rankone/space/model_space.hpp"

namespace rankone {

// The lattice-invariant tessellation of the nilpotent group N with the unit
// hypercube as fundamental cell. Faces transverse to the first p axes pick
// up central shear when translated, so they subdivide into pieces indexed by
// the compensating central lattice elements.
struct NFacePiece {
    int axis = 0;                 // the face x_axis = 0 is paired to x_axis = 1
    std::vector<int> central_k;   // floor indices of the central shear on the piece
    Vec pairing;                  // coordinates of the pairing lattice element
    // piece membership for points of the face (x_axis treated as 0)
    bool contains(const ModelSpace& s, const Vec& face_point) const;
};

struct NLatticeTessellation {
    int p = 0, q = 0;
    std::vector<NFacePiece> pieces;

    // all pieces on the face x_axis = 0
    std::vector<const NFacePiece*> face_pieces(int axis) const;
};

// generators default to the unit vectors; supplying anything whose pairwise
// central products leave the central lattice is rejected
NLatticeTessellation build_lattice_tessellation(const ModelSpace& s);
NLatticeTessellation build_lattice_tessellation(const ModelSpace& s,
                                                const std::vector<Vec>& generators);

}  // namespace rankone

#endif
