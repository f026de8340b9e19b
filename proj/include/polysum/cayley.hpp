#pragma once

#include "polysum/counts.hpp"
#include "polysum/polytope.hpp"

#include <map>
#include <vector>

namespace polysum {

// Colors are 0-based internally; a color subset R is a bitmask over [r].
using ColorMask = unsigned;

struct CayleyInstance {
    std::size_t d = 0;
    std::size_t r = 0;
    std::vector<Polytope> summands;
    std::vector<Point> embedded;          // summand 0 vertices first, then 1, then 2
    std::vector<std::size_t> color;       // color of each embedded vertex
    std::vector<VertexSet> color_sets;    // vertices of each color
    Polytope hull;                        // vertex order equals `embedded`
    FaceLattice lattice;

    ColorMask support(const VertexSet& face) const;
    VertexSet vertices_of(ColorMask R) const;  // vertex set of the sub-Cayley polytope C_R
    ColorMask all_colors() const { return (1u << r) - 1; }
};

struct FaceSet {
    ColorMask colors = 0;
    int dim = 0;                                     // d + |R| - 2
    std::vector<std::vector<VertexSet>> faces_by_dim;  // index k+1, k = -1..dim
    CountVector f;
};

// f-vectors of all F_R, keyed by color mask, plus the data the identities need.
struct FaceSetCounts {
    int d = 0;
    int r = 0;
    std::map<ColorMask, CountVector> f;

    const CountVector& of(ColorMask R) const { return f.at(R); }
};

CayleyInstance cayley_embed(const std::vector<Polytope>& summands);

FaceSet extract_F(const CayleyInstance& c, ColorMask R);

// Closure of F_R under subfaces; requires every face of F_R to be a simplex.
FaceSet closure_K(const FaceSet& fs, const CayleyInstance& c);

bool check_genericity(const CayleyInstance& c);

// f-vector (f_{-1}..f_{d-1}) of the Minkowski sum read off F_[r].
CountVector minkowski_counts_via_cayley(const CayleyInstance& c);

FaceSetCounts face_set_counts(const CayleyInstance& c);

// f_k(boundary of C) equals the sum over R of f_k(F_R) plus the trivial faces C_S.
bool check_partition(const CayleyInstance& c);

int popcount(ColorMask m);

}  // namespace polysum
