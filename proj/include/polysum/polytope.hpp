#pragma once

#include "polysum/counts.hpp"
#include "polysum/exact.hpp"
#include "polysum/vertex_set.hpp"

#include <cstddef>
#include <vector>

namespace polysum {

// normal . x >= offset on the polytope; normal is primitive integral.
struct Facet {
    std::vector<ExactScalar> normal;
    ExactScalar offset;
};

struct Polytope {
    std::size_t ambient_dim = 0;
    std::size_t dim = 0;
    std::vector<Point> vertices;
    std::vector<Facet> facets;
    std::vector<VertexSet> incidence;       // per facet, over vertex indices
    std::vector<std::size_t> source_index;  // position of each vertex in the hull input
};

// Faces grouped by dimension, levels[k+1] holds the k-faces for k=-1..dim.
struct FaceLattice {
    int dim = 0;
    std::size_t num_vertices = 0;
    std::vector<std::vector<VertexSet>> levels;

    const std::vector<VertexSet>& faces(int k) const { return levels.at(k + 1); }
};

Polytope convex_hull(const std::vector<Point>& points);

FaceLattice face_lattice(const Polytope& p);

CountVector f_vector(const FaceLattice& l);

bool is_k_neighborly(const Polytope& p, std::size_t k);
bool is_k_neighborly(const FaceLattice& l, std::size_t k);

Polytope minkowski_sum_direct(const std::vector<Polytope>& ps);

}  // namespace polysum
