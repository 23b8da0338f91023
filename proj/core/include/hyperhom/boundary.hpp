#pragma once

#include "hyperhom/hypergraph.hpp"
#include "hyperhom/matrix.hpp"

namespace hyperhom {

// Simplicial boundary: the degree-n matrix has one column per n-simplex and
// one row per (n-1)-simplex of K, both in canonical order; column entries are
// the alternating signs of one-vertex deletions.  Degree 0 yields a matrix
// with zero rows.
Matrix boundary_matrix(const SimplicialComplex& K, int degree, const Coefficients& coeff);

// Chain vector of a single simplex in the degree-n coordinates of K.
Matrix simplex_chain(const SimplicialComplex& K, const Hyperedge& simplex);

// Chain map on degree-n chains induced by a vertex map: a simplex goes to its
// image with the orientation sign, or to zero when two vertices collide.
Matrix chain_map_matrix(const SimplicialComplex& source, const SimplicialComplex& target,
                        const std::map<Vertex, Vertex>& vertex_map, int degree,
                        const Coefficients& coeff);

}  // namespace hyperhom
