#pragma once

#include <vector>

#include "hyperhom/lattice.hpp"

namespace hyperhom {

// Chain complex over a field given by abstract boundary matrices;
// boundary[n] maps degree-n chains to degree n-1 (boundary[0] has no rows).
struct ChainComplexField {
  Coefficients coeff;
  std::vector<int> dims;
  std::vector<Matrix> boundary;

  int max_degree() const { return static_cast<int>(dims.size()) - 1; }
};

// Homology data with explicit bases: cycle basis, boundary-image basis, and
// homology representatives chosen greedily from the cycle basis columns (in
// canonical order) complementary to the image.
struct FieldHomology {
  std::vector<Matrix> cycles;
  std::vector<Matrix> bounds;
  std::vector<Matrix> reps;
  std::vector<int> betti;
};

FieldHomology field_homology(const ChainComplexField& C);

// Coordinates of cycle columns in the homology basis (solves over
// [reps | bounds]); the inputs must be cycles of the complex.
Matrix homology_class(const ChainComplexField& C, const FieldHomology& H, int degree,
                      const Matrix& cycle_columns);

// Per-degree matrices of the map induced on homology by a chain map
// (chain_maps[n]: C_n -> D_n).  Verifies that the chain map commutes with the
// boundaries and preserves cycles.
std::vector<Matrix> induced_on_homology(const ChainComplexField& C, const FieldHomology& HC,
                                        const ChainComplexField& D, const FieldHomology& HD,
                                        const std::vector<Matrix>& chain_maps);

// A family of subspaces of an ambient chain complex, one basis per degree, in
// ambient coordinates.
struct SubspaceFamily {
  Coefficients coeff;
  std::vector<Matrix> bases;
};

// The family as an abstract complex: boundaries rewritten in the family's own
// basis coordinates.  Requires closure under the ambient boundary.
ChainComplexField abstract_complex(const SubspaceFamily& F, const std::vector<Matrix>& ambient_boundary);

// Chain maps of the inclusion sub_n into super_n in basis coordinates.
std::vector<Matrix> inclusion_chain_maps(const SubspaceFamily& sub, const SubspaceFamily& super);

// Quotient complex total/sub with chosen coset representatives.
struct QuotientComplex {
  ChainComplexField complex;
  std::vector<Matrix> sub_bases;  // ambient coords
  std::vector<Matrix> extensions;  // ambient coords; columns represent the quotient basis
};

QuotientComplex make_quotient(const SubspaceFamily& sub, const SubspaceFamily& total,
                              const std::vector<Matrix>& ambient_boundary);

// Abstract quotient coordinates of ambient vectors lying in the total space.
Matrix quotient_project(const QuotientComplex& Q, int degree, const Matrix& ambient_vectors);

}  // namespace hyperhom
