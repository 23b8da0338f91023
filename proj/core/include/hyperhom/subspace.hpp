#pragma once

#include <vector>

#include "hyperhom/lattice.hpp"

namespace hyperhom {

// A subgroup of the free module R^ambient_dim spanned by the basis columns;
// over Z a sublattice (basis in Hermite form), over a field a subspace (basis
// in reduced echelon form).  The canonical basis makes equality structural.
struct ChainSubspace {
  Coefficients coeff;
  int ambient_dim = 0;
  Matrix basis;  // ambient_dim x rank, canonical

  int rank() const { return basis.cols(); }
  bool operator==(const ChainSubspace& o) const = default;
};

ChainSubspace make_subspace(const Matrix& generators, const Coefficients& coeff, int ambient_dim);
ChainSubspace zero_subspace(const Coefficients& coeff, int ambient_dim);
// The full coordinate subgroup spanned by the given unit vectors.
ChainSubspace coordinate_subspace(const std::vector<int>& coordinates, const Coefficients& coeff, int ambient_dim);

ChainSubspace subspace_intersection(const ChainSubspace& a, const ChainSubspace& b);
ChainSubspace subspace_sum(const ChainSubspace& a, const ChainSubspace& b);
bool subspace_contains(const ChainSubspace& space, const Matrix& vectors);
bool subspace_contains_all(const ChainSubspace& outer, const ChainSubspace& inner);

// Isomorphism class of super/sub: free rank plus torsion orders (ascending
// divisibility, entries > 1).  Throws NotASubgroup when sub is not contained
// in super.  Over a field the torsion list is empty.
struct QuotientStructure {
  int free_rank = 0;
  std::vector<Int> torsion;
  bool operator==(const QuotientStructure& o) const = default;
};
QuotientStructure quotient_structure(const ChainSubspace& sub, const ChainSubspace& super);

}  // namespace hyperhom
