#include "hyperhom/subspace.hpp"

#include "hyperhom/errors.hpp"

namespace hyperhom {

ChainSubspace make_subspace(const Matrix& generators, const Coefficients& coeff, int ambient_dim) {
  if (generators.cols() > 0 && generators.rows() != ambient_dim)
    throw AmbientMismatch("generator rows do not match ambient dimension");
  ChainSubspace s;
  s.coeff = coeff;
  s.ambient_dim = ambient_dim;
  Matrix gens = generators.cols() ? generators : Matrix(ambient_dim, 0);
  if (coeff.is_field())
    s.basis = field_column_basis(gens, coeff);
  else
    s.basis = hermite_column_form(gens);
  return s;
}

ChainSubspace zero_subspace(const Coefficients& coeff, int ambient_dim) {
  return make_subspace(Matrix(ambient_dim, 0), coeff, ambient_dim);
}

ChainSubspace coordinate_subspace(const std::vector<int>& coordinates, const Coefficients& coeff, int ambient_dim) {
  Matrix gens(ambient_dim, static_cast<int>(coordinates.size()));
  for (int j = 0; j < gens.cols(); ++j) gens.at(coordinates[j], j) = 1;
  return make_subspace(gens, coeff, ambient_dim);
}

ChainSubspace subspace_intersection(const ChainSubspace& a, const ChainSubspace& b) {
  if (a.ambient_dim != b.ambient_dim || !(a.coeff == b.coeff))
    throw AmbientMismatch("subspace intersection across different ambients");
  // Solutions of A x = B y give exactly the common elements.
  Matrix stacked = Matrix::hconcat(a.basis, -b.basis);
  Matrix kernel = a.coeff.is_field() ? field_kernel(stacked, a.coeff) : integer_kernel(stacked);
  std::vector<int> head(a.basis.cols());
  for (int i = 0; i < a.basis.cols(); ++i) head[i] = i;
  Matrix x_part = kernel.rows_selected(head);
  return make_subspace(a.basis * x_part, a.coeff, a.ambient_dim);
}

ChainSubspace subspace_sum(const ChainSubspace& a, const ChainSubspace& b) {
  if (a.ambient_dim != b.ambient_dim || !(a.coeff == b.coeff))
    throw AmbientMismatch("subspace sum across different ambients");
  return make_subspace(Matrix::hconcat(a.basis, b.basis), a.coeff, a.ambient_dim);
}

bool subspace_contains(const ChainSubspace& space, const Matrix& vectors) {
  if (vectors.cols() == 0) return true;
  if (vectors.rows() != space.ambient_dim)
    throw AmbientMismatch("membership test across different ambients");
  if (space.coeff.is_field())
    return field_solve(space.basis, vectors.reduced(space.coeff), space.coeff).has_value();
  return hermite_solve(space.basis, vectors).has_value();
}

bool subspace_contains_all(const ChainSubspace& outer, const ChainSubspace& inner) {
  return subspace_contains(outer, inner.basis);
}

QuotientStructure quotient_structure(const ChainSubspace& sub, const ChainSubspace& super) {
  if (sub.ambient_dim != super.ambient_dim || !(sub.coeff == super.coeff))
    throw AmbientMismatch("quotient across different ambients");
  QuotientStructure out;
  if (super.coeff.is_field()) {
    if (!subspace_contains_all(super, sub))
      throw NotASubgroup("quotient of a non-subspace");
    out.free_rank = super.rank() - sub.rank();
    return out;
  }
  auto coords = hermite_solve(super.basis, sub.basis);
  if (!coords) throw NotASubgroup("quotient of a non-subgroup");
  SmithResult snf = smith_normal_form(*coords);
  out.free_rank = super.rank() - snf.rank;
  for (const Int& d : snf.divisors)
    if (d > 1) out.torsion.push_back(d);
  return out;
}

}  // namespace hyperhom
