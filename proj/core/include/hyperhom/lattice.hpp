#pragma once

#include <optional>
#include <vector>

#include "hyperhom/matrix.hpp"

namespace hyperhom {

// U * A * V = S with U, V unimodular (det +-1) and S diagonal, each diagonal
// entry non-negative and dividing the next.  Deterministic: the pivot is the
// minimal-absolute-value nonzero entry of the active submatrix, ties broken by
// lowest row then lowest column.
struct SmithResult {
  Matrix U, S, V;
  int rank = 0;
  std::vector<Int> divisors;  // the positive diagonal entries, d1 | d2 | ...
};
SmithResult smith_normal_form(const Matrix& A);

// Canonical basis of the column lattice of an integral matrix: column echelon,
// pivot rows strictly increasing, pivots positive, entries left of a pivot in
// its row reduced into [0, pivot).  Zero columns are dropped, so the result
// has exactly rank(A) columns.  Two integral matrices generate the same
// lattice iff their Hermite forms are identical.
Matrix hermite_column_form(const Matrix& A);

// Basis of { x integral : A x = 0 } as a canonical Hermite form.  This lattice
// contains every integral vector of the rational kernel (it is saturated).
Matrix integer_kernel(const Matrix& A);

// Solves H * x = b over the integers, H a lattice basis in column Hermite
// form.  Returns nullopt when b is outside the lattice.  b may have several
// columns; all must be solvable for a result.
std::optional<Matrix> hermite_solve(const Matrix& H, const Matrix& b);

// Reduced row echelon form over a field; records pivot columns.
Matrix field_rref(const Matrix& A, const Coefficients& coeff, std::vector<int>* pivot_cols = nullptr);

// Canonical basis of the null space over a field (one column per free
// variable, in column order).
Matrix field_kernel(const Matrix& A, const Coefficients& coeff);

// Canonical basis of the column space over a field: the transposed reduced
// row echelon form of the transpose, i.e. the unique reduced basis.  Equal
// subspaces produce identical matrices.
Matrix field_column_basis(const Matrix& A, const Coefficients& coeff);

// Solves A x = b over a field (free variables set to zero); nullopt when
// inconsistent.  b may have several columns.
std::optional<Matrix> field_solve(const Matrix& A, const Matrix& b, const Coefficients& coeff);

int matrix_rank(const Matrix& A, const Coefficients& coeff);

}  // namespace hyperhom
