#include "hyperhom/field_homology.hpp"

#include "hyperhom/errors.hpp"

namespace hyperhom {

namespace {

void check_complex(const ChainComplexField& C) {
  if (!C.coeff.is_field()) throw InternalError("field chain complex needs field coefficients");
  for (size_t n = 0; n + 1 < C.boundary.size(); ++n) {
    if (C.boundary[n + 1].cols() == 0 || C.boundary[n].rows() == 0) continue;
    if (!(C.boundary[n] * C.boundary[n + 1]).reduced(C.coeff).is_zero())
      throw InternalError("boundary composed with boundary is nonzero");
  }
}

}  // namespace

FieldHomology field_homology(const ChainComplexField& C) {
  check_complex(C);
  FieldHomology H;
  const int N = C.max_degree();
  H.cycles.resize(N + 1);
  H.bounds.resize(N + 1);
  H.reps.resize(N + 1);
  H.betti.resize(N + 1);
  for (int n = 0; n <= N; ++n) {
    H.cycles[n] = field_kernel(C.boundary[n], C.coeff);
    Matrix image = n + 1 <= N ? C.boundary[n + 1] : Matrix(C.dims[n], 0);
    H.bounds[n] = field_column_basis(image, C.coeff);
    // greedy: take cycle basis columns that enlarge the span of the image
    Matrix span = H.bounds[n];
    std::vector<int> chosen;
    int span_rank = matrix_rank(span, C.coeff);
    for (int j = 0; j < H.cycles[n].cols(); ++j) {
      Matrix cand = Matrix::hconcat(span, H.cycles[n].column(j));
      int r = matrix_rank(cand, C.coeff);
      if (r > span_rank) {
        chosen.push_back(j);
        span = cand;
        span_rank = r;
      }
    }
    H.reps[n] = H.cycles[n].columns(chosen);
    H.betti[n] = static_cast<int>(chosen.size());
  }
  return H;
}

Matrix homology_class(const ChainComplexField& C, const FieldHomology& H, int degree,
                      const Matrix& cycle_columns) {
  if (degree < 0 || degree > C.max_degree())
    throw DegreeOutOfRange("homology class degree out of range");
  if (!(C.boundary[degree] * cycle_columns).reduced(C.coeff).is_zero())
    throw InternalError("homology class of a non-cycle");
  Matrix frame = Matrix::hconcat(H.reps[degree], H.bounds[degree]);
  auto y = field_solve(frame, cycle_columns.reduced(C.coeff), C.coeff);
  if (!y) throw InternalError("cycle outside the cycle space");
  std::vector<int> head(H.reps[degree].cols());
  for (size_t i = 0; i < head.size(); ++i) head[i] = static_cast<int>(i);
  return y->rows_selected(head);
}

std::vector<Matrix> induced_on_homology(const ChainComplexField& C, const FieldHomology& HC,
                                        const ChainComplexField& D, const FieldHomology& HD,
                                        const std::vector<Matrix>& chain_maps) {
  const int N = C.max_degree();
  std::vector<Matrix> out(N + 1);
  for (int n = 0; n <= N; ++n) {
    // chain map property: boundary_D . f = f . boundary_C
    if (n > 0) {
      Matrix lhs = D.boundary[n] * chain_maps[n];
      Matrix rhs = chain_maps[n - 1] * C.boundary[n];
      if (!(lhs.reduced(C.coeff) == rhs.reduced(C.coeff)))
        throw InternalError("chain map does not commute with the boundary");
    }
    Matrix image = chain_maps[n] * HC.reps[n];
    out[n] = homology_class(D, HD, n, image);
  }
  return out;
}

ChainComplexField abstract_complex(const SubspaceFamily& F, const std::vector<Matrix>& ambient_boundary) {
  ChainComplexField C;
  C.coeff = F.coeff;
  const int N = static_cast<int>(F.bases.size()) - 1;
  C.dims.resize(N + 1);
  C.boundary.resize(N + 1);
  for (int n = 0; n <= N; ++n) C.dims[n] = F.bases[n].cols();
  for (int n = 0; n <= N; ++n) {
    if (n == 0) {
      C.boundary[0] = Matrix(0, C.dims[0]);
      continue;
    }
    Matrix img = ambient_boundary[n] * F.bases[n];
    auto coords = field_solve(F.bases[n - 1], img.reduced(F.coeff), F.coeff);
    if (!coords) throw InternalError("subspace family not closed under the boundary");
    C.boundary[n] = *coords;
  }
  return C;
}

std::vector<Matrix> inclusion_chain_maps(const SubspaceFamily& sub, const SubspaceFamily& super) {
  std::vector<Matrix> maps(sub.bases.size());
  for (size_t n = 0; n < sub.bases.size(); ++n) {
    auto coords = field_solve(super.bases[n], sub.bases[n].reduced(sub.coeff), sub.coeff);
    if (!coords) throw InternalError("inclusion of a non-subspace");
    maps[n] = *coords;
  }
  return maps;
}

QuotientComplex make_quotient(const SubspaceFamily& sub, const SubspaceFamily& total,
                              const std::vector<Matrix>& ambient_boundary) {
  QuotientComplex Q;
  const Coefficients coeff = sub.coeff;
  const int N = static_cast<int>(total.bases.size()) - 1;
  Q.sub_bases.resize(N + 1);
  Q.extensions.resize(N + 1);
  Q.complex.coeff = coeff;
  Q.complex.dims.resize(N + 1);
  Q.complex.boundary.resize(N + 1);
  for (int n = 0; n <= N; ++n) {
    Q.sub_bases[n] = sub.bases[n];
    // extend the sub basis to the total space by greedily picking total-basis
    // columns outside the current span
    Matrix span = sub.bases[n];
    int span_rank = matrix_rank(span, coeff);
    std::vector<int> chosen;
    for (int j = 0; j < total.bases[n].cols(); ++j) {
      Matrix cand = Matrix::hconcat(span, total.bases[n].column(j));
      int r = matrix_rank(cand, coeff);
      if (r > span_rank) {
        chosen.push_back(j);
        span = cand;
        span_rank = r;
      }
    }
    Q.extensions[n] = total.bases[n].columns(chosen);
    Q.complex.dims[n] = static_cast<int>(chosen.size());
  }
  for (int n = 0; n <= N; ++n) {
    if (n == 0) {
      Q.complex.boundary[0] = Matrix(0, Q.complex.dims[0]);
      continue;
    }
    Matrix img = ambient_boundary[n] * Q.extensions[n];
    Q.complex.boundary[n] = quotient_project(Q, n - 1, img);
  }
  return Q;
}

Matrix quotient_project(const QuotientComplex& Q, int degree, const Matrix& ambient_vectors) {
  const Coefficients coeff = Q.complex.coeff;
  Matrix frame = Matrix::hconcat(Q.sub_bases[degree], Q.extensions[degree]);
  auto y = field_solve(frame, ambient_vectors.reduced(coeff), coeff);
  if (!y) throw InternalError("vector outside the total space of a quotient");
  std::vector<int> tail(Q.extensions[degree].cols());
  for (size_t i = 0; i < tail.size(); ++i)
    tail[i] = Q.sub_bases[degree].cols() + static_cast<int>(i);
  return y->rows_selected(tail);
}

}  // namespace hyperhom
