#include "hyperhom/lattice.hpp"

#include <algorithm>

#include "hyperhom/errors.hpp"

namespace hyperhom {

namespace {

Int entry_int(const Matrix& m, int r, int c) {
  const Rat& x = m.at(r, c);
  if (x.get_den() != 1) throw InternalError("integral matrix expected");
  return x.get_num();
}

void require_integral(const Matrix& m) {
  if (!m.is_integral()) throw InternalError("integral matrix expected");
}

// column_j += q * column_i
void add_col(Matrix& m, int j, int i, const Int& q) {
  if (q == 0) return;
  Rat qq(q);
  for (int r = 0; r < m.rows(); ++r) m.at(r, j) += qq * m.at(r, i);
}

void add_row(Matrix& m, int j, int i, const Int& q) {
  if (q == 0) return;
  Rat qq(q);
  for (int c = 0; c < m.cols(); ++c) m.at(j, c) += qq * m.at(i, c);
}

void negate_col(Matrix& m, int j) {
  for (int r = 0; r < m.rows(); ++r) m.at(r, j) = -m.at(r, j);
}

void negate_row(Matrix& m, int i) {
  for (int c = 0; c < m.cols(); ++c) m.at(i, c) = -m.at(i, c);
}

// Column Hermite reduction of A in place; if U is non-null it receives the
// same column operations (callers pass the identity to accumulate the
// unimodular transform with A_in * U = A_out).
void hermite_in_place(Matrix& A, Matrix* U) {
  const int m = A.rows(), n = A.cols();
  int cur = 0;
  for (int i = 0; i < m && cur < n; ++i) {
    int first = -1;
    for (int j = cur; j < n; ++j)
      if (A.at(i, j) != 0) { first = j; break; }
    if (first < 0) continue;
    A.swap_cols(cur, first);
    if (U) U->swap_cols(cur, first);
    // gcd-combine the remaining columns into the pivot column
    for (int j = cur + 1; j < n; ++j) {
      if (A.at(i, j) == 0) continue;
      Int a = entry_int(A, i, cur), b = entry_int(A, i, j);
      Int g, x, y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      Int au = a / g, bu = b / g;
      // (col_cur, col_j) <- (x*cur + y*j, -bu*cur + au*j); the 2x2 transform
      // [[x, -bu], [y, au]] has determinant x*au + y*bu = 1.
      for (int r = 0; r < A.rows(); ++r) {
        Rat c0 = A.at(r, cur), c1 = A.at(r, j);
        A.at(r, cur) = Rat(x) * c0 + Rat(y) * c1;
        A.at(r, j) = Rat(-bu) * c0 + Rat(au) * c1;
      }
      if (U)
        for (int r = 0; r < U->rows(); ++r) {
          Rat c0 = U->at(r, cur), c1 = U->at(r, j);
          U->at(r, cur) = Rat(x) * c0 + Rat(y) * c1;
          U->at(r, j) = Rat(-bu) * c0 + Rat(au) * c1;
        }
    }
    if (A.at(i, cur) < 0) {
      negate_col(A, cur);
      if (U) negate_col(*U, cur);
    }
    Int d = entry_int(A, i, cur);
    for (int j = 0; j < cur; ++j) {
      Int v = entry_int(A, i, j);
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
      add_col(A, j, cur, -q);
      if (U) add_col(*U, j, cur, -q);
    }
    ++cur;
  }
  // Move the (all-zero) trailing columns out: they are already at cur..n-1.
}

}  // namespace

Matrix hermite_column_form(const Matrix& A) {
  require_integral(A);
  Matrix work = A;
  hermite_in_place(work, nullptr);
  std::vector<int> keep;
  for (int j = 0; j < work.cols(); ++j) {
    bool zero = true;
    for (int r = 0; r < work.rows(); ++r)
      if (work.at(r, j) != 0) { zero = false; break; }
    if (!zero) keep.push_back(j);
  }
  return work.columns(keep);
}

Matrix integer_kernel(const Matrix& A) {
  require_integral(A);
  Matrix work = A;
  Matrix U = Matrix::identity(A.cols());
  hermite_in_place(work, &U);
  std::vector<int> zero_cols;
  for (int j = 0; j < work.cols(); ++j) {
    bool zero = true;
    for (int r = 0; r < work.rows(); ++r)
      if (work.at(r, j) != 0) { zero = false; break; }
    if (zero) zero_cols.push_back(j);
  }
  return hermite_column_form(U.columns(zero_cols));
}

std::optional<Matrix> hermite_solve(const Matrix& H, const Matrix& b) {
  require_integral(H);
  require_integral(b);
  if (H.rows() != b.rows()) throw InternalError("hermite_solve shape mismatch");
  const int m = H.rows(), n = H.cols();
  // Locate the pivot row of each column (first nonzero from the top).
  std::vector<int> pivot_row(n, -1);
  for (int j = 0; j < n; ++j)
    for (int r = 0; r < m; ++r)
      if (H.at(r, j) != 0) { pivot_row[j] = r; break; }
  Matrix x(n, b.cols());
  for (int col = 0; col < b.cols(); ++col) {
    std::vector<Rat> residual(m);
    for (int r = 0; r < m; ++r) residual[r] = b.at(r, col);
    int j = 0;
    for (int r = 0; r < m; ++r) {
      if (j < n && pivot_row[j] == r) {
        Int num = residual[r].get_num();
        Int den = entry_int(H, r, j);
        Int q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        if (rem != 0) return std::nullopt;
        x.at(j, col) = Rat(q);
        for (int r2 = r; r2 < m; ++r2) residual[r2] -= Rat(q) * H.at(r2, j);
        ++j;
      } else if (residual[r] != 0) {
        return std::nullopt;
      }
    }
  }
  return x;
}

namespace {

// nearest-integer quotient, so |num - q*den| <= |den|/2; keeps the entries
// small while the pivot descends
Int round_div(const Int& num, const Int& den) {
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (2 * abs(r) > abs(den)) ++q;
  return q;
}

}  // namespace

SmithResult smith_normal_form(const Matrix& A) {
  require_integral(A);
  SmithResult out;
  out.S = A;
  out.U = Matrix::identity(A.rows());
  out.V = Matrix::identity(A.cols());
  Matrix& S = out.S;
  const int m = S.rows(), n = S.cols();
  int t = 0;
  while (t < m && t < n) {
    bool exhausted = false;
    for (;;) {
      // minimal-absolute-value pivot in the active submatrix; lowest row,
      // then lowest column breaks ties.  Re-selected every pass: after a
      // reduction sweep any surviving remainder is at most half the old
      // pivot, so the pivot shrinks geometrically.
      int pi = -1, pj = -1;
      Int best;
      for (int i = t; i < m; ++i)
        for (int j = t; j < n; ++j) {
          if (S.at(i, j) == 0) continue;
          Int v = abs(entry_int(S, i, j));
          if (pi < 0 || v < best) {
            best = v;
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) {
        exhausted = true;
        break;
      }
      S.swap_rows(t, pi);
      out.U.swap_rows(t, pi);
      S.swap_cols(t, pj);
      out.V.swap_cols(t, pj);

      bool dirty = false;
      Int d = entry_int(S, t, t);
      for (int i = t + 1; i < m; ++i) {
        if (S.at(i, t) == 0) continue;
        Int q = round_div(entry_int(S, i, t), d);
        add_row(S, i, t, -q);
        add_row(out.U, i, t, -q);
        if (S.at(i, t) != 0) dirty = true;
      }
      if (dirty) continue;
      for (int j = t + 1; j < n; ++j) {
        if (S.at(t, j) == 0) continue;
        Int q = round_div(entry_int(S, t, j), d);
        add_col(S, j, t, -q);
        add_col(out.V, j, t, -q);
        if (S.at(t, j) != 0) dirty = true;
      }
      if (dirty) continue;
      // pivot row and column are clear; enforce the divisibility chain
      for (int i = t + 1; i < m && !dirty; ++i)
        for (int j = t + 1; j < n && !dirty; ++j)
          if (entry_int(S, i, j) % d != 0) {
            add_row(S, t, i, Int(1));
            add_row(out.U, t, i, Int(1));
            dirty = true;
          }
      if (!dirty) break;
    }
    if (exhausted) break;
    if (S.at(t, t) < 0) {
      negate_row(S, t);
      negate_row(out.U, t);
    }
    ++t;
  }
  for (int i = 0; i < std::min(m, n); ++i)
    if (S.at(i, i) != 0) {
      out.divisors.push_back(entry_int(S, i, i));
      ++out.rank;
    }
  return out;
}

Matrix field_rref(const Matrix& A, const Coefficients& coeff, std::vector<int>* pivot_cols) {
  if (!coeff.is_field()) throw InternalError("field_rref needs a field");
  Matrix R = A.reduced(coeff);
  const int m = R.rows(), n = R.cols();
  int row = 0;
  std::vector<int> pivots;
  for (int col = 0; col < n && row < m; ++col) {
    int pr = -1;
    for (int r = row; r < m; ++r)
      if (R.at(r, col) != 0) { pr = r; break; }
    if (pr < 0) continue;
    R.swap_rows(row, pr);
    Rat inv = coeff.invert(R.at(row, col));
    for (int c = col; c < n; ++c) R.at(row, c) = coeff.normalize(R.at(row, c) * inv);
    for (int r = 0; r < m; ++r) {
      if (r == row || R.at(r, col) == 0) continue;
      Rat f = R.at(r, col);
      for (int c = col; c < n; ++c)
        R.at(r, c) = coeff.normalize(R.at(r, c) - f * R.at(row, c));
    }
    pivots.push_back(col);
    ++row;
  }
  if (pivot_cols) *pivot_cols = pivots;
  return R;
}

Matrix field_kernel(const Matrix& A, const Coefficients& coeff) {
  std::vector<int> pivots;
  Matrix R = field_rref(A, coeff, &pivots);
  const int n = A.cols();
  std::vector<bool> is_pivot(n, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix K(n, static_cast<int>(free_cols.size()));
  for (int k = 0; k < K.cols(); ++k) {
    int f = free_cols[k];
    K.at(f, k) = 1;
    for (size_t pi = 0; pi < pivots.size(); ++pi)
      K.at(pivots[pi], k) = coeff.normalize(-R.at(static_cast<int>(pi), f));
  }
  return K;
}

Matrix field_column_basis(const Matrix& A, const Coefficients& coeff) {
  Matrix R = field_rref(A.transposed(), coeff, nullptr);
  std::vector<int> nonzero_rows;
  for (int r = 0; r < R.rows(); ++r) {
    bool zero = true;
    for (int c = 0; c < R.cols(); ++c)
      if (R.at(r, c) != 0) { zero = false; break; }
    if (!zero) nonzero_rows.push_back(r);
  }
  return R.rows_selected(nonzero_rows).transposed();
}

std::optional<Matrix> field_solve(const Matrix& A, const Matrix& b, const Coefficients& coeff) {
  if (A.rows() != b.rows()) throw InternalError("field_solve shape mismatch");
  Matrix aug = Matrix::hconcat(A, b);
  std::vector<int> pivots;
  Matrix R = field_rref(aug, coeff, &pivots);
  const int n = A.cols();
  for (int p : pivots)
    if (p >= n) return std::nullopt;  // pivot in the RHS block: inconsistent
  Matrix x(n, b.cols());
  for (size_t pi = 0; pi < pivots.size(); ++pi)
    for (int c = 0; c < b.cols(); ++c)
      x.at(pivots[pi], c) = R.at(static_cast<int>(pi), n + c);
  return x;
}

int matrix_rank(const Matrix& A, const Coefficients& coeff) {
  Coefficients field = coeff.is_field() ? coeff : Coefficients::Q();
  std::vector<int> pivots;
  field_rref(A, field, &pivots);
  return static_cast<int>(pivots.size());
}

}  // namespace hyperhom
