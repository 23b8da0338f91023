#include "hyperhom/matrix.hpp"

#include <sstream>

#include "hyperhom/errors.hpp"

namespace hyperhom {

Coefficients Coefficients::Zp(unsigned long prime) {
  if (!is_prime(prime)) throw UserError("modulus " + std::to_string(prime) + " is not prime");
  return {Ring::PrimeField, prime};
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Rat Coefficients::normalize(const Rat& x) const {
  if (ring != Ring::PrimeField) return x;
  // Elements of Z/p live as integers in [0, p); incoming rationals are mapped
  // through num * den^-1 mod p.
  Int num = x.get_num(), den = x.get_den();
  Int pz(static_cast<unsigned long>(p));
  Int dmod;
  mpz_mod(dmod.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
  if (dmod == 0) throw UserError("denominator divisible by modulus");
  Int dinv;
  if (mpz_invert(dinv.get_mpz_t(), dmod.get_mpz_t(), pz.get_mpz_t()) == 0)
    throw UserError("denominator not invertible mod p");
  Int r = num * dinv;
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), pz.get_mpz_t());
  return Rat(r);
}

Rat Coefficients::invert(const Rat& x) const {
  switch (ring) {
    case Ring::Rationals:
      if (x == 0) throw UserError("division by zero");
      return 1 / x;
    case Ring::PrimeField: {
      Rat n = normalize(x);
      if (n == 0) throw UserError("division by zero in prime field");
      Int inv;
      Int pz(static_cast<unsigned long>(p));
      Int num = n.get_num();
      mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), pz.get_mpz_t());
      return Rat(inv);
    }
    case Ring::Integers:
      if (x == 1) return Rat(1);
      if (x == -1) return Rat(-1);
      throw UserError("element not invertible over the integers");
  }
  throw InternalError("unreachable ring case");
}

std::string Coefficients::name() const {
  switch (ring) {
    case Ring::Integers: return "Z";
    case Ring::Rationals: return "Q";
    case Ring::PrimeField: return "Z/" + std::to_string(p);
  }
  return "?";
}

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
  a_.resize(size_t(rows_) * cols_);
  int r = 0;
  for (const auto& row : rows) {
    int c = 0;
    for (long v : row) at(r, c++) = Rat(v);
    ++r;
  }
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw InternalError("matrix product shape mismatch");
  Matrix out(rows_, o.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0; k < cols_; ++k) {
      const Rat& x = at(r, k);
      if (x == 0) continue;
      for (int c = 0; c < o.cols_; ++c) {
        if (o.at(k, c) == 0) continue;
        out.at(r, c) += x * o.at(k, c);
      }
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InternalError("matrix sum shape mismatch");
  Matrix out(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
  return out;
}

Matrix Matrix::operator-() const {
  Matrix out(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = -a_[i];
  return out;
}

Matrix Matrix::column(int c) const {
  Matrix out(rows_, 1);
  for (int r = 0; r < rows_; ++r) out.at(r, 0) = at(r, c);
  return out;
}

Matrix Matrix::columns(const std::vector<int>& which) const {
  Matrix out(rows_, static_cast<int>(which.size()));
  for (int j = 0; j < out.cols_; ++j)
    for (int r = 0; r < rows_; ++r) out.at(r, j) = at(r, which[j]);
  return out;
}

Matrix Matrix::rows_selected(const std::vector<int>& which) const {
  Matrix out(static_cast<int>(which.size()), cols_);
  for (int i = 0; i < out.rows_; ++i)
    for (int c = 0; c < cols_; ++c) out.at(i, c) = at(which[i], c);
  return out;
}

bool Matrix::is_zero() const {
  for (const Rat& x : a_)
    if (x != 0) return false;
  return true;
}

bool Matrix::is_integral() const {
  for (const Rat& x : a_)
    if (x.get_den() != 1) return false;
  return true;
}

void Matrix::swap_rows(int i, int j) {
  if (i == j) return;
  for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void Matrix::swap_cols(int i, int j) {
  if (i == j) return;
  for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

Matrix Matrix::hconcat(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_) throw InternalError("hconcat row mismatch");
  Matrix out(a.rows_, a.cols_ + b.cols_);
  for (int r = 0; r < a.rows_; ++r) {
    for (int c = 0; c < a.cols_; ++c) out.at(r, c) = a.at(r, c);
    for (int c = 0; c < b.cols_; ++c) out.at(r, a.cols_ + c) = b.at(r, c);
  }
  return out;
}

Matrix Matrix::vconcat(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.cols_) throw InternalError("vconcat column mismatch");
  Matrix out(a.rows_ + b.rows_, a.cols_);
  for (int r = 0; r < a.rows_; ++r)
    for (int c = 0; c < a.cols_; ++c) out.at(r, c) = a.at(r, c);
  for (int r = 0; r < b.rows_; ++r)
    for (int c = 0; c < a.cols_; ++c) out.at(a.rows_ + r, c) = b.at(r, c);
  return out;
}

Matrix Matrix::reduced(const Coefficients& coeff) const {
  if (coeff.ring != Ring::PrimeField) return *this;
  Matrix out(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = coeff.normalize(a_[i]);
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (int r = 0; r < rows_; ++r) {
    os << (r ? "\n[" : "[");
    for (int c = 0; c < cols_; ++c) os << (c ? " " : "") << rat_to_string(at(r, c));
    os << "]";
  }
  return os.str();
}

}  // namespace hyperhom
