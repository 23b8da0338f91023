#include "hyperhom/rational.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>

#include "hyperhom/errors.hpp"

namespace hyperhom {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rat parse_exact_number(const std::string& text) {
  std::string s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = s[0] == '-';
    s.erase(0, 1);
  }
  if (s.empty()) throw UserError("malformed number: '" + text + "'");

  Rat value;
  auto slash = s.find('/');
  auto dot = s.find('.');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den) || den.find_first_not_of('0') == std::string::npos)
      throw UserError("malformed number: '" + text + "'");
    value = Rat(Int(num, 10), Int(den, 10));
    value.canonicalize();
  } else if (dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (frac.empty()) frac = "0";
    if (!all_digits(whole) || !all_digits(frac))
      throw UserError("malformed number: '" + text + "'");
    Int scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Int numerator = Int(whole, 10) * scale + Int(frac, 10);
    value = Rat(numerator, scale);
    value.canonicalize();
  } else {
    if (!all_digits(s)) throw UserError("malformed number: '" + text + "'");
    value = Rat(Int(s, 10));
  }
  if (negative) value = -value;
  return value;
}

std::string rat_to_string(const Rat& x) {
  Rat c = x;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string rat_to_decimal(const Rat& x, int significant_digits) {
  if (x == 0) return "0";
  // Exact scaled rounding: find e with 10^(e-1) <= |x| < 10^e, then round
  // |x| * 10^(digits-e) to the nearest integer and place the point.
  Rat ax = abs(x);
  int e = 0;
  Rat t = ax;
  while (t >= 10) {
    t /= 10;
    ++e;
  }
  while (t < 1) {
    t *= 10;
    --e;
  }
  ++e;  // now 10^(e-1) <= ax < 10^e
  int shift = significant_digits - e;
  Rat scaled = ax;
  for (int i = 0; i < shift; ++i) scaled *= 10;
  for (int i = 0; i < -shift; ++i) scaled /= 10;
  Int rounded;
  {
    Int num = scaled.get_num(), den = scaled.get_den();
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r * 2 >= den) q += 1;
    rounded = q;
  }
  std::string digits = rounded.get_str();
  // Rounding can carry over (e.g. 999.95 -> 10000); adjust the exponent.
  if (static_cast<int>(digits.size()) > significant_digits) {
    digits.pop_back();
    ++e;
  }
  while (digits.size() > 1 && digits.back() == '0' &&
         static_cast<int>(digits.size()) > e)
    digits.pop_back();
  std::string out;
  if (e <= 0) {
    out = "0.";
    for (int i = 0; i < -e; ++i) out += '0';
    out += digits;
  } else if (e >= static_cast<int>(digits.size())) {
    out = digits;
    for (int i = 0; i < e - static_cast<int>(digits.size()); ++i) out += '0';
  } else {
    out = digits.substr(0, e) + "." + digits.substr(e);
  }
  if (sgn(x) < 0) out = "-" + out;
  return out;
}

bool rational_sqrt_exact(const Rat& x, Rat& root) {
  if (sgn(x) < 0) return false;
  const Int& num = x.get_num();
  const Int& den = x.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return false;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
  Int rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  root = Rat(rn, rd);
  root.canonicalize();
  return true;
}

Rat rational_sqrt_floor(const Rat& x, unsigned k) {
  if (sgn(x) < 0) throw UserError("sqrt of negative rational");
  // floor(sqrt(x * 4^k)) = isqrt(floor(num * 4^k / den))
  Int num = x.get_num(), den = x.get_den();
  Int scaled = num << (2 * k);
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
  Int r;
  mpz_sqrt(r.get_mpz_t(), q.get_mpz_t());
  Rat out(r, Int(1) << k);
  out.canonicalize();
  return out;
}

Rat rational_sqrt_above(const Rat& x, unsigned k) {
  Rat lo = rational_sqrt_floor(x, k);
  Rat step(1, Int(1) << k);
  Rat r = lo;
  while (r * r <= x) r += step;
  return r;
}

}  // namespace hyperhom
