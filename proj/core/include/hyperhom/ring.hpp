#pragma once

#include <string>

#include "hyperhom/errors.hpp"
#include "hyperhom/rational.hpp"

namespace hyperhom {

enum class Ring { Integers, Rationals, PrimeField };

// Coefficient ring tag carried alongside matrices and chain data.  PrimeField
// elements are represented by integers in [0, p).
struct Coefficients {
  Ring ring = Ring::Integers;
  unsigned long p = 0;

  static Coefficients Z() { return {Ring::Integers, 0}; }
  static Coefficients Q() { return {Ring::Rationals, 0}; }
  static Coefficients Zp(unsigned long prime);

  bool is_field() const { return ring != Ring::Integers; }

  Rat normalize(const Rat& x) const;
  Rat invert(const Rat& x) const;

  std::string name() const;
  bool operator==(const Coefficients& o) const {
    return ring == o.ring && p == o.p;
  }
};

bool is_prime(unsigned long n);

}  // namespace hyperhom
