#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qseries {

using Int = mpz_class;
using Rat = mpq_class;

// Precondition violations, ring mismatches, bad CLI input.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RingMismatchError : Error {
  using Error::Error;
};

struct PreconditionError : Error {
  using Error::Error;
};

struct ParseError : Error {
  std::size_t pos;
  ParseError(const std::string& msg, std::size_t p) : Error(msg), pos(p) {}
};

inline Rat make_rat(Int num, Int den) {
  Rat r(std::move(num), std::move(den));
  r.canonicalize();
  return r;
}

Int int_pow(const Int& base, unsigned long e);

// Deterministic Miller-Rabin below 2^64 (fixed witness set); GMP fallback above.
bool is_prime(const Int& n);

// Largest e with p^e | n, for n != 0.
long ord_prime(const Int& p, const Int& n);

// ord_p(numerator) - ord_p(denominator); x must be nonzero.
long ord_prime_rat(const Int& p, const Rat& x);

// ord_ell(n!) by Legendre's formula.  ell must be prime.
long factorial_valuation(long n, const Int& ell);

// Euler-criterion Legendre symbol, ell an odd prime.
int legendre_symbol(const Int& a, const Int& ell);

}  // namespace qseries
