#include "qseries/partitions.hpp"

namespace qseries {

Int predicted_denominator(const Rat& t, long n) {
  if (n < 0) throw PreconditionError("predicted_denominator: need n >= 0");
  Int b = t.get_den();
  Int out = int_pow(b, static_cast<unsigned long>(n));
  // prime factors of b by trial division; denominators stay desk-scale
  Int rest = b;
  for (Int p = 2; p * p <= rest;) {
    if (rest % p == 0) {
      out *= int_pow(p, static_cast<unsigned long>(factorial_valuation(n, p)));
      while (rest % p == 0) rest /= p;
    }
    p += (p == 2) ? 1 : 2;
  }
  if (rest > 1) out *= int_pow(rest, static_cast<unsigned long>(factorial_valuation(n, rest)));
  return out;
}

}  // namespace qseries
