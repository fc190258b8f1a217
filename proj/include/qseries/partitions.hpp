#pragma once

#include "qseries/etaq.hpp"

namespace qseries {

// Coefficients of E_1^t: p_t(0..N).
template <class Ring>
std::vector<typename Ring::Coeff> p_t_coeffs(const Rat& t, long N, const Ring& R) {
  Series<Ring> s = pow_rational(euler_series(N, R), t);
  return s.coeffs();
}

// Coefficients of (E_1 E_r)^t: the 2-color fractional function p_{[1,r;t]}(0..N).
template <class Ring>
std::vector<typename Ring::Coeff> p_color_coeffs(long r, const Rat& t, long N, const Ring& R) {
  if (r < 2) throw PreconditionError("p_color_coeffs: need r >= 2");
  Series<Ring> a = pow_rational(euler_series(N, R), t);
  Series<Ring> b = inflate(pow_rational(euler_series(N / r, R), t), r, N);
  return mul(a, b).coeffs();
}

// ord_ell(n!), ell prime.
inline long legendre_valuation(long n, const Int& ell) { return factorial_valuation(n, ell); }

// denom(p_t(n)) = b^n * prod_{ell | b} ell^{ord_ell(n!)}  (an equality, not a bound).
Int predicted_denominator(const Rat& t, long n);

}  // namespace qseries
