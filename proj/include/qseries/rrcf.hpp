#pragma once

#include "qseries/etaq.hpp"

namespace qseries {

// Integral-exponent companion of the Rogers-Ramanujan continued fraction:
// R(q) = (q^2;q^5)(q^3;q^5) / ((q;q^5)(q^4;q^5)), constant term 1.
RatSeries r_series(long N);

struct XkElement {
  long k;
  RatSeries series;
};

// y = E_1^6 / E_5^6, the variable of the x_k polynomials.
RatSeries y_series(long N);

// x_k = R^{5k} + (-1)^k q^{2k} / R^{5k}, built by the recurrence
// x_k = x_1 x_{k-1} + q^2 x_{k-2} seeded with x_1 = 11q + y, x_2 = 123q^2 + 22qy + y^2.
XkElement x_k(long k, long N);

// Direct construction from R(q); the test-side oracle for the recurrence.
RatSeries x_k_direct(long k, long N);

// Coefficients a_j with x_k = sum_j a_j q^{k-j} y^j (a_k = 1).
std::vector<Int> xk_y_polynomial(long k);

// Eq-style certificates, all over the exact ring.
Certificate verify_e1_r_dissection(long N);   // E_1 = E_25 (R(q^5) - q - q^2/R(q^5))
Certificate verify_x1_identity(long N);       // R^5 - q^2/R^5 - 11q = E_1^6/E_5^6
Certificate verify_x2_identity(long N);       // x_2 = 123q^2 + 22q y + y^2
Certificate verify_x3_identity(long N);       // x_3 = 1364q^3 + 366q^2 y + 33q y^2 + y^3
Certificate verify_identity2(long N);         // R^2(q)R(q^3) - R^2(q^3)/R(q)
                                              //   + q^2 R(q)/R^2(q^3) - q^2/(R^2(q)R(q^3)) = 3q
Certificate verify_xk_recurrence(long k_max, long N);  // recurrence vs direct, k <= k_max

}  // namespace qseries
