#include "qseries/rrcf.hpp"

namespace qseries {

namespace {
const RationalRing kExact;
}

RatSeries r_series(long N) {
  RatSeries num = mul(pochhammer_series({2, 5}, N, kExact), pochhammer_series({3, 5}, N, kExact));
  RatSeries den = mul(pochhammer_series({1, 5}, N, kExact), pochhammer_series({4, 5}, N, kExact));
  return mul(num, invert(den));
}

RatSeries y_series(long N) {
  RatSeries e1 = euler_series(N, kExact);
  RatSeries e5 = inflate(euler_series(N / 5, kExact), 5, N);
  return mul(pow_int(e1, 6), pow_int(e5, -6));
}

XkElement x_k(long k, long N) {
  if (k < 1) throw PreconditionError("x_k: need k >= 1");
  RatSeries y = y_series(N);
  RatSeries x1(kExact, N);
  if (N >= 1) x1.at(1) = 11;
  x1 = add(x1, y);
  if (k == 1) return {1, x1};
  RatSeries x2(kExact, N);
  if (N >= 2) x2.at(2) = 123;
  x2 = add(x2, scale(shift_up(y, 1), Rat(22)));
  x2 = add(x2, mul(y, y));
  if (k == 2) return {2, x2};
  RatSeries prev2 = x1;
  RatSeries prev1 = std::move(x2);
  for (long i = 3; i <= k; ++i) {
    RatSeries cur = add(mul(x1, prev1), shift_up(prev2, 2));
    prev2 = std::move(prev1);
    prev1 = std::move(cur);
  }
  return {k, prev1};
}

RatSeries x_k_direct(long k, long N) {
  if (k < 1) throw PreconditionError("x_k_direct: need k >= 1");
  RatSeries r = r_series(N);
  RatSeries rp = pow_int(r, 5 * k);
  RatSeries second = shift_up(invert(rp), 2 * k);
  return k % 2 == 0 ? add(rp, second) : sub(rp, second);
}

std::vector<Int> xk_y_polynomial(long k) {
  if (k < 1) throw PreconditionError("xk_y_polynomial: need k >= 1");
  std::vector<Int> p1 = {Int(11), Int(1)};
  if (k == 1) return p1;
  std::vector<Int> p2 = {Int(123), Int(22), Int(1)};
  if (k == 2) return p2;
  std::vector<Int> a = p1, b = p2;  // x_{i-2}, x_{i-1}
  for (long i = 3; i <= k; ++i) {
    std::vector<Int> c(static_cast<std::size_t>(i) + 1, Int(0));
    for (long j = 0; j <= i; ++j) {
      if (j >= 1) c[j] += b[j - 1];              // y * x_{i-1}
      if (j <= i - 1) c[j] += 11 * b[j];         // 11q * x_{i-1}
      if (j <= i - 2) c[j] += a[j];              // q^2 * x_{i-2}
    }
    a = std::move(b);
    b = std::move(c);
  }
  return b;
}

namespace {

Certificate certify(std::string name, const RatSeries& lhs, const RatSeries& rhs) {
  long diff = first_difference(lhs, rhs);
  return Certificate{std::move(name), diff < 0, diff, std::min(lhs.order(), rhs.order())};
}

}  // namespace

Certificate verify_e1_r_dissection(long N) {
  RatSeries r5 = inflate(r_series(N / 5), 5, N);
  RatSeries inner = sub(r5, shift_up(invert(r5), 2));
  if (N >= 1) inner.at(1) -= 1;
  RatSeries e25 = inflate(euler_series(N / 25, kExact), 25, N);
  return certify("E1=E25(R(q^5)-q-q^2/R(q^5))", mul(e25, inner), euler_series(N, kExact));
}

Certificate verify_x1_identity(long N) {
  RatSeries r = r_series(N);
  RatSeries r5 = pow_int(r, 5);
  RatSeries lhs = sub(r5, shift_up(invert(r5), 2));
  if (N >= 1) lhs.at(1) -= 11;
  return certify("R^5-q^2/R^5-11q=E1^6/E5^6", lhs, y_series(N));
}

Certificate verify_x2_identity(long N) {
  return certify("x2=123q^2+22q*y+y^2", x_k(2, N).series, x_k_direct(2, N));
}

Certificate verify_x3_identity(long N) {
  RatSeries y = y_series(N);
  RatSeries rhs(kExact, N);
  if (N >= 3) rhs.at(3) = 1364;
  rhs = add(rhs, scale(shift_up(y, 2), Rat(366)));
  rhs = add(rhs, scale(shift_up(mul(y, y), 1), Rat(33)));
  rhs = add(rhs, pow_int(y, 3));
  return certify("x3 expansion", x_k_direct(3, N), rhs);
}

Certificate verify_identity2(long N) {
  RatSeries r = r_series(N);
  RatSeries r3 = inflate(r_series(N / 3), 3, N);
  RatSeries rinv = invert(r);
  RatSeries r3inv = invert(r3);
  RatSeries lhs = mul(mul(r, r), r3);
  lhs = sub(lhs, mul(mul(r3, r3), rinv));
  lhs = add(lhs, shift_up(mul(r, mul(r3inv, r3inv)), 2));
  lhs = sub(lhs, shift_up(mul(mul(rinv, rinv), r3inv), 2));
  RatSeries rhs(kExact, N);
  if (N >= 1) rhs.at(1) = 3;
  return certify("R(q),R(q^3) four-term identity", lhs, rhs);
}

Certificate verify_xk_recurrence(long k_max, long N) {
  for (long k = 1; k <= k_max; ++k) {
    long diff = first_difference(x_k(k, N).series, x_k_direct(k, N));
    if (diff >= 0)
      return Certificate{"x_k recurrence vs direct (k=" + std::to_string(k) + ")", false, diff, N};
  }
  return Certificate{"x_k recurrence vs direct (k<=" + std::to_string(k_max) + ")", true, -1, N};
}

}  // namespace qseries
