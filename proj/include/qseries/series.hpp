#pragma once

#include <algorithm>
#include <vector>

#include "qseries/rings.hpp"

namespace qseries {

// Formal power series in q, truncated at a fixed order N (coefficients
// c_0..c_N).  Immutable in practice: every operation returns a new value.
template <class Ring>
class Series {
 public:
  using Coeff = typename Ring::Coeff;

  Series(Ring ring, long order)
      : ring_(std::move(ring)), order_(order), c_(static_cast<std::size_t>(order) + 1, ring_.zero()) {
    if (order < 0) throw PreconditionError("series order must be >= 0");
  }

  static Series one(Ring ring, long order) {
    Series s(std::move(ring), order);
    s.at(0) = s.ring().one();
    return s;
  }

  long order() const { return order_; }
  const Ring& ring() const { return ring_; }

  const Coeff& operator[](long n) const { return c_[static_cast<std::size_t>(n)]; }
  Coeff& at(long n) { return c_[static_cast<std::size_t>(n)]; }

  const std::vector<Coeff>& coeffs() const { return c_; }

 private:
  Ring ring_;
  long order_;
  std::vector<Coeff> c_;
};

template <class Ring>
void check_same_ring(const Series<Ring>& a, const Series<Ring>& b) {
  if (!a.ring().same(b.ring())) throw RingMismatchError("series live in different coefficient rings");
}

template <class Ring>
Series<Ring> add(const Series<Ring>& F, const Series<Ring>& G) {
  check_same_ring(F, G);
  long N = std::min(F.order(), G.order());
  Series<Ring> H(F.ring(), N);
  for (long n = 0; n <= N; ++n) H.at(n) = F.ring().add(F[n], G[n]);
  return H;
}

template <class Ring>
Series<Ring> sub(const Series<Ring>& F, const Series<Ring>& G) {
  check_same_ring(F, G);
  long N = std::min(F.order(), G.order());
  Series<Ring> H(F.ring(), N);
  for (long n = 0; n <= N; ++n) H.at(n) = F.ring().sub(F[n], G[n]);
  return H;
}

template <class Ring>
Series<Ring> neg(const Series<Ring>& F) {
  Series<Ring> H(F.ring(), F.order());
  for (long n = 0; n <= F.order(); ++n) H.at(n) = F.ring().neg(F[n]);
  return H;
}

template <class Ring>
Series<Ring> scale(const Series<Ring>& F, const typename Ring::Coeff& c) {
  Series<Ring> H(F.ring(), F.order());
  for (long n = 0; n <= F.order(); ++n) H.at(n) = F.ring().mul(F[n], c);
  return H;
}

// Cauchy product; zero terms of either factor are skipped, so sparse inputs
// (Euler products, pochhammer factors) stay cheap.
template <class Ring>
Series<Ring> mul(const Series<Ring>& F, const Series<Ring>& G) {
  check_same_ring(F, G);
  const Ring& R = F.ring();
  long N = std::min(F.order(), G.order());
  Series<Ring> H(R, N);
  for (long i = 0; i <= N; ++i) {
    if (R.is_zero(F[i])) continue;
    for (long j = 0; i + j <= N; ++j) {
      if (R.is_zero(G[j])) continue;
      H.at(i + j) = R.add(H.at(i + j), R.mul(F[i], G[j]));
    }
  }
  return H;
}

template <class Ring>
Series<Ring> invert(const Series<Ring>& F) {
  const Ring& R = F.ring();
  if (!R.is_unit(F[0])) throw PreconditionError("invert: constant term is not a unit");
  long N = F.order();
  Series<Ring> G(R, N);
  G.at(0) = R.inv(F[0]);
  typename Ring::Coeff g0 = G[0];
  for (long n = 1; n <= N; ++n) {
    typename Ring::Coeff acc = R.zero();
    for (long k = 1; k <= n; ++k) {
      if (R.is_zero(F[k]) || R.is_zero(G[n - k])) continue;
      acc = R.add(acc, R.mul(F[k], G[n - k]));
    }
    G.at(n) = R.neg(R.mul(g0, acc));
  }
  return G;
}

template <class Ring>
Series<Ring> pow_int(const Series<Ring>& F, long e) {
  const Ring& R = F.ring();
  if (e == 0) return Series<Ring>::one(R, F.order());
  Series<Ring> base = e < 0 ? invert(F) : F;
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  Series<Ring> acc = Series<Ring>::one(R, F.order());
  while (k) {
    if (k & 1) acc = mul(acc, base);
    if (k >>= 1) base = mul(base, base);
  }
  return acc;
}

// F^t for rational t via the logarithmic-derivative convolution:
//   n g_n = sum_{k=1..n} ((t+1)k - n) f_k g_{n-k},  f_0 = 1.
template <class Ring>
Series<Ring> pow_rational(const Series<Ring>& F, const Rat& t) {
  const Ring& R = F.ring();
  if (!R.eq(F[0], R.one())) throw PreconditionError("pow_rational: constant term must be 1");
  long N = F.order();
  Series<Ring> G(R, N);
  G.at(0) = R.one();
  typename Ring::Coeff tp1 = R.add(R.embed_rat(t), R.one());
  for (long n = 1; n <= N; ++n) {
    typename Ring::Coeff acc = R.zero();
    for (long k = 1; k <= n; ++k) {
      if (R.is_zero(F[k]) || R.is_zero(G[n - k])) continue;
      typename Ring::Coeff w = R.sub(R.mul(tp1, R.embed_long(k)), R.embed_long(n));
      acc = R.add(acc, R.mul(w, R.mul(F[k], G[n - k])));
    }
    G.at(n) = R.div_index(acc, n);
  }
  return G;
}

// [q^{sn+r}]: coefficient n of the result is coefficient sn+r of F.
template <class Ring>
Series<Ring> extract(const Series<Ring>& F, long s, long r) {
  if (s < 1 || r < 0 || r >= s) throw PreconditionError("extract: need s >= 1 and 0 <= r < s");
  long N = (F.order() - r) / s;
  if (N < 0) N = 0;  // r beyond the truncation order: zero series of order 0
  Series<Ring> H(F.ring(), N);
  for (long n = 0; n <= N; ++n) {
    long idx = s * n + r;
    if (idx <= F.order()) H.at(n) = F[idx];
  }
  return H;
}

// q -> q^m substitution, truncated at N_out.
template <class Ring>
Series<Ring> inflate(const Series<Ring>& F, long m, long N_out) {
  if (m < 1) throw PreconditionError("inflate: need m >= 1");
  Series<Ring> H(F.ring(), N_out);
  for (long n = 0; n <= F.order() && m * n <= N_out; ++n) H.at(m * n) = F[n];
  return H;
}

// Multiply by q^j, same truncation order (top coefficients fall off).
template <class Ring>
Series<Ring> shift_up(const Series<Ring>& F, long j) {
  if (j < 0) throw PreconditionError("shift_up: need j >= 0");
  Series<Ring> H(F.ring(), F.order());
  for (long n = j; n <= F.order(); ++n) H.at(n) = F[n - j];
  return H;
}

// First index where F and G differ (up to the common order), or -1.
template <class Ring>
long first_difference(const Series<Ring>& F, const Series<Ring>& G) {
  check_same_ring(F, G);
  long N = std::min(F.order(), G.order());
  for (long n = 0; n <= N; ++n)
    if (!F.ring().eq(F[n], G[n])) return n;
  return -1;
}

using RatSeries = Series<RationalRing>;
using PadicSeries = Series<PadicRing>;

}  // namespace qseries
