#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qseries/etaq.hpp"

using namespace qseries;

namespace {

const RationalRing kExact;

RatSeries random_series(std::mt19937_64& rng, long N, bool unit_constant, long max_den = 7) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, max_den);
  RatSeries s(kExact, N);
  for (long n = 0; n <= N; ++n) s.at(n) = make_rat(num(rng), den(rng));
  if (unit_constant) s.at(0) = 1;
  return s;
}

PadicSeries to_padic(const RatSeries& s, const PadicRing& R) {
  PadicSeries out(R, s.order());
  for (long n = 0; n <= s.order(); ++n) out.at(n) = R.embed_rat(s[n]);
  return out;
}

// first 21 partition numbers
const long kPartition[] = {1,  1,  2,  3,   5,   7,   11,  15,  22,  30, 42,
                           56, 77, 101, 135, 176, 231, 297, 385, 490, 627};

}  // namespace

TEST_CASE("euler_series follows the pentagonal pattern") {
  RatSeries e = euler_series(30, kExact);
  CHECK(e[0] == 1);
  CHECK(e[1] == -1);
  CHECK(e[2] == -1);
  CHECK(e[5] == 1);
  CHECK(e[7] == 1);
  CHECK(e[12] == -1);
  CHECK(e[15] == -1);
  CHECK(e[22] == 1);
  CHECK(e[26] == 1);
  long nonzero = 0;
  for (long n = 0; n <= 30; ++n)
    if (e[n] != 0) ++nonzero;
  CHECK(nonzero == 9);
}

TEST_CASE("invert reproduces the partition numbers") {
  RatSeries p = invert(euler_series(20, kExact));
  for (long n = 0; n <= 20; ++n) CHECK(p[n] == kPartition[n]);
}

TEST_CASE("ring axioms hold for random series (exact)") {
  std::mt19937_64 rng(12345);
  for (int rep = 0; rep < 20; ++rep) {
    RatSeries a = random_series(rng, 64, false);
    RatSeries b = random_series(rng, 64, false);
    RatSeries c = random_series(rng, 64, false);
    CHECK(first_difference(add(add(a, b), c), add(a, add(b, c))) == -1);
    CHECK(first_difference(mul(a, b), mul(b, a)) == -1);
    CHECK(first_difference(mul(a, add(b, c)), add(mul(a, b), mul(a, c))) == -1);
    CHECK(first_difference(add(a, neg(a)), RatSeries(kExact, 64)) == -1);
  }
}

TEST_CASE("ring axioms hold for random series (padic)") {
  PadicRing R(7, 6);
  std::mt19937_64 rng(777);
  for (int rep = 0; rep < 10; ++rep) {
    PadicSeries a = to_padic(random_series(rng, 48, false, 6), R);
    PadicSeries b = to_padic(random_series(rng, 48, false, 6), R);
    PadicSeries c = to_padic(random_series(rng, 48, false, 6), R);
    CHECK(first_difference(add(add(a, b), c), add(a, add(b, c))) == -1);
    CHECK(first_difference(mul(a, b), mul(b, a)) == -1);
    CHECK(first_difference(mul(a, add(b, c)), add(mul(a, b), mul(a, c))) == -1);
  }
}

TEST_CASE("invert round trip") {
  std::mt19937_64 rng(99);
  for (int rep = 0; rep < 10; ++rep) {
    RatSeries f = random_series(rng, 64, true);
    RatSeries id = RatSeries::one(kExact, 64);
    CHECK(first_difference(mul(f, invert(f)), id) == -1);
  }
}

TEST_CASE("pow_rational agrees with pow_int on integer exponents") {
  std::mt19937_64 rng(4242);
  for (long e : {1L, 2L, 3L, 5L}) {
    RatSeries f = random_series(rng, 48, true);
    CHECK(first_difference(pow_rational(f, Rat(e)), pow_int(f, e)) == -1);
  }
}

TEST_CASE("pow_rational half powers square back") {
  std::mt19937_64 rng(31337);
  for (int rep = 0; rep < 5; ++rep) {
    RatSeries f = random_series(rng, 128, true);
    RatSeries h = pow_rational(f, make_rat(1, 2));
    CHECK(first_difference(mul(h, h), f) == -1);
    RatSeries t = pow_rational(f, make_rat(-1, 3));
    CHECK(first_difference(mul(t, mul(t, t)), invert(f)) == -1);
  }
}

TEST_CASE("pow_rational exponent addition") {
  std::mt19937_64 rng(5150);
  RatSeries f = random_series(rng, 64, true);
  RatSeries lhs = mul(pow_rational(f, make_rat(1, 2)), pow_rational(f, make_rat(1, 3)));
  CHECK(first_difference(lhs, pow_rational(f, make_rat(5, 6))) == -1);
}

TEST_CASE("pow_rational requires constant term 1") {
  RatSeries f(kExact, 4);
  f.at(0) = 2;
  CHECK_THROWS_AS(pow_rational(f, make_rat(1, 2)), PreconditionError);
}

TEST_CASE("extract splits a series into residue classes") {
  RatSeries f(kExact, 10);
  for (long n = 0; n <= 10; ++n) f.at(n) = n;
  RatSeries c1 = extract(f, 3, 1);
  CHECK(c1.order() == 3);
  CHECK(c1[0] == 1);
  CHECK(c1[3] == 10);
  CHECK_THROWS_AS(extract(f, 3, 3), PreconditionError);
}

TEST_CASE("extract after inflate is the identity on classes") {
  std::mt19937_64 rng(8);
  RatSeries f = random_series(rng, 40, false);
  for (long m : {2L, 3L, 5L}) {
    RatSeries inf = inflate(f, m, 40 * m);
    CHECK(first_difference(extract(inf, m, 0), f) == -1);
    for (long r = 1; r < m; ++r) {
      RatSeries cls = extract(inf, m, r);
      for (long n = 0; n <= cls.order(); ++n) CHECK(cls[n] == 0);
    }
  }
}

TEST_CASE("shift_up multiplies by q^j") {
  std::mt19937_64 rng(9);
  RatSeries f = random_series(rng, 20, false);
  RatSeries g = shift_up(f, 3);
  CHECK(g[0] == 0);
  CHECK(g[3] == f[0]);
  CHECK(g[20] == f[17]);
}

TEST_CASE("padic ledger: division by index debits exactly ord_ell(n)") {
  PadicRing R(5, 10);
  PadicRing::Coeff c = R.embed_long(75);  // 3 * 5^2
  PadicRing::Coeff d = R.div_index(c, 25);
  CHECK(d.floor == 2);
  CHECK(R.normalized(d) == 3);
  PadicRing::Coeff e = R.div_index(c, 3);
  CHECK(e.floor == 0);
  CHECK(R.normalized(e) == 25);
}

TEST_CASE("padic valuation caps at the known digits") {
  PadicRing R(5, 4);
  PadicRing::Coeff zero{Int(0), 3};
  CHECK(R.valuation(zero) == 1);
  PadicRing::Coeff v{Int(50), 0};
  CHECK(R.valuation(v) == 2);
}

TEST_CASE("backend agreement: E1^t mod ell^k matches exact computation") {
  // t = 5/6, ell = 5: coefficients have pure powers of 6 in the denominator.
  const long N = 60;
  const Int ell(5);
  const long k = 3;
  RatSeries exact = pow_rational(euler_series(N, kExact), make_rat(5, 6));
  long prec = k + factorial_valuation(N, ell);
  PadicRing R(ell, prec);
  PadicSeries padic = pow_rational(euler_series(N, R), make_rat(5, 6));
  for (long n = 0; n <= N; ++n) {
    long promised = R.promised_digits(padic[n]);
    REQUIRE(promised >= k);
    Int m = int_pow(ell, static_cast<unsigned long>(std::min(promised, k)));
    Int expected = R.embed_rat(exact[n]).residue % m;
    if (expected < 0) expected += m;
    CHECK(R.normalized(padic[n]) % m == expected);
  }
}

TEST_CASE("ring mismatch is rejected") {
  PadicRing R5(5, 3), R7(7, 3);
  PadicSeries a(R5, 4), b(R7, 4);
  CHECK_THROWS_AS(add(a, b), RingMismatchError);
}
