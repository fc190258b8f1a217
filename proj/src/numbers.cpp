#include "qseries/numbers.hpp"

namespace qseries {

Int int_pow(const Int& base, unsigned long e) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace

bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (n.fits_ulong_p()) return is_prime_u64(n.get_ui());
  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
    std::uint64_t v = mpz_get_ui(n.get_mpz_t());  // low limb; 64-bit limbs on this platform
    return is_prime_u64(v);
  }
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

long ord_prime(const Int& p, const Int& n) {
  if (n == 0) throw PreconditionError("ord_prime: zero argument");
  Int m = abs(n);
  long e = 0;
  Int q, r;
  while (true) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    if (r != 0) break;
    m = q;
    ++e;
  }
  return e;
}

long ord_prime_rat(const Int& p, const Rat& x) {
  if (x == 0) throw PreconditionError("ord_prime_rat: zero argument");
  return ord_prime(p, x.get_num()) - ord_prime(p, x.get_den());
}

long factorial_valuation(long n, const Int& ell) {
  if (n < 0) throw PreconditionError("factorial_valuation: negative n");
  if (!is_prime(ell)) throw PreconditionError("factorial_valuation: ell is not prime");
  long total = 0;
  Int power = ell;
  while (power <= n) {
    total += static_cast<long>(Int(n / power).get_si());
    power *= ell;
  }
  return total;
}

int legendre_symbol(const Int& a, const Int& ell) {
  if (!is_prime(ell) || ell == 2) throw PreconditionError("legendre_symbol: ell must be an odd prime");
  Int r = a % ell;
  if (r < 0) r += ell;
  if (r == 0) return 0;
  Int e = (ell - 1) / 2;
  Int v;
  mpz_powm(v.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), ell.get_mpz_t());
  return v == 1 ? 1 : -1;
}

}  // namespace qseries
