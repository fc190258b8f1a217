#pragma once

#include <string>
#include <utility>

#include "qseries/numbers.hpp"

namespace qseries {

// Exact rational coefficients.  Stateless; all values comparable.
struct RationalRing {
  using Coeff = Rat;

  Coeff zero() const { return Rat(0); }
  Coeff one() const { return Rat(1); }
  Coeff embed_long(long v) const { return Rat(static_cast<signed long>(v)); }

  // Throws if the rational cannot live in this ring (never, here).
  Coeff embed_rat(const Rat& t) const { return t; }

  Coeff add(const Coeff& a, const Coeff& b) const { return a + b; }
  Coeff sub(const Coeff& a, const Coeff& b) const { return a - b; }
  Coeff mul(const Coeff& a, const Coeff& b) const { return a * b; }
  Coeff neg(const Coeff& a) const { return -a; }

  bool is_zero(const Coeff& a) const { return a == 0; }
  bool eq(const Coeff& a, const Coeff& b) const { return a == b; }

  bool is_unit(const Coeff& a) const { return a != 0; }

  Coeff inv(const Coeff& a) const {
    if (a == 0) throw PreconditionError("rational inverse of zero");
    return Rat(1) / a;
  }

  // Division by a positive series index n.
  Coeff div_index(const Coeff& a, long n) const { return a / Rat(static_cast<signed long>(n)); }

  bool same(const RationalRing&) const { return true; }
  std::string describe() const { return "exact"; }

  std::string coeff_str(const Coeff& a) const {
    if (a.get_den() == 1) return a.get_num().get_str();
    return a.get_num().get_str() + "/" + a.get_den().get_str();
  }
};

// Fixed-precision ell-adic residues with a precision-loss ledger.  A value
// with valuation_floor f is known modulo ell^(prec - f); residues may carry
// junk above that line and are normalized only on demand.
class PadicRing {
 public:
  struct Coeff {
    Int residue;
    long floor = 0;
  };

  PadicRing(Int ell, long prec) : ell_(std::move(ell)), prec_(prec) {
    if (!is_prime(ell_)) throw PreconditionError("PadicRing: ell must be prime");
    if (prec_ < 1) throw PreconditionError("PadicRing: precision must be >= 1");
    modulus_ = int_pow(ell_, static_cast<unsigned long>(prec_));
  }

  const Int& ell() const { return ell_; }
  long precision() const { return prec_; }
  const Int& modulus() const { return modulus_; }

  long promised_digits(const Coeff& a) const { return prec_ - a.floor; }

  Coeff zero() const { return Coeff{Int(0), 0}; }
  Coeff one() const { return Coeff{Int(1), 0}; }

  Coeff embed_long(long v) const {
    Int r = Int(static_cast<signed long>(v)) % modulus_;
    if (r < 0) r += modulus_;
    return Coeff{std::move(r), 0};
  }

  Coeff embed_rat(const Rat& t) const {
    const Int& den = t.get_den();
    Int dinv;
    if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), modulus_.get_mpz_t()) == 0)
      throw PreconditionError("ell divides a coefficient denominator");
    Int r = t.get_num() % modulus_;
    if (r < 0) r += modulus_;
    r = r * dinv % modulus_;
    return Coeff{std::move(r), 0};
  }

  Coeff add(const Coeff& a, const Coeff& b) const {
    Int r = a.residue + b.residue;
    if (r >= modulus_) r -= modulus_;
    return Coeff{std::move(r), std::max(a.floor, b.floor)};
  }

  Coeff sub(const Coeff& a, const Coeff& b) const {
    Int r = a.residue - b.residue;
    if (r < 0) r += modulus_;
    return Coeff{std::move(r), std::max(a.floor, b.floor)};
  }

  Coeff mul(const Coeff& a, const Coeff& b) const {
    return Coeff{a.residue * b.residue % modulus_, std::max(a.floor, b.floor)};
  }

  Coeff neg(const Coeff& a) const {
    if (a.residue == 0) return a;
    return Coeff{modulus_ - a.residue, a.floor};
  }

  // Representation-level zero test; sufficient for convolution skips.
  bool is_zero(const Coeff& a) const { return a.residue == 0; }

  // Equal on all digits both sides guarantee.
  bool eq(const Coeff& a, const Coeff& b) const {
    long digits = prec_ - std::max(a.floor, b.floor);
    if (digits <= 0) return true;
    Int m = int_pow(ell_, static_cast<unsigned long>(digits));
    return (a.residue - b.residue) % m == 0;
  }

  bool is_unit(const Coeff& a) const { return a.residue % ell_ != 0; }

  Coeff inv(const Coeff& a) const {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.residue.get_mpz_t(), modulus_.get_mpz_t()) == 0)
      throw PreconditionError("ell-adic inverse of a non-unit");
    return Coeff{std::move(r), a.floor};
  }

  // Divide by series index n; ord_ell(n) digits are debited from the ledger.
  Coeff div_index(const Coeff& a, long n) const {
    long v = 0;
    Int u(n);
    while (u % ell_ == 0) {
      u /= ell_;
      ++v;
    }
    Int uinv;
    mpz_invert(uinv.get_mpz_t(), u.get_mpz_t(), modulus_.get_mpz_t());
    Int r = a.residue * uinv % modulus_;
    if (v == 0) return Coeff{std::move(r), a.floor};
    long known = prec_ - a.floor;
    if (known <= 0) return Coeff{Int(0), prec_};
    long keep = std::min<long>(v, known);
    Int mknown = int_pow(ell_, static_cast<unsigned long>(known));
    r %= mknown;
    Int pv = int_pow(ell_, static_cast<unsigned long>(keep));
    if (r % pv != 0)
      throw PreconditionError("ell-adic division by index: value not divisible within known digits");
    if (v >= known) return Coeff{Int(0), prec_};
    r /= int_pow(ell_, static_cast<unsigned long>(v));
    return Coeff{std::move(r), std::min(prec_, a.floor + v)};
  }

  // Residue with junk digits cleared: the canonical representative mod ell^(prec-floor).
  Int normalized(const Coeff& a) const {
    long digits = prec_ - a.floor;
    if (digits <= 0) return Int(0);
    Int m = int_pow(ell_, static_cast<unsigned long>(digits));
    Int r = a.residue % m;
    if (r < 0) r += m;
    return r;
  }

  // ell-adic valuation of the known part, capped at the number of known digits.
  long valuation(const Coeff& a) const {
    long digits = prec_ - a.floor;
    Int r = normalized(a);
    if (r == 0) return digits;
    return ord_prime(ell_, r);
  }

  bool same(const PadicRing& o) const { return ell_ == o.ell_ && prec_ == o.prec_; }

  std::string describe() const { return ell_.get_str() + "-adic@" + std::to_string(prec_); }

  std::string coeff_str(const Coeff& a) const {
    return normalized(a).get_str() + "@" + std::to_string(a.floor);
  }

 private:
  Int ell_;
  long prec_;
  Int modulus_;
};

}  // namespace qseries
