#include "qseries/congruence.hpp"

#include <algorithm>
#include <climits>

namespace qseries {

namespace {

long to_long(const Int& v, const char* what) {
  if (!v.fits_slong_p()) throw PreconditionError(std::string(what) + ": value out of long range");
  return v.get_si();
}

Int gcd_int(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw PreconditionError(msg);
}

Int exact_div(const Int& num, long den, const char* what) {
  if (num % den != 0) throw PreconditionError(std::string(what) + ": B formula not integral");
  return num / den;
}

}  // namespace

std::set<long> chan_wang_residues(long d, const Int& ell) {
  static const std::set<long> kSupported = {1, 3, 4, 6, 8, 10, 14, 26};
  if (!kSupported.count(d)) throw PreconditionError("chan_wang_residues: unsupported d");
  if (!is_prime(ell) || ell == 2) throw PreconditionError("chan_wang_residues: ell must be an odd prime");
  long L = to_long(ell, "chan_wang_residues ell");
  std::set<long> out;
  for (long r = 0; r < L; ++r) {
    bool admit = false;
    if (d == 1) {
      admit = legendre_symbol(Int(24 * r + 1), ell) == -1;
    } else if (d == 3) {
      Int v(8 * r + 1);
      admit = (v % ell == 0) || legendre_symbol(v, ell) == -1;
    } else if (d == 4 || d == 8 || d == 14) {
      admit = (ell % 6 == 5) && (Int(24 * r + d) % ell == 0);
    } else if (d == 6 || d == 10) {
      admit = (ell >= 5) && (ell % 4 == 3) && (Int(24 * r + d) % ell == 0);
    } else {  // d == 26
      admit = (ell % 12 == 11) && (Int(24 * r + d) % ell == 0);
    }
    if (admit) out.insert(r);
  }
  return out;
}

std::set<long> color_condition_residues(long color_r, long d, const Int& ell) {
  if (!is_prime(ell) || ell == 2)
    throw PreconditionError("color_condition_residues: ell must be an odd prime");
  long L = to_long(ell, "color_condition_residues ell");
  bool gate;
  long mult, add;
  if (color_r == 2 && d == 2) {
    gate = ell % 4 == 3, mult = 4, add = 1;
  } else if (color_r == 2 && d == 3) {
    gate = ell % 8 == 5 || ell % 8 == 7, mult = 8, add = 3;
  } else if (color_r == 3 && d == 3) {
    gate = ell % 12 == 5 || ell % 12 == 11, mult = 2, add = 1;
  } else if (color_r == 4 && d == 2) {
    gate = ell % 4 == 3, mult = 12, add = 5;
  } else if (color_r == 4 && d == 3) {
    gate = ell % 4 == 3, mult = 8, add = 5;
  } else {
    throw PreconditionError("color_condition_residues: unsupported (color, d) pair");
  }
  std::set<long> out;
  if (!gate) return out;
  for (long r = 0; r < L; ++r)
    if (Int(mult * r + add) % ell == 0) out.insert(r);
  return out;
}

std::string CongruenceFamily::key() const {
  std::string s = kind == Kind::Color ? "c" + std::to_string(color_r) : "p";
  return s + "|" + t.get_num().get_str() + "/" + t.get_den().get_str();
}

// ---- generators ----------------------------------------------------------

namespace {

struct Emitter {
  std::string tag;
  std::vector<CongruenceFamily> out;

  void push(CongruenceFamily f, const std::string& params) {
    require(f.B >= 0 && f.B < f.A, tag + ": produced B outside [0, A)");
    require(gcd_int(f.ell, f.t.get_den()) == 1, tag + ": ell divides denom(t)");
    f.provenance = tag + "(" + params + ")";
    out.push_back(std::move(f));
  }
};

std::string param_str(long ell, long k, long s, long m, const Int& b, long r) {
  std::string p = "ell=" + std::to_string(ell) + ",k=" + std::to_string(k);
  if (s >= 0) p += ",s=" + std::to_string(s);
  if (m >= 0) p += ",m=" + std::to_string(m);
  p += ",b=" + b.get_str();
  if (r >= 0) p += ",r=" + std::to_string(r);
  return p;
}

void check_b(const Int& b, long ell, const std::string& tag) {
  require(b >= 1, tag + ": need b >= 1");
  require(gcd_int(b, Int(ell)) == 1, tag + ": need gcd(b, ell) = 1");
}

// The exponent t = -(base - d*b)/b common to every generator here.
Rat neg_over_b(const Int& numer, const Int& b) { return make_rat(-numer, b); }

std::vector<long> s_values(long s_param, long s_max, const std::string& tag) {
  require(s_max >= 1, tag + ": no admissible s for these parameters");
  if (s_param == 0) {
    std::vector<long> v;
    for (long s = 1; s <= s_max; ++s) v.push_back(s);
    return v;
  }
  require(s_param >= 1 && s_param <= s_max, tag + ": s outside the admissible range");
  return {s_param};
}

std::vector<long> residues_1_to(long top) {
  std::vector<long> v;
  for (long r = 1; r <= top; ++r) v.push_back(r);
  return v;
}

// Theorem families of the shape p_t(ell^{2s} n + ell^{2s-1} r + base) = 0 (mod ell^kpow).
void emit_power_rows(Emitter& em, CongruenceFamily::Kind kind, long color, const Rat& t, long ell,
                     long s, const Int& base, const std::vector<long>& rset, long kpow,
                     const std::string& params_no_r) {
  Int step = int_pow(Int(ell), static_cast<unsigned long>(2 * s - 1));
  Int A = step * ell;
  for (long r : rset) {
    CongruenceFamily f;
    f.kind = kind;
    f.color_r = kind == CongruenceFamily::Kind::Color ? color : 0;
    f.t = t;
    f.A = A;
    f.B = step * r + base;
    f.ell = ell;
    f.k = kpow;
    em.push(std::move(f), params_no_r + ",r=" + std::to_string(r));
  }
}

void gen_thm_1_4(Emitter& em, const GenParams& p) {
  require(p.ell >= 5 && is_prime(Int(p.ell)), "thm1.4: need a prime ell >= 5");
  require(p.k > 1, "thm1.4: need k > 1");
  check_b(p.b, p.ell, "thm1.4");
  Rat t = neg_over_b(int_pow(Int(p.ell), static_cast<unsigned long>(p.k)) - p.b, p.b);
  long excluded = p.ell / 24;
  for (long s : s_values(p.s, p.k / 2, "thm1.4")) {
    long kpow = p.k - 2 * s + 1;
    require(kpow >= 1, "thm1.4: modulus exponent would vanish");
    Int step = int_pow(Int(p.ell), static_cast<unsigned long>(2 * s - 1));
    Int base = exact_div((p.ell - 24 * (p.ell / 24)) * step - 1, 24, "thm1.4");
    std::vector<long> rset;
    for (long r = 0; r < p.ell; ++r)
      if (r != excluded) rset.push_back(r);
    emit_power_rows(em, CongruenceFamily::Kind::Plain, 0, t, p.ell, s, base, rset, kpow,
                    param_str(p.ell, p.k, s, -1, p.b, -1));
  }
}

void gen_thm_1_5(Emitter& em, const GenParams& p) {
  require(p.ell == 5 || p.ell == 7 || p.ell == 11, "thm1.5: ell must be 5, 7 or 11");
  require(p.k > 1, "thm1.5: need k > 1");
  check_b(p.b, p.ell, "thm1.5");
  Rat t = neg_over_b(int_pow(Int(p.ell), static_cast<unsigned long>(p.k)) - 2 * p.b, p.b);
  for (long s : s_values(p.s, p.k / 2, "thm1.5")) {
    long kpow = p.k - 2 * s + 1;
    require(kpow >= 1, "thm1.5: modulus exponent would vanish");
    Int base = exact_div(int_pow(Int(p.ell), static_cast<unsigned long>(2 * s)) - 1, 12, "thm1.5");
    emit_power_rows(em, CongruenceFamily::Kind::Plain, 0, t, p.ell, s, base,
                    residues_1_to(p.ell - 1), kpow, param_str(p.ell, p.k, s, -1, p.b, -1));
  }
}

void gen_thm_1_6(Emitter& em, const GenParams& p) {
  struct Branch {
    long ell, d, den;
  };
  static const std::vector<Branch> kBranches = {{3, 3, 8}, {5, 3, 8}, {5, 4, 6}, {7, 3, 8}};
  require(p.k >= 1, "thm1.6: need k >= 1");
  require(p.m >= 0, "thm1.6: need m >= 0");
  check_b(p.b, p.ell, "thm1.6");
  bool matched = false;
  for (const Branch& br : kBranches) {
    if (br.ell != p.ell || (p.d != 0 && p.d != br.d)) continue;
    matched = true;
    Rat t = neg_over_b(int_pow(Int(p.ell), static_cast<unsigned long>(p.k + p.m)) - br.d * p.b, p.b);
    for (long s : s_values(p.s, p.m + 1, "thm1.6")) {
      long kpow = p.k + p.m - s + 1;
      Int base =
          exact_div(int_pow(Int(p.ell), static_cast<unsigned long>(2 * s)) - 1, br.den, "thm1.6");
      emit_power_rows(em, CongruenceFamily::Kind::Plain, 0, t, p.ell, s, base,
                      residues_1_to(p.ell - 1), kpow, param_str(p.ell, p.k, s, p.m, p.b, -1));
    }
    if (p.m + 1 >= p.k) {  // remark chain: one merged class modulo ell^k
      CongruenceFamily f;
      f.kind = CongruenceFamily::Kind::Plain;
      f.t = t;
      f.A = int_pow(Int(p.ell), static_cast<unsigned long>(2 * p.m + 1));
      f.B = exact_div(int_pow(Int(p.ell), static_cast<unsigned long>(2 * (p.m + 1))) - 1, br.den,
                      "thm1.6 remark");
      f.ell = p.ell;
      f.k = p.k;
      em.push(std::move(f), param_str(p.ell, p.k, -1, p.m, p.b, -1) + ",remark");
    }
  }
  require(matched, "thm1.6: no branch for this (ell, d)");
}

void gen_thm_1_7(Emitter& em, const GenParams& p) {
  struct Branch {
    long ell, d;
    Int base_mult;  // base = (base_mult * ell^{2s-1} + base_add) / den
    long base_add, den;
    std::vector<long> rset;
  };
  static const std::vector<Branch> kBranches = {
      {3, 6, Int(3), -1, 4, {1, 2}},  // (3^{2s}-1)/4 written with one factor split off
      {5, 8, Int(2), -1, 3, {0, 2, 3, 4}},
      {5, 14, Int(11), -7, 12, {0, 1, 3, 4}},
      {7, 6, Int(3), -1, 4, {0, 2, 3, 4, 5, 6}},
  };
  require(p.k > 1, "thm1.7: need k > 1");
  check_b(p.b, p.ell, "thm1.7");
  bool matched = false;
  for (const Branch& br : kBranches) {
    if (br.ell != p.ell || (p.d != 0 && p.d != br.d)) continue;
    matched = true;
    Rat t = neg_over_b(int_pow(Int(p.ell), static_cast<unsigned long>(p.k)) - br.d * p.b, p.b);
    for (long s : s_values(p.s, p.k / 2, "thm1.7")) {
      Int step = int_pow(Int(p.ell), static_cast<unsigned long>(2 * s - 1));
      Int base = exact_div(br.base_mult * step + br.base_add, br.den, "thm1.7");
      emit_power_rows(em, CongruenceFamily::Kind::Plain, 0, t, p.ell, s, base, br.rset, p.k,
                      param_str(p.ell, p.k, s, -1, p.b, -1));
    }
  }
  require(matched, "thm1.7: no branch for this (ell, d)");
}

void gen_thm_1_8(Emitter& em, const GenParams& p) {
  struct Branch {
    long ell, d;
    Int b_mult;
    long b_add, den;
  };
  static const std::vector<Branch> kBranches = {
      {3, 6, Int(3), -1, 4},  // B = (3^{k+1}-1)/4 = (3*3^k - 1)/4
      {5, 8, Int(2), -1, 3},
      {5, 14, Int(11), -7, 12},
      {7, 6, Int(3), -1, 4},
  };
  require(p.k > 1 && p.k % 2 == 1, "thm1.8: need odd k > 1");
  check_b(p.b, p.ell, "thm1.8");
  bool matched = false;
  for (const Branch& br : kBranches) {
    if (br.ell != p.ell || (p.d != 0 && p.d != br.d)) continue;
    matched = true;
    Int lk = int_pow(Int(p.ell), static_cast<unsigned long>(p.k));
    CongruenceFamily f;
    f.kind = CongruenceFamily::Kind::Plain;
    f.t = neg_over_b(lk - br.d * p.b, p.b);
    f.A = lk;
    f.B = exact_div(br.b_mult * lk + br.b_add, br.den, "thm1.8");
    f.ell = p.ell;
    f.k = p.k;
    em.push(std::move(f), param_str(p.ell, p.k, -1, -1, p.b, -1) + ",d=" + std::to_string(br.d));
  }
  require(matched, "thm1.8: no branch for this (ell, d)");
}

void gen_thm_1_13(Emitter& em, const GenParams& p) {
  require(p.ell == 0 || p.ell == 5, "thm1.13: ell is fixed at 5");
  require(p.k >= 1, "thm1.13: need k >= 1");
  check_b(p.b, 5, "thm1.13");
  Rat t = neg_over_b(int_pow(Int(5), static_cast<unsigned long>(p.k)) - 3 * p.b, p.b);
  for (long r : {2L, 3L}) {
    CongruenceFamily f;
    f.kind = CongruenceFamily::Kind::Color;
    f.color_r = 4;
    f.t = t;
    f.A = 5;
    f.B = r;
    f.ell = 5;
    f.k = 1;
    em.push(std::move(f), param_str(5, p.k, -1, -1, p.b, r));
  }
}

void gen_thm_1_14(Emitter& em, const GenParams& p) {
  struct Branch {
    long color, ell;
    Int base_mult;  // base = (base_mult * ell^{pow} + base_add) / den, pow in {2s, 2s-1}
    long base_add, den;
    bool odd_power;  // true: ell^{2s-1} factor, false: ell^{2s}
    std::vector<long> rset;
  };
  static const std::vector<Branch> kBranches = {
      {2, 3, Int(1), -1, 8, false, {1, 2}},
      {2, 5, Int(1), -1, 8, false, {1, 2, 3, 4}},
      {2, 7, Int(1), -1, 8, false, {1, 2, 3, 4, 5, 6}},
      {3, 5, Int(1), -1, 6, false, {1, 2, 3, 4}},
      {4, 7, Int(11), -5, 24, true, {0, 2, 3, 4, 5, 6}},
      {3, 11, Int(5), -1, 6, true, {0, 2, 3, 4, 5, 6, 7, 8, 9, 10}},
      {4, 11, Int(7), -5, 24, true, {0, 1, 3, 4, 5, 6, 7, 8, 9, 10}},
  };
  require(p.k > 1, "thm1.14: need k > 1");
  check_b(p.b, p.ell, "thm1.14");
  bool matched = false;
  for (const Branch& br : kBranches) {
    if (br.ell != p.ell || (p.color != 0 && p.color != br.color)) continue;
    matched = true;
    Rat t = neg_over_b(int_pow(Int(p.ell), static_cast<unsigned long>(p.k)) - p.b, p.b);
    for (long s : s_values(p.s, p.k / 2, "thm1.14")) {
      long kpow = p.k - 2 * s + 1;
      require(kpow >= 1, "thm1.14: modulus exponent would vanish");
      unsigned long pw = static_cast<unsigned long>(br.odd_power ? 2 * s - 1 : 2 * s);
      Int base = exact_div(br.base_mult * int_pow(Int(p.ell), pw) + br.base_add, br.den, "thm1.14");
      emit_power_rows(em, CongruenceFamily::Kind::Color, br.color, t, p.ell, s, base, br.rset, kpow,
                      param_str(p.ell, p.k, s, -1, p.b, -1) + ",color=" + std::to_string(br.color));
    }
  }
  require(matched, "thm1.14: no branch for this (ell, color)");
}

void gen_thm_1_15(Emitter& em, const GenParams& p) {
  struct Branch {
    long color, ell;
    Int base_mult;
    long base_add, den;
    bool odd_power;
    std::vector<long> rset;
  };
  static const std::vector<Branch> kBranches = {
      {2, 3, Int(1), -1, 4, false, {1, 2}},
      {3, 5, Int(2), -1, 3, true, {0, 2, 3, 4}},
  };
  require(p.k >= 1, "thm1.15: need k >= 1");
  require(p.m >= 0, "thm1.15: need m >= 0");
  check_b(p.b, p.ell, "thm1.15");
  bool matched = false;
  for (const Branch& br : kBranches) {
    if (br.ell != p.ell || (p.color != 0 && p.color != br.color)) continue;
    matched = true;
    Rat t =
        neg_over_b(int_pow(Int(p.ell), static_cast<unsigned long>(p.k + p.m)) - 2 * p.b, p.b);
    for (long s : s_values(p.s, p.m + 1, "thm1.15")) {
      long kpow = p.k + p.m - s + 1;
      unsigned long pw = static_cast<unsigned long>(br.odd_power ? 2 * s - 1 : 2 * s);
      Int base = exact_div(br.base_mult * int_pow(Int(p.ell), pw) + br.base_add, br.den, "thm1.15");
      emit_power_rows(em, CongruenceFamily::Kind::Color, br.color, t, p.ell, s, base, br.rset, kpow,
                      param_str(p.ell, p.k, s, p.m, p.b, -1) + ",color=" + std::to_string(br.color));
    }
    if (p.m + 1 >= p.k) {  // remark chain
      unsigned long pw = static_cast<unsigned long>(br.odd_power ? 2 * p.m + 1 : 2 * (p.m + 1));
      CongruenceFamily f;
      f.kind = CongruenceFamily::Kind::Color;
      f.color_r = br.color;
      f.t = t;
      f.A = int_pow(Int(p.ell), static_cast<unsigned long>(2 * p.m + 1));
      f.B = exact_div(br.base_mult * int_pow(Int(p.ell), pw) + br.base_add, br.den,
                      "thm1.15 remark");
      f.ell = p.ell;
      f.k = p.k;
      em.push(std::move(f), param_str(p.ell, p.k, -1, p.m, p.b, -1) +
                                ",color=" + std::to_string(br.color) + ",remark");
    }
  }
  require(matched, "thm1.15: no branch for this (ell, color)");
}

void gen_thm_1_16(Emitter& em, const GenParams& p) {
  struct Branch {
    long color, ell, d;
    Int base_mult;
    long base_add, den;
    std::vector<long> rset;
  };
  static const std::vector<Branch> kBranches = {
      {2, 3, 5, Int(7), -5, 8, {0, 2}},
      {2, 5, 3, Int(7), -3, 8, {0, 2, 3, 4}},
      {3, 5, 3, Int(1), -1, 2, {0, 1, 3, 4}},
  };
  require(p.k > 1, "thm1.16: need k > 1");
  check_b(p.b, p.ell, "thm1.16");
  bool matched = false;
  for (const Branch& br : kBranches) {
    if (br.ell != p.ell || (p.color != 0 && p.color != br.color)) continue;
    matched = true;
    Rat t = neg_over_b(int_pow(Int(p.ell), static_cast<unsigned long>(p.k)) - br.d * p.b, p.b);
    for (long s : s_values(p.s, p.k / 2, "thm1.16")) {
      Int step = int_pow(Int(p.ell), static_cast<unsigned long>(2 * s - 1));
      Int base = exact_div(br.base_mult * step + br.base_add, br.den, "thm1.16");
      emit_power_rows(em, CongruenceFamily::Kind::Color, br.color, t, p.ell, s, base, br.rset, p.k,
                      param_str(p.ell, p.k, s, -1, p.b, -1) + ",color=" + std::to_string(br.color));
    }
  }
  require(matched, "thm1.16: no branch for this (ell, color)");
}

void gen_thm_1_17(Emitter& em, const GenParams& p) {
  struct Branch {
    long color, ell, d;
    Int b_mult;
    long b_add, den;
  };
  static const std::vector<Branch> kBranches = {
      {2, 3, 5, Int(7), -5, 8},
      {2, 5, 3, Int(7), -3, 8},
      {3, 5, 3, Int(1), -1, 2},
  };
  require(p.k > 1 && p.k % 2 == 1, "thm1.17: need odd k > 1");
  check_b(p.b, p.ell, "thm1.17");
  bool matched = false;
  for (const Branch& br : kBranches) {
    if (br.ell != p.ell || (p.color != 0 && p.color != br.color)) continue;
    matched = true;
    Int lk = int_pow(Int(p.ell), static_cast<unsigned long>(p.k));
    CongruenceFamily f;
    f.kind = CongruenceFamily::Kind::Color;
    f.color_r = br.color;
    f.t = neg_over_b(lk - br.d * p.b, p.b);
    f.A = lk;
    f.B = exact_div(br.b_mult * lk + br.b_add, br.den, "thm1.17");
    f.ell = p.ell;
    f.k = p.k;
    em.push(std::move(f),
            param_str(p.ell, p.k, -1, -1, p.b, -1) + ",color=" + std::to_string(br.color));
  }
  require(matched, "thm1.17: no branch for this (ell, color)");
}

}  // namespace

std::vector<CongruenceFamily> gen_theorem_families(const std::string& tag, const GenParams& p) {
  Emitter em{tag, {}};
  if (tag == "thm1.4")
    gen_thm_1_4(em, p);
  else if (tag == "thm1.5")
    gen_thm_1_5(em, p);
  else if (tag == "thm1.6")
    gen_thm_1_6(em, p);
  else if (tag == "thm1.7")
    gen_thm_1_7(em, p);
  else if (tag == "thm1.8")
    gen_thm_1_8(em, p);
  else if (tag == "thm1.13")
    gen_thm_1_13(em, p);
  else if (tag == "thm1.14")
    gen_thm_1_14(em, p);
  else if (tag == "thm1.15")
    gen_thm_1_15(em, p);
  else if (tag == "thm1.16")
    gen_thm_1_16(em, p);
  else if (tag == "thm1.17")
    gen_thm_1_17(em, p);
  else
    throw PreconditionError("gen_theorem_families: unknown tag " + tag);
  return std::move(em.out);
}

// ---- builtin catalogs ----------------------------------------------------

namespace {

CongruenceFamily plain(Rat t, long A, long B, long ell, long k, std::string prov) {
  CongruenceFamily f;
  f.t = std::move(t);
  f.A = A;
  f.B = B;
  f.ell = ell;
  f.k = k;
  f.provenance = std::move(prov);
  return f;
}

CongruenceFamily color(long cr, Rat t, long A, long B, long ell, long k, std::string prov) {
  CongruenceFamily f = plain(std::move(t), A, B, ell, k, std::move(prov));
  f.kind = CongruenceFamily::Kind::Color;
  f.color_r = cr;
  return f;
}

}  // namespace

std::vector<CongruenceFamily> builtin_families(const std::string& tag) {
  std::vector<CongruenceFamily> out;
  if (tag == "ramanujan") {
    out.push_back(plain(Rat(-1), 5, 4, 5, 1, "ramanujan"));
    out.push_back(plain(Rat(-1), 7, 5, 7, 1, "ramanujan"));
    out.push_back(plain(Rat(-1), 11, 6, 11, 1, "ramanujan"));
  } else if (tag == "thm1.3") {
    for (long r : {9L, 14L, 19L, 24L})
      out.push_back(plain(make_rat(-1, 6), 25, r, 5, 2, "thm1.3"));
    for (long r : {96L, 121L}) out.push_back(plain(make_rat(1, 6), 125, r, 5, 2, "thm1.3"));
    for (long r : {95L, 120L}) out.push_back(plain(make_rat(-5, 6), 125, r, 5, 2, "thm1.3"));
    for (long r : {15L, 20L}) out.push_back(plain(make_rat(5, 6), 25, r, 5, 3, "thm1.3"));
    for (long r : {65L, 70L}) out.push_back(plain(make_rat(5, 6), 125, r, 5, 4, "thm1.3"));
  } else if (tag == "literature") {
    out.push_back(plain(make_rat(-2, 3), 19, 9, 19, 1, "literature:ng"));
    out.push_back(color(2, Rat(-1), 3, 2, 3, 1, "literature:chan-cubic"));
    out.push_back(color(2, make_rat(-1, 4), 3, 2, 3, 1, "literature:color12"));
    out.push_back(color(3, make_rat(1, 6), 17, 8, 17, 1, "literature:color13"));
    out.push_back(color(3, Rat(-3), 5, 3, 5, 1, "literature:color13-remark"));
    for (long r : {2L, 3L, 4L})
      out.push_back(color(r, Rat(-1), 25, 24 - r, 5, 1, "literature:two-color-25"));
  } else {
    throw PreconditionError("builtin_families: unknown tag " + tag);
  }
  return out;
}

// ---- verifier ------------------------------------------------------------

VerificationReport FamilyVerifier::verify(const CongruenceFamily& f, long count, Backend backend) {
  if (count < 1) throw PreconditionError("verify_family: need count >= 1");
  if (f.A < 1 || f.B < 0 || f.k < 1) throw PreconditionError("verify_family: malformed family");
  if (!is_prime(f.ell)) throw PreconditionError("verify_family: ell must be prime");
  if (gcd_int(f.ell, f.t.get_den()) != 1)
    throw PreconditionError("verify_family: ell divides denom(t)");
  long N_max = to_long(f.A * (count - 1) + f.B, "verify_family range");
  if (N_max > 2'000'000) throw PreconditionError("verify_family: range too large");

  VerificationReport rep;
  rep.family = f;
  rep.n_checked = count;
  rep.holds = true;

  if (backend == Backend::Exact) {
    rep.backend = "exact";
    std::string key = f.key();
    ExactEntry& e = exact_[key];
    if (e.N < N_max) {
      const RationalRing R;
      e.coeffs = f.kind == CongruenceFamily::Kind::Color
                     ? p_color_coeffs(f.color_r, f.t, N_max, R)
                     : p_t_coeffs(f.t, N_max, R);
      e.N = N_max;
    }
    for (long n = 0; n < count; ++n) {
      long idx = to_long(f.A * n + f.B, "verify_family index");
      const Rat& c = e.coeffs[static_cast<std::size_t>(idx)];
      long val = (c == 0) ? f.k : ord_prime_rat(f.ell, c);
      if (val < f.k) {
        rep.holds = false;
        rep.witness_n = n;
        rep.witness_valuation = val;
        break;
      }
    }
    return rep;
  }

  long prec = f.k + factorial_valuation(N_max, f.ell);
  std::string key = f.key() + "|" + f.ell.get_str();
  PadicEntry& e = padic_[key];
  if (e.N < N_max || e.prec < prec) {
    long use_prec = std::max(prec, e.prec);
    long use_N = std::max(N_max, e.N);
    PadicRing R(f.ell, use_prec);
    e.coeffs = f.kind == CongruenceFamily::Kind::Color
                   ? p_color_coeffs(f.color_r, f.t, use_N, R)
                   : p_t_coeffs(f.t, use_N, R);
    e.N = use_N;
    e.prec = use_prec;
  }
  rep.backend = "padic";
  rep.precision = e.prec;
  PadicRing R(f.ell, e.prec);
  for (long n = 0; n < count; ++n) {
    long idx = to_long(f.A * n + f.B, "verify_family index");
    const PadicRing::Coeff& c = e.coeffs[static_cast<std::size_t>(idx)];
    long val = R.valuation(c);
    if (val < f.k) {
      rep.holds = false;
      rep.witness_n = n;
      rep.witness_valuation = val;
      break;
    }
  }
  return rep;
}

// ---- scanner -------------------------------------------------------------

std::vector<CongruenceFamily> scan_progressions(const Rat& t, long A_max, const Int& ell, long k,
                                                long N, long color_r) {
  if (A_max < 1 || k < 1 || N < 1) throw PreconditionError("scan_progressions: bad parameters");
  if (!is_prime(ell)) throw PreconditionError("scan_progressions: ell must be prime");
  if (gcd_int(ell, t.get_den()) != 1)
    throw PreconditionError("scan_progressions: ell divides denom(t)");
  long prec = k + factorial_valuation(N, ell);
  PadicRing R(ell, prec);
  std::vector<PadicRing::Coeff> coeffs =
      color_r == 0 ? p_t_coeffs(t, N, R) : p_color_coeffs(color_r, t, N, R);
  std::vector<CongruenceFamily> out;
  for (long A = 1; A <= A_max; ++A) {
    for (long B = 0; B < A; ++B) {
      long witnesses = (N - B) / A + 1;
      if (B > N || witnesses < 10) continue;
      bool ok = true;
      for (long idx = B; idx <= N; idx += A) {
        if (R.valuation(coeffs[static_cast<std::size_t>(idx)]) < k) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      CongruenceFamily f;
      f.kind = color_r == 0 ? CongruenceFamily::Kind::Plain : CongruenceFamily::Kind::Color;
      f.color_r = color_r;
      f.t = t;
      f.A = A;
      f.B = B;
      f.ell = ell;
      f.k = k;
      f.provenance = "candidate:empirical-scan(N=" + std::to_string(N) +
                     ",witnesses=" + std::to_string(witnesses) + ")";
      out.push_back(std::move(f));
    }
  }
  return out;  // loop order is already sorted by (A, B)
}

// ---- JSON ----------------------------------------------------------------

nlohmann::json family_to_json(const CongruenceFamily& f) {
  nlohmann::json j;
  j["kind"] = f.kind == CongruenceFamily::Kind::Color ? "color" : "plain";
  if (f.kind == CongruenceFamily::Kind::Color) j["color_r"] = f.color_r;
  j["t"] = {{"a", f.t.get_num().get_str()}, {"b", f.t.get_den().get_str()}};
  j["A"] = f.A.get_str();
  j["B"] = f.B.get_str();
  j["ell"] = f.ell.get_str();
  j["k"] = f.k;
  j["provenance"] = f.provenance;
  return j;
}

namespace {

Int int_from_json(const nlohmann::json& j, const char* what) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw PreconditionError(std::string("family JSON: bad integer in ") + what);
    }
  }
  throw PreconditionError(std::string("family JSON: expected integer for ") + what);
}

}  // namespace

CongruenceFamily family_from_json(const nlohmann::json& j) {
  static const std::set<std::string> kAllowed = {"kind", "color_r", "t",  "A",
                                                 "B",    "ell",     "k", "provenance"};
  if (!j.is_object()) throw PreconditionError("family JSON: expected an object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!kAllowed.count(it.key()))
      throw PreconditionError("family JSON: unknown key \"" + it.key() + "\"");
  CongruenceFamily f;
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "color") {
    f.kind = CongruenceFamily::Kind::Color;
    f.color_r = j.at("color_r").get<long>();
    if (f.color_r < 2) throw PreconditionError("family JSON: color_r must be >= 2");
  } else if (kind == "plain") {
    if (j.contains("color_r")) throw PreconditionError("family JSON: color_r on a plain family");
  } else {
    throw PreconditionError("family JSON: kind must be \"plain\" or \"color\"");
  }
  f.t = make_rat(int_from_json(j.at("t").at("a"), "t.a"), int_from_json(j.at("t").at("b"), "t.b"));
  if (f.t.get_den() == 0) throw PreconditionError("family JSON: zero denominator");
  f.A = int_from_json(j.at("A"), "A");
  f.B = int_from_json(j.at("B"), "B");
  f.ell = int_from_json(j.at("ell"), "ell");
  f.k = j.at("k").get<long>();
  if (j.contains("provenance")) f.provenance = j.at("provenance").get<std::string>();
  if (f.A < 1 || f.B < 0 || f.k < 1) throw PreconditionError("family JSON: need A >= 1, B >= 0, k >= 1");
  return f;
}

nlohmann::json report_to_json(const VerificationReport& r) {
  nlohmann::json j;
  j["family"] = family_to_json(r.family);
  j["status"] = r.holds ? "holds" : "fails";
  j["n_checked"] = r.n_checked;
  if (!r.holds) j["witness"] = {{"n", r.witness_n}, {"valuation", r.witness_valuation}};
  j["backend"] = r.backend;
  j["precision"] = r.precision;
  return j;
}

FamilyFile parse_family_file(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("family file: ") + e.what(), e.byte);
  }
  if (!j.is_object()) throw PreconditionError("family file: expected a JSON object");
  FamilyFile out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.key() == "defaults") {
      const nlohmann::json& d = *it;
      for (auto dit = d.begin(); dit != d.end(); ++dit) {
        if (dit.key() == "count") {
          out.default_count = dit->get<long>();
          if (out.default_count < 1) throw PreconditionError("family file: count must be >= 1");
        } else if (dit.key() == "backend") {
          std::string b = dit->get<std::string>();
          if (b == "exact")
            out.default_backend = Backend::Exact;
          else if (b == "padic")
            out.default_backend = Backend::Padic;
          else
            throw PreconditionError("family file: backend must be \"padic\" or \"exact\"");
        } else {
          throw PreconditionError("family file: unknown defaults key \"" + dit.key() + "\"");
        }
      }
    } else if (it.key() == "families") {
      if (!it->is_array()) throw PreconditionError("family file: families must be an array");
      for (const auto& fj : *it) out.families.push_back(family_from_json(fj));
    } else {
      throw PreconditionError("family file: unknown key \"" + it.key() + "\"");
    }
  }
  return out;
}

}  // namespace qseries
