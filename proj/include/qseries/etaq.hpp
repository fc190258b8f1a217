#pragma once

#include <map>
#include <string>
#include <vector>

#include "qseries/series.hpp"

namespace qseries {

// (q^j; q^m)_infty
struct PochhammerSpec {
  long offset;   // j, 1 <= j <= m
  long modulus;  // m
};

// Finite product over scales m of E_m^{e_m}, rational exponents allowed.
struct EtaQuotient {
  std::map<long, Rat> factors;

  static EtaQuotient single(long m, Rat e = Rat(1));

  EtaQuotient& multiply(long m, const Rat& e);  // fold in E_m^e, dropping zeros
  EtaQuotient pow(const Rat& e) const;
  EtaQuotient times(const EtaQuotient& o) const;

  // Scales multiplied / divided by s.  deflate throws unless s divides every scale.
  EtaQuotient inflate_scales(long s) const;
  EtaQuotient deflate_scales(long s) const;

  std::string str() const;  // canonical "E1^2*E5^(-1/2)" form, scales ascending
};

// One term of the n-dissection of E_1 (Lemma form): sign * q^exp * prod(num)/prod(den).
struct DissectionTerm {
  int sign;
  long q_exp;
  std::vector<PochhammerSpec> num;
  std::vector<PochhammerSpec> den;
};

struct DissectionPlan {
  long n;  // n = 6g+1 or 6g-1
  long g;
  bool six_g_plus_one;
  int distinguished_sign;    // (-1)^g
  long distinguished_exp;    // (n^2-1)/24
  std::vector<DissectionTerm> terms;
};

DissectionPlan make_dissection_plan(long n);

struct ExtractionTerm {
  Int coeff;
  long q_pow;
  EtaQuotient eq;
};

// Claim: extract(realize(lhs), s, r) == sum of terms (each realized in q).
// An empty rhs claims the extraction vanishes.
struct ExtractionIdentity {
  std::string name;
  EtaQuotient lhs;
  long s;
  long r;
  std::vector<ExtractionTerm> rhs;
};

struct Certificate {
  std::string name;
  bool pass;
  long first_diff;  // -1 when pass
  long order;
};

// ---- series realizations -------------------------------------------------

// E_1 by the pentagonal number theorem (sparse).
template <class Ring>
Series<Ring> euler_series(long N, const Ring& R) {
  Series<Ring> s(R, N);
  for (long k = 0;; ++k) {
    long e1 = k * (3 * k - 1) / 2;
    long e2 = k * (3 * k + 1) / 2;
    if (e1 > N && e2 > N) break;
    typename Ring::Coeff v = (k % 2 == 0) ? R.one() : R.neg(R.one());
    if (e1 <= N) s.at(e1) = v;
    if (k > 0 && e2 <= N) s.at(e2) = v;
  }
  return s;
}

template <class Ring>
Series<Ring> pochhammer_series(const PochhammerSpec& p, long N, const Ring& R) {
  if (p.offset < 1 || p.modulus < 1 || p.offset > p.modulus)
    throw PreconditionError("pochhammer_series: need 1 <= j <= m");
  Series<Ring> s = Series<Ring>::one(R, N);
  for (long e = p.offset; e <= N; e += p.modulus)
    for (long n = N; n >= e; --n) s.at(n) = R.sub(s[n], s[n - e]);
  return s;
}

template <class Ring>
Series<Ring> realize(const EtaQuotient& eq, long N, const Ring& R) {
  Series<Ring> acc = Series<Ring>::one(R, N);
  for (const auto& [m, e] : eq.factors) {
    long nm = N / m;
    Series<Ring> base = euler_series(nm, R);
    Series<Ring> p = (e.get_den() == 1) ? pow_int(base, e.get_num().get_si()) : pow_rational(base, e);
    acc = mul(acc, inflate(p, m, N));
  }
  return acc;
}

template <class Ring>
Series<Ring> realize_dissection_term(const DissectionTerm& t, long N, const Ring& R) {
  Series<Ring> s = Series<Ring>::one(R, N);
  for (const auto& p : t.num) s = mul(s, pochhammer_series(p, N, R));
  Series<Ring> d = Series<Ring>::one(R, N);
  for (const auto& p : t.den) d = mul(d, pochhammer_series(p, N, R));
  s = mul(s, invert(d));
  s = shift_up(s, t.q_exp);
  if (t.sign < 0) s = neg(s);
  return s;
}

// Right-hand side of Lemma 2.2: E_{n^2} * (distinguished term + sum of terms).
template <class Ring>
Series<Ring> realize_dissection_rhs(const DissectionPlan& plan, long N, const Ring& R) {
  Series<Ring> inner(R, N);
  if (plan.distinguished_exp <= N) {
    inner.at(plan.distinguished_exp) =
        plan.distinguished_sign > 0 ? R.one() : R.neg(R.one());
  }
  for (const auto& t : plan.terms) inner = add(inner, realize_dissection_term(t, N, R));
  Series<Ring> en2 = inflate(euler_series(N / (plan.n * plan.n), R), plan.n * plan.n, N);
  return mul(en2, inner);
}

struct DissectionResult {
  DissectionPlan plan;
  bool certified;
  long first_diff;
  std::vector<RatSeries> classes;  // extract(RHS, n, r) for r = 0..n-1
};

DissectionResult n_dissection_e1(long n, long N);

Certificate verify_extraction_identity(const ExtractionIdentity& id, long N);

std::vector<ExtractionIdentity> builtin_identity_suite();

std::string identity_suite_json(const std::vector<ExtractionIdentity>& suite);

}  // namespace qseries
