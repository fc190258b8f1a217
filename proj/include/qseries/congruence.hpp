#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qseries/partitions.hpp"

namespace qseries {

// Admissible residues r for p_{-a/b}(ln+r) = 0 (mod l) under the Chan-Wang
// conditions for E_1^d, d in {1,3,4,6,8,10,14,26}.  ell must be an odd prime.
std::set<long> chan_wang_residues(long d, const Int& ell);

// Same for the 2-color conditions ((E_1 E_r)^d with r in {2,3,4}, d in {2,3}).
std::set<long> color_condition_residues(long color_r, long d, const Int& ell);

// A claim p_t(An+B) = 0 (mod ell^k) for all n (numerator divisibility).
struct CongruenceFamily {
  enum class Kind { Plain, Color };
  Kind kind = Kind::Plain;
  long color_r = 0;  // set when kind == Color
  Rat t;
  Int A;
  Int B;
  Int ell;
  long k = 1;
  std::string provenance;

  std::string key() const;  // cache key: kind/color/t
};

enum class Backend { Padic, Exact };

struct VerificationReport {
  CongruenceFamily family;
  bool holds = false;
  long n_checked = 0;
  long witness_n = -1;          // first failing n when !holds
  long witness_valuation = -1;  // valuation found there
  std::string backend;
  long precision = 0;  // padic working precision (0 for exact)
};

// Verifies families against computed coefficients; series are memoized per
// (t, color, ring) so families sharing a generating function reuse one pass.
class FamilyVerifier {
 public:
  VerificationReport verify(const CongruenceFamily& f, long count, Backend backend = Backend::Padic);

 private:
  struct ExactEntry {
    long N = -1;
    std::vector<Rat> coeffs;
  };
  struct PadicEntry {
    long N = -1;
    long prec = 0;
    std::vector<PadicRing::Coeff> coeffs;
  };
  std::map<std::string, ExactEntry> exact_;
  std::map<std::string, PadicEntry> padic_;
};

// Parameters for gen_theorem_families.  ell selects the branch for multi-prime
// theorems; d / color_r narrow further when a prime admits several branches
// (0 = all).  s = 0 generates every admissible s.  m is ignored where unused.
struct GenParams {
  long ell = 0;
  long k = 0;
  long s = 0;
  long m = 0;
  long d = 0;
  long color = 0;
  Int b = 1;
};

std::vector<CongruenceFamily> gen_theorem_families(const std::string& tag, const GenParams& p);

// Fixed catalogs: "ramanujan", "thm1.3", "literature".
std::vector<CongruenceFamily> builtin_families(const std::string& tag);

// Empirical scan: every progression (A <= A_max, 0 <= B < A) whose tested
// coefficients all have valuation >= k.  Progressions with fewer than 10
// witnesses below N are skipped.  color_r = 0 scans p_t, else p_{[1,r;t]}.
std::vector<CongruenceFamily> scan_progressions(const Rat& t, long A_max, const Int& ell, long k,
                                                long N, long color_r = 0);

// JSON wire formats
nlohmann::json family_to_json(const CongruenceFamily& f);
CongruenceFamily family_from_json(const nlohmann::json& j);
nlohmann::json report_to_json(const VerificationReport& r);

struct FamilyFile {
  long default_count = 30;
  Backend default_backend = Backend::Padic;
  std::vector<CongruenceFamily> families;
};

FamilyFile parse_family_file(const std::string& text);

}  // namespace qseries
