#include <cstdio>
#include <iostream>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qseries/cache.hpp"
#include "qseries/congruence.hpp"
#include "qseries/rrcf.hpp"
#include "qseries/specparse.hpp"

namespace {

constexpr const char* kVersion = "etaq 1.0.0";

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;

using namespace qseries;

Rat parse_rat_arg(const std::string& s) {
  std::size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    return make_rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw ParseError("expected a rational like -5/6, got \"" + s + "\"", 0);
  }
}

void parse_ellk(const std::string& s, Int& ell, long& k) {
  std::size_t caret = s.find('^');
  try {
    ell = Int(caret == std::string::npos ? s : s.substr(0, caret));
    k = caret == std::string::npos ? 1 : std::stol(s.substr(caret + 1));
  } catch (const std::exception&) {
    throw ParseError("expected a prime power like 5^2, got \"" + s + "\"", 0);
  }
  if (!is_prime(ell) || k < 1) throw PreconditionError("--ellk: need a prime ell and k >= 1");
}

std::string rat_str(const Rat& t) {
  if (t.get_den() == 1) return t.get_num().get_str();
  return t.get_num().get_str() + "/" + t.get_den().get_str();
}

// ---- expand --------------------------------------------------------------

struct ExpandOpts {
  std::string spec;
  std::string t = "1";
  long N = 300;
  std::string backend = "exact";
  std::string ellk = "5^1";
  bool json = false;
};

std::vector<std::string> expand_coeffs(const EtaQuotient& eq, const std::string& backend,
                                       const std::string& ellk, long N, std::string& ring_desc) {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(N) + 1);
  if (backend == "exact") {
    const RationalRing R;
    ring_desc = R.describe();
    RatSeries s = realize(eq, N, R);
    for (long n = 0; n <= N; ++n) out.push_back(R.coeff_str(s[n]));
  } else if (backend == "padic") {
    Int ell;
    long k;
    parse_ellk(ellk, ell, k);
    PadicRing R(ell, k + factorial_valuation(N, ell));
    ring_desc = R.describe();
    PadicSeries s = realize(eq, N, R);
    for (long n = 0; n <= N; ++n) out.push_back(R.coeff_str(s[n]));
  } else {
    throw PreconditionError("backend must be \"exact\" or \"padic\"");
  }
  return out;
}

int cmd_expand(const ExpandOpts& o) {
  Rat t = parse_rat_arg(o.t);
  EtaQuotient eq;
  try {
    eq = parse_eta_spec(o.spec).pow(t);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n"
              << caret_diagnostic(o.spec, e.pos) << "\n";
    return kExitUsage;
  }
  if (o.N < 0) throw PreconditionError("-N must be >= 0");

  SeriesCache cache = SeriesCache::from_env();
  std::string ring_desc;
  std::vector<std::string> coeffs;
  // Probe both ring descriptors cheaply: descriptor depends only on flags.
  if (o.backend == "exact") {
    ring_desc = RationalRing().describe();
  } else {
    Int ell;
    long k;
    parse_ellk(o.ellk, ell, k);
    ring_desc = PadicRing(ell, k + factorial_valuation(o.N, ell)).describe();
  }
  std::string key = eq.str() + "|" + ring_desc;
  if (auto hit = cache.load(key, o.N)) {
    coeffs = std::move(*hit);
  } else {
    coeffs = expand_coeffs(eq, o.backend, o.ellk, o.N, ring_desc);
    cache.store(key, o.N, coeffs);
  }

  if (o.json) {
    nlohmann::json j;
    j["spec"] = o.spec;
    j["t"] = rat_str(t);
    j["N"] = o.N;
    j["backend"] = o.backend;
    j["ring"] = ring_desc;
    j["version"] = kVersion;
    j["coeffs"] = coeffs;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "# spec " << o.spec << "\n"
              << "# t " << rat_str(t) << "\n"
              << "# N " << o.N << "\n"
              << "# backend " << ring_desc << "\n"
              << "# version " << kVersion << "\n";
    for (std::size_t n = 0; n < coeffs.size(); ++n)
      std::cout << (n ? " " : "") << coeffs[n];
    std::cout << "\n";
  }
  return kExitOk;
}

// ---- verify --------------------------------------------------------------

struct VerifyOpts {
  std::string file;
  std::string builtin;
  long count = 0;  // 0 = file/default
  std::string backend;
};

int cmd_verify(const VerifyOpts& o) {
  std::vector<CongruenceFamily> families;
  long count = 30;
  Backend backend = Backend::Padic;
  if (!o.builtin.empty()) {
    if (o.builtin.rfind("thm1.3", 0) == 0 || o.builtin == "ramanujan" || o.builtin == "literature")
      families = builtin_families(o.builtin);
    else
      throw PreconditionError("unknown builtin tag \"" + o.builtin +
                              "\" (expected ramanujan, thm1.3 or literature)");
  } else if (!o.file.empty()) {
    std::ifstream in(o.file);
    if (!in) throw PreconditionError("cannot open family file " + o.file);
    std::ostringstream buf;
    buf << in.rdbuf();
    FamilyFile ff = parse_family_file(buf.str());
    families = std::move(ff.families);
    count = ff.default_count;
    backend = ff.default_backend;
  } else {
    throw ParseError("verify: need a family file or --builtin <tag>", 0);
  }
  if (o.count > 0) count = o.count;
  if (!o.backend.empty()) {
    if (o.backend == "exact")
      backend = Backend::Exact;
    else if (o.backend == "padic")
      backend = Backend::Padic;
    else
      throw PreconditionError("backend must be \"exact\" or \"padic\"");
  }

  FamilyVerifier verifier;
  long held = 0;
  std::vector<std::string> lines;
  for (const auto& f : families) {
    VerificationReport rep = verifier.verify(f, count, backend);
    if (rep.holds) ++held;
    lines.push_back(report_to_json(rep).dump());
  }
  for (const auto& l : lines) std::cout << l << "\n";
  std::cout << "summary: " << held << "/" << families.size() << " hold\n";
  return held == static_cast<long>(families.size()) ? kExitOk : kExitVerifyFail;
}

// ---- dissect -------------------------------------------------------------

struct DissectOpts {
  bool suite = false;
  long n = 0;
  long N = 300;
};

bool report_certificate(const Certificate& c) {
  if (c.pass)
    std::cout << "PASS " << c.name << "\n";
  else
    std::cout << "FAIL " << c.name << " (first difference at q^" << c.first_diff << ")\n";
  return c.pass;
}

int cmd_dissect(const DissectOpts& o) {
  if (!o.suite && o.n == 0) throw ParseError("dissect: need --suite or --n <n>", 0);
  bool all = true;
  if (o.suite) {
    for (const auto& id : builtin_identity_suite())
      all &= report_certificate(verify_extraction_identity(id, o.N));
    for (long n : {5L, 7L, 11L, 13L}) {
      DissectionResult d = n_dissection_e1(n, o.N);
      all &= report_certificate(
          {"Lemma 2.2 n-dissection of E1 (n=" + std::to_string(n) + ")", d.certified, d.first_diff,
           o.N});
    }
    all &= report_certificate(verify_e1_r_dissection(o.N));
    all &= report_certificate(verify_x1_identity(o.N));
    all &= report_certificate(verify_x2_identity(o.N));
    all &= report_certificate(verify_x3_identity(o.N));
    all &= report_certificate(verify_identity2(o.N));
    all &= report_certificate(verify_xk_recurrence(8, o.N));
  }
  if (o.n != 0) {
    if (o.n < 5 || (o.n % 6 != 1 && o.n % 6 != 5))
      throw PreconditionError("n = ±1 (mod 6) and n >= 5 required");
    DissectionResult d = n_dissection_e1(o.n, o.N);
    all &= report_certificate({"Lemma 2.2 n-dissection of E1 (n=" + std::to_string(o.n) + ")",
                               d.certified, d.first_diff, o.N});
  }
  return all ? kExitOk : kExitVerifyFail;
}

// ---- search --------------------------------------------------------------

struct SearchOpts {
  std::string t;
  std::string ellk;
  long A_max = 0;
  long N = 300;
  long color = 0;
};

int cmd_search(const SearchOpts& o) {
  Rat t = parse_rat_arg(o.t);
  Int ell;
  long k;
  parse_ellk(o.ellk, ell, k);
  if (o.A_max < 1) throw PreconditionError("--Amax must be >= 1");
  std::vector<CongruenceFamily> found = scan_progressions(t, o.A_max, ell, k, o.N, o.color);
  nlohmann::json j;
  j["empirical"] = true;
  j["t"] = rat_str(t);
  j["ell"] = ell.get_str();
  j["k"] = k;
  j["N"] = o.N;
  j["candidates"] = nlohmann::json::array();
  for (const auto& f : found) j["candidates"].push_back(family_to_json(f));
  std::cout << j.dump() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"q-series engine: fractional Euler-product powers, dissections, congruences"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  ExpandOpts eo;
  CLI::App* expand = app.add_subcommand("expand", "print coefficients of an eta-quotient power");
  expand->add_option("spec", eo.spec, "eta-quotient spec, e.g. \"(E1*E2)^(-1/4)\"")->required();
  expand->add_option("-t,--exponent", eo.t, "overall rational exponent (default 1)");
  expand->add_option("-N,--order", eo.N, "truncation order (default 300)");
  expand->add_option("--backend", eo.backend, "exact | padic (default exact)");
  expand->add_option("--ellk", eo.ellk, "prime power for padic backend, e.g. 5^4");
  expand->add_flag("--json", eo.json, "JSON output (default text)");

  VerifyOpts vo;
  CLI::App* verify = app.add_subcommand("verify", "verify congruence families");
  verify->add_option("file", vo.file, "family file (JSON)");
  verify->add_option("--builtin", vo.builtin, "builtin set: ramanujan | thm1.3 | literature");
  verify->add_option("--count", vo.count, "terms per family (default 30)");
  verify->add_option("--backend", vo.backend, "exact | padic (default padic)");

  DissectOpts dopt;
  CLI::App* dissect = app.add_subcommand("dissect", "verify dissection and extraction identities");
  dissect->add_flag("--suite", dopt.suite, "run the full identity suite");
  dissect->add_option("--n", dopt.n, "verify the n-dissection of E1 for one n");
  dissect->add_option("-N,--order", dopt.N, "truncation order (default 300)");

  SearchOpts so;
  CLI::App* search = app.add_subcommand("search", "scan for candidate congruences (empirical)");
  search->add_option("-t,--exponent", so.t, "exponent t of E1 (or of E1*Er with --color r)")
      ->required();
  search->add_option("--ellk", so.ellk, "prime power, e.g. 5^2")->required();
  search->add_option("--Amax", so.A_max, "largest progression modulus A")->required();
  search->add_option("-N,--order", so.N, "truncation order (default 300)");
  search->add_option("--color", so.color, "2-color scale r (default: plain p_t)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*expand) return cmd_expand(eo);
    if (*verify) return cmd_verify(vo);
    if (*dissect) return cmd_dissect(dopt);
    if (*search) return cmd_search(so);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }
  return kExitUsage;
}
