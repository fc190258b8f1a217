#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "qseries/congruence.hpp"

using namespace qseries;

TEST_CASE("legendre_symbol basics") {
  CHECK(legendre_symbol(Int(1), Int(7)) == 1);
  CHECK(legendre_symbol(Int(2), Int(7)) == 1);  // 3^2 = 2 mod 7
  CHECK(legendre_symbol(Int(3), Int(7)) == -1);
  CHECK(legendre_symbol(Int(14), Int(7)) == 0);
  // (-1|ell) = -1 for ell = 3 mod 4
  for (long ell : {3L, 7L, 11L, 19L, 23L, 31L, 43L, 47L, 59L, 67L, 71L, 79L, 83L})
    CHECK(legendre_symbol(Int(-1), Int(ell)) == -1);
  CHECK_THROWS_AS(legendre_symbol(Int(1), Int(8)), PreconditionError);
}

TEST_CASE("chan_wang_residues clauses") {
  CHECK(chan_wang_residues(1, 5) == std::set<long>{3, 4});
  CHECK(chan_wang_residues(4, 7).empty());  // 7 = 1 mod 6 fails the gate
  // d=3, ell=3: 8r+1 = 0 or QNR mod 3; squares mod 3 are {0,1}
  std::set<long> d3 = chan_wang_residues(3, 3);
  for (long r : d3) {
    long v = (8 * r + 1) % 3;
    CHECK((v == 0 || legendre_symbol(Int(v), Int(3)) == -1));
  }
  // self-consistency: d=1 never admits a residue with 24r+1 a square
  for (long ell : {5L, 7L, 11L, 13L, 23L}) {
    for (long r : chan_wang_residues(1, ell))
      CHECK(legendre_symbol(Int(24 * r + 1), Int(ell)) == -1);
  }
  CHECK_THROWS_AS(chan_wang_residues(2, 5), PreconditionError);
  CHECK_THROWS_AS(chan_wang_residues(1, 4), PreconditionError);
}

TEST_CASE("color_condition_residues") {
  CHECK(color_condition_residues(2, 2, 3) == std::set<long>{2});
  CHECK(color_condition_residues(3, 3, 17) == std::set<long>{8});
  CHECK(color_condition_residues(4, 2, 5).empty());  // 5 != 3 mod 4
  CHECK_THROWS_AS(color_condition_residues(5, 2, 3), PreconditionError);
}

TEST_CASE("thm1.4 worked example reproduces the paper families") {
  GenParams p;
  p.ell = 5;
  p.k = 5;
  p.b = 1567;
  p.s = 1;
  std::vector<CongruenceFamily> fams = gen_theorem_families("thm1.4", p);
  REQUIRE(fams.size() == 4);
  for (const auto& f : fams) {
    CHECK(f.t == make_rat(-1558, 1567));
    CHECK(f.A == 25);
    CHECK(f.ell == 5);
    CHECK(f.k == 4);
  }
  std::set<Int> bs;
  for (const auto& f : fams) bs.insert(f.B);
  CHECK(bs == std::set<Int>{6, 11, 16, 21});  // 5r + 1, r in {1..4}

  p.s = 2;
  std::vector<CongruenceFamily> deep = gen_theorem_families("thm1.4", p);
  REQUIRE(deep.size() == 4);
  for (const auto& f : deep) {
    CHECK(f.A == 625);
    CHECK(f.k == 2);
    CHECK((f.B - 26) % 125 == 0);
  }

  // term-disjointness of the two progressions over n <= 10^4
  std::set<Int> seen;
  for (const auto& f : fams)
    for (long n = 0; n <= 10000; ++n) CHECK(seen.insert(f.A * n + f.B).second);
  for (const auto& f : deep)
    for (long n = 0; n <= 10000; ++n) CHECK(seen.insert(f.A * n + f.B).second);
}

TEST_CASE("thm1.8 with k=3, b=1 gives p_{-21}(27n+20) mod 27") {
  GenParams p;
  p.ell = 3;
  p.k = 3;
  p.b = 1;
  std::vector<CongruenceFamily> fams = gen_theorem_families("thm1.8", p);
  REQUIRE(fams.size() == 1);
  CHECK(fams[0].t == Rat(-21));
  CHECK(fams[0].A == 27);
  CHECK(fams[0].B == 20);
  CHECK(fams[0].k == 3);
}

TEST_CASE("thm1.6 remark chain yields Ramanujan's p(5n+4) mod 5") {
  GenParams p;
  p.ell = 5;
  p.k = 1;
  p.m = 0;
  p.b = 1;
  p.d = 4;
  std::vector<CongruenceFamily> fams = gen_theorem_families("thm1.6", p);
  bool found = false;
  for (const auto& f : fams)
    found |= (f.kind == CongruenceFamily::Kind::Plain && f.t == Rat(-1) && f.A == 5 && f.B == 4 &&
              f.ell == 5 && f.k == 1);
  CHECK(found);
}

TEST_CASE("thm1.15 remark chain yields p_{[1,3;-3]}(5n+3) mod 5") {
  GenParams p;
  p.ell = 5;
  p.k = 1;
  p.m = 0;
  p.b = 1;
  p.color = 3;
  std::vector<CongruenceFamily> fams = gen_theorem_families("thm1.15", p);
  bool found = false;
  for (const auto& f : fams)
    found |= (f.kind == CongruenceFamily::Kind::Color && f.color_r == 3 && f.t == Rat(-3) &&
              f.A == 5 && f.B == 3 && f.k == 1);
  CHECK(found);
}

TEST_CASE("generator side conditions are enforced") {
  GenParams p;
  p.ell = 5;
  p.k = 5;
  p.b = 5;  // gcd(b, ell) != 1
  CHECK_THROWS_AS(gen_theorem_families("thm1.4", p), PreconditionError);
  p.b = 1;
  p.s = 3;  // > floor(k/2)
  CHECK_THROWS_AS(gen_theorem_families("thm1.4", p), PreconditionError);
  p.s = 0;
  p.k = 4;  // thm1.8 needs odd k
  CHECK_THROWS_AS(gen_theorem_families("thm1.8", p), PreconditionError);
  CHECK_THROWS_AS(gen_theorem_families("thm0.0", p), PreconditionError);
  GenParams q;
  q.ell = 13;
  q.k = 3;
  CHECK_THROWS_AS(gen_theorem_families("thm1.5", q), PreconditionError);
}

TEST_CASE("verifier holds on Ramanujan families, both backends") {
  FamilyVerifier v;
  for (const auto& f : builtin_families("ramanujan")) {
    VerificationReport rp = v.verify(f, 50, Backend::Padic);
    CHECK(rp.holds);
    CHECK(rp.backend == "padic");
    VerificationReport re = v.verify(f, 20, Backend::Exact);
    CHECK(re.holds);
    CHECK(re.backend == "exact");
  }
}

TEST_CASE("negative control: p(5n+3) mod 5 fails at n = 0 with valuation 0") {
  CongruenceFamily bad;
  bad.t = Rat(-1);
  bad.A = 5;
  bad.B = 3;
  bad.ell = 5;
  bad.k = 1;
  FamilyVerifier v;
  for (Backend b : {Backend::Padic, Backend::Exact}) {
    VerificationReport rep = v.verify(bad, 10, b);
    CHECK_FALSE(rep.holds);
    CHECK(rep.witness_n == 0);  // p(3) = 3
    CHECK(rep.witness_valuation == 0);
  }
}

TEST_CASE("verifier preconditions") {
  CongruenceFamily f;
  f.t = make_rat(-1, 5);
  f.A = 5;
  f.B = 4;
  f.ell = 5;
  f.k = 1;
  FamilyVerifier v;
  CHECK_THROWS_AS(v.verify(f, 10), PreconditionError);  // ell | denom(t)
  f.t = Rat(-1);
  CHECK_THROWS_AS(v.verify(f, 0), PreconditionError);
}

TEST_CASE("thm1.3 families all verify") {
  std::vector<CongruenceFamily> fams = builtin_families("thm1.3");
  CHECK(fams.size() == 12);
  FamilyVerifier v;
  for (const auto& f : fams) {
    long count = f.A == 25 ? 15 : 8;
    VerificationReport rep = v.verify(f, count);
    INFO(f.provenance << " B=" << f.B.get_str());
    CHECK(rep.holds);
  }
}

TEST_CASE("scanner finds the Ramanujan progression and labels it empirical") {
  std::vector<CongruenceFamily> found = scan_progressions(Rat(-1), 5, 5, 1, 120);
  bool hit = false;
  for (const auto& f : found) {
    CHECK(f.provenance.rfind("candidate:", 0) == 0);
    if (f.A == 5 && f.B == 4) hit = true;
  }
  CHECK(hit);
  // sorted by (A, B)
  for (std::size_t i = 1; i < found.size(); ++i) {
    CHECK((found[i - 1].A < found[i].A ||
           (found[i - 1].A == found[i].A && found[i - 1].B < found[i].B)));
  }
}

TEST_CASE("scan at ell = 13 shows no full-residue pattern for E1^2") {
  std::vector<CongruenceFamily> found = scan_progressions(Rat(2), 13, 13, 1, 400);
  std::set<long> hits;
  for (const auto& f : found)
    if (f.A == 13) hits.insert(f.B.get_si());
  // the ell = 5,7,11 pattern would give ell-1 residues; 13 gives nowhere near
  CHECK(hits.size() < 12);
}

TEST_CASE("family JSON round trip") {
  for (const auto& f : builtin_families("literature")) {
    CongruenceFamily g = family_from_json(family_to_json(f));
    CHECK(g.kind == f.kind);
    CHECK(g.color_r == f.color_r);
    CHECK(g.t == f.t);
    CHECK(g.A == f.A);
    CHECK(g.B == f.B);
    CHECK(g.ell == f.ell);
    CHECK(g.k == f.k);
    CHECK(g.provenance == f.provenance);
  }
}

TEST_CASE("family JSON rejects unknown keys and malformed fields") {
  nlohmann::json j = family_to_json(builtin_families("ramanujan")[0]);
  j["extra"] = 1;
  CHECK_THROWS_AS(family_from_json(j), PreconditionError);
  j.erase("extra");
  j["kind"] = "weird";
  CHECK_THROWS_AS(family_from_json(j), PreconditionError);
}

TEST_CASE("family file parsing honors defaults and rejects junk") {
  FamilyFile ff = parse_family_file(R"({
    "defaults": {"count": 12, "backend": "exact"},
    "families": [{"kind": "plain", "t": {"a": "-1", "b": "1"},
                  "A": "5", "B": "4", "ell": "5", "k": 1, "provenance": "x"}]
  })");
  CHECK(ff.default_count == 12);
  CHECK(ff.default_backend == Backend::Exact);
  REQUIRE(ff.families.size() == 1);
  CHECK(ff.families[0].A == 5);
  CHECK_THROWS_AS(parse_family_file(R"({"unknown": 1})"), PreconditionError);
  CHECK_THROWS_AS(parse_family_file("not json"), ParseError);
}
