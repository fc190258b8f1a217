#include "qseries/etaq.hpp"

#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace qseries {

EtaQuotient EtaQuotient::single(long m, Rat e) {
  EtaQuotient q;
  q.multiply(m, e);
  return q;
}

EtaQuotient& EtaQuotient::multiply(long m, const Rat& e) {
  if (m < 1) throw PreconditionError("eta quotient scale must be >= 1");
  auto it = factors.find(m);
  if (it == factors.end()) {
    if (e != 0) factors.emplace(m, e);
  } else {
    it->second += e;
    if (it->second == 0) factors.erase(it);
  }
  return *this;
}

EtaQuotient EtaQuotient::pow(const Rat& e) const {
  EtaQuotient out;
  if (e == 0) return out;
  for (const auto& [m, f] : factors) out.factors.emplace(m, f * e);
  return out;
}

EtaQuotient EtaQuotient::times(const EtaQuotient& o) const {
  EtaQuotient out = *this;
  for (const auto& [m, e] : o.factors) out.multiply(m, e);
  return out;
}

EtaQuotient EtaQuotient::inflate_scales(long s) const {
  EtaQuotient out;
  for (const auto& [m, e] : factors) out.factors.emplace(m * s, e);
  return out;
}

EtaQuotient EtaQuotient::deflate_scales(long s) const {
  EtaQuotient out;
  for (const auto& [m, e] : factors) {
    if (m % s != 0) throw PreconditionError("deflate: scale not divisible by " + std::to_string(s));
    out.factors.emplace(m / s, e);
  }
  return out;
}

std::string EtaQuotient::str() const {
  if (factors.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, e] : factors) {
    if (!first) os << "*";
    first = false;
    os << "E" << m;
    if (e != 1) {
      if (e.get_den() == 1)
        os << (e > 0 ? "^" + e.get_num().get_str() : "^(" + e.get_num().get_str() + ")");
      else
        os << "^(" << e.get_num().get_str() << "/" << e.get_den().get_str() << ")";
    }
  }
  return os.str();
}

DissectionPlan make_dissection_plan(long n) {
  if (n < 5 || (n % 6 != 1 && n % 6 != 5))
    throw PreconditionError("dissection requires n >= 5 with n = +-1 (mod 6)");
  DissectionPlan plan;
  plan.n = n;
  plan.six_g_plus_one = (n % 6 == 1);
  plan.g = plan.six_g_plus_one ? (n - 1) / 6 : (n + 1) / 6;
  plan.distinguished_sign = plan.g % 2 == 0 ? 1 : -1;
  plan.distinguished_exp = (n * n - 1) / 24;
  long nn = n * n;
  for (long j = 1; j <= (n - 1) / 2; ++j) {
    DissectionTerm t;
    long d = j - plan.g;
    long inner = plan.six_g_plus_one ? 3 * d - 1 : 3 * d + 1;
    t.q_exp = d * inner / 2;
    t.sign = (j + plan.g) % 2 == 0 ? 1 : -1;
    t.num = {{2 * j * n, nn}, {nn - 2 * j * n, nn}};
    t.den = {{j * n, nn}, {nn - j * n, nn}};
    if (t.q_exp < 0) throw PreconditionError("dissection term exponent underflow");
    plan.terms.push_back(std::move(t));
  }
  // the term exponents must land in pairwise distinct residue classes mod n,
  // none of them the distinguished class
  std::set<long> classes;
  classes.insert(plan.distinguished_exp % n);
  for (const auto& t : plan.terms) {
    if (!classes.insert(t.q_exp % n).second)
      throw PreconditionError("dissection plan: residue classes collide");
  }
  return plan;
}

DissectionResult n_dissection_e1(long n, long N) {
  DissectionResult res{make_dissection_plan(n), false, -1, {}};
  RationalRing R;
  RatSeries rhs = realize_dissection_rhs(res.plan, N, R);
  RatSeries e1 = euler_series(N, R);
  res.first_diff = first_difference(rhs, e1);
  res.certified = res.first_diff < 0;
  for (long r = 0; r < n; ++r) res.classes.push_back(extract(rhs, n, r));
  return res;
}

Certificate verify_extraction_identity(const ExtractionIdentity& id, long N) {
  RationalRing R;
  RatSeries lhs = extract(realize(id.lhs, N, R), id.s, id.r);
  RatSeries rhs(R, lhs.order());
  for (const auto& term : id.rhs) {
    RatSeries t = shift_up(realize(term.eq, lhs.order(), R), term.q_pow);
    rhs = add(rhs, scale(t, Rat(term.coeff)));
  }
  long diff = first_difference(lhs, rhs);
  return Certificate{id.name, diff < 0, diff, lhs.order()};
}

namespace {

EtaQuotient eqp(std::initializer_list<std::pair<long, long>> fs) {
  EtaQuotient q;
  for (const auto& [m, e] : fs) q.multiply(m, Rat(e));
  return q;
}

ExtractionIdentity row(std::string name, EtaQuotient lhs, long s, long r, long coeff, long qpow,
                       EtaQuotient rhs) {
  ExtractionIdentity id;
  id.name = std::move(name);
  id.lhs = std::move(lhs);
  id.s = s;
  id.r = r;
  id.rhs.push_back(ExtractionTerm{Int(coeff), qpow, std::move(rhs)});
  return id;
}

}  // namespace

std::vector<ExtractionIdentity> builtin_identity_suite() {
  std::vector<ExtractionIdentity> suite;

  // E_1^d rows
  suite.push_back(row("E1^2[5n+2]", eqp({{1, 2}}), 5, 2, -1, 0, eqp({{5, 2}})));
  suite.push_back(row("E1^2[7n+4]", eqp({{1, 2}}), 7, 4, 1, 0, eqp({{7, 2}})));
  suite.push_back(row("E1^2[11n+10]", eqp({{1, 2}}), 11, 10, 1, 0, eqp({{11, 2}})));
  suite.push_back(row("E1^3[3n+1]", eqp({{1, 3}}), 3, 1, -3, 0, eqp({{3, 3}})));
  suite.push_back(row("E1^3[5n+3]", eqp({{1, 3}}), 5, 3, 5, 0, eqp({{5, 3}})));
  suite.push_back(row("E1^3[7n+6]", eqp({{1, 3}}), 7, 6, -7, 0, eqp({{7, 3}})));
  suite.push_back(row("E1^4[5n+4]", eqp({{1, 4}}), 5, 4, -5, 0, eqp({{5, 4}})));
  suite.push_back(row("E1^6[3n+2]", eqp({{1, 6}}), 3, 2, 9, 0, eqp({{3, 6}})));
  suite.push_back(row("E1^6[7n+5]", eqp({{1, 6}}), 7, 5, 49, 1, eqp({{7, 6}})));
  suite.push_back(row("E1^8[5n+3]", eqp({{1, 8}}), 5, 3, -125, 1, eqp({{5, 8}})));
  suite.push_back(row("E1^14[5n+4]", eqp({{1, 14}}), 5, 4, -15625, 2, eqp({{5, 14}})));

  // pentagonal support: class 5n+4 of E_1 is empty
  {
    ExtractionIdentity id;
    id.name = "E1[5n+4]";
    id.lhs = eqp({{1, 1}});
    id.s = 5;
    id.r = 4;
    suite.push_back(std::move(id));
  }

  // (E_1 E_r)^d rows
  suite.push_back(row("E1E2[3n+1]", eqp({{1, 1}, {2, 1}}), 3, 1, -1, 0, eqp({{3, 1}, {6, 1}})));
  suite.push_back(row("E1E2[5n+3]", eqp({{1, 1}, {2, 1}}), 5, 3, 1, 0, eqp({{5, 1}, {10, 1}})));
  suite.push_back(row("E1E2[7n+6]", eqp({{1, 1}, {2, 1}}), 7, 6, 1, 0, eqp({{7, 1}, {14, 1}})));
  suite.push_back(row("E1E3[5n+4]", eqp({{1, 1}, {3, 1}}), 5, 4, 1, 0, eqp({{5, 1}, {15, 1}})));
  suite.push_back(row("E1E4[7n+3]", eqp({{1, 1}, {4, 1}}), 7, 3, 1, 1, eqp({{7, 1}, {28, 1}})));
  suite.push_back(row("E1E3[11n+9]", eqp({{1, 1}, {3, 1}}), 11, 9, 1, 1, eqp({{11, 1}, {33, 1}})));
  suite.push_back(row("E1E4[11n+3]", eqp({{1, 1}, {4, 1}}), 11, 3, 1, 2, eqp({{11, 1}, {44, 1}})));
  suite.push_back(row("(E1E2)^2[3n+2]", eqp({{1, 2}, {2, 2}}), 3, 2, -3, 0, eqp({{3, 2}, {6, 2}})));
  suite.push_back(row("(E1E3)^2[5n+3]", eqp({{1, 2}, {3, 2}}), 5, 3, -5, 1, eqp({{5, 2}, {15, 2}})));
  suite.push_back(row("(E1E2)^5[3n+2]", eqp({{1, 5}, {2, 5}}), 3, 2, -81, 1, eqp({{3, 5}, {6, 5}})));
  suite.push_back(row("(E1E2)^3[5n+4]", eqp({{1, 3}, {2, 3}}), 5, 4, 25, 1, eqp({{5, 3}, {10, 3}})));
  suite.push_back(row("(E1E3)^3[5n+2]", eqp({{1, 3}, {3, 3}}), 5, 2, 25, 2, eqp({{5, 3}, {15, 3}})));

  // 3-dissection of E_1^3, one identity per residue class.
  // E_1^3 = E_9^3 ( E_6E_9^3/(E_3E_18^3) - 3q + 4q^3 E_3^2E_18^6/(E_6^2E_9^6) ):
  // classes 0 (two terms, deflated) / 1 / 2 (empty).
  {
    ExtractionIdentity id;
    id.name = "E1^3-dissect[3n]";
    id.lhs = eqp({{1, 3}});
    id.s = 3;
    id.r = 0;
    id.rhs.push_back(ExtractionTerm{Int(1), 0, eqp({{2, 1}, {3, 6}, {1, -1}, {6, -3}})});
    id.rhs.push_back(ExtractionTerm{Int(4), 1, eqp({{1, 2}, {6, 6}, {2, -2}, {3, -3}})});
    suite.push_back(std::move(id));
  }
  suite.push_back(row("E1^3-dissect[3n+1]", eqp({{1, 3}}), 3, 1, -3, 0, eqp({{3, 3}})));
  {
    ExtractionIdentity id;
    id.name = "E1^3-dissect[3n+2]";
    id.lhs = eqp({{1, 3}});
    id.s = 3;
    id.r = 2;
    suite.push_back(std::move(id));
  }

  // 3-dissection of E_1E_2 = E_9E_18 ( E_6E_9^3/(E_3E_18^3) - q - 2q^2 E_3E_18^3/(E_6E_9^3) )
  suite.push_back(row("E1E2-dissect[3n]", eqp({{1, 1}, {2, 1}}), 3, 0, 1, 0,
                      eqp({{2, 1}, {3, 4}, {1, -1}, {6, -2}})));
  suite.push_back(row("E1E2-dissect[3n+1]", eqp({{1, 1}, {2, 1}}), 3, 1, -1, 0, eqp({{3, 1}, {6, 1}})));
  suite.push_back(row("E1E2-dissect[3n+2]", eqp({{1, 1}, {2, 1}}), 3, 2, -2, 0,
                      eqp({{1, 1}, {6, 4}, {2, -1}, {3, -2}})));

  return suite;
}

std::string identity_suite_json(const std::vector<ExtractionIdentity>& suite) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& id : suite) {
    nlohmann::json j;
    j["name"] = id.name;
    nlohmann::json lhs = nlohmann::json::object();
    for (const auto& [m, e] : id.lhs.factors)
      lhs[std::to_string(m)] = e.get_den() == 1 ? e.get_num().get_str()
                                                : e.get_num().get_str() + "/" + e.get_den().get_str();
    j["lhs"] = lhs;
    j["s"] = id.s;
    j["r"] = id.r;
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : id.rhs) {
      nlohmann::json tj;
      tj["coeff"] = t.coeff.get_str();
      tj["q_pow"] = t.q_pow;
      nlohmann::json f = nlohmann::json::object();
      for (const auto& [m, e] : t.eq.factors)
        f[std::to_string(m)] = e.get_den() == 1 ? e.get_num().get_str()
                                                : e.get_num().get_str() + "/" + e.get_den().get_str();
      tj["factors"] = f;
      terms.push_back(tj);
    }
    j["rhs"] = terms;
    arr.push_back(j);
  }
  return arr.dump(2);
}

}  // namespace qseries
