// One PASS/FAIL line per acceptance criterion.  Exit status is 0 when every
// line matches kKnownFailures below: a criterion listed there must still fail
// (an unexpected pass also exits 1, so the list cannot go stale).
#include <chrono>
#include <cstdio>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "atlas/asymptotics.hpp"
#include "atlas/fixtures.hpp"
#include "atlas/involutions.hpp"
#include "atlas/qseries.hpp"
#include "oracle_suite.hpp"

using namespace atlas;

namespace {

// Pinned tolerances.
const BigRat kSoTol(1, 10000);        // SO, dims 0 mod 4, q = 3
const BigRat kRatioTol(1, 1000);      // i(Omega)/i(SO) against 1/2, q = 3
const BigRat kOmegaEvenTol(1, 1000);  // Omega limits, q = 2
const BigRat kLimitEps(BigInt(1), BigInt("1000000000000"));
const BigRat kTruncationAgreement(1, 1000000000);
constexpr int kMaxDim = 24;
constexpr int kGfOrder = 10;
constexpr int kTruncFactors = 40;

// Criterion 5 fails on its second clause: at q = 3 the plus-type ratio at
// dimension 24 is 1/2 + 1.28e-3.  See README, "Known deviations".
const std::set<int> kKnownFailures = {5};

struct Line {
  int id;
  bool pass;
  std::string summary;
  std::vector<std::string> detail;
};

std::vector<Line> lines;

void report(Line l) {
  std::cout << (l.pass ? "[PASS] " : "[FAIL] ") << l.id << "  " << l.summary << '\n';
  for (const auto& d : l.detail) std::cout << "         " << d << '\n';
  std::cout.flush();
  lines.push_back(std::move(l));
}

std::string sci(const BigRat& x) { return scientific(x, 3); }

// ---- 1: Omega table, exact ----
Line omega_table() {
  Line l{1, true, "", {}};
  int rows = 0;
  for (const auto& e : reference_table(ReferenceTable::omega))
    for (FormType t : e.types()) {
      GroupSpec g = *e.spec(t);
      PolyQ got = *count_involutions_poly(g).poly;
      ++rows;
      if (!(got == e.polynomial(t))) {
        l.pass = false;
        l.detail.push_back(describe(g) + ": table " + e.resolved(t) + ", computed " + got.to_string());
      }
    }
  l.summary = "Omega table, n = 2..8: " + std::to_string(rows) + " polynomials compared exactly";
  if (rows != 13) {
    l.pass = false;
    l.detail.push_back("expected 13 rows (n = 8 is given for the plus type only)");
  }
  return l;
}

// ---- 2: generating functions ----
Line generating_functions() {
  Line l{2, true, "", {}};
  int checked = 0;
  for (const auto& inf : identity_manifest())
    for (FormType s : {FormType::plus, FormType::minus}) {
      if (!inf.has_sign && s == FormType::minus) continue;
      VerificationReport r = verify_identity({inf.id, s}, kGfOrder);
      ++checked;
      std::string tag = std::string(inf.label) + (inf.has_sign ? (s == FormType::plus ? " plus" : " minus") : "");
      if (!r.all_equal() || int(r.rows.size()) != kGfOrder + 1) {
        l.pass = false;
        for (const auto& row : r.rows)
          if (!row.equal) {
            l.detail.push_back(tag + ": first mismatch at u^" + std::to_string(row.n));
            break;
          }
      }
    }
  l.summary = std::to_string(checked) + " identity/sign pairs equal through u^" + std::to_string(kGfOrder);
  return l;
}

// ---- 3 and 4: oracle suite ----
std::vector<suite::GroupResult> oracle_results;

Line oracle_equivalence() {
  Line l{3, true, "", {}};
  int comparisons = 0;
  for (const auto& c : suite::default_cases()) {
    oracle_results.push_back(suite::run_case(c));
    const auto& r = oracle_results.back();
    if (!r.order_ok) {
      l.pass = false;
      l.detail.push_back(r.name + ": built " + std::to_string(r.order) + " elements, order formula disagrees");
    }
    for (const auto& cmp : r.counts) {
      ++comparisons;
      if (!cmp.ok()) {
        l.pass = false;
        l.detail.push_back(cmp.what + ": formula " + cmp.formula.get_str() + ", brute " + std::to_string(cmp.brute));
      }
    }
  }
  bool sp42 = false;
  for (const auto& r : oracle_results)
    if (r.name == "Sp(4,2)") sp42 = r.counts.size() == 1 && r.counts[0].brute == 76 && r.counts[0].ok();
  if (!sp42) {
    l.pass = false;
    l.detail.push_back("Sp(4,2) did not give 76");
  }
  l.summary = std::to_string(oracle_results.size()) + " groups, " + std::to_string(comparisons) +
              " exact count comparisons (Sp(4,2) = 76)";
  return l;
}

Line omega_membership() {
  Line l{4, true, "", {}};
  uint64_t even_t = 0, even_a = 0, odd_t = 0, odd_a = 0;
  std::vector<std::string> differs;
  for (const auto& r : oracle_results) {
    if (r.omega_order == 0) continue;  // Sp
    bool qeven = r.q % 2 == 0;
    (qeven ? even_t : odd_t) += r.membership.tested;
    (qeven ? even_a : odd_a) += r.membership.agreed;
    if (!r.membership.all_agree()) {
      l.pass = false;
      l.detail.push_back(r.name + ": " + std::to_string(r.membership.agreed) + "/" +
                         std::to_string(r.membership.tested) + " agree");
    }
    if (r.derived_order != r.omega_order)
      differs.push_back(r.name + " (derived " + std::to_string(r.derived_order) + ", Omega " +
                        std::to_string(r.omega_order) + ")");
  }
  l.summary = "rank parity " + std::to_string(even_a) + "/" + std::to_string(even_t) +
              " elements (q even), eigenspace classifier " + std::to_string(odd_a) + "/" +
              std::to_string(odd_t) + " involutions (q odd), against the index-2 subgroup Omega";
  if (!differs.empty()) {
    std::string s = "Omega is not the literal derived subgroup in:";
    for (const auto& d : differs) s += " " + d + ";";
    l.detail.push_back(s);
    l.detail.push_back("there Omega is the squares of SO (SO(2,q) abelian) or the stabilizer of the two "
                       "families of maximal totally singular subspaces (O^+(4,2))");
  }
  if (even_t == 0 || odd_t == 0) l.pass = false;
  return l;
}

// ---- 5: asymptotics ----
BigRat truncated_product(int sign, int a, int b, long q) {
  BigRat p = 1;
  for (int i = 1; i <= kTruncFactors; ++i) p *= 1 + sign * BigRat(1, ipow(q, a * i + b));
  return p;
}

Line asymptotics() {
  Line l{5, true, "", {}};
  std::vector<std::string> parts;

  // SO, dims 0 mod 4, q = 3, with the limit recomputed from 40-factor products.
  Approx lim = limit_value({LimitKind::SO_dim0mod4, 3}, kLimitEps);
  BigRat pp = truncated_product(1, 2, -1, 3), pm = truncated_product(-1, 2, -1, 3);
  BigRat by_trunc = (pp * pp + pm * pm) / 2;
  bool lim_ok = abs(lim.value - by_trunc) < kTruncationAgreement;
  l.detail.push_back("SO limit at q=3: " + decimal(lim.value, 10) + " (40-factor products: " + decimal(by_trunc, 10) +
                     (lim_ok ? ", agree)" : ", DISAGREE)"));
  l.pass &= lim_ok;
  for (FormType t : {FormType::plus, FormType::minus}) {
    auto rows = convergence_table({LimitKind::SO_dim0mod4, 3, t}, kMaxDim, kLimitEps);
    bool ok = rows.back().dim == kMaxDim && rows.back().abs_error < kSoTol;
    l.pass &= ok;
    l.detail.push_back(std::string(ok ? "ok   " : "FAIL ") + "SO^" + (t == FormType::plus ? "+" : "-") +
                       "(24,3)/3^144: error " + sci(rows.back().abs_error) + " (< " + sci(kSoTol) + ")");
  }

  // Omega/SO ratio, q = 3, every even dimension to 24.
  for (FormType t : {FormType::plus, FormType::minus}) {
    auto rows = convergence_table({LimitKind::Ratio_Omega_over_SO, 3, t}, kMaxDim, kLimitEps);
    const auto& last = rows.back();
    bool ok = last.dim == kMaxDim && last.abs_error < kRatioTol;
    l.pass &= ok;
    std::string worst_tail;
    for (const auto& r : rows)
      if (r.dim >= 16) worst_tail += " " + std::to_string(r.dim) + ":" + sci(r.abs_error);
    l.detail.push_back(std::string(ok ? "ok   " : "FAIL ") + "i(Omega^" + (t == FormType::plus ? "+" : "-") +
                       ")/i(SO) at dim 24, q=3: " + decimal(last.ratio, 8) + ", error " + sci(last.abs_error) +
                       " (< " + sci(kRatioTol) + "); tail" + worst_tail);
  }

  // Omega, q = 2, both residue classes and types.
  for (LimitKind k : {LimitKind::Omega_qeven_dim0mod4, LimitKind::Omega_qeven_dim2mod4})
    for (FormType t : {FormType::plus, FormType::minus}) {
      auto rows = convergence_table({k, 2, t}, kMaxDim, kLimitEps);
      bool ok = rows.back().abs_error < kOmegaEvenTol;
      l.pass &= ok;
      l.detail.push_back(std::string(ok ? "ok   " : "FAIL ") + kind_name(k) + " " + to_string(t) + " at dim " +
                         std::to_string(rows.back().dim) + ", q=2: error " + sci(rows.back().abs_error) + " (< " +
                         sci(kOmegaEvenTol) + ")");
    }
  l.summary = "limits: SO at q=3 (tol 1e-4), Omega/SO ratio at q=3 (tol 1e-3), Omega at q=2 (tol 1e-3)";
  return l;
}

// ---- 6: invariants ----
BigInt cnt(Family f, int dim, int q, FormType t = FormType::plus) {
  return *count_involutions({f, dim, parity_of(q), t}, q).value;
}

Line invariants() {
  Line l{6, true, "", {}};
  int add = 0, half = 0, omhalf = 0, coh = 0;
  auto fail = [&](const std::string& s) {
    l.pass = false;
    if (l.detail.size() < 10) l.detail.push_back(s);
  };
  for (int q = 2; q <= 9; ++q) {
    if (!is_prime_power(q)) continue;
    bool qodd = q % 2;
    for (int dim = 1; dim <= 16; ++dim) {
      std::string at = " dim " + std::to_string(dim) + " q " + std::to_string(q);
      if (dim % 2 == 0) {
        for (FormType t : {FormType::plus, FormType::minus}) {
          bool plus = t == FormType::plus;
          BigInt o = cnt(plus ? Family::O_plus : Family::O_minus, dim, q);
          BigInt s = qodd ? cnt(plus ? Family::SO_plus : Family::SO_minus, dim, q)
                          : cnt(plus ? Family::Omega_plus : Family::Omega_minus, dim, q);
          BigInt c = cnt(qodd ? Family::Coset_O_minus_SO : Family::Coset_O_minus_Omega, dim, q, t);
          ++add;
          if (s + c != o) fail("additivity" + at);
        }
        if (q % 4 == 1) {
          ++omhalf;
          if (cnt(Family::Omega_minus, dim, q) * 2 != cnt(Family::SO_minus, dim, q)) fail("Omega-minus halving" + at);
        }
      } else if (qodd) {
        ++half;
        if (cnt(Family::SO_odd_dim, dim, q) * 2 != cnt(Family::O_odd_dim, dim, q)) fail("odd-dim halving" + at);
      }
      for (int fi = 0; fi <= int(Family::Coset_O_minus_Omega); ++fi)
        for (FormType t : {FormType::plus, FormType::minus}) {
          GroupSpec g{Family(fi), dim, qodd ? CharParity::odd : CharParity::even, t};
          if (!is_coset(g.family) && t == FormType::minus) continue;
          std::optional<BigInt> v;
          try {
            v = count_involutions(g, q).value;
          } catch (const std::invalid_argument&) {
            continue;  // no formula for this family here
          }
          std::optional<OmegaBranch> b;
          if (qodd) b = branch_of(q);
          ++coh;
          if (count_involutions_poly(g, b).poly->eval(q) != BigRat(*v)) fail("coherence " + describe(g) + at);
          if (!is_coset(g.family) && *v < 1) fail("count below 1 for " + describe(g) + at);
        }
    }
  }
  l.summary = std::to_string(add) + " additivity, " + std::to_string(half) + " odd-dim halving, " +
              std::to_string(omhalf) + " Omega-minus halving, " + std::to_string(coh) +
              " symbolic/numeric checks over q <= 9, dim <= 16";
  return l;
}

// ---- 7: scope ----
Line scope(bool counting_side_ok) {
  Line l{7, counting_side_ok, "", {}};
  l.summary = "character degree sums are not computed; their involution-count side is covered by 1-3" +
              std::string(counting_side_ok ? "" : ", which did not all pass");
  // The exposed convenience value is the coset count itself.
  bool same = *char_degree_sum_via_involutions(1, 3, FormType::plus).value ==
              cnt(Family::Coset_O_minus_SO, 6, 3, FormType::plus);
  if (!same) {
    l.pass = false;
    l.detail.push_back("char-degree-sum output differs from the coset involution count");
  }
  return l;
}

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  report(omega_table());
  report(generating_functions());
  report(oracle_equivalence());
  report(omega_membership());
  report(asymptotics());
  report(invariants());
  report(scope(lines[0].pass && lines[1].pass && lines[2].pass));
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  int unexpected = 0;
  for (const auto& l : lines) {
    bool known = kKnownFailures.count(l.id) != 0;
    if (l.pass == known) {
      ++unexpected;
      std::cout << "unexpected " << (l.pass ? "pass" : "failure") << " of criterion " << l.id << '\n';
    }
  }
  int passed = 0;
  for (const auto& l : lines) passed += l.pass;
  std::printf("%d/%zu criteria pass (%.1f s); known failures: ", passed, lines.size(), secs);
  for (int k : kKnownFailures) std::printf("%d ", k);
  std::printf("\n");
  return unexpected ? 1 : 0;
}
