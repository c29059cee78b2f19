#include <doctest.h>

#include <map>
#include <optional>
#include <random>

#include "atlas/qseries.hpp"

using namespace atlas;

namespace {

USeries poly_series(std::initializer_list<long> cs, int N) {
  USeries r(N);
  int k = 0;
  for (long c : cs) {
    if (k <= N) r[k] = RatFuncQ(c);
    ++k;
  }
  return r;
}

// Series in u whose coefficients are truncated sums in t = 1/q:
// coefficient of u^n is a map exponent -> value, exponents capped at M.
using Bivariate = std::vector<std::map<int, BigRat>>;

Bivariate bivariate_one(int N) {
  Bivariate r(N + 1);
  r[0][0] = 1;
  return r;
}

// Multiplies by (1 + c u^a t^e), dropping u^k for k > N and t^j for j > M.
void mul_factor(Bivariate& r, BigRat c, int a, int e, int M) {
  int N = int(r.size()) - 1;
  for (int k = N; k >= a; --k)
    for (const auto& [j, v] : r[k - a])
      if (j + e <= M) r[k][j + e] += c * v;
}

}  // namespace

TEST_CASE("series arithmetic") {
  CHECK(poly_series({1, 1}, 2) * poly_series({1, -1}, 2) == poly_series({1, 0, -1}, 2));
  USeries a = poly_series({3, 0, 5, -2}, 3);
  CHECK(a * USeries::one(3) == a);
  CHECK(poly_series({1, 1}, 1) * poly_series({1, 1}, 1) == poly_series({1, 2}, 1));
}

TEST_CASE("series inverse") {
  CHECK(series_inverse(poly_series({1, -1}, 3)) == poly_series({1, 1, 1, 1}, 3));
  CHECK(series_inverse(USeries::one(5)) == USeries::one(5));
  USeries b = USeries::one(4) - USeries::monomial(qpow(2), 2, 4);
  USeries expect = USeries::one(4) + USeries::monomial(qpow(2), 2, 4) + USeries::monomial(qpow(4), 4, 4);
  CHECK(series_inverse(b) == expect);
  CHECK_THROWS_AS(series_inverse(poly_series({0, 1}, 2)), std::domain_error);
}

TEST_CASE("series inverse round-trip on random sparse series") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> c(-4, 4), e(-3, 3), coin(0, 2);
  for (int it = 0; it < 30; ++it) {
    int N = 6;
    USeries a(N);
    a[0] = RatFuncQ(BigRat(c(rng) == 0 ? 1 : c(rng) + 5)) * qpow(e(rng));
    for (int k = 1; k <= N; ++k)
      if (coin(rng) == 0)
        a[k] = RatFuncQ(PolyQ::q() + PolyQ(c(rng))) * qpow(e(rng));
    if (a[0].is_zero()) continue;
    CHECK(a * series_inverse(a) == USeries::one(N));
  }
}

TEST_CASE("q-Pochhammer expansion: examples") {
  USeries p = poch_expand(PochSpec{1, 0, PochSign::plus_x, -2}, 4);
  CHECK(p[0] == RatFuncQ(1));
  CHECK(p[1] == RatFuncQ(PolyQ::parse("q^2"), PolyQ::parse("q^2 - 1")));
  LaurentQ l = laurent_expand(p[1], 10);
  for (int k = 0; k <= 10; ++k) CHECK(l.coeff(k) == (k % 2 == 0 ? 1 : 0));
  USeries m = poch_expand(PochSpec{1, 0, PochSign::minus_x, -2}, 4);
  CHECK(m[2] == RatFuncQ(PolyQ::parse("q^4"), PolyQ::parse("q^2 - 1") * PolyQ::parse("q^4 - 1")));
  CHECK_THROWS_AS(poch_expand(PochSpec{0, 0, PochSign::plus_x, -2}, 4), std::invalid_argument);
}

TEST_CASE("q-Pochhammer expansion against a truncated bivariate product") {
  const int N = 5, M = 14;
  for (int a : {1, 2})
    for (int b : {-3, -1, 0})
      for (int ey : {-2, -4})
        for (PochSign s : {PochSign::plus_x, PochSign::minus_x}) {
          USeries p = poch_expand(PochSpec{a, b, s, ey}, N);
          Bivariate direct = bivariate_one(N);
          // The factor i contributes t^(-b - ey(i-1)); beyond the window it
          // cannot matter.
          for (int i = 1; -b - ey * (i - 1) <= M; ++i)
            mul_factor(direct, s == PochSign::plus_x ? 1 : -1, a, -b - ey * (i - 1), M);
          for (int n = 0; n <= N; ++n) {
            int lead = p[n].is_zero() ? M + 1 : p[n].den().degree() - p[n].num().degree();
            std::optional<LaurentQ> l;
            if (lead <= M) l = laurent_expand(p[n], M);
            for (int j = std::min(lead, 0); j <= M; ++j) {
              auto it = direct[n].find(j);
              BigRat want = it == direct[n].end() ? BigRat(0) : it->second;
              CHECK((l ? l->coeff(j) : BigRat(0)) == want);
            }
          }
        }
}

TEST_CASE("q-binomial and Euler checks") {
  CHECK(qbinom_check(0, UMonomial{1, 1, 0}, 8));
  CHECK(qbinom_check(-2, UMonomial{1, 1, 0}, 8));
  CHECK(qbinom_check(3, UMonomial{-1, 2, 1}, 6, -1));
  CHECK(euler_check(UMonomial{1, 1, 0}, 8));
  CHECK(euler_check(UMonomial{-1, 2, 3}, 8));
  CHECK_FALSE(euler_reciprocal_check(UMonomial{1, 1, 0}, 8));
}

TEST_CASE("Euler sum matches the direct expansion of (-x;y)") {
  // coefficient of u^n in sum y^C(n,2) u^n/(y;y)_n with y = 1/q^2
  USeries p = poch_expand(PochSpec{1, 0, PochSign::plus_x, -2}, 6);
  for (int n = 0; n <= 6; ++n) {
    RatFuncQ yy = 1;
    for (int i = 1; i <= n; ++i) yy *= RatFuncQ(1) - qpow(-2 * i);
    CHECK(p[n] == qpow(-n * (n - 1)) / yy);
  }
}

TEST_CASE("generating functions: constant terms") {
  CHECK(gf_lhs({Identity::so_even_qodd, FormType::plus}, 3)[0] == RatFuncQ(1));
  CHECK(gf_lhs({Identity::so_odd_dim_qodd}, 3)[0] == RatFuncQ(BigRat(1, 2)));
  CHECK(gf_lhs({Identity::omega_even_qeven, FormType::minus}, 3)[0].is_zero());
  CHECK(gf_rhs({Identity::coset_so_qodd, FormType::plus}, 3)[0].is_zero());
  CHECK(gf_rhs({Identity::so_even_qodd, FormType::plus}, 3)[0] == RatFuncQ(1));
  CHECK(gf_rhs({Identity::omega_plus_1mod4}, 3)[0] == RatFuncQ(1));
}

TEST_CASE("SO generating function: the two signs differ by the second product") {
  const int N = 6;
  USeries d = gf_lhs({Identity::so_even_qodd, FormType::plus}, N) - gf_lhs({Identity::so_even_qodd, FormType::minus}, N);
  // (-u/q;y)^2/(u^2;y)
  USeries a = poch_expand(PochSpec{1, -1, PochSign::plus_x, -2}, N);
  USeries b = USeries::one(N) - USeries::monomial(RatFuncQ(1), 2, N);
  USeries c = b * poch_expand(PochSpec{2, -2, PochSign::minus_x, -2}, N);
  CHECK(d == a * a * series_inverse(c));
}

TEST_CASE("every identity holds through u^10, both signs") {
  for (const auto& inf : identity_manifest())
    for (FormType s : {FormType::plus, FormType::minus}) {
      if (!inf.has_sign && s == FormType::minus) continue;
      VerificationReport r = verify_identity({inf.id, s}, 10);
      INFO(inf.label << " " << to_string(s));
      CHECK(r.all_equal());
      CHECK(r.rows.size() == 11);
    }
}

TEST_CASE("identity labels") {
  CHECK(parse_identity_label("6.4b") == Identity::omega_odd_dim_3mod4);
  CHECK_FALSE(parse_identity_label("bogus"));
  CHECK(identity_manifest().size() == 10);
  CHECK_THROWS_AS(verify_identity({Identity::so_even_qodd}, 0), std::invalid_argument);
}
