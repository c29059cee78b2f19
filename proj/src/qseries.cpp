#include "atlas/qseries.hpp"

#include <functional>
#include <stdexcept>

#include "atlas/involutions.hpp"

namespace atlas {

USeries::USeries(int trunc) {
  if (trunc < 0) throw std::invalid_argument("negative truncation order");
  coeffs_.assign(trunc + 1, RatFuncQ());
}

USeries USeries::one(int trunc) {
  USeries s(trunc);
  s.coeffs_[0] = RatFuncQ(1);
  return s;
}

USeries USeries::monomial(const RatFuncQ& c, int k, int trunc) {
  USeries s(trunc);
  if (k >= 0 && k <= trunc) s.coeffs_[k] = c;
  return s;
}

namespace {
void same_trunc(const USeries& a, const USeries& b) {
  if (a.trunc() != b.trunc())
    throw std::invalid_argument("truncation mismatch: " + std::to_string(a.trunc()) + " vs " +
                                std::to_string(b.trunc()));
}
}  // namespace

USeries operator+(const USeries& a, const USeries& b) {
  same_trunc(a, b);
  USeries r(a.trunc());
  for (int i = 0; i <= a.trunc(); ++i) r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
  return r;
}

USeries operator-(const USeries& a, const USeries& b) {
  same_trunc(a, b);
  USeries r(a.trunc());
  for (int i = 0; i <= a.trunc(); ++i) r.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
  return r;
}

USeries operator*(const USeries& a, const USeries& b) {
  same_trunc(a, b);
  int N = a.trunc();
  USeries r(N);
  for (int i = 0; i <= N; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (int j = 0; i + j <= N; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return r;
}

USeries USeries::scaled(const RatFuncQ& c) const {
  USeries r(trunc());
  for (int i = 0; i <= trunc(); ++i)
    if (!coeffs_[i].is_zero()) r.coeffs_[i] = coeffs_[i] * c;
  return r;
}

USeries series_inverse(const USeries& a) {
  if (a[0].is_zero()) throw std::domain_error("series with zero constant term has no inverse");
  int N = a.trunc();
  USeries r(N);
  RatFuncQ inv0 = RatFuncQ(1) / a[0];
  r[0] = inv0;
  for (int k = 1; k <= N; ++k) {
    RatFuncQ s;
    for (int i = 1; i <= k; ++i)
      if (!a[i].is_zero() && !r[k - i].is_zero()) s += a[i] * r[k - i];
    r[k] = -(s * inv0);
  }
  return r;
}

namespace {

// prod_{i=1}^{n} (q^{e i} - 1)
PolyQ qfactorial(int e, int n) {
  PolyQ p(1);
  for (int i = 1; i <= n; ++i) p *= PolyQ::monomial(1, e * i) - PolyQ(1);
  return p;
}

// (y;y)_n with y = q^-e, as a rational function.
RatFuncQ yy(int e, int n) {
  return RatFuncQ(qfactorial(e, n)) * qpow(-e * n * (n + 1) / 2);
}

// (z;y)_inf = prod_{i>=1} (1 - sigma u^a q^c y^{i-1}) with y = 1/q^2.  Factors
// with a nonnegative power of q are multiplied in explicitly; the rest go
// through the closed-form expansion.
USeries poch_infinite(int sigma, int a, int c, int N) {
  USeries r = USeries::one(N);
  while (c >= 0) {
    r = r * (USeries::one(N) - USeries::monomial(RatFuncQ(sigma) * qpow(c), a, N));
    c -= 2;
  }
  return r * poch_expand(PochSpec{a, c, sigma > 0 ? PochSign::minus_x : PochSign::plus_x, -2}, N);
}

// prod_{i>=1} (1 + s u^a q^b / q^{2(i-1)}) in the form used by the identities.
USeries P(int s, int a, int b, int N) { return poch_infinite(-s, a, b, N); }

}  // namespace

USeries poch_expand(const PochSpec& spec, int N) {
  if (N < 0) throw std::invalid_argument("negative truncation order");
  if (spec.x_upow < 1) throw std::invalid_argument("x must carry a positive power of u");
  if (spec.y_qpow >= 0 || spec.y_qpow % 2) throw std::invalid_argument("y must be q^(-2m), m >= 1");
  int e = -spec.y_qpow;
  USeries r(N);
  // coefficient of u^{a n}: s^n q^{b n + e n} / prod_{i<=n} (q^{e i} - 1)
  PolyQ den(1);
  for (int n = 0; spec.x_upow * n <= N; ++n) {
    if (n > 0) den *= PolyQ::monomial(1, e * n) - PolyQ(1);
    int qe = spec.x_qpow * n + e * n;
    BigRat sgn = (spec.sign == PochSign::minus_x && n % 2) ? -1 : 1;
    PolyQ num = PolyQ(sgn);
    PolyQ d = den;
    if (qe >= 0) num = num.shifted(qe);
    else d = d.shifted(-qe);
    r[spec.x_upow * n] = RatFuncQ(num, d);
  }
  return r;
}

namespace {

// x^n = (s u^a q^b)^n as a series monomial times rational function.
USeries x_power_sum(const UMonomial& x, int N, const std::function<RatFuncQ(int)>& coeff) {
  USeries r(N);
  for (int n = 0; x.upow * n <= N; ++n) {
    RatFuncQ c = coeff(n);
    if (c.is_zero()) continue;
    RatFuncQ xn = qpow(x.qpow * n) * RatFuncQ((x.sign < 0 && n % 2) ? -1 : 1);
    r[x.upow * n] = c * xn;
  }
  return r;
}

void check_monomial(const UMonomial& x) {
  if (x.upow < 1) throw std::invalid_argument("x must carry a positive power of u");
  if (x.sign != 1 && x.sign != -1) throw std::invalid_argument("x sign must be +1 or -1");
}

}  // namespace

bool qbinom_check(int A_qpow, const UMonomial& x, int N, int a_sign) {
  check_monomial(x);
  if (a_sign != 1 && a_sign != -1) throw std::invalid_argument("A sign must be +1 or -1");
  RatFuncQ A = RatFuncQ(a_sign) * qpow(A_qpow);
  USeries lhs = x_power_sum(x, N, [&](int n) {
    RatFuncQ an(1);
    for (int i = 1; i <= n; ++i) an *= RatFuncQ(1) - A * qpow(-2 * (i - 1));
    return an / yy(2, n);
  });
  USeries rhs = poch_infinite(a_sign * x.sign, x.upow, A_qpow + x.qpow, N) *
                series_inverse(poch_infinite(x.sign, x.upow, x.qpow, N));
  return lhs == rhs;
}

namespace {
USeries euler_sum(const UMonomial& x, int N) {
  return x_power_sum(x, N, [](int n) { return qpow(-(n * (n - 1))) / yy(2, n); });
}
USeries reciprocal_of_minus_x(const UMonomial& x, int N) {
  UMonomial mx{-x.sign, x.upow, x.qpow};
  return x_power_sum(mx, N, [](int n) { return RatFuncQ(1) / yy(2, n); });
}
}  // namespace

bool euler_check(const UMonomial& x, int N) {
  check_monomial(x);
  return euler_sum(x, N) == series_inverse(reciprocal_of_minus_x(x, N));
}

bool euler_reciprocal_check(const UMonomial& x, int N) {
  check_monomial(x);
  return euler_sum(x, N) == reciprocal_of_minus_x(x, N);
}

// ---------------------------------------------------------------------------

const std::vector<IdentityInfo>& identity_manifest() {
  static const std::vector<IdentityInfo> m{
      {Identity::so_even_qodd, "6.1a", true,
       "q odd: sum_n i(SO^e(2n,q))/|O^e(2n,q)| q^(n^2) u^n = 1/2 [ (-u;y)^2/(q^2u^2;y) "
       "e (-u/q;y)^2/(u^2;y) ]"},
      {Identity::so_odd_dim_qodd, "6.1b", false,
       "q odd: sum_n i(SO(2n+1,q))/|O(2n+1,q)| q^(n^2) u^n = 1/(2(1-u)) (-u/q^2;y)^2/(u^2/q^2;y)"},
      {Identity::coset_so_qodd, "6.2", true,
       "q odd: sum_n i(O^e(2n,q) \\ SO^e(2n,q))/|O^e(2n,q)| q^(n^2) u^n = (uq/2) "
       "(-u;y)^2/(q^2u^2;y)"},
      {Identity::omega_plus_1mod4, "6.3a", false,
       "q = 1 mod 4: sum_n i(Omega^+(2n,q))/|O^+(2n,q)| q^(n^2) u^n = 1/4 [ (-u;y)^2/(q^2u^2;y) "
       "+ 2 (-u;y)(-u/q;y)/(qu^2;y) + (-u/q;y)^2/(u^2;y) ]"},
      {Identity::omega_minus_1mod4, "6.3b", false,
       "q = 1 mod 4: sum_n i(Omega^-(2n,q))/|O^-(2n,q)| q^(n^2) u^n = 1/4 [ (-u;y)^2/(q^2u^2;y) "
       "- (-u/q;y)^2/(u^2;y) ]"},
      {Identity::omega_odd_dim_1mod4, "6.3c", false,
       "q = 1 mod 4: sum_n i(Omega(2n+1,q))/|O(2n+1,q)| q^(n^2) u^n = 1/4 [ (1+u) "
       "(-u/q^2;y)^2/(u^2;y) + (-u/q;y)(-u/q^2;y)/(u^2/q;y) ]"},
      {Identity::omega_even_3mod4, "6.4a", true,
       "q = 3 mod 4: sum_n i(Omega^e(2n,q))/|O^e(2n,q)| q^(n^2) u^n = 1/4 [ (-u;y)^2/(q^2u^2;y) "
       "+ (-u;y)(u/q;y)/(-qu^2;y) e ( (u;y)(-u/q;y)/(-qu^2;y) + (-u/q;y)^2/(u^2;y) ) ]"},
      {Identity::omega_odd_dim_3mod4, "6.4b", false,
       "q = 3 mod 4: sum_n i(Omega(2n+1,q))/|O(2n+1,q)| q^(n^2) u^n = 1/4 [ (1+u) "
       "(-u/q^2;y)^2/(u^2;y) + (u/q;y)(-u/q^2;y)/(-u^2/q;y) ]"},
      {Identity::omega_even_qeven, "6.6", true,
       "q even: sum_n i(Omega^e(2n,q))/|O^e(2n,q)| q^(n^2) u^n = 1/2 [ (-u;y)/(q^2u^2;y) "
       "e (-u/q;y)/(u^2;y) ]"},
      {Identity::coset_omega_qeven, "6.7", true,
       "q even: sum_n i(O^e(2n,q) \\ Omega^e(2n,q))/|O^e(2n,q)| q^(n^2) u^n = (uq/2) "
       "(-u;y)/(q^2u^2;y)"},
  };
  return m;
}

const IdentityInfo& info(Identity id) {
  for (const auto& e : identity_manifest())
    if (e.id == id) return e;
  throw std::invalid_argument("unknown identity");
}

std::optional<Identity> parse_identity_label(std::string_view label) {
  for (const auto& e : identity_manifest())
    if (label == e.label) return e.id;
  return std::nullopt;
}

namespace {

struct LhsFamily {
  GroupSpec spec;                      // counted set at dim 2n or 2n+1
  std::optional<OmegaBranch> branch;
  bool odd_dim = false;
};

LhsFamily lhs_family(const IdentityId& id) {
  FormType t = id.sign;
  bool plus = t == FormType::plus;
  auto even = [&](Family f, CharParity p, std::optional<OmegaBranch> b = {}) {
    return LhsFamily{GroupSpec{f, 0, p, t}, b, false};
  };
  auto odd = [&](Family f, std::optional<OmegaBranch> b = {}) {
    return LhsFamily{GroupSpec{f, 1, CharParity::odd, FormType::plus}, b, true};
  };
  switch (id.id) {
    case Identity::so_even_qodd:
      return even(plus ? Family::SO_plus : Family::SO_minus, CharParity::odd);
    case Identity::so_odd_dim_qodd: return odd(Family::SO_odd_dim);
    case Identity::coset_so_qodd: return even(Family::Coset_O_minus_SO, CharParity::odd);
    case Identity::omega_plus_1mod4:
      return LhsFamily{GroupSpec{Family::Omega_plus, 0, CharParity::odd}, OmegaBranch::one_mod_4, false};
    case Identity::omega_minus_1mod4:
      return LhsFamily{GroupSpec{Family::Omega_minus, 0, CharParity::odd}, OmegaBranch::one_mod_4, false};
    case Identity::omega_odd_dim_1mod4: return odd(Family::Omega_odd_dim, OmegaBranch::one_mod_4);
    case Identity::omega_even_3mod4:
      return even(plus ? Family::Omega_plus : Family::Omega_minus, CharParity::odd,
                  OmegaBranch::three_mod_4);
    case Identity::omega_odd_dim_3mod4: return odd(Family::Omega_odd_dim, OmegaBranch::three_mod_4);
    case Identity::omega_even_qeven:
      return even(plus ? Family::Omega_plus : Family::Omega_minus, CharParity::even);
    case Identity::coset_omega_qeven: return even(Family::Coset_O_minus_Omega, CharParity::even);
  }
  throw std::invalid_argument("unknown identity");
}

IdentityId normalized(IdentityId id) {
  if (id.id == Identity::omega_plus_1mod4) id.sign = FormType::plus;
  else if (id.id == Identity::omega_minus_1mod4) id.sign = FormType::minus;
  else if (!info(id.id).has_sign) id.sign = FormType::plus;
  return id;
}

}  // namespace

USeries gf_lhs(const IdentityId& raw, int N) {
  IdentityId id = normalized(raw);
  LhsFamily fam = lhs_family(id);
  int sign = form_type(fam.spec) == FormType::plus ? 1 : -1;
  USeries r(N);
  for (int n = 0; n <= N; ++n) {
    GroupSpec g = fam.spec;
    g.dim = fam.odd_dim ? 2 * n + 1 : 2 * n;
    if (g.dim == 0 && (sign < 0 || is_coset(g.family))) continue;  // 1/|O^-(0,q)| = 0; empty coset
    PolyQ count = *count_involutions_poly(g, fam.branch).poly;
    PolyQ order = orthogonal_order_poly(fam.odd_dim ? 1 : sign, g.dim, g.parity);
    r[n] = RatFuncQ(count.shifted(n * n), order);
  }
  return r;
}

namespace {

USeries scalar(const BigRat& c, int N) { return USeries::one(N).scaled(RatFuncQ(c)); }
USeries one_plus_u(int N) { return USeries::one(N) + USeries::monomial(RatFuncQ(1), 1, N); }
USeries one_minus_u(int N) { return USeries::one(N) - USeries::monomial(RatFuncQ(1), 1, N); }
USeries uq_half(int N) { return USeries::monomial(RatFuncQ(PolyQ::monomial(BigRat(1, 2), 1)), 1, N); }

// (-u;y)^2/(q^2u^2;y) and (-u/q;y)^2/(u^2;y)
USeries T1(int N) { return P(1, 1, 0, N) * P(1, 1, 0, N) * series_inverse(P(-1, 2, 2, N)); }
USeries T2(int N) { return P(1, 1, -1, N) * P(1, 1, -1, N) * series_inverse(P(-1, 2, 0, N)); }

USeries odd_dim_first(int N) {
  return one_plus_u(N) * P(1, 1, -2, N) * P(1, 1, -2, N) * series_inverse(P(-1, 2, 0, N));
}

// The coset identity with prod(1 + u/q^{2i-1}) in the numerator.
USeries coset_omega_alternative(int N) {
  return uq_half(N) * P(1, 1, -1, N) * series_inverse(P(-1, 2, 2, N));
}

}  // namespace

USeries gf_rhs(const IdentityId& raw, int N) {
  IdentityId id = normalized(raw);
  BigRat e = id.sign == FormType::plus ? 1 : -1;
  switch (id.id) {
    case Identity::so_even_qodd: return (T1(N) + T2(N).scaled(RatFuncQ(e))).scaled(RatFuncQ(BigRat(1, 2)));
    case Identity::so_odd_dim_qodd:
      return series_inverse(one_minus_u(N)) * P(1, 1, -2, N) * P(1, 1, -2, N) *
             series_inverse(P(-1, 2, -2, N)) * scalar(BigRat(1, 2), N);
    case Identity::coset_so_qodd: return uq_half(N) * T1(N);
    case Identity::omega_plus_1mod4: {
      USeries mid = P(1, 1, 0, N) * P(1, 1, -1, N) * series_inverse(P(-1, 2, 1, N));
      return (T1(N) + mid.scaled(RatFuncQ(2)) + T2(N)).scaled(RatFuncQ(BigRat(1, 4)));
    }
    case Identity::omega_minus_1mod4: return (T1(N) - T2(N)).scaled(RatFuncQ(BigRat(1, 4)));
    case Identity::omega_odd_dim_1mod4: {
      USeries t2 = P(1, 1, -1, N) * P(1, 1, -2, N) * series_inverse(P(-1, 2, -1, N));
      return (odd_dim_first(N) + t2).scaled(RatFuncQ(BigRat(1, 4)));
    }
    case Identity::omega_even_3mod4: {
      // prod(1 + (-1)^{i-1} u/q^{i-1}) = (-u;y)(u/q;y), and its sign flip.
      USeries den = series_inverse(P(1, 2, 1, N));
      USeries m1 = P(1, 1, 0, N) * P(-1, 1, -1, N) * den;
      USeries m2 = P(-1, 1, 0, N) * P(1, 1, -1, N) * den;
      return (T1(N) + m1 + (m2 + T2(N)).scaled(RatFuncQ(e))).scaled(RatFuncQ(BigRat(1, 4)));
    }
    case Identity::omega_odd_dim_3mod4: {
      USeries t2 = P(-1, 1, -1, N) * P(1, 1, -2, N) * series_inverse(P(1, 2, -1, N));
      return (odd_dim_first(N) + t2).scaled(RatFuncQ(BigRat(1, 4)));
    }
    case Identity::omega_even_qeven:
      return (P(1, 1, 0, N) * series_inverse(P(-1, 2, 2, N)) +
              (P(1, 1, -1, N) * series_inverse(P(-1, 2, 0, N))).scaled(RatFuncQ(e)))
          .scaled(RatFuncQ(BigRat(1, 2)));
    case Identity::coset_omega_qeven:
      return uq_half(N) * P(1, 1, 0, N) * series_inverse(P(-1, 2, 2, N));
  }
  throw std::invalid_argument("unknown identity");
}

bool VerificationReport::all_equal() const {
  for (const auto& r : rows)
    if (!r.equal) return false;
  return true;
}

VerificationReport verify_identity(const IdentityId& raw, int N) {
  if (N < 1) throw std::invalid_argument("truncation order must be at least 1");
  IdentityId id = normalized(raw);
  USeries lhs = gf_lhs(id, N);
  USeries rhs = gf_rhs(id, N);
  VerificationReport rep;
  rep.id = id;
  for (int n = 0; n <= N; ++n) rep.rows.push_back({n, lhs[n], rhs[n], lhs[n] == rhs[n]});

  int M = std::min(N, 4);
  bool euler = euler_check(UMonomial{1, 1, 0}, M);
  bool recip = euler_reciprocal_check(UMonomial{1, 1, 0}, M);
  rep.notes.push_back(std::string("erratum: sum_n y^C(n,2) x^n/(y;y)_n equals (-x;y)_inf") +
                      (euler ? " (confirmed" : " (NOT confirmed") + " through u^" + std::to_string(M) +
                      "), not 1/(-x;y)_inf" + (recip ? " (which unexpectedly also matched)" : "") +
                      "; expansions here use the former");
  if (id.id == Identity::coset_omega_qeven) {
    bool alt = coset_omega_alternative(N) == lhs;
    rep.notes.push_back(std::string("erratum: the numerator is prod(1 + u/q^{2(i-1)}); with "
                                    "prod(1 + u/q^{2i-1}) the series ") +
                        (alt ? "also matches" : "does not match") + " through u^" + std::to_string(N));
  }
  if (id.id == Identity::coset_so_qodd)
    rep.notes.push_back("the left side carries the factor u^n");
  return rep;
}

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json j;
  const IdentityInfo& inf = info(r.id.id);
  j["theorem"] = inf.label;
  if (inf.has_sign) j["sign"] = to_string(r.id.sign);
  j["statement"] = inf.statement;
  j["all_equal"] = r.all_equal();
  j["rows"] = nlohmann::json::array();
  for (const auto& row : r.rows) {
    nlohmann::json x;
    x["theorem"] = inf.label;
    x["sign"] = inf.has_sign ? to_string(r.id.sign) : "none";
    x["n"] = row.n;
    x["lhs"] = row.lhs.to_string();
    x["rhs"] = row.rhs.to_string();
    x["equal"] = row.equal;
    j["rows"].push_back(x);
  }
  j["notes"] = r.notes;
  return j;
}

}  // namespace atlas
