// Truncated power series in u over Q(q), q-Pochhammer expansions, and the
// generating functions of involution counts.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "atlas/exact.hpp"
#include "atlas/groups.hpp"

namespace atlas {

class USeries {
 public:
  explicit USeries(int trunc = 0);
  static USeries one(int trunc);
  // c * u^k (zero when k > trunc).
  static USeries monomial(const RatFuncQ& c, int k, int trunc);

  int trunc() const { return int(coeffs_.size()) - 1; }
  const RatFuncQ& operator[](int n) const { return coeffs_.at(n); }
  RatFuncQ& operator[](int n) { return coeffs_.at(n); }

  friend USeries operator+(const USeries& a, const USeries& b);
  friend USeries operator-(const USeries& a, const USeries& b);
  friend USeries operator*(const USeries& a, const USeries& b);
  USeries scaled(const RatFuncQ& c) const;
  friend bool operator==(const USeries& a, const USeries& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<RatFuncQ> coeffs_;
};

// Throws std::domain_error for a zero constant term.
USeries series_inverse(const USeries& a);

enum class PochSign { plus_x, minus_x };

// prod_{i>=1} (1 + s u^a q^b y^(i-1)) with y = q^y_qpow and s = +1 for
// plus_x, -1 for minus_x.
struct PochSpec {
  int x_upow = 1;
  int x_qpow = 0;
  PochSign sign = PochSign::minus_x;
  int y_qpow = -2;
};

USeries poch_expand(const PochSpec& spec, int N);

// s u^a q^b
struct UMonomial {
  int sign = 1;
  int upow = 1;
  int qpow = 0;
};

// sum_n (A;y)_n/(y;y)_n x^n against (Ax;y)_inf/(x;y)_inf through u^N, with
// A = a_sign q^A_qpow and y = 1/q^2.
bool qbinom_check(int A_qpow, const UMonomial& x, int N, int a_sign = 1);
// sum_n y^C(n,2) x^n/(y;y)_n against (-x;y)_inf, the latter obtained as the
// reciprocal of sum_n (-x)^n/(y;y)_n.
bool euler_check(const UMonomial& x, int N);
// Same sum compared with 1/(-x;y)_inf instead.
bool euler_reciprocal_check(const UMonomial& x, int N);

enum class Identity {
  so_even_qodd,          // 6.1a: SO^e(2n,q)
  so_odd_dim_qodd,       // 6.1b: SO(2n+1,q)
  coset_so_qodd,         // 6.2:  O^e(2n,q) \ SO^e(2n,q)
  omega_plus_1mod4,      // 6.3a
  omega_minus_1mod4,     // 6.3b
  omega_odd_dim_1mod4,   // 6.3c
  omega_even_3mod4,      // 6.4a
  omega_odd_dim_3mod4,   // 6.4b
  omega_even_qeven,      // 6.6
  coset_omega_qeven,     // 6.7
};

struct IdentityId {
  Identity id = Identity::so_even_qodd;
  FormType sign = FormType::plus;
};

struct IdentityInfo {
  Identity id;
  const char* label;
  bool has_sign;
  const char* statement;  // the series, written out
};

const std::vector<IdentityInfo>& identity_manifest();
std::optional<Identity> parse_identity_label(std::string_view label);
const IdentityInfo& info(Identity id);

USeries gf_lhs(const IdentityId& id, int N);
USeries gf_rhs(const IdentityId& id, int N);

struct VerificationRow {
  int n = 0;
  RatFuncQ lhs;
  RatFuncQ rhs;
  bool equal = false;
};

struct VerificationReport {
  IdentityId id;
  std::vector<VerificationRow> rows;
  std::vector<std::string> notes;
  bool all_equal() const;
};

// Throws std::invalid_argument when N < 1.
VerificationReport verify_identity(const IdentityId& id, int N);
nlohmann::json to_json(const VerificationReport& r);

}  // namespace atlas
