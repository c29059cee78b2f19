#include "atlas/asymptotics.hpp"

#include <array>
#include <cstdio>
#include <stdexcept>

#include "atlas/involutions.hpp"

namespace atlas {

Approx operator+(const Approx& a, const Approx& b) { return {a.value + b.value, a.error + b.error}; }
Approx operator-(const Approx& a, const Approx& b) { return {a.value - b.value, a.error + b.error}; }
Approx operator*(const Approx& a, const Approx& b) {
  BigRat err = abs(a.value) * b.error + abs(b.value) * a.error + a.error * b.error;
  return {a.value * b.value, err};
}
Approx scale(const Approx& a, const BigRat& c) { return {a.value * c, a.error * abs(c)}; }

std::string decimal(const BigRat& x, int digits) {
  BigInt p = ipow(10, digits);
  BigRat s = abs(x) * p + BigRat(1, 2);
  BigInt n = s.get_num() / s.get_den();
  std::string d = n.get_str();
  if (int(d.size()) <= digits) d.insert(0, digits + 1 - d.size(), '0');
  std::string out = (x < 0 && n != 0 ? "-" : "") + d.substr(0, d.size() - digits);
  if (digits > 0) out += "." + d.substr(d.size() - digits);
  return out;
}

std::string scientific(const BigRat& x, int sig) {
  if (x == 0) return "0";
  mpf_class f(x, 256);
  char buf[128];
  gmp_snprintf(buf, sizeof buf, "%.*Fe", sig - 1, f.get_mpf_t());
  return buf;
}

Approx infinite_product(ProductSign sign, int a, int b, const BigInt& q, const BigRat& eps) {
  if (a < 1) throw std::invalid_argument("exponent a*i+b must increase with i");
  if (a + b < 1) throw std::invalid_argument("first factor is 1 +- q^0; exponent a+b must be >= 1");
  if (q < 2) throw std::invalid_argument("q must be at least 2");
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  BigRat p = 1;
  BigRat ratio_tail = BigRat(1) / (1 - BigRat(1, ipow(q, a)));
  for (int i = 1;; ++i) {
    BigRat t(1, ipow(q, a * i + b));
    p *= sign == ProductSign::one_plus ? BigRat(1 + t) : BigRat(1 - t);
    // Remaining factors satisfy |prod - 1| <= e^s - 1 <= 2s with
    // s = q^-(a(i+1)+b) / (1 - q^-a) <= 1/2.
    BigRat s = BigRat(1, ipow(q, a * (i + 1) + b)) * ratio_tail;
    if (s > BigRat(1, 2)) continue;
    BigRat bound = 2 * abs(p) * s;
    if (bound <= eps) return {p, bound};
  }
}

namespace {

struct KindInfo {
  LimitKind k;
  const char* name;
  CharParity parity;
};

constexpr std::array<KindInfo, 13> kKinds{{
    {LimitKind::SO_dim0mod4, "so-0mod4", CharParity::odd},
    {LimitKind::SO_dim2mod4, "so-2mod4", CharParity::odd},
    {LimitKind::SO_odd_dim, "so-odd-dim", CharParity::odd},
    {LimitKind::Coset_SO_dim0mod4, "coset-so-0mod4", CharParity::odd},
    {LimitKind::Coset_SO_dim2mod4, "coset-so-2mod4", CharParity::odd},
    {LimitKind::Omega_qodd_dim0mod4, "omega-qodd-0mod4", CharParity::odd},
    {LimitKind::Omega_qodd_dim2mod4, "omega-qodd-2mod4", CharParity::odd},
    {LimitKind::Omega_odd_dim, "omega-odd-dim", CharParity::odd},
    {LimitKind::Omega_qeven_dim0mod4, "omega-even-0mod4", CharParity::even},
    {LimitKind::Omega_qeven_dim2mod4, "omega-even-2mod4", CharParity::even},
    {LimitKind::Coset_Omega_dim0mod4, "coset-omega-0mod4", CharParity::even},
    {LimitKind::Coset_Omega_dim2mod4, "coset-omega-2mod4", CharParity::even},
    {LimitKind::Ratio_Omega_over_SO, "ratio-omega-so", CharParity::odd},
}};

void check_spec(const LimitSpec& s) {
  if (!is_prime_power(s.q)) throw std::invalid_argument("q = " + s.q.get_str() + " is not a prime power");
  if (parity_of(s.q) != required_parity(s.kind))
    throw std::invalid_argument("parity mismatch: " + kind_name(s.kind) + " needs q " +
                                to_string(required_parity(s.kind)) + ", got q = " + s.q.get_str());
}

}  // namespace

std::string kind_name(LimitKind k) {
  for (const auto& e : kKinds)
    if (e.k == k) return e.name;
  return "?";
}

std::optional<LimitKind> parse_kind_name(std::string_view s) {
  for (const auto& e : kKinds)
    if (s == e.name) return e.k;
  return std::nullopt;
}

CharParity required_parity(LimitKind k) {
  for (const auto& e : kKinds)
    if (e.k == k) return e.parity;
  return CharParity::odd;
}

Approx limit_value(const LimitSpec& spec, const BigRat& eps) {
  check_spec(spec);
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  if (spec.kind == LimitKind::Ratio_Omega_over_SO) return {BigRat(1, 2), 0};
  BigRat inner = eps / 16;
  for (;;) {
    Approx pp = infinite_product(ProductSign::one_plus, 2, -1, spec.q, inner);
    Approx pm = infinite_product(ProductSign::one_minus, 2, -1, spec.q, inner);
    Approx pe = infinite_product(ProductSign::one_plus, 2, 0, spec.q, inner);
    Approx pp2 = pp * pp, pm2 = pm * pm;
    Approx r;
    switch (spec.kind) {
      case LimitKind::SO_dim0mod4:
      case LimitKind::Coset_SO_dim2mod4: r = scale(pp2 + pm2, BigRat(1, 2)); break;
      case LimitKind::SO_dim2mod4:
      case LimitKind::Coset_SO_dim0mod4: r = scale(pp2 - pm2, BigRat(1, 2)); break;
      case LimitKind::SO_odd_dim: r = pe * pe; break;
      case LimitKind::Omega_qodd_dim0mod4: r = scale(pp2 + pm2, BigRat(1, 4)); break;
      case LimitKind::Omega_qodd_dim2mod4: r = scale(pp2 - pm2, BigRat(1, 4)); break;
      case LimitKind::Omega_odd_dim: r = scale(pe * pe, BigRat(1, 2)); break;
      case LimitKind::Omega_qeven_dim0mod4:
      case LimitKind::Coset_Omega_dim2mod4: r = scale(pp + pm, BigRat(1, 2)); break;
      case LimitKind::Omega_qeven_dim2mod4:
      case LimitKind::Coset_Omega_dim0mod4: r = scale(pp - pm, BigRat(1, 2)); break;
      case LimitKind::Ratio_Omega_over_SO: break;
    }
    if (r.error <= eps) return r;
    inner /= 16;
  }
}

std::vector<int> table_dims(LimitKind k, int max_dim) {
  int start = 4, step = 4;
  switch (k) {
    case LimitKind::SO_dim2mod4:
    case LimitKind::Coset_SO_dim2mod4:
    case LimitKind::Omega_qodd_dim2mod4:
    case LimitKind::Omega_qeven_dim2mod4:
    case LimitKind::Coset_Omega_dim2mod4: start = 2; break;
    case LimitKind::SO_odd_dim:
    case LimitKind::Omega_odd_dim: start = 3, step = 2; break;
    case LimitKind::Ratio_Omega_over_SO: start = 2, step = 2; break;
    default: break;
  }
  std::vector<int> dims;
  for (int d = start; d <= max_dim; d += step) dims.push_back(d);
  return dims;
}

namespace {

GroupSpec counted_family(LimitKind k, int dim, FormType t) {
  bool plus = t == FormType::plus;
  switch (k) {
    case LimitKind::SO_dim0mod4:
    case LimitKind::SO_dim2mod4:
      return {plus ? Family::SO_plus : Family::SO_minus, dim, CharParity::odd};
    case LimitKind::SO_odd_dim: return {Family::SO_odd_dim, dim, CharParity::odd};
    case LimitKind::Coset_SO_dim0mod4:
    case LimitKind::Coset_SO_dim2mod4: return {Family::Coset_O_minus_SO, dim, CharParity::odd, t};
    case LimitKind::Omega_qodd_dim0mod4:
    case LimitKind::Omega_qodd_dim2mod4:
      return {plus ? Family::Omega_plus : Family::Omega_minus, dim, CharParity::odd};
    case LimitKind::Omega_odd_dim: return {Family::Omega_odd_dim, dim, CharParity::odd};
    case LimitKind::Omega_qeven_dim0mod4:
    case LimitKind::Omega_qeven_dim2mod4:
      return {plus ? Family::Omega_plus : Family::Omega_minus, dim, CharParity::even};
    case LimitKind::Coset_Omega_dim0mod4:
    case LimitKind::Coset_Omega_dim2mod4:
      return {Family::Coset_O_minus_Omega, dim, CharParity::even, t};
    case LimitKind::Ratio_Omega_over_SO: break;
  }
  throw std::logic_error("no single family for the ratio kind");
}

}  // namespace

std::vector<ConvergenceRow> convergence_table(const LimitSpec& spec, int max_dim, const BigRat& eps) {
  check_spec(spec);
  if (max_dim > kDefaultMaxDim)
    throw std::invalid_argument("max_dim exceeds the counting bound " + std::to_string(kDefaultMaxDim));
  Approx lim = limit_value(spec, eps);
  std::vector<ConvergenceRow> rows;
  for (int dim : table_dims(spec.kind, max_dim)) {
    BigRat ratio;
    if (spec.kind == LimitKind::Ratio_Omega_over_SO) {
      bool plus = spec.sign == FormType::plus;
      GroupSpec so{plus ? Family::SO_plus : Family::SO_minus, dim, CharParity::odd};
      GroupSpec om{plus ? Family::Omega_plus : Family::Omega_minus, dim, CharParity::odd};
      ratio = BigRat(*count_involutions(om, spec.q).value, *count_involutions(so, spec.q).value);
    } else {
      int n = dim / 2;
      int e = dim % 2 ? n * n + n : n * n;
      ratio = BigRat(*count_involutions(counted_family(spec.kind, dim, spec.sign), spec.q).value,
                     ipow(spec.q, e));
    }
    ratio.canonicalize();
    rows.push_back({dim, ratio, abs(ratio - lim.value), lim.error});
  }
  return rows;
}

}  // namespace atlas
