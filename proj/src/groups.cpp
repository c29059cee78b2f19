#include "atlas/groups.hpp"

#include <array>
#include <stdexcept>

namespace atlas {

namespace {

struct FamilyInfo {
  Family f;
  const char* name;
};

constexpr std::array<FamilyInfo, 12> kFamilies{{
    {Family::O_plus, "O_plus"},
    {Family::O_minus, "O_minus"},
    {Family::O_odd_dim, "O_odd_dim"},
    {Family::SO_plus, "SO_plus"},
    {Family::SO_minus, "SO_minus"},
    {Family::SO_odd_dim, "SO_odd_dim"},
    {Family::Omega_plus, "Omega_plus"},
    {Family::Omega_minus, "Omega_minus"},
    {Family::Omega_odd_dim, "Omega_odd_dim"},
    {Family::Sp, "Sp"},
    {Family::Coset_O_minus_SO, "Coset_O_minus_SO"},
    {Family::Coset_O_minus_Omega, "Coset_O_minus_Omega"},
}};

[[noreturn]] void reject(const GroupSpec& g, const std::string& why) {
  throw std::invalid_argument(family_name(g.family) + " dim " + std::to_string(g.dim) + ": " + why);
}

}  // namespace

std::string family_name(Family f) {
  for (const auto& e : kFamilies)
    if (e.f == f) return e.name;
  return "?";
}

std::optional<Family> parse_family_name(std::string_view s) {
  for (const auto& e : kFamilies)
    if (s == e.name) return e.f;
  return std::nullopt;
}

std::string to_string(CharParity p) { return p == CharParity::odd ? "odd" : "even"; }
std::string to_string(FormType t) { return t == FormType::plus ? "plus" : "minus"; }
std::string to_string(WittType w) {
  switch (w) {
    case WittType::type0: return "type0";
    case WittType::typeW: return "typeW";
    case WittType::type1: return "type1";
    case WittType::typeD: return "typeD";
  }
  return "?";
}

bool is_coset(Family f) { return f == Family::Coset_O_minus_SO || f == Family::Coset_O_minus_Omega; }

bool is_odd_dim_family(Family f) {
  return f == Family::O_odd_dim || f == Family::SO_odd_dim || f == Family::Omega_odd_dim;
}

FormType form_type(const GroupSpec& g) {
  switch (g.family) {
    case Family::O_minus:
    case Family::SO_minus:
    case Family::Omega_minus: return FormType::minus;
    case Family::Coset_O_minus_SO:
    case Family::Coset_O_minus_Omega: return g.coset_type;
    default: return FormType::plus;
  }
}

std::string describe(const GroupSpec& g) {
  std::string pm = form_type(g) == FormType::plus ? "+" : "-";
  std::string args = "(" + std::to_string(g.dim) + ",q)";
  switch (g.family) {
    case Family::O_plus:
    case Family::O_minus: return "O^" + pm + args;
    case Family::O_odd_dim: return "O" + args;
    case Family::SO_plus:
    case Family::SO_minus: return "SO^" + pm + args;
    case Family::SO_odd_dim: return "SO" + args;
    case Family::Omega_plus:
    case Family::Omega_minus: return "Omega^" + pm + args;
    case Family::Omega_odd_dim: return "Omega" + args;
    case Family::Sp: return "Sp" + args;
    case Family::Coset_O_minus_SO: return "O^" + pm + args + " \\ SO^" + pm + args;
    case Family::Coset_O_minus_Omega: return "O^" + pm + args + " \\ Omega^" + pm + args;
  }
  return "?";
}

void validate(const GroupSpec& g) {
  if (g.dim < 0) reject(g, "negative dimension");
  bool odd_dim = g.dim % 2 == 1;
  if (is_odd_dim_family(g.family)) {
    if (!odd_dim) reject(g, "family requires odd dimension");
  } else if (odd_dim) {
    reject(g, "family requires even dimension");
  }
  switch (g.family) {
    case Family::O_minus:
    case Family::SO_minus:
    case Family::Omega_minus:
      if (g.dim == 0) reject(g, "O^-(0,q) undefined");
      break;
    case Family::Coset_O_minus_SO:
    case Family::Coset_O_minus_Omega:
      if (g.dim == 0) reject(g, "coset families need dim >= 2");
      break;
    default: break;
  }
  switch (g.family) {
    case Family::SO_plus:
    case Family::SO_minus:
    case Family::SO_odd_dim:
    case Family::Omega_odd_dim:
    case Family::Coset_O_minus_SO:
      if (g.parity != CharParity::odd) reject(g, "defined here only for q odd");
      break;
    case Family::Coset_O_minus_Omega:
      if (g.parity != CharParity::even) reject(g, "defined here only for q even");
      break;
    default: break;
  }
}

bool is_prime_power(const BigInt& q, BigInt* p, int* k) {
  if (q < 2 || q > BigInt(1) << 31) return false;
  unsigned long n = q.get_ui();
  unsigned long prime = n;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      prime = d;
      break;
    }
  int e = 0;
  while (n % prime == 0) {
    n /= prime;
    ++e;
  }
  if (n != 1) return false;
  if (p) *p = prime;
  if (k) *k = e;
  return true;
}

CharParity parity_of(const BigInt& q) { return q % 2 == 0 ? CharParity::even : CharParity::odd; }

void check_q(const GroupSpec& g, const BigInt& q) {
  if (!is_prime_power(q)) throw std::invalid_argument("q = " + q.get_str() + " is not a prime power <= 2^31");
  if (parity_of(q) != g.parity)
    throw std::invalid_argument("parity mismatch: q = " + q.get_str() + " but spec requires q " +
                                to_string(g.parity));
}

PolyQ symplectic_order_poly(int dim) {
  if (dim < 0 || dim % 2) throw std::invalid_argument("Sp needs even dimension");
  int n = dim / 2;
  PolyQ r = PolyQ::monomial(1, n * n);
  for (int i = 1; i <= n; ++i) r *= PolyQ::monomial(1, 2 * i) - PolyQ(1);
  return r;
}

PolyQ orthogonal_order_poly(int sign, int dim, CharParity parity) {
  if (dim < 0) throw std::invalid_argument("negative dimension");
  if (dim % 2 == 1) {
    int n = dim / 2;
    PolyQ sp = symplectic_order_poly(2 * n);
    return parity == CharParity::odd ? sp.scaled(2) : sp;
  }
  int n = dim / 2;
  if (n == 0) {
    if (sign < 0) throw std::invalid_argument("O^-(0,q) undefined");
    return PolyQ(1);
  }
  PolyQ r = PolyQ::monomial(2, n * (n - 1)) * (PolyQ::monomial(1, n) - PolyQ(sign > 0 ? 1 : -1));
  for (int i = 1; i < n; ++i) r *= PolyQ::monomial(1, 2 * i) - PolyQ(1);
  return r;
}

BigInt symplectic_order_int(int dim, const BigInt& q) {
  if (dim < 0 || dim % 2) throw std::invalid_argument("Sp needs even dimension");
  int n = dim / 2;
  BigInt r = ipow(q, n * n);
  for (int i = 1; i <= n; ++i) r *= ipow(q, 2 * i) - 1;
  return r;
}

BigInt orthogonal_order_int(int sign, int dim, const BigInt& q) {
  if (dim < 0) throw std::invalid_argument("negative dimension");
  if (dim % 2 == 1) {
    BigInt sp = symplectic_order_int(dim - 1, q);
    return parity_of(q) == CharParity::odd ? BigInt(2 * sp) : sp;
  }
  int n = dim / 2;
  if (n == 0) {
    if (sign < 0) throw std::invalid_argument("O^-(0,q) undefined");
    return 1;
  }
  BigInt r = 2 * ipow(q, n * (n - 1)) * (ipow(q, n) - (sign > 0 ? 1 : -1));
  for (int i = 1; i < n; ++i) r *= ipow(q, 2 * i) - 1;
  return r;
}

namespace {

int ambient_sign(const GroupSpec& g) { return form_type(g) == FormType::plus ? 1 : -1; }

// Divisor taking |O| to the requested subgroup or coset; 0 flags the
// trivial groups in dimensions 0 and 1 whose order is 1 by definition.
int order_divisor(const GroupSpec& g) {
  switch (g.family) {
    case Family::O_plus:
    case Family::O_minus:
    case Family::O_odd_dim: return 1;
    case Family::Sp: return 1;
    case Family::SO_plus:
    case Family::SO_minus:
    case Family::SO_odd_dim: return g.dim <= 1 ? 0 : 2;
    case Family::Omega_plus:
    case Family::Omega_minus:
    case Family::Omega_odd_dim:
      if (g.dim <= 1) return 0;
      return g.parity == CharParity::odd ? 4 : 2;
    case Family::Coset_O_minus_SO:
    case Family::Coset_O_minus_Omega: return 2;
  }
  return 1;
}

}  // namespace

PolyQ order_poly(const GroupSpec& g) {
  validate(g);
  if (g.family == Family::Sp) return symplectic_order_poly(g.dim);
  int div = order_divisor(g);
  if (div == 0) return PolyQ(1);
  return orthogonal_order_poly(ambient_sign(g), g.dim, g.parity).scaled(BigRat(1, div));
}

BigInt order_int(const GroupSpec& g, const BigInt& q) {
  validate(g);
  check_q(g, q);
  if (g.family == Family::Sp) return symplectic_order_int(g.dim, q);
  int div = order_divisor(g);
  if (div == 0) return 1;
  BigInt o = orthogonal_order_int(ambient_sign(g), g.dim, q);
  if (o % div != 0) throw std::logic_error("group order not divisible by " + std::to_string(div));
  return o / div;
}

}  // namespace atlas
