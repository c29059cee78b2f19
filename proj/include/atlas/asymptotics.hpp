// Limits of normalized involution counts as the dimension grows, evaluated
// exactly with explicit error bounds.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "atlas/exact.hpp"
#include "atlas/groups.hpp"

namespace atlas {

// value with |true - value| <= error
struct Approx {
  BigRat value;
  BigRat error;
};

Approx operator+(const Approx& a, const Approx& b);
Approx operator-(const Approx& a, const Approx& b);
Approx operator*(const Approx& a, const Approx& b);
Approx scale(const Approx& a, const BigRat& c);

// Fixed-point rendering with `digits` places after the point (rounded).
std::string decimal(const BigRat& x, int digits);
// Scientific rendering with `sig` significant digits, e.g. "1.23e-05".
std::string scientific(const BigRat& x, int sig = 3);

enum class ProductSign { one_plus, one_minus };

// prod_{i>=1} (1 +- q^-(a i + b)) to within eps.  Requires a >= 1 and
// a + b >= 1.
Approx infinite_product(ProductSign sign, int a, int b, const BigInt& q, const BigRat& eps);

enum class LimitKind {
  SO_dim0mod4,
  SO_dim2mod4,
  SO_odd_dim,
  Coset_SO_dim0mod4,
  Coset_SO_dim2mod4,
  Omega_qodd_dim0mod4,
  Omega_qodd_dim2mod4,
  Omega_odd_dim,
  Omega_qeven_dim0mod4,
  Omega_qeven_dim2mod4,
  Coset_Omega_dim0mod4,
  Coset_Omega_dim2mod4,
  Ratio_Omega_over_SO,
};

struct LimitSpec {
  LimitKind kind = LimitKind::SO_dim0mod4;
  BigInt q = 3;
  // Form type of the groups whose counts fill the convergence table; the
  // limits themselves do not depend on it.
  FormType sign = FormType::plus;
};

std::string kind_name(LimitKind k);  // "so-0mod4", "ratio-omega-so", ...
std::optional<LimitKind> parse_kind_name(std::string_view s);
CharParity required_parity(LimitKind k);

// Throws std::invalid_argument on a q of the wrong parity.
Approx limit_value(const LimitSpec& spec, const BigRat& eps);

struct ConvergenceRow {
  int dim = 0;
  BigRat ratio;      // i/q^(n^2), i/q^(n^2+n) in odd dimension, or i(Omega)/i(SO)
  BigRat abs_error;  // |ratio - limit value|
  BigRat bound;      // error bound of the limit value itself
};

// Dimensions step by 4 inside the kind's residue class (starting at 4 or 2),
// by 2 over odd dimensions from 3, and by 2 over all even dimensions from 2
// for the ratio kind.
std::vector<int> table_dims(LimitKind k, int max_dim);
std::vector<ConvergenceRow> convergence_table(const LimitSpec& spec, int max_dim, const BigRat& eps);

}  // namespace atlas
