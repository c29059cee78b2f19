// Finite orthogonal and symplectic groups: identifiers and exact orders.
#pragma once

#include <optional>
#include <string>

#include "atlas/exact.hpp"

namespace atlas {

enum class Family {
  O_plus,
  O_minus,
  O_odd_dim,
  SO_plus,
  SO_minus,
  SO_odd_dim,
  Omega_plus,
  Omega_minus,
  Omega_odd_dim,
  Sp,
  Coset_O_minus_SO,     // O^e(N,q) \ SO^e(N,q), q odd
  Coset_O_minus_Omega,  // O^e(N,q) \ Omega^e(N,q), q even
};

enum class CharParity { odd, even };
enum class FormType { plus, minus };
enum class WittType { type0, typeW, type1, typeD };

struct GroupSpec {
  Family family = Family::O_plus;
  int dim = 0;
  CharParity parity = CharParity::odd;
  FormType coset_type = FormType::plus;  // read only by the two coset families

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

std::string family_name(Family f);
std::optional<Family> parse_family_name(std::string_view s);
std::string to_string(CharParity p);
std::string to_string(FormType t);
std::string to_string(WittType w);
// e.g. "Omega^-(6,q)" or "O^+(4,q) \ SO^+(4,q)".
std::string describe(const GroupSpec& g);

bool is_coset(Family f);
bool is_odd_dim_family(Family f);
// Plus/minus type of the ambient orthogonal space (plus for odd dimension).
FormType form_type(const GroupSpec& g);

// Throws std::invalid_argument naming the violated condition.
void validate(const GroupSpec& g);

// Prime powers up to 2^31.  Fills p and k when requested.
bool is_prime_power(const BigInt& q, BigInt* p = nullptr, int* k = nullptr);
// Validates q and its parity against g; throws std::invalid_argument.
void check_q(const GroupSpec& g, const BigInt& q);
CharParity parity_of(const BigInt& q);

PolyQ order_poly(const GroupSpec& g);
BigInt order_int(const GroupSpec& g, const BigInt& q);

// Building blocks shared with the counting formulas.  `sign` is +1/-1; an
// odd dimension ignores it.  |O^-(0)| is undefined and throws.
PolyQ orthogonal_order_poly(int sign, int dim, CharParity parity);
PolyQ symplectic_order_poly(int dim);
BigInt orthogonal_order_int(int sign, int dim, const BigInt& q);
BigInt symplectic_order_int(int dim, const BigInt& q);

}  // namespace atlas
