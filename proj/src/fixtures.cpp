#include "atlas/fixtures.hpp"

#include <stdexcept>

namespace atlas {

namespace {

constexpr std::string_view kPlusMinus = "±";
constexpr std::string_view kMinusPlus = "∓";

FixtureEntry sp_row(int n, std::string expr) {
  std::string g = "Sp(" + std::to_string(2 * n) + ",q)";
  return {ReferenceTable::sp, n, g, g, std::move(expr), false, "no type-dependent signs"};
}

FixtureEntry omega_row(int n, std::string expr, bool plus_only = false) {
  std::string d = std::to_string(2 * n);
  std::string pm = plus_only ? "+" : "±";
  std::string om = "Omega^" + pm + "(" + d + ",q)";
  std::string counted = n % 2 ? "O^" + pm + "(" + d + ",q) \\ " + om : om;
  std::string note = plus_only ? "plus type only"
                     : expr.find("±") != std::string::npos || expr.find("∓") != std::string::npos
                         ? "upper sign for the plus type, lower for the minus type"
                         : "same polynomial for both types";
  return {ReferenceTable::omega, n, om, counted, std::move(expr), plus_only, note};
}

}  // namespace

std::string to_string(ReferenceTable t) { return t == ReferenceTable::sp ? "sp" : "omega"; }

std::optional<ReferenceTable> parse_reference_table(std::string_view s) {
  if (s == "sp") return ReferenceTable::sp;
  if (s == "omega") return ReferenceTable::omega;
  return std::nullopt;
}

std::string resolve_signs(std::string_view e, FormType t) {
  std::string out;
  for (size_t i = 0; i < e.size();) {
    if (e.substr(i, kPlusMinus.size()) == kPlusMinus) {
      out += t == FormType::plus ? '+' : '-';
      i += kPlusMinus.size();
    } else if (e.substr(i, kMinusPlus.size()) == kMinusPlus) {
      out += t == FormType::plus ? '-' : '+';
      i += kMinusPlus.size();
    } else {
      out += e[i++];
    }
  }
  return out;
}

std::vector<FormType> FixtureEntry::types() const {
  if (table == ReferenceTable::sp || plus_only) return {FormType::plus};
  return {FormType::plus, FormType::minus};
}

std::string FixtureEntry::resolved(FormType t) const {
  if (t == FormType::minus && (table == ReferenceTable::sp || plus_only))
    throw std::invalid_argument("row " + row_label + " has no minus-type reading");
  return resolve_signs(expression, t);
}

PolyQ FixtureEntry::polynomial(FormType t) const { return PolyQ::parse(resolved(t)); }

std::optional<GroupSpec> FixtureEntry::spec(FormType t) const {
  if (table == ReferenceTable::sp) return std::nullopt;
  int dim = 2 * n;
  if (n % 2)
    return GroupSpec{Family::Coset_O_minus_Omega, dim, CharParity::even, t};
  return GroupSpec{t == FormType::plus ? Family::Omega_plus : Family::Omega_minus, dim, CharParity::even};
}

const std::vector<FixtureEntry>& reference_table(ReferenceTable t) {
  static const std::vector<FixtureEntry> sp{
      sp_row(2, "q^6 + q^4 - q^2"),
      sp_row(3, "q^12 + q^10 - q^4"),
      sp_row(4, "q^20 + q^18 + q^16 - q^12 - q^10"),
      sp_row(5, "q^30 + q^28 + q^26 + q^24 - q^20 - q^18 - q^16 - q^14 + q^10"),
      sp_row(6, "q^42 + q^40 + q^38 + 2q^36 - q^30 - q^28 - 2q^26 - q^24 + q^14"),
      sp_row(7, "q^56 + q^54 + q^52 + 2q^50 + q^48 + q^46 - q^42 - 2q^40 - 2q^38 - 2q^36 - q^34 - q^32 + "
                "q^28 + q^26 + q^24"),
      sp_row(8, "q^72 + q^70 + q^68 + 2q^66 + 2q^64 + q^62 + q^60 - q^56 - 2q^54 - 2q^52 - 3q^50 - 2q^48 - "
                "2q^46 - q^44 + q^40 + q^38 + q^36 + q^34 + q^32 + q^30 - q^24"),
  };
  static const std::vector<FixtureEntry> omega{
      omega_row(2, "q^4"),
      omega_row(3, "q^9 ∓ q^6"),
      omega_row(4, "q^16 + q^12 - q^4"),
      omega_row(5, "q^25 + q^21 ∓ q^20 ∓ q^16 - q^13 ± q^8"),
      omega_row(6, "q^36 + q^32 + q^30 + q^28 - q^22 - q^20 - q^18 - q^16 + q^10"),
      omega_row(7, "q^49 + q^45 + q^43 ∓ q^42 + q^41 ∓ q^38 ∓ q^36 - q^35 ∓ q^34 - q^33 - q^31 - q^29 ± "
                   "q^28 ± q^26 ± q^24 + q^23 ± q^22 ∓ q^16"),
      omega_row(8, "q^64 + q^60 + q^58 + 2q^56 + q^54 + q^52 - q^46 - 2q^44 - 2q^42 - 2q^40 - q^38 - q^36 + "
                   "q^30 + q^28 + q^26",
                true),
  };
  return t == ReferenceTable::sp ? sp : omega;
}

}  // namespace atlas
