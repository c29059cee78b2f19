// Reference polynomials for involution counts with q even, kept as canonical
// text.  "±" and "∓" mark signs that follow the form type: the upper sign
// belongs to the plus type.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "atlas/exact.hpp"
#include "atlas/groups.hpp"

namespace atlas {

enum class ReferenceTable { sp, omega };
std::string to_string(ReferenceTable t);
std::optional<ReferenceTable> parse_reference_table(std::string_view s);

struct FixtureEntry {
  ReferenceTable table = ReferenceTable::omega;
  int n = 0;               // the group has dimension 2n
  std::string row_label;   // group whose character degree sum the row records
  std::string counted;     // set whose involutions are counted
  std::string expression;  // canonical text with ± / ∓
  bool plus_only = false;  // row given for the plus type only
  std::string sign_note;

  std::vector<FormType> types() const;
  std::string resolved(FormType t) const;
  PolyQ polynomial(FormType t) const;
  // Family whose count_involutions_poly should equal the row (omega table).
  std::optional<GroupSpec> spec(FormType t) const;
};

const std::vector<FixtureEntry>& reference_table(ReferenceTable t);

// Replaces ± and ∓ by the signs of the given type.
std::string resolve_signs(std::string_view expression, FormType t);

}  // namespace atlas
