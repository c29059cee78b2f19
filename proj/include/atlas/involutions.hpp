// Involution counts (identity included) as sums of centralizer-index terms.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "atlas/exact.hpp"
#include "atlas/groups.hpp"

namespace atlas {

enum class OmegaBranch { one_mod_4, three_mod_4 };
std::string to_string(OmegaBranch b);
OmegaBranch branch_of(const BigInt& q);  // q odd

// One order entering a term: O^sign(dim) for orthogonal (odd dim means
// O(dim)), or Sp(dim).
struct OrderFactor {
  enum Kind { orthogonal, symplectic } kind = orthogonal;
  int sign = 1;
  int dim = 0;
};

// coeff * q^q_exp * prod(numer) / prod(denom)
struct RatioTerm {
  BigRat coeff = 1;
  int q_exp = 0;
  std::vector<OrderFactor> numer;
  std::vector<OrderFactor> denom;
};

struct InvolutionFormula {
  std::string id;
  std::vector<RatioTerm> terms;
};

// The term list for a spec.  Terms involving |O^-(0,q)| in a denominator are
// omitted.  `branch` is required for Omega with q odd.
InvolutionFormula involution_formula(const GroupSpec& g, std::optional<OmegaBranch> branch = {});

BigRat evaluate(const InvolutionFormula& f, const BigInt& q);
RatFuncQ evaluate(const InvolutionFormula& f, CharParity parity);

struct CountReport {
  GroupSpec spec;
  std::optional<BigInt> q;  // absent when symbolic
  std::optional<OmegaBranch> branch;
  std::optional<BigInt> value;
  std::optional<PolyQ> poly;
  std::string formula_id;
  std::string note;

  std::string value_string() const;
};

inline constexpr int kDefaultMaxDim = 60;

CountReport count_involutions(const GroupSpec& g, const BigInt& q, int max_dim = kDefaultMaxDim);
CountReport count_involutions_poly(const GroupSpec& g, std::optional<OmegaBranch> branch = {});

struct OmegaClassQuery {
  int d = 0;
  WittType witt_minus = WittType::type0;
  BigInt q = 3;
};

// Whether an involution class of SO with (-1)-eigenspace of dimension d and
// the given restricted type lies in Omega (q odd).
bool omega_class_membership(const OmegaClassQuery& query);

// Character degree sum of SO^sign(4m+2,q), q odd, which equals the number of
// involutions in O^sign(4m+2,q) \ SO^sign(4m+2,q).
CountReport char_degree_sum_via_involutions(int m, const BigInt& q, FormType sign);

nlohmann::json to_json(const CountReport& r);

}  // namespace atlas
