#include "oracle_suite.hpp"

#include "atlas/fixtures.hpp"
#include "atlas/involutions.hpp"

using namespace atlas;

namespace suite {

std::vector<Case> default_cases() {
  std::vector<Case> v;
  auto both = [&](int dim, int q) {
    v.push_back({FormKind::quadratic, dim, FormType::plus, q});
    v.push_back({FormKind::quadratic, dim, FormType::minus, q});
  };
  // Largest orders: O^-(6,2) 103680, O(5,3) 103680.  Dimension 6 for q >= 3
  // and odd dimensions with q even are out of reach or out of scope.
  for (int d : {2, 4, 6}) both(d, 2);
  both(2, 3);
  v.push_back({FormKind::quadratic, 3, FormType::plus, 3});
  both(4, 3);
  v.push_back({FormKind::quadratic, 5, FormType::plus, 3});
  for (int d : {2, 4}) both(d, 4);
  both(2, 5);
  v.push_back({FormKind::quadratic, 3, FormType::plus, 5});
  both(4, 5);
  v.push_back({FormKind::alternating, 4, FormType::plus, 2});
  v.push_back({FormKind::alternating, 4, FormType::plus, 3});
  return v;
}

namespace {

std::string label(Family f, int dim, int q, FormType t) {
  GroupSpec g{f, dim, parity_of(q), t};
  return describe(g) + " at q=" + std::to_string(q);
}

Comparison compare(Family f, int dim, int q, FormType t, uint64_t brute) {
  GroupSpec g{f, dim, parity_of(q), t};
  return {label(f, dim, q, t), *count_involutions(g, q).value, brute};
}

}  // namespace

GroupResult run_case(const Case& c) {
  auto F = std::make_shared<FieldTable>(c.q);
  FormSpec form = standard_form(c.kind, c.dim, c.type, *F);
  IsometryGroup G = build_isometry_group(form, F);
  GroupResult r;
  r.q = c.q;
  r.order = G.size();
  bool plus = c.type == FormType::plus;
  bool odd_dim = c.dim % 2;
  bool qodd = c.q % 2;

  if (c.kind == FormKind::alternating) {
    r.name = "Sp(" + std::to_string(c.dim) + "," + std::to_string(c.q) + ")";
    r.order_ok = BigInt(std::to_string(r.order)) == symplectic_order_int(c.dim, c.q);
    BigInt expected;
    if (qodd) {
      expected = symplectic_involutions_qodd(c.dim, c.q);
    } else {
      for (const auto& e : reference_table(ReferenceTable::sp))
        if (2 * e.n == c.dim) expected = e.polynomial(FormType::plus).eval(BigRat(c.q)).get_num();
    }
    r.counts.push_back({r.name + (qodd ? " (eigenspace sum)" : " (fixture)"), expected,
                        count_involutions_bruteforce(G, Subset::all)});
    return r;
  }

  Family O = odd_dim ? Family::O_odd_dim : plus ? Family::O_plus : Family::O_minus;
  Family SO = odd_dim ? Family::SO_odd_dim : plus ? Family::SO_plus : Family::SO_minus;
  Family Om = odd_dim ? Family::Omega_odd_dim : plus ? Family::Omega_plus : Family::Omega_minus;
  GroupSpec og{O, c.dim, parity_of(c.q)};
  r.name = describe(og);
  r.name = r.name.substr(0, r.name.find(",q)")) + "," + std::to_string(c.q) + ")";
  r.order_ok = BigInt(std::to_string(r.order)) == order_int(og, c.q);

  IsometryGroup W = omega_subgroup(G);
  r.omega_order = W.size();
  r.counts.push_back(compare(O, c.dim, c.q, c.type, count_involutions_bruteforce(G, Subset::all)));
  r.counts.push_back(compare(Om, c.dim, c.q, c.type, count_involutions_bruteforce(G, Subset::omega, &W)));
  uint64_t coset = count_involutions_bruteforce(G, Subset::coset, &W);
  if (qodd) {
    r.counts.push_back(compare(SO, c.dim, c.q, c.type, count_involutions_bruteforce(G, Subset::det1)));
    if (!odd_dim) r.counts.push_back(compare(Family::Coset_O_minus_SO, c.dim, c.q, c.type, coset));
    r.membership = check_eigenspace_classifier(G);
    r.derived_order = derived_subgroup(special_subgroup(G)).size();
  } else {
    r.counts.push_back(compare(Family::Coset_O_minus_Omega, c.dim, c.q, c.type, coset));
    r.membership = check_rank_parity(G);
    r.derived_order = derived_subgroup(G).size();
  }
  return r;
}

}  // namespace suite
