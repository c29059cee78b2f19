#include "atlas/involutions.hpp"

#include <stdexcept>

namespace atlas {

std::string to_string(OmegaBranch b) { return b == OmegaBranch::one_mod_4 ? "1mod4" : "3mod4"; }

OmegaBranch branch_of(const BigInt& q) {
  if (q % 2 == 0) throw std::invalid_argument("q mod 4 branch needs q odd");
  return q % 4 == 1 ? OmegaBranch::one_mod_4 : OmegaBranch::three_mod_4;
}

namespace {

OrderFactor orth(int sign, int dim) { return {OrderFactor::orthogonal, sign, dim}; }
OrderFactor sp(int dim) { return {OrderFactor::symplectic, 1, dim}; }

bool undefined_minus_zero(const OrderFactor& f) {
  return f.kind == OrderFactor::orthogonal && f.sign < 0 && f.dim == 0;
}

// Appends |G| / (|X| |Y|) unless a denominator is |O^-(0,q)|, whose
// reciprocal counts as zero.
void add_ratio(InvolutionFormula& f, OrderFactor g, OrderFactor x, OrderFactor y, BigRat coeff = 1) {
  if (undefined_minus_zero(x) || undefined_minus_zero(y)) return;
  f.terms.push_back(RatioTerm{coeff, 0, {g}, {x, y}});
}

// Eigenspace decomposition, q odd.  The (-1)-eigenspace has dimension k and
// Witt sign s1; the (+1)-eigenspace then has sign s * s1 when N is even.
// `keep(k, s1)` filters the classes.
template <class Keep>
void qodd_classes(InvolutionFormula& f, int sign, int N, Keep keep) {
  OrderFactor g = orth(sign, N);
  if (N % 2 == 0) {
    int n = N / 2;
    if (sign > 0) {
      for (int k = 0; k <= 2 * n; ++k)
        if (keep(k, +1)) add_ratio(f, g, orth(+1, k), orth(+1, 2 * n - k));
      for (int k = 1; k <= 2 * n - 1; ++k)
        if (keep(k, -1)) add_ratio(f, g, orth(-1, k), orth(-1, 2 * n - k));
    } else {
      for (int k = 0; k <= 2 * n - 1; ++k)
        if (keep(k, +1)) add_ratio(f, g, orth(+1, k), orth(-1, 2 * n - k));
      for (int k = 1; k <= 2 * n; ++k)
        if (keep(k, -1)) add_ratio(f, g, orth(-1, k), orth(+1, 2 * n - k));
    }
  } else {
    int n = N / 2;
    for (int k = 0; k <= 2 * n + 1; ++k)
      if (keep(k, +1)) add_ratio(f, g, orth(+1, k), orth(+1, N - k));
    for (int k = 1; k <= 2 * n; ++k)
      if (keep(k, -1)) add_ratio(f, g, orth(-1, k), orth(-1, N - k));
  }
}

// Involution classes of O^sign(2n,q), q even, indexed by k = rank(1+g).
// a_type: A_k classes (k even); b_type: B_k (k even >= 2); c_type: C_k (k odd).
void qeven_classes(InvolutionFormula& f, int sign, int n, bool a_type, bool b_type, bool c_type) {
  OrderFactor g = orth(sign, 2 * n);
  if (a_type)
    for (int k = 0; k <= (sign > 0 ? n : n - 1); k += 2) {
      if (undefined_minus_zero(orth(sign, 2 * n - 2 * k))) continue;
      int e = k * (k - 1) / 2 + k * (2 * n - 2 * k);
      f.terms.push_back(RatioTerm{1, -e, {g}, {sp(k), orth(sign, 2 * n - 2 * k)}});
    }
  if (b_type)
    for (int k = 2; k <= n; k += 2) {
      int e = k * (k + 1) / 2 + (k - 1) * (2 * n - 2 * k) - 1;
      f.terms.push_back(RatioTerm{BigRat(1, 2), -e, {g}, {sp(k - 2), sp(2 * n - 2 * k)}});
    }
  if (c_type)
    for (int k = 1; k <= n; k += 2) {
      int e = k * (k - 1) / 2 + (k - 1) * (2 * n - 2 * k);
      f.terms.push_back(RatioTerm{BigRat(1, 2), -e, {g}, {sp(k - 1), sp(2 * n - 2 * k)}});
    }
}

[[noreturn]] void unsupported(const GroupSpec& g, const std::string& why) {
  throw std::invalid_argument("no involution formula for " + describe(g) + ": " + why);
}

}  // namespace

InvolutionFormula involution_formula(const GroupSpec& g, std::optional<OmegaBranch> branch) {
  validate(g);
  InvolutionFormula f;
  int N = g.dim;
  int n = N / 2;
  int sign = form_type(g) == FormType::plus ? 1 : -1;
  auto all = [](int, int) { return true; };
  auto even_k = [](int k, int) { return k % 2 == 0; };

  if (g.family == Family::Sp) unsupported(g, "symplectic counts are kept as fixtures only");

  if (g.parity == CharParity::odd) {
    switch (g.family) {
      case Family::O_plus:
      case Family::O_minus:
      case Family::O_odd_dim:
        f.id = N % 2 ? "o-odd-dim-qodd" : "o-qodd";
        qodd_classes(f, sign, N, all);
        return f;
      case Family::SO_plus:
      case Family::SO_minus:
      case Family::SO_odd_dim:
        f.id = N % 2 ? "so-odd-dim-qodd" : "so-qodd";
        qodd_classes(f, sign, N, even_k);
        return f;
      case Family::Coset_O_minus_SO:
        f.id = "coset-so-qodd";
        for (int R = 0; R <= n - 1; ++R)
          add_ratio(f, orth(sign, N), orth(1, 2 * R + 1), orth(1, N - 2 * R - 1), 2);
        return f;
      case Family::Omega_plus:
      case Family::Omega_minus:
      case Family::Omega_odd_dim: {
        if (!branch) unsupported(g, "Omega with q odd needs the q mod 4 branch");
        // A class with (-1)-eigenspace of dimension 2R and sign s1 lies in
        // Omega iff v = R(q-1)/2 + [s1 = -1] is even.
        bool one_mod_4 = *branch == OmegaBranch::one_mod_4;
        f.id = std::string(N % 2 ? "omega-odd-dim-qodd-" : "omega-qodd-") + to_string(*branch);
        qodd_classes(f, sign, N, [one_mod_4](int k, int s1) {
          if (k % 2) return false;
          int R = k / 2;
          int v = (one_mod_4 ? 0 : R) + (s1 < 0 ? 1 : 0);
          return v % 2 == 0;
        });
        return f;
      }
      default: break;
    }
  } else {
    switch (g.family) {
      case Family::O_plus:
      case Family::O_minus:
        f.id = "o-qeven";
        qeven_classes(f, sign, n, true, true, true);
        return f;
      case Family::Omega_plus:
      case Family::Omega_minus:
        f.id = "omega-qeven";
        qeven_classes(f, sign, n, true, true, false);
        return f;
      case Family::Coset_O_minus_Omega:
        f.id = "coset-omega-qeven";
        qeven_classes(f, sign, n, false, false, true);
        return f;
      case Family::O_odd_dim: unsupported(g, "odd dimension with q even is symplectic");
      default: break;
    }
  }
  unsupported(g, "family not available for this characteristic");
}

namespace {

BigInt factor_int(const OrderFactor& f, const BigInt& q) {
  return f.kind == OrderFactor::symplectic ? symplectic_order_int(f.dim, q)
                                           : orthogonal_order_int(f.sign, f.dim, q);
}

PolyQ factor_poly(const OrderFactor& f, CharParity parity) {
  return f.kind == OrderFactor::symplectic ? symplectic_order_poly(f.dim)
                                           : orthogonal_order_poly(f.sign, f.dim, parity);
}

}  // namespace

BigRat evaluate(const InvolutionFormula& f, const BigInt& q) {
  BigRat total = 0;
  for (const auto& t : f.terms) {
    BigInt num = t.coeff.get_num(), den = t.coeff.get_den();
    for (const auto& x : t.numer) num *= factor_int(x, q);
    for (const auto& x : t.denom) den *= factor_int(x, q);
    if (t.q_exp >= 0) num *= ipow(q, t.q_exp);
    else den *= ipow(q, -t.q_exp);
    BigRat term(num, den);
    term.canonicalize();
    total += term;
  }
  return total;
}

RatFuncQ evaluate(const InvolutionFormula& f, CharParity parity) {
  RatFuncQ total;
  for (const auto& t : f.terms) {
    PolyQ num(t.coeff), den(1);
    for (const auto& x : t.numer) num *= factor_poly(x, parity);
    for (const auto& x : t.denom) den *= factor_poly(x, parity);
    if (t.q_exp >= 0) num = num.shifted(t.q_exp);
    else den = den.shifted(-t.q_exp);
    total += RatFuncQ(num, den);
  }
  return total;
}

std::string CountReport::value_string() const {
  if (value) return value->get_str();
  if (poly) return poly->to_string();
  return "";
}

CountReport count_involutions(const GroupSpec& g, const BigInt& q, int max_dim) {
  validate(g);
  check_q(g, q);
  if (g.dim > max_dim)
    throw std::invalid_argument("dimension " + std::to_string(g.dim) + " exceeds bound " +
                                std::to_string(max_dim));
  std::optional<OmegaBranch> branch;
  if (g.parity == CharParity::odd &&
      (g.family == Family::Omega_plus || g.family == Family::Omega_minus ||
       g.family == Family::Omega_odd_dim))
    branch = branch_of(q);
  InvolutionFormula f = involution_formula(g, branch);
  BigRat v = evaluate(f, q);
  if (v.get_den() != 1 || v < 0)
    throw std::logic_error("non-integral involution count " + to_string(v) + " for " + describe(g));
  CountReport r;
  r.spec = g;
  r.q = q;
  r.branch = branch;
  r.value = v.get_num();
  r.formula_id = f.id;
  return r;
}

CountReport count_involutions_poly(const GroupSpec& g, std::optional<OmegaBranch> branch) {
  validate(g);
  bool needs_branch = g.parity == CharParity::odd &&
                      (g.family == Family::Omega_plus || g.family == Family::Omega_minus ||
                       g.family == Family::Omega_odd_dim);
  if (!needs_branch) branch.reset();
  InvolutionFormula f = involution_formula(g, branch);
  RatFuncQ v = evaluate(f, g.parity);
  if (!v.is_polynomial())
    throw std::logic_error("involution count of " + describe(g) +
                           " does not reduce to a polynomial: " + v.to_string());
  CountReport r;
  r.spec = g;
  r.branch = branch;
  r.poly = v.num();
  r.formula_id = f.id;
  return r;
}

bool omega_class_membership(const OmegaClassQuery& query) {
  if (query.d < 0 || query.d % 2) throw std::invalid_argument("d must be even and nonnegative");
  if (query.q % 2 == 0) throw std::invalid_argument("q must be odd");
  if (query.witt_minus != WittType::type0 && query.witt_minus != WittType::typeW)
    throw std::invalid_argument("restricted type must be type0 or typeW");
  BigRat v(query.d * (query.q - 1), 4);
  v.canonicalize();
  if (query.witt_minus == WittType::typeW) v += 1;
  if (v.get_den() != 1) throw std::invalid_argument("v_- = " + to_string(v) + " is not an integer");
  return v.get_num() % 2 == 0;
}

CountReport char_degree_sum_via_involutions(int m, const BigInt& q, FormType sign) {
  if (m < 0) throw std::invalid_argument("m must be nonnegative");
  if (q % 2 == 0) throw std::invalid_argument("character degree sum identity needs q odd");
  GroupSpec g{Family::Coset_O_minus_SO, 4 * m + 2, CharParity::odd, sign};
  CountReport r = count_involutions(g, q);
  r.note = "character degree sum of SO^" + std::string(sign == FormType::plus ? "+" : "-") + "(" +
           std::to_string(4 * m + 2) + "," + q.get_str() + ")";
  return r;
}

nlohmann::json to_json(const CountReport& r) {
  nlohmann::json j;
  j["family"] = family_name(r.spec.family);
  if (is_coset(r.spec.family)) j["type"] = to_string(r.spec.coset_type);
  j["dim"] = r.spec.dim;
  j["char_parity"] = to_string(r.spec.parity);
  if (r.q) j["q"] = r.q->get_str();
  if (r.branch) j["branch"] = to_string(*r.branch);
  j["value"] = r.value_string();
  j["formula_id"] = r.formula_id;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

}  // namespace atlas
