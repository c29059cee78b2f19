// Explicit orthogonal and symplectic matrix groups over small finite fields,
// built by exhaustive search, for independent recounting.
#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "atlas/groups.hpp"

namespace atlas {

// GF(q) for q <= 16.  Elements are coded 0..q-1 as base-p digit vectors of
// polynomials modulo a fixed irreducible; 0 and 1 are the field's own.
class FieldTable {
 public:
  explicit FieldTable(int q);  // throws std::invalid_argument unless q is a prime power <= 16

  int q() const { return q_; }
  int p() const { return p_; }
  uint8_t add(uint8_t a, uint8_t b) const { return add_[a][b]; }
  uint8_t mul(uint8_t a, uint8_t b) const { return mul_[a][b]; }
  uint8_t neg(uint8_t a) const { return neg_[a]; }
  uint8_t sub(uint8_t a, uint8_t b) const { return add_[a][neg_[b]]; }
  uint8_t inv(uint8_t a) const;  // a != 0
  uint8_t from_int(long c) const;
  bool is_square(uint8_t a) const { return square_[a]; }
  uint8_t primitive() const { return primitive_; }
  // Smallest-coded non-square (q odd only).
  uint8_t nonsquare() const;

 private:
  int q_, p_;
  uint8_t add_[16][16]{}, mul_[16][16]{}, neg_[16]{}, inv_[16]{};
  bool square_[16]{};
  uint8_t primitive_ = 1;
};

inline constexpr int kMaxOracleDim = 8;

struct Matrix {
  std::array<uint8_t, kMaxOracleDim * kMaxOracleDim> a{};
  uint8_t& at(int dim, int i, int j) { return a[i * dim + j]; }
  uint8_t at(int dim, int i, int j) const { return a[i * dim + j]; }
  friend bool operator==(const Matrix&, const Matrix&) = default;
};

struct MatrixHash {
  size_t operator()(const Matrix& m) const;
};

enum class FormKind { quadratic, alternating };

// Quadratic: Q(x) = sum_{i<=j} coeff[i][j] x_i x_j.  Alternating: coeff is
// the Gram matrix.  Row-major dim x dim.
struct FormSpec {
  FormKind kind = FormKind::quadratic;
  int dim = 0;
  FormType type = FormType::plus;  // even-dimensional quadratic forms
  std::vector<uint8_t> coeff;
  std::optional<WittType> witt;  // q odd quadratic forms
};

// Normal forms: hyperbolic pairs x1x2 + x3x4 + ..., closed by x^2 - delta y^2
// (minus, q odd), x^2 + xy + beta y^2 (minus, q even) or x^2 (odd dim).  For
// q even the plus form is x_1x_{n+1} + ... + x_nx_{2n}.
FormSpec standard_form(FormKind kind, int dim, FormType type, const FieldTable& F);

// Polar form B(x,y) = Q(x+y) - Q(x) - Q(y) as a Gram matrix, or the
// alternating Gram matrix itself.
std::vector<uint8_t> polar_gram(const FormSpec& f, const FieldTable& F);

struct MatrixOps {
  const FieldTable* F;
  int dim;
  Matrix identity() const;
  Matrix mul(const Matrix& x, const Matrix& y) const;
  Matrix inverse(const Matrix& x) const;  // x invertible
  Matrix plus_identity(const Matrix& x) const;
  uint8_t det(const Matrix& x) const;
  int rank(const Matrix& x) const;
};

uint8_t det(std::vector<uint8_t> m, int n, const FieldTable& F);
int rank(std::vector<uint8_t> m, int rows, int cols, const FieldTable& F);

// Element set of a group of isometries, or of a subgroup of one.
class IsometryGroup {
 public:
  IsometryGroup(std::shared_ptr<const FieldTable> F, FormSpec form, std::vector<Matrix> elements);

  const FieldTable& field() const { return *field_; }
  std::shared_ptr<const FieldTable> field_ptr() const { return field_; }
  const FormSpec& form() const { return form_; }
  int dim() const { return form_.dim; }
  MatrixOps ops() const { return {field_.get(), form_.dim}; }
  const std::vector<Matrix>& elements() const { return elements_; }
  size_t size() const { return elements_.size(); }
  bool contains(const Matrix& m) const { return index_.count(m) != 0; }

  // A generating set found by random search (fixed seed).  Verifies on the
  // way that the element set is closed under multiplication.
  const std::vector<Matrix>& generators() const;

 private:
  std::shared_ptr<const FieldTable> field_;
  FormSpec form_;
  std::vector<Matrix> elements_;
  std::unordered_map<Matrix, uint32_t, MatrixHash> index_;
  mutable std::vector<Matrix> generators_;
};

// Order cap for construction: INVOLUTION_ATLAS_CAP or 10^6.
uint64_t oracle_cap();

// Predicted order of the full isometry group of f.
BigInt predicted_order(const FormSpec& f, int q);

// Backtracking over images of basis vectors.  Throws std::invalid_argument
// when the predicted order exceeds the cap or the form is degenerate, and
// std::logic_error when the search disagrees with the predicted order.
IsometryGroup build_isometry_group(const FormSpec& f, std::shared_ptr<const FieldTable> F,
                                   uint64_t cap = oracle_cap());

IsometryGroup special_subgroup(const IsometryGroup& G);  // determinant 1
IsometryGroup derived_subgroup(const IsometryGroup& G);
// Elements of a plus-type group preserving each family of maximal totally
// singular subspaces.
IsometryGroup family_stabilizer(const IsometryGroup& G);
// Omega, the index-2 subgroup: derived subgroup of SO (q odd, dim >= 3),
// squares in SO (q odd, dim 2, where SO is abelian), derived subgroup of O
// (q even, even dim) or, where that has index 4 as in O^+(4,2), the family
// stabilizer.
IsometryGroup omega_subgroup(const IsometryGroup& G);

enum class Subset { all, det1, omega, coset };
std::string to_string(Subset s);

// coset is G minus SO (q odd) or G minus Omega (q even).  det1 with q even is
// rejected.
// `omega` may pass a precomputed omega_subgroup(G).
uint64_t count_involutions_bruteforce(const IsometryGroup& G, Subset subset,
                                      const IsometryGroup* omega = nullptr);

// rank(1 + g) is even.  q even only.
bool omega_membership_even(const Matrix& g, const IsometryGroup& G);

// Witt type of a nondegenerate symmetric Gram matrix (polar form), q odd.
WittType witt_type(const std::vector<uint8_t>& gram, int dim, const FieldTable& F);

struct AgreementStats {
  uint64_t tested = 0;
  uint64_t agreed = 0;
  bool all_agree() const { return tested == agreed; }
};

// Rank parity against membership in omega_subgroup(G), every element (q even,
// even dimension).
AgreementStats check_rank_parity(const IsometryGroup& G);
// For every involution of SO: the (-1)-eigenspace dimension and restricted
// type fed to omega_class_membership, against membership in Omega (q odd).
AgreementStats check_eigenspace_classifier(const IsometryGroup& G);

// Involutions of Sp(2n,q), q odd, as the sum over (-1)-eigenspace dimensions
// 2k, k = 0..n, of |Sp(2n)|/(|Sp(2k)||Sp(2n-2k)|).
BigInt symplectic_involutions_qodd(int dim, const BigInt& q);

// Row-major bytes per element after a one-line JSON header.
void dump_elements(const IsometryGroup& G, const std::string& path);

}  // namespace atlas
