// Exact arithmetic in Q and Q(q): rationals, polynomials, reduced rational
// functions and truncated expansions in 1/q.
#pragma once

#include <gmpxx.h>

#include <climits>
#include <string>
#include <string_view>
#include <vector>

namespace atlas {

using BigInt = mpz_class;
using BigRat = mpq_class;

// "a" or "a/b".
std::string to_string(const BigRat& r);
std::string to_string(const BigInt& z);
BigRat parse_rat(std::string_view s);

BigInt ipow(const BigInt& base, unsigned long e);
BigRat rpow(const BigRat& base, long e);

// Polynomial in q over Q.  Stored as integer coefficients over one positive
// common denominator so products and gcds run on mpz.
class PolyQ {
 public:
  static constexpr int kZeroDegree = INT_MIN;

  PolyQ() = default;
  PolyQ(long c);  // NOLINT(google-explicit-constructor)
  PolyQ(const BigInt& c);  // NOLINT
  PolyQ(const BigRat& c);  // NOLINT

  static PolyQ q();
  static PolyQ monomial(const BigRat& c, int deg);
  static PolyQ from_coeffs(const std::vector<BigRat>& ascending);
  static PolyQ from_integer_coeffs(std::vector<BigInt> ascending, BigInt den = 1);

  bool is_zero() const { return num_.empty(); }
  int degree() const { return num_.empty() ? kZeroDegree : int(num_.size()) - 1; }
  BigRat coeff(int i) const;
  BigRat leading() const;
  std::vector<BigRat> coeffs() const;

  // Integer numerator and common denominator of the canonical form.
  const std::vector<BigInt>& int_coeffs() const { return num_; }
  const BigInt& denominator() const { return den_; }

  PolyQ operator-() const;
  friend PolyQ operator+(const PolyQ& a, const PolyQ& b);
  friend PolyQ operator-(const PolyQ& a, const PolyQ& b);
  friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
  PolyQ& operator+=(const PolyQ& b) { return *this = *this + b; }
  PolyQ& operator-=(const PolyQ& b) { return *this = *this - b; }
  PolyQ& operator*=(const PolyQ& b) { return *this = *this * b; }
  friend bool operator==(const PolyQ& a, const PolyQ& b) {
    return a.den_ == b.den_ && a.num_ == b.num_;
  }

  PolyQ scaled(const BigRat& c) const;
  PolyQ shifted(int k) const;  // multiply by q^k, k >= 0
  PolyQ pow(unsigned e) const;
  PolyQ monic() const;

  BigRat eval(const BigRat& x) const;

  // Quotient and remainder; divisor must be nonzero.
  static void divmod(const PolyQ& a, const PolyQ& b, PolyQ& quo, PolyQ& rem);
  // a / b where b is known to divide a exactly; throws std::logic_error otherwise.
  static PolyQ divexact(const PolyQ& a, const PolyQ& b);

  std::string to_string() const;
  static PolyQ parse(std::string_view text);

 private:
  void normalize();
  std::vector<BigInt> num_;  // ascending, no trailing zeros
  BigInt den_ = 1;           // > 0, coprime to the content of num_
};

// Monic gcd; both zero is rejected with std::invalid_argument.
PolyQ gcd(const PolyQ& a, const PolyQ& b);
// Same via the primitive remainder sequence only, for cross-checking.
PolyQ gcd_prs(const PolyQ& a, const PolyQ& b);

// num/den in lowest terms with monic den.
class RatFuncQ {
 public:
  RatFuncQ() : den_(1) {}
  RatFuncQ(long c) : num_(c), den_(1) {}  // NOLINT
  RatFuncQ(const BigRat& c) : num_(c), den_(1) {}  // NOLINT
  RatFuncQ(PolyQ p) : num_(std::move(p)), den_(1) {}  // NOLINT

  // Reduces; den == 0 throws std::domain_error.
  RatFuncQ(const PolyQ& num, const PolyQ& den);

  const PolyQ& num() const { return num_; }
  const PolyQ& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RatFuncQ operator-() const;
  friend RatFuncQ operator+(const RatFuncQ& a, const RatFuncQ& b);
  friend RatFuncQ operator-(const RatFuncQ& a, const RatFuncQ& b);
  friend RatFuncQ operator*(const RatFuncQ& a, const RatFuncQ& b);
  friend RatFuncQ operator/(const RatFuncQ& a, const RatFuncQ& b);
  RatFuncQ& operator+=(const RatFuncQ& b) { return *this = *this + b; }
  RatFuncQ& operator-=(const RatFuncQ& b) { return *this = *this - b; }
  RatFuncQ& operator*=(const RatFuncQ& b) { return *this = *this * b; }
  RatFuncQ& operator/=(const RatFuncQ& b) { return *this = *this / b; }
  friend bool operator==(const RatFuncQ& a, const RatFuncQ& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  // Integer power, negative allowed for nonzero values.
  RatFuncQ pow(int e) const;
  // Throws std::domain_error at a pole.
  BigRat eval(const BigRat& q0) const;

  // "num" when polynomial, else "(num)/(den)".
  std::string to_string() const;

 private:
  struct Raw {};
  RatFuncQ(PolyQ num, PolyQ den, Raw) : num_(std::move(num)), den_(std::move(den)) {}
  PolyQ num_;
  PolyQ den_;
};

// q^k for any integer k.
RatFuncQ qpow(int k);

// Expansion sum_{e=min_exp}^{max_exp} c_e (1/q)^e.
struct LaurentQ {
  int min_exp = 0;
  int max_exp = 0;
  std::vector<BigRat> coeffs;  // coeffs[e - min_exp]

  BigRat coeff(int e) const;
  // Partial sum of the window at q = q0.
  BigRat eval(const BigRat& q0) const;
};

// Expansion of f in powers of 1/q up to (1/q)^max_neg_power.  The window
// starts at the leading exponent deg(den) - deg(num); throws
// std::invalid_argument when that exceeds max_neg_power.
LaurentQ laurent_expand(const RatFuncQ& f, int max_neg_power);

}  // namespace atlas
