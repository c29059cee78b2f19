#include "atlas/exact.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <stdexcept>
#include <utility>

namespace atlas {

std::string to_string(const BigInt& z) { return z.get_str(); }

std::string to_string(const BigRat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

BigRat parse_rat(std::string_view s) {
  std::string t(s);
  t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char c) { return std::isspace(c); }),
          t.end());
  if (t.empty()) throw std::invalid_argument("empty rational");
  std::size_t start = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  auto slash = t.find('/');
  auto digits = [&](std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  bool ok = slash == std::string::npos ? digits(start, t.size())
                                       : digits(start, slash) && digits(slash + 1, t.size());
  if (!ok) throw std::invalid_argument("malformed rational '" + std::string(s) + "'");
  if (t[0] == '+') t.erase(0, 1);
  BigRat r;
  r.set_str(t, 10);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + std::string(s) + "'");
  r.canonicalize();
  return r;
}

BigInt ipow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

BigRat rpow(const BigRat& base, long e) {
  if (e >= 0) return BigRat(ipow(base.get_num(), e), ipow(base.get_den(), e));
  if (base == 0) throw std::domain_error("zero to a negative power");
  BigRat r(ipow(base.get_den(), -e), ipow(base.get_num(), -e));
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------
// Integer polynomial kernels.
namespace {

using ZPoly = std::vector<BigInt>;

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      mpz_addmul(c[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  ztrim(c);
  return c;
}

BigInt zcontent(const ZPoly& a) {
  BigInt g = 0;
  for (const auto& c : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

// Primitive part with positive leading coefficient.
ZPoly zprimitive(ZPoly a) {
  if (a.empty()) return a;
  BigInt g = zcontent(a);
  if (a.back() < 0) g = -g;
  if (g != 1)
    for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return a;
}

// Exact division over Z; false when b does not divide a.
bool zdivexact(const ZPoly& a, const ZPoly& b, ZPoly* quo) {
  if (b.empty()) throw std::domain_error("division by zero polynomial");
  if (a.empty()) {
    if (quo) quo->clear();
    return true;
  }
  if (a.size() < b.size()) return false;
  ZPoly r = a;
  std::size_t db = b.size() - 1;
  ZPoly q(a.size() - db);
  const BigInt& lc = b.back();
  BigInt t;
  for (std::size_t k = q.size(); k-- > 0;) {
    BigInt& c = r[k + db];
    if (c == 0) continue;
    if (!mpz_divisible_p(c.get_mpz_t(), lc.get_mpz_t())) return false;
    mpz_divexact(t.get_mpz_t(), c.get_mpz_t(), lc.get_mpz_t());
    for (std::size_t j = 0; j <= db; ++j)
      mpz_submul(r[k + j].get_mpz_t(), t.get_mpz_t(), b[j].get_mpz_t());
    q[k] = t;
  }
  for (std::size_t i = 0; i < db; ++i)
    if (r[i] != 0) return false;
  if (quo) *quo = std::move(q);
  return true;
}

BigInt zeval(const ZPoly& a, const BigInt& x) {
  BigInt acc = 0;
  for (std::size_t i = a.size(); i-- > 0;) {
    acc *= x;
    acc += a[i];
  }
  return acc;
}

BigInt zmaxnorm(const ZPoly& a) {
  BigInt m = 0;
  for (const auto& c : a)
    if (abs(c) > m) m = abs(c);
  return m;
}

// Pseudo-remainder of a by b.
ZPoly zprem(ZPoly a, const ZPoly& b) {
  std::size_t db = b.size() - 1;
  const BigInt& lc = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    BigInt c = a.back();
    std::size_t shift = a.size() - 1 - db;
    for (auto& x : a) x *= lc;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= c * b[j];
    ztrim(a);
  }
  return a;
}

ZPoly zgcd_prs(ZPoly a, ZPoly b) {
  if (a.size() < b.size()) std::swap(a, b);
  a = zprimitive(std::move(a));
  b = zprimitive(std::move(b));
  while (!b.empty()) {
    ZPoly r = zprem(a, b);
    a = std::move(b);
    b = zprimitive(std::move(r));
  }
  return zprimitive(std::move(a));
}

// Heuristic gcd: evaluate at a large integer, take the integer gcd and read
// the polynomial back from its balanced digits.  A candidate dividing both
// inputs is the gcd once xi exceeds 2*min(norms) + 1.
std::optional<ZPoly> zgcd_heuristic(const ZPoly& a, const ZPoly& b) {
  BigInt xi = 2 * std::min(zmaxnorm(a), zmaxnorm(b)) + 29;
  std::size_t maxdeg = std::max(a.size(), b.size());
  for (int attempt = 0; attempt < 6; ++attempt) {
    if (mpz_sizeinbase(xi.get_mpz_t(), 2) * maxdeg > 200000) break;
    BigInt ga = zeval(a, xi), gb = zeval(b, xi), g;
    mpz_gcd(g.get_mpz_t(), ga.get_mpz_t(), gb.get_mpz_t());
    ZPoly cand;
    BigInt half = xi / 2, r;
    while (g != 0) {
      mpz_fdiv_r(r.get_mpz_t(), g.get_mpz_t(), xi.get_mpz_t());
      if (r > half) r -= xi;
      cand.push_back(r);
      g -= r;
      mpz_divexact(g.get_mpz_t(), g.get_mpz_t(), xi.get_mpz_t());
    }
    cand = zprimitive(std::move(cand));
    if (!cand.empty() && zdivexact(a, cand, nullptr) && zdivexact(b, cand, nullptr)) return cand;
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

// gcd of primitive nonzero integer polynomials.
ZPoly zgcd(const ZPoly& a, const ZPoly& b) {
  if (a.size() == 1 || b.size() == 1) return ZPoly{1};
  if (a == b) return a;
  if (auto g = zgcd_heuristic(a, b)) return *g;
  return zgcd_prs(a, b);
}

}  // namespace

// ---------------------------------------------------------------------------
// PolyQ

PolyQ::PolyQ(long c) : PolyQ(BigInt(c)) {}

PolyQ::PolyQ(const BigInt& c) {
  if (c != 0) num_.push_back(c);
}

PolyQ::PolyQ(const BigRat& c) {
  if (c != 0) {
    num_.push_back(c.get_num());
    den_ = c.get_den();
  }
}

PolyQ PolyQ::q() { return monomial(1, 1); }

PolyQ PolyQ::monomial(const BigRat& c, int deg) {
  if (deg < 0) throw std::invalid_argument("negative monomial degree");
  PolyQ p;
  if (c == 0) return p;
  p.num_.assign(deg + 1, 0);
  p.num_[deg] = c.get_num();
  p.den_ = c.get_den();
  return p;
}

PolyQ PolyQ::from_coeffs(const std::vector<BigRat>& asc) {
  BigInt l = 1;
  for (const auto& c : asc) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<BigInt> n;
  n.reserve(asc.size());
  for (const auto& c : asc) n.push_back(c.get_num() * (l / c.get_den()));
  return from_integer_coeffs(std::move(n), l);
}

PolyQ PolyQ::from_integer_coeffs(std::vector<BigInt> asc, BigInt den) {
  if (den == 0) throw std::domain_error("zero denominator");
  PolyQ p;
  p.num_ = std::move(asc);
  p.den_ = std::move(den);
  if (p.den_ < 0) {
    p.den_ = -p.den_;
    for (auto& c : p.num_) c = -c;
  }
  p.normalize();
  return p;
}

void PolyQ::normalize() {
  ztrim(num_);
  if (num_.empty()) {
    den_ = 1;
    return;
  }
  if (den_ == 1) return;
  BigInt g = den_;
  for (const auto& c : num_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
}

BigRat PolyQ::coeff(int i) const {
  if (i < 0 || i >= int(num_.size())) return 0;
  BigRat r(num_[i], den_);
  r.canonicalize();
  return r;
}

BigRat PolyQ::leading() const { return is_zero() ? BigRat(0) : coeff(degree()); }

std::vector<BigRat> PolyQ::coeffs() const {
  std::vector<BigRat> out;
  for (int i = 0; i <= degree(); ++i) out.push_back(coeff(i));
  return out;
}

PolyQ PolyQ::operator-() const {
  PolyQ r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

namespace {
PolyQ add_impl(const PolyQ& a, const PolyQ& b, int sign) {
  const auto& an = a.int_coeffs();
  const auto& bn = b.int_coeffs();
  std::vector<BigInt> n(std::max(an.size(), bn.size()));
  BigInt den;
  if (a.denominator() == b.denominator()) {
    den = a.denominator();
    for (std::size_t i = 0; i < an.size(); ++i) n[i] = an[i];
    for (std::size_t i = 0; i < bn.size(); ++i) {
      if (sign > 0) n[i] += bn[i];
      else n[i] -= bn[i];
    }
  } else {
    den = a.denominator() * b.denominator();
    for (std::size_t i = 0; i < an.size(); ++i) n[i] = an[i] * b.denominator();
    for (std::size_t i = 0; i < bn.size(); ++i) {
      if (sign > 0) mpz_addmul(n[i].get_mpz_t(), bn[i].get_mpz_t(), a.denominator().get_mpz_t());
      else mpz_submul(n[i].get_mpz_t(), bn[i].get_mpz_t(), a.denominator().get_mpz_t());
    }
  }
  return PolyQ::from_integer_coeffs(std::move(n), std::move(den));
}
}  // namespace

PolyQ operator+(const PolyQ& a, const PolyQ& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  return add_impl(a, b, +1);
}

PolyQ operator-(const PolyQ& a, const PolyQ& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return -b;
  return add_impl(a, b, -1);
}

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return PolyQ::from_integer_coeffs(zmul(a.num_, b.num_), a.den_ * b.den_);
}

PolyQ PolyQ::scaled(const BigRat& c) const {
  if (c == 0 || is_zero()) return {};
  std::vector<BigInt> n = num_;
  for (auto& x : n) x *= c.get_num();
  return from_integer_coeffs(std::move(n), den_ * c.get_den());
}

PolyQ PolyQ::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("negative shift");
  if (is_zero() || k == 0) return *this;
  PolyQ r;
  r.num_.assign(k, 0);
  r.num_.insert(r.num_.end(), num_.begin(), num_.end());
  r.den_ = den_;
  return r;
}

PolyQ PolyQ::pow(unsigned e) const {
  PolyQ result(1), base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

PolyQ PolyQ::monic() const {
  if (is_zero()) return *this;
  return from_integer_coeffs(num_, num_.back());
}

BigRat PolyQ::eval(const BigRat& x) const {
  // Horner on the integer numerator with x = a/b: sum c_i a^i b^(d-i).
  if (is_zero()) return 0;
  const BigInt& a = x.get_num();
  const BigInt& b = x.get_den();
  BigInt acc = 0, bpow = 1;
  for (std::size_t i = num_.size(); i-- > 0;) {
    acc = acc * a + num_[i] * bpow;
    bpow *= b;
  }
  bpow /= b;  // b^deg
  BigRat r(acc, den_ * bpow);
  r.canonicalize();
  return r;
}

void PolyQ::divmod(const PolyQ& a, const PolyQ& b, PolyQ& quo, PolyQ& rem) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  std::vector<BigRat> r = a.coeffs();
  std::vector<BigRat> bc = b.coeffs();
  int db = b.degree();
  std::vector<BigRat> qc(std::max(0, a.degree() - db + 1));
  BigRat lc = bc.back();
  for (int k = int(qc.size()) - 1; k >= 0; --k) {
    BigRat t = r[k + db] / lc;
    qc[k] = t;
    if (t == 0) continue;
    for (int j = 0; j <= db; ++j) r[k + j] -= t * bc[j];
  }
  r.resize(std::min<std::size_t>(r.size(), db));
  quo = from_coeffs(qc);
  rem = from_coeffs(r);
}

PolyQ PolyQ::divexact(const PolyQ& a, const PolyQ& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return {};
  // a = (ca/da) A', b = (cb/db) B' with A', B' primitive; Gauss's lemma
  // makes A'/B' integral whenever b | a over Q.
  BigInt ca = zcontent(a.num_), cb = zcontent(b.num_);
  if (b.num_.back() < 0) cb = -cb;
  ZPoly ap = a.num_, bp = b.num_;
  for (auto& c : ap) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), ca.get_mpz_t());
  for (auto& c : bp) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), cb.get_mpz_t());
  ZPoly quo;
  if (!zdivexact(ap, bp, &quo)) throw std::logic_error("inexact polynomial division");
  for (auto& c : quo) c *= ca * b.den_;
  return from_integer_coeffs(std::move(quo), cb * a.den_);
}

std::string PolyQ::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int d = degree(); d >= 0; --d) {
    BigRat c = coeff(d);
    if (c == 0) continue;
    bool neg = c < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    BigRat m = abs(c);
    if (d == 0) {
      out += atlas::to_string(m);
      continue;
    }
    if (m != 1) {
      if (m.get_den() == 1) out += m.get_num().get_str();
      else out += "(" + atlas::to_string(m) + ")";
    }
    out += "q";
    if (d > 1) out += "^" + std::to_string(d);
  }
  return out;
}

PolyQ PolyQ::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("empty polynomial text");
  std::size_t i = 0;
  auto fail = [&](const char* why) {
    throw std::invalid_argument(std::string("cannot parse polynomial '") + std::string(text) +
                                "': " + why);
  };
  auto read_uint = [&]() {
    std::size_t st = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (st == i) fail("expected digits");
    return s.substr(st, i - st);
  };
  PolyQ result;
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      fail("expected sign between terms");
    }
    first = false;
    BigRat c = 1;
    bool have_coeff = false;
    if (i < s.size() && s[i] == '(') {
      ++i;
      std::size_t close = s.find(')', i);
      if (close == std::string::npos) fail("unbalanced parenthesis");
      c = parse_rat(s.substr(i, close - i));
      i = close + 1;
      have_coeff = true;
    } else if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      std::string numtxt = read_uint();
      if (i < s.size() && s[i] == '/') {
        ++i;
        numtxt += "/" + read_uint();
      }
      c = parse_rat(numtxt);
      have_coeff = true;
    }
    if (i < s.size() && s[i] == '*') ++i;
    int deg = 0;
    if (i < s.size() && s[i] == 'q') {
      ++i;
      deg = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        bool brace = i < s.size() && s[i] == '{';
        if (brace) ++i;
        deg = std::stoi(read_uint());
        if (brace) {
          if (i >= s.size() || s[i] != '}') fail("unbalanced brace");
          ++i;
        }
      }
    } else if (!have_coeff) {
      fail("empty term");
    }
    result += monomial(c * sign, deg);
  }
  return result;
}

PolyQ gcd(const PolyQ& a, const PolyQ& b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.degree() == 0 || b.degree() == 0) return PolyQ(1);
  ZPoly g = zgcd(zprimitive(a.int_coeffs()), zprimitive(b.int_coeffs()));
  return PolyQ::from_integer_coeffs(std::move(g)).monic();
}

PolyQ gcd_prs(const PolyQ& a, const PolyQ& b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  return PolyQ::from_integer_coeffs(zgcd_prs(a.int_coeffs(), b.int_coeffs())).monic();
}

// ---------------------------------------------------------------------------
// RatFuncQ

RatFuncQ::RatFuncQ(const PolyQ& num, const PolyQ& den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = PolyQ(1);
    return;
  }
  PolyQ g = gcd(num, den);
  PolyQ n = g.degree() > 0 ? PolyQ::divexact(num, g) : num;
  PolyQ d = g.degree() > 0 ? PolyQ::divexact(den, g) : den;
  BigRat lc = d.leading();
  if (lc != 1) {
    BigRat inv = 1 / lc;
    n = n.scaled(inv);
    d = d.scaled(inv);
  }
  num_ = std::move(n);
  den_ = std::move(d);
}

RatFuncQ RatFuncQ::operator-() const { return RatFuncQ(-num_, den_, Raw{}); }

namespace {
PolyQ div_if(const PolyQ& a, const PolyQ& g) {
  return g.degree() > 0 ? PolyQ::divexact(a, g) : a;
}
}  // namespace

RatFuncQ operator+(const RatFuncQ& a, const RatFuncQ& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    PolyQ n = a.num_ + b.num_;
    if (a.den_.degree() == 0 || n.is_zero()) return RatFuncQ(n, n.is_zero() ? PolyQ(1) : a.den_, RatFuncQ::Raw{});
    PolyQ h = gcd(n, a.den_);
    return RatFuncQ(div_if(n, h), div_if(a.den_, h), RatFuncQ::Raw{});
  }
  if (b.den_.degree() == 0) return RatFuncQ(a.num_ + b.num_ * a.den_, a.den_, RatFuncQ::Raw{});
  if (a.den_.degree() == 0) return RatFuncQ(a.num_ * b.den_ + b.num_, b.den_, RatFuncQ::Raw{});
  PolyQ g = gcd(a.den_, b.den_);
  if (g.degree() == 0)
    return RatFuncQ(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, RatFuncQ::Raw{});
  PolyQ a1 = PolyQ::divexact(a.den_, g);
  PolyQ b1 = PolyQ::divexact(b.den_, g);
  PolyQ n = a.num_ * b1 + b.num_ * a1;
  if (n.is_zero()) return RatFuncQ();
  PolyQ d = a1 * b.den_;
  PolyQ h = gcd(n, g);
  return RatFuncQ(div_if(n, h), div_if(d, h), RatFuncQ::Raw{});
}

RatFuncQ operator-(const RatFuncQ& a, const RatFuncQ& b) { return a + (-b); }

RatFuncQ operator*(const RatFuncQ& a, const RatFuncQ& b) {
  if (a.is_zero() || b.is_zero()) return RatFuncQ();
  if (a.den_.degree() == 0 && b.den_.degree() == 0)
    return RatFuncQ(a.num_ * b.num_, PolyQ(1), RatFuncQ::Raw{});
  PolyQ g1 = b.den_.degree() > 0 ? gcd(a.num_, b.den_) : PolyQ(1);
  PolyQ g2 = a.den_.degree() > 0 ? gcd(b.num_, a.den_) : PolyQ(1);
  return RatFuncQ(div_if(a.num_, g1) * div_if(b.num_, g2),
                  div_if(a.den_, g2) * div_if(b.den_, g1), RatFuncQ::Raw{});
}

RatFuncQ operator/(const RatFuncQ& a, const RatFuncQ& b) {
  if (b.is_zero()) throw std::domain_error("division by zero rational function");
  BigRat lc = b.num_.leading();
  RatFuncQ inv(b.den_.scaled(1 / lc), b.num_.scaled(1 / lc), RatFuncQ::Raw{});
  return a * inv;
}

RatFuncQ RatFuncQ::pow(int e) const {
  if (e < 0) return RatFuncQ(1) / pow(-e);
  RatFuncQ result(1), base = *this;
  unsigned k = e;
  while (k) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

BigRat RatFuncQ::eval(const BigRat& q0) const {
  BigRat d = den_.eval(q0);
  if (d == 0) throw std::domain_error("pole at q = " + atlas::to_string(q0));
  return num_.eval(q0) / d;
}

std::string RatFuncQ::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RatFuncQ qpow(int k) {
  if (k >= 0) return RatFuncQ(PolyQ::monomial(1, k));
  return RatFuncQ(PolyQ(1), PolyQ::monomial(1, -k));
}

// ---------------------------------------------------------------------------
// LaurentQ

BigRat LaurentQ::coeff(int e) const {
  if (e < min_exp || e > max_exp) return 0;
  return coeffs[e - min_exp];
}

BigRat LaurentQ::eval(const BigRat& q0) const {
  BigRat acc = 0;
  for (int e = min_exp; e <= max_exp; ++e) {
    const BigRat& c = coeffs[e - min_exp];
    if (c != 0) acc += c * rpow(q0, -e);
  }
  return acc;
}

LaurentQ laurent_expand(const RatFuncQ& f, int max_neg_power) {
  LaurentQ out;
  if (f.is_zero()) {
    out.min_exp = out.max_exp = max_neg_power;
    out.coeffs = {0};
    return out;
  }
  int dn = f.num().degree(), dd = f.den().degree();
  out.min_exp = dd - dn;
  if (out.min_exp > max_neg_power)
    throw std::invalid_argument("Laurent window ends at (1/q)^" + std::to_string(max_neg_power) +
                                " before the leading term (1/q)^" + std::to_string(out.min_exp));
  out.max_exp = max_neg_power;
  // In t = 1/q: f = t^(dd-dn) N(t)/D(t) with N(t)_k = num_{dn-k}, D(t)_k = den_{dd-k}.
  int len = out.max_exp - out.min_exp + 1;
  std::vector<BigRat> n(len), d(dd + 1);
  for (int k = 0; k < len && k <= dn; ++k) n[k] = f.num().coeff(dn - k);
  for (int k = 0; k <= dd; ++k) d[k] = f.den().coeff(dd - k);
  out.coeffs.assign(len, 0);
  for (int k = 0; k < len; ++k) {
    BigRat s = n[k];
    for (int j = 1; j <= std::min(k, dd); ++j) s -= d[j] * out.coeffs[k - j];
    out.coeffs[k] = s / d[0];
  }
  return out;
}

}  // namespace atlas
