#include "atlas/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <iterator>
#include <deque>
#include <fstream>
#include <functional>
#include <random>
#include <stdexcept>
#include <string_view>
#include <unordered_set>

#include <json.hpp>

#include "atlas/involutions.hpp"

namespace atlas {

namespace {

// x^k = -(low[0] + low[1] x + ...)
std::vector<int> modulus_low(int q) {
  switch (q) {
    case 4: return {1, 1};        // x^2 + x + 1
    case 8: return {1, 1, 0};     // x^3 + x + 1
    case 9: return {1, 0};        // x^2 + 1
    case 16: return {1, 1, 0, 0}; // x^4 + x + 1
    default: return {};
  }
}

}  // namespace

FieldTable::FieldTable(int q) : q_(q), p_(0) {
  BigInt p;
  int k = 0;
  if (q < 2 || q > 16 || !is_prime_power(q, &p, &k))
    throw std::invalid_argument("field size " + std::to_string(q) + " is not a prime power <= 16");
  p_ = int(p.get_si());
  auto digits = [&](int a) {
    std::vector<int> d(k);
    for (int i = 0; i < k; ++i, a /= p_) d[i] = a % p_;
    return d;
  };
  auto code = [&](const std::vector<int>& d) {
    int a = 0;
    for (int i = k - 1; i >= 0; --i) a = a * p_ + d[i];
    return a;
  };
  std::vector<int> low = modulus_low(q);
  for (int a = 0; a < q; ++a) {
    auto da = digits(a);
    std::vector<int> dn(k);
    for (int i = 0; i < k; ++i) dn[i] = (p_ - da[i]) % p_;
    neg_[a] = uint8_t(code(dn));
    for (int b = 0; b < q; ++b) {
      auto db = digits(b);
      std::vector<int> s(k);
      for (int i = 0; i < k; ++i) s[i] = (da[i] + db[i]) % p_;
      add_[a][b] = uint8_t(code(s));
      std::vector<int> prod(2 * k - 1, 0);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      for (int e = 2 * k - 2; e >= k; --e) {
        int c = prod[e];
        prod[e] = 0;
        for (int i = 0; i < k; ++i) prod[e - k + i] = ((prod[e - k + i] - c * low[i]) % p_ + p_) % p_;
      }
      prod.resize(k);
      mul_[a][b] = uint8_t(code(prod));
    }
  }
  // Axioms, exhaustively.
  for (int a = 0; a < q; ++a) {
    if (add_[a][0] != a || mul_[a][1] != a || add_[a][neg_[a]] != 0)
      throw std::logic_error("field table identities fail");
    for (int b = 0; b < q; ++b) {
      if (add_[a][b] != add_[b][a] || mul_[a][b] != mul_[b][a])
        throw std::logic_error("field table not commutative");
      for (int c = 0; c < q; ++c) {
        if (add_[add_[a][b]][c] != add_[a][add_[b][c]] || mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]] ||
            mul_[a][add_[b][c]] != add_[mul_[a][b]][mul_[a][c]])
          throw std::logic_error("field table axioms fail");
      }
    }
  }
  for (int a = 1; a < q; ++a) {
    for (int b = 1; b < q; ++b)
      if (mul_[a][b] == 1) inv_[a] = uint8_t(b);
    if (inv_[a] == 0) throw std::logic_error("field element without inverse; modulus reducible");
  }
  for (int a = 0; a < q; ++a) square_[mul_[a][a]] = true;
  for (int g = 1; g < q; ++g) {
    int order = 1;
    for (int x = g; x != 1; x = mul_[x][g]) ++order;
    if (order == q - 1) {
      primitive_ = uint8_t(g);
      break;
    }
  }
}

uint8_t FieldTable::inv(uint8_t a) const {
  if (a == 0) throw std::domain_error("inverse of 0");
  return inv_[a];
}

uint8_t FieldTable::from_int(long c) const { return uint8_t(((c % p_) + p_) % p_); }

uint8_t FieldTable::nonsquare() const {
  for (int a = 1; a < q_; ++a)
    if (!square_[a]) return uint8_t(a);
  throw std::invalid_argument("every element is a square when q is even");
}

size_t MatrixHash::operator()(const Matrix& m) const {
  return std::hash<std::string_view>{}(
      std::string_view(reinterpret_cast<const char*>(m.a.data()), m.a.size()));
}

FormSpec standard_form(FormKind kind, int dim, FormType type, const FieldTable& F) {
  if (dim < 0 || dim > kMaxOracleDim)
    throw std::invalid_argument("oracle dimension must be in 0.." + std::to_string(kMaxOracleDim));
  FormSpec f;
  f.kind = kind;
  f.dim = dim;
  f.type = type;
  f.coeff.assign(dim * dim, 0);
  auto C = [&](int i, int j) -> uint8_t& { return f.coeff[i * dim + j]; };
  if (kind == FormKind::alternating) {
    if (dim % 2) throw std::invalid_argument("alternating forms need even dimension");
    for (int i = 0; i < dim; i += 2) {
      C(i, i + 1) = 1;
      C(i + 1, i) = F.neg(1);
    }
    return f;
  }
  bool qodd = F.q() % 2 == 1;
  int n = dim / 2;
  if (dim % 2 == 0 && type == FormType::minus && dim == 0)
    throw std::invalid_argument("O^-(0,q) undefined");
  if (dim % 2 == 1) {
    f.type = FormType::plus;
    if (qodd) {
      for (int i = 0; i < n; ++i) C(2 * i, 2 * i + 1) = 1;
      f.witt = WittType::type1;
    } else {
      for (int i = 0; i < n; ++i) C(i, i + n) = 1;
    }
    C(dim - 1, dim - 1) = 1;
    return f;
  }
  if (qodd) {
    int pairs = type == FormType::plus ? n : n - 1;
    for (int i = 0; i < pairs; ++i) C(2 * i, 2 * i + 1) = 1;
    if (type == FormType::minus) {
      C(dim - 2, dim - 2) = 1;
      C(dim - 1, dim - 1) = F.neg(F.nonsquare());
    }
    f.witt = type == FormType::plus ? WittType::type0 : WittType::typeW;
    return f;
  }
  if (type == FormType::plus) {
    for (int i = 0; i < n; ++i) C(i, i + n) = 1;
    return f;
  }
  int m = n - 1;
  for (int i = 0; i < m; ++i) C(i, i + m) = 1;
  uint8_t beta = 0;
  for (int b = 1; b < F.q() && beta == 0; ++b) {
    bool root = false;
    for (int t = 0; t < F.q(); ++t)
      if (F.add(F.add(F.mul(t, t), t), b) == 0) root = true;
    if (!root) beta = uint8_t(b);
  }
  C(dim - 2, dim - 2) = 1;
  C(dim - 2, dim - 1) = 1;
  C(dim - 1, dim - 1) = beta;
  return f;
}

std::vector<uint8_t> polar_gram(const FormSpec& f, const FieldTable& F) {
  if (f.kind == FormKind::alternating) return f.coeff;
  int d = f.dim;
  std::vector<uint8_t> g(d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g[i * d + j] = F.add(f.coeff[i * d + j], f.coeff[j * d + i]);
  return g;
}

namespace {

// Row reduction in place; returns the rank and accumulates the determinant
// of the leading square block when requested.
int row_reduce(std::vector<uint8_t>& m, int rows, int cols, const FieldTable& F, uint8_t* det_out) {
  uint8_t det = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m[i * cols + c]) {
        piv = i;
        break;
      }
    if (piv < 0) {
      det = 0;
      continue;
    }
    if (piv != r) {
      for (int j = 0; j < cols; ++j) std::swap(m[piv * cols + j], m[r * cols + j]);
      det = F.neg(det);
    }
    uint8_t p = m[r * cols + c];
    det = F.mul(det, p);
    uint8_t pinv = F.inv(p);
    for (int j = 0; j < cols; ++j) m[r * cols + j] = F.mul(m[r * cols + j], pinv);
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i * cols + c] == 0) continue;
      uint8_t f = m[i * cols + c];
      for (int j = 0; j < cols; ++j) m[i * cols + j] = F.sub(m[i * cols + j], F.mul(f, m[r * cols + j]));
    }
    ++r;
  }
  if (det_out) *det_out = r == rows ? det : 0;
  return r;
}

// Basis of {x : m x = 0}.
std::vector<std::vector<uint8_t>> nullspace(std::vector<uint8_t> m, int rows, int cols, const FieldTable& F) {
  row_reduce(m, rows, cols, F, nullptr);
  std::vector<int> pivot_col;
  for (int i = 0, c = 0; i < rows; ++i) {
    while (c < cols && m[i * cols + c] == 0) ++c;
    if (c == cols) break;
    pivot_col.push_back(c);
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<uint8_t>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<uint8_t> v(cols, 0);
    v[free] = 1;
    for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = F.neg(m[i * cols + free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

uint8_t det(std::vector<uint8_t> m, int n, const FieldTable& F) {
  if (n == 0) return 1;
  uint8_t d = 0;
  row_reduce(m, n, n, F, &d);
  return d;
}

int rank(std::vector<uint8_t> m, int rows, int cols, const FieldTable& F) {
  return row_reduce(m, rows, cols, F, nullptr);
}

Matrix MatrixOps::identity() const {
  Matrix m;
  for (int i = 0; i < dim; ++i) m.at(dim, i, i) = 1;
  return m;
}

Matrix MatrixOps::mul(const Matrix& x, const Matrix& y) const {
  Matrix z;
  for (int i = 0; i < dim; ++i)
    for (int k = 0; k < dim; ++k) {
      uint8_t a = x.at(dim, i, k);
      if (!a) continue;
      for (int j = 0; j < dim; ++j) z.at(dim, i, j) = F->add(z.at(dim, i, j), F->mul(a, y.at(dim, k, j)));
    }
  return z;
}

Matrix MatrixOps::inverse(const Matrix& x) const {
  int w = 2 * dim;
  std::vector<uint8_t> m(dim * w, 0);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) m[i * w + j] = x.at(dim, i, j);
    m[i * w + dim + i] = 1;
  }
  if (row_reduce(m, dim, w, *F, nullptr) != dim || [&] {
        for (int i = 0; i < dim; ++i)
          if (m[i * w + i] != 1) return true;
        return false;
      }())
    throw std::domain_error("singular matrix");
  Matrix r;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) r.at(dim, i, j) = m[i * w + dim + j];
  return r;
}

Matrix MatrixOps::plus_identity(const Matrix& x) const {
  Matrix m = x;
  for (int i = 0; i < dim; ++i) m.at(dim, i, i) = F->add(m.at(dim, i, i), 1);
  return m;
}

uint8_t MatrixOps::det(const Matrix& x) const {
  return atlas::det(std::vector<uint8_t>(x.a.begin(), x.a.begin() + dim * dim), dim, *F);
}

int MatrixOps::rank(const Matrix& x) const {
  return atlas::rank(std::vector<uint8_t>(x.a.begin(), x.a.begin() + dim * dim), dim, dim, *F);
}

IsometryGroup::IsometryGroup(std::shared_ptr<const FieldTable> F, FormSpec form, std::vector<Matrix> elements)
    : field_(std::move(F)), form_(std::move(form)), elements_(std::move(elements)) {
  index_.reserve(elements_.size());
  for (uint32_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
  if (index_.size() != elements_.size()) throw std::logic_error("duplicate group elements");
}

namespace {

using MatrixSet = std::unordered_set<Matrix, MatrixHash>;

// Subgroup generated by gens; every product must satisfy `inside`.
std::vector<Matrix> closure(const MatrixOps& ops, const std::vector<Matrix>& gens,
                            const std::function<bool(const Matrix&)>& inside) {
  Matrix id = ops.identity();
  MatrixSet seen{id};
  std::vector<Matrix> out{id};
  for (size_t head = 0; head < out.size(); ++head) {
    for (const Matrix& s : gens) {
      Matrix y = ops.mul(out[head], s);
      if (seen.insert(y).second) {
        if (!inside(y)) throw std::logic_error("element set is not closed under multiplication");
        out.push_back(y);
      }
    }
  }
  return out;
}

}  // namespace

const std::vector<Matrix>& IsometryGroup::generators() const {
  if (!generators_.empty() || elements_.size() <= 1) return generators_;
  MatrixOps o = ops();
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<size_t> pick(0, elements_.size() - 1);
  std::vector<Matrix> gens;
  MatrixSet generated;
  auto inside = [this](const Matrix& m) { return contains(m); };
  while (generated.size() < elements_.size()) {
    Matrix g;
    do g = elements_[pick(rng)];
    while (generated.count(g));
    gens.push_back(g);
    auto h = closure(o, gens, inside);
    generated = MatrixSet(h.begin(), h.end());
  }
  generators_ = std::move(gens);
  return generators_;
}

uint64_t oracle_cap() {
  if (const char* env = std::getenv("INVOLUTION_ATLAS_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 1000000;
}

BigInt predicted_order(const FormSpec& f, int q) {
  if (f.kind == FormKind::alternating) return symplectic_order_int(f.dim, q);
  int sign = f.dim % 2 == 0 && f.type == FormType::minus ? -1 : 1;
  return orthogonal_order_int(sign, f.dim, q);
}

IsometryGroup build_isometry_group(const FormSpec& f, std::shared_ptr<const FieldTable> Fp, uint64_t cap) {
  const FieldTable& F = *Fp;
  const int N = f.dim, q = F.q();
  BigInt predicted = predicted_order(f, q);
  if (predicted > BigInt(std::to_string(cap)))
    throw std::invalid_argument("estimated order " + predicted.get_str() + " exceeds the oracle cap " +
                                std::to_string(cap) + " (set INVOLUTION_ATLAS_CAP to raise it)");
  if (N > kMaxOracleDim) throw std::invalid_argument("oracle dimension above " + std::to_string(kMaxOracleDim));

  std::vector<uint8_t> G = polar_gram(f, F);
  int polar_rank = rank(G, N, N, F);
  bool radical = false;
  if (polar_rank < N) {
    // Odd-dimensional quadratic form in characteristic 2: one-dimensional
    // radical on which Q does not vanish.
    if (!(f.kind == FormKind::quadratic && q % 2 == 0 && N % 2 == 1 && polar_rank == N - 1))
      throw std::invalid_argument("degenerate form");
    radical = true;
  }

  // All vectors of F^N with their Q-values.
  int V = 1;
  for (int i = 0; i < N; ++i) V *= q;
  std::vector<uint8_t> vec(size_t(V) * N);
  for (int v = 0; v < V; ++v)
    for (int i = 0, x = v; i < N; ++i, x /= q) vec[size_t(v) * N + i] = uint8_t(x % q);
  auto Q = [&](const uint8_t* x) {
    uint8_t s = 0;
    for (int i = 0; i < N; ++i)
      for (int j = i; j < N; ++j)
        if (f.coeff[i * N + j]) s = F.add(s, F.mul(f.coeff[i * N + j], F.mul(x[i], x[j])));
    return s;
  };

  // candidates[k]: vectors v with Q(v) = Q(e_k) (any nonzero v when alternating).
  std::vector<std::vector<int>> candidates(N);
  for (int v = 1; v < V; ++v) {
    uint8_t qv = f.kind == FormKind::quadratic ? Q(&vec[size_t(v) * N]) : 0;
    for (int k = 0; k < N; ++k)
      if (f.kind == FormKind::alternating || qv == f.coeff[k * N + k]) candidates[k].push_back(v);
  }

  // rowG[k] = v_k^T G for the chosen image v_k.
  std::vector<std::vector<uint8_t>> rowG(N, std::vector<uint8_t>(N));
  std::vector<int> image(N);
  std::vector<Matrix> out;
  uint64_t limit = predicted.get_ui();
  MatrixOps ops{&F, N};

  std::function<void(int)> extend = [&](int k) {
    if (k == N) {
      Matrix m;
      for (int j = 0; j < N; ++j)
        for (int i = 0; i < N; ++i) m.at(N, i, j) = vec[size_t(image[j]) * N + i];
      if (radical && ops.det(m) == 0) return;
      if (out.size() == limit) throw std::logic_error("isometry search exceeds the predicted order " + predicted.get_str());
      out.push_back(m);
      return;
    }
    for (int v : candidates[k]) {
      const uint8_t* x = &vec[size_t(v) * N];
      bool ok = true;
      for (int j = 0; j < k && ok; ++j) {
        uint8_t b = 0;
        for (int i = 0; i < N; ++i) b = F.add(b, F.mul(rowG[j][i], x[i]));
        ok = b == G[j * N + k];
      }
      if (!ok) continue;
      image[k] = v;
      for (int c = 0; c < N; ++c) {
        uint8_t s = 0;
        for (int i = 0; i < N; ++i) s = F.add(s, F.mul(x[i], G[i * N + c]));
        rowG[k][c] = s;
      }
      extend(k + 1);
    }
  };
  if (N == 0) {
    out.push_back(Matrix{});
  } else {
    extend(0);
  }
  if (BigInt(out.size()) != predicted)
    throw std::logic_error("isometry search found " + std::to_string(out.size()) + " elements, predicted " +
                           predicted.get_str());
  IsometryGroup grp(std::move(Fp), f, std::move(out));
  grp.generators();  // closure check
  return grp;
}

IsometryGroup special_subgroup(const IsometryGroup& G) {
  MatrixOps o = G.ops();
  std::vector<Matrix> keep;
  for (const Matrix& m : G.elements())
    if (G.dim() == 0 || o.det(m) == 1) keep.push_back(m);
  return IsometryGroup(G.field_ptr(), G.form(), std::move(keep));
}

IsometryGroup derived_subgroup(const IsometryGroup& G) {
  MatrixOps o = G.ops();
  const auto& S = G.generators();
  auto inside = [&G](const Matrix& m) { return G.contains(m); };
  std::vector<Matrix> gens;
  for (const Matrix& s : S)
    for (const Matrix& t : S) {
      Matrix c = o.mul(o.mul(o.inverse(s), o.inverse(t)), o.mul(s, t));
      if (!(c == o.identity())) gens.push_back(c);
    }
  std::vector<Matrix> D = closure(o, gens, inside);
  MatrixSet Dset(D.begin(), D.end());
  // Normal closure under conjugation by the generators of G.
  for (bool grew = true; grew;) {
    grew = false;
    for (size_t i = 0; i < gens.size() && !grew; ++i)
      for (const Matrix& s : S) {
        Matrix c = o.mul(o.mul(o.inverse(s), gens[i]), s);
        if (!Dset.count(c)) {
          gens.push_back(c);
          D = closure(o, gens, inside);
          Dset = MatrixSet(D.begin(), D.end());
          grew = true;
          break;
        }
      }
  }
  return IsometryGroup(G.field_ptr(), G.form(), std::move(D));
}

namespace {

// Vectors of F^N coded base q, digit i = coordinate i.
struct VectorCodec {
  int q, N;
  int encode(const std::vector<uint8_t>& x) const {
    int c = 0;
    for (int i = N - 1; i >= 0; --i) c = c * q + x[i];
    return c;
  }
  std::vector<uint8_t> decode(int c) const {
    std::vector<uint8_t> x(N);
    for (int i = 0; i < N; ++i, c /= q) x[i] = uint8_t(c % q);
    return x;
  }
};

std::vector<int> span_codes(const std::vector<std::vector<uint8_t>>& basis, const FieldTable& F,
                            const VectorCodec& vc) {
  std::vector<int> out{0};
  for (const auto& b : basis) {
    std::vector<int> next;
    for (int c : out) {
      auto x = vc.decode(c);
      for (int t = 0; t < F.q(); ++t) {
        std::vector<uint8_t> y(vc.N);
        for (int i = 0; i < vc.N; ++i) y[i] = F.add(x[i], F.mul(uint8_t(t), b[i]));
        next.push_back(vc.encode(y));
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

// Elements of a plus-type orthogonal group mapping one maximal totally
// singular subspace W0 into its own family, i.e. dim(W0 n gW0) = n mod 2.
IsometryGroup family_stabilizer(const IsometryGroup& G) {
  const FieldTable& F = G.field();
  const FormSpec& f = G.form();
  int N = f.dim, n = N / 2;
  if (f.kind != FormKind::quadratic || N % 2 || f.type != FormType::plus)
    throw std::invalid_argument("family stabilizer needs a plus-type orthogonal group");
  VectorCodec vc{F.q(), N};
  std::vector<uint8_t> B = polar_gram(f, F);
  auto Q = [&](const std::vector<uint8_t>& x) {
    uint8_t s = 0;
    for (int i = 0; i < N; ++i)
      for (int j = i; j < N; ++j) s = F.add(s, F.mul(f.coeff[i * N + j], F.mul(x[i], x[j])));
    return s;
  };
  auto Bf = [&](const std::vector<uint8_t>& x, const std::vector<uint8_t>& y) {
    uint8_t s = 0;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) s = F.add(s, F.mul(x[i], F.mul(B[i * N + j], y[j])));
    return s;
  };
  // Greedy totally singular basis of dimension n.
  std::vector<std::vector<uint8_t>> W0;
  int total = 1;
  for (int i = 0; i < N; ++i) total *= F.q();
  for (int c = 1; c < total && int(W0.size()) < n; ++c) {
    auto x = vc.decode(c);
    if (Q(x) != 0) continue;
    bool ok = true;
    for (const auto& w : W0) ok = ok && Bf(x, w) == 0;
    if (!ok) continue;
    auto sp = span_codes(W0, F, vc);
    if (std::binary_search(sp.begin(), sp.end(), c)) continue;
    W0.push_back(x);
  }
  if (int(W0.size()) != n) throw std::logic_error("no maximal totally singular subspace found");
  auto base = span_codes(W0, F, vc);
  std::vector<Matrix> keep;
  for (const Matrix& g : G.elements()) {
    std::vector<std::vector<uint8_t>> img;
    for (const auto& w : W0) {
      std::vector<uint8_t> y(N, 0);
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) y[i] = F.add(y[i], F.mul(g.at(N, i, j), w[j]));
      img.push_back(y);
    }
    auto sp = span_codes(img, F, vc);
    std::vector<int> common;
    std::set_intersection(base.begin(), base.end(), sp.begin(), sp.end(), std::back_inserter(common));
    int d = 0;
    for (size_t s = common.size(); s > 1; s /= F.q()) ++d;
    if ((d - n) % 2 == 0) keep.push_back(g);
  }
  return IsometryGroup(G.field_ptr(), f, std::move(keep));
}

IsometryGroup omega_subgroup(const IsometryGroup& G) {
  const FieldTable& F = G.field();
  int N = G.dim();
  if (G.form().kind != FormKind::quadratic) throw std::invalid_argument("Omega is defined for orthogonal groups");
  if (F.q() % 2 == 0) {
    if (N % 2) throw std::invalid_argument("Omega in odd dimension with q even is not modeled");
    if (N == 0) return G;
    IsometryGroup D = derived_subgroup(G);
    if (D.size() * 2 == G.size()) return D;
    // O^+(4,2) has a derived subgroup of index 4; fall back to the kernel of
    // the action on the two families of maximal totally singular subspaces.
    if (G.form().type == FormType::plus) {
      IsometryGroup K = family_stabilizer(G);
      if (K.size() * 2 == G.size()) return K;
    }
    throw std::logic_error("derived subgroup of O has order " + std::to_string(D.size()) +
                           " in a group of order " + std::to_string(G.size()));
  }
  IsometryGroup SO = special_subgroup(G);
  if (N <= 1) return SO;
  if (N == 2) {
    MatrixOps o = G.ops();
    MatrixSet sq;
    for (const Matrix& m : SO.elements()) sq.insert(o.mul(m, m));
    IsometryGroup W(G.field_ptr(), G.form(), std::vector<Matrix>(sq.begin(), sq.end()));
    if (W.size() * 2 != SO.size()) throw std::logic_error("squares in SO do not have index 2");
    return W;
  }
  IsometryGroup D = derived_subgroup(SO);
  if (D.size() * 2 != SO.size()) throw std::logic_error("derived subgroup of SO has order " + std::to_string(D.size()) + " in a group of order " + std::to_string(SO.size()));
  return D;
}

std::string to_string(Subset s) {
  switch (s) {
    case Subset::all: return "all";
    case Subset::det1: return "det1";
    case Subset::omega: return "omega";
    case Subset::coset: return "coset";
  }
  return "?";
}

uint64_t count_involutions_bruteforce(const IsometryGroup& G, Subset subset, const IsometryGroup* omega) {
  bool qeven = G.field().q() % 2 == 0;
  if (subset == Subset::det1 && qeven)
    throw std::invalid_argument("det1 is not a proper subset in characteristic 2; use omega");
  if ((subset == Subset::omega || subset == Subset::coset) && G.form().kind != FormKind::quadratic)
    throw std::invalid_argument("subset " + to_string(subset) + " needs an orthogonal group");
  std::optional<IsometryGroup> own;
  if (!omega && (subset == Subset::omega || (subset == Subset::coset && qeven))) {
    own.emplace(omega_subgroup(G));
    omega = &*own;
  }
  MatrixOps o = G.ops();
  Matrix id = o.identity();
  uint64_t n = 0;
  for (const Matrix& g : G.elements()) {
    if (!(o.mul(g, g) == id)) continue;
    bool take = true;
    switch (subset) {
      case Subset::all: break;
      case Subset::det1: take = G.dim() == 0 || o.det(g) == 1; break;
      case Subset::omega: take = omega->contains(g); break;
      case Subset::coset: take = qeven ? !omega->contains(g) : o.det(g) != 1; break;
    }
    n += take;
  }
  return n;
}

bool omega_membership_even(const Matrix& g, const IsometryGroup& G) {
  if (G.field().q() % 2) throw std::invalid_argument("rank parity criterion needs q even");
  return G.ops().rank(G.ops().plus_identity(g)) % 2 == 0;
}

WittType witt_type(const std::vector<uint8_t>& gram, int dim, const FieldTable& F) {
  if (F.q() % 2 == 0) throw std::invalid_argument("Witt type by discriminant needs q odd");
  if (dim == 0) return WittType::type0;
  uint8_t d = det(gram, dim, F);
  if (d == 0) throw std::invalid_argument("degenerate form");
  int n = dim / 2;
  uint8_t sign = n % 2 ? F.neg(1) : 1;
  if (dim % 2 == 0) return F.is_square(F.mul(sign, d)) ? WittType::type0 : WittType::typeW;
  uint8_t ref = F.mul(sign, F.from_int(2));
  return F.is_square(F.mul(d, F.inv(ref))) ? WittType::type1 : WittType::typeD;
}

AgreementStats check_rank_parity(const IsometryGroup& G) {
  IsometryGroup D = omega_subgroup(G);
  AgreementStats s;
  for (const Matrix& g : G.elements()) {
    ++s.tested;
    s.agreed += omega_membership_even(g, G) == D.contains(g);
  }
  return s;
}

AgreementStats check_eigenspace_classifier(const IsometryGroup& G) {
  const FieldTable& F = G.field();
  if (F.q() % 2 == 0) throw std::invalid_argument("eigenspace classifier needs q odd");
  IsometryGroup W = omega_subgroup(G);
  MatrixOps o = G.ops();
  int N = G.dim();
  std::vector<uint8_t> B = polar_gram(G.form(), F);
  Matrix id = o.identity();
  AgreementStats s;
  for (const Matrix& t : G.elements()) {
    if (!(o.mul(t, t) == id) || o.det(t) != 1) continue;
    Matrix m = o.plus_identity(t);
    auto K = nullspace(std::vector<uint8_t>(m.a.begin(), m.a.begin() + N * N), N, N, F);
    int d = int(K.size());
    std::vector<uint8_t> R(d * d, 0);
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        uint8_t v = 0;
        for (int i = 0; i < N; ++i)
          for (int j = 0; j < N; ++j) v = F.add(v, F.mul(K[a][i], F.mul(B[i * N + j], K[b][j])));
        R[a * d + b] = v;
      }
    OmegaClassQuery query{d, witt_type(R, d, F), F.q()};
    ++s.tested;
    s.agreed += omega_class_membership(query) == W.contains(t);
  }
  return s;
}

BigInt symplectic_involutions_qodd(int dim, const BigInt& q) {
  if (dim % 2 || dim < 0) throw std::invalid_argument("symplectic dimension must be even");
  if (q % 2 == 0) throw std::invalid_argument("eigenspace count needs q odd");
  BigInt whole = symplectic_order_int(dim, q), total = 0;
  for (int k = 0; k <= dim; k += 2)
    total += whole / (symplectic_order_int(k, q) * symplectic_order_int(dim - k, q));
  return total;
}

void dump_elements(const IsometryGroup& G, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open " + path);
  nlohmann::json h{{"schema", 1},
                   {"dim", G.dim()},
                   {"q", G.field().q()},
                   {"count", G.size()},
                   {"layout", "row-major uint8 per entry"}};
  os << h.dump() << '\n';
  int n = G.dim();
  for (const Matrix& m : G.elements()) os.write(reinterpret_cast<const char*>(m.a.data()), n * n);
  if (!os) throw std::runtime_error("write failed for " + path);
}

}  // namespace atlas
