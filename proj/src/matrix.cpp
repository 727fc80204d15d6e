#include "cgstat/matrix.hpp"

#include "cgstat/random.hpp"

#include <cstring>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

namespace cgstat::mg {

std::size_t MatrixHash::operator()(const Matrix& m) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ m.n;
  for (int r = 0; r < kMaxDim; ++r) {
    std::uint64_t w;
    std::memcpy(&w, m.a.data() + r * kMaxDim, 8);
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdULL;
  }
  h ^= h >> 33;
  return static_cast<std::size_t>(h);
}

MatrixSpace::MatrixSpace(std::shared_ptr<const ff::Field> F, int n) : F_(std::move(F)), n_(n) {
  if (!F_) throw ArgumentError("null field");
  if (n < 1 || n > kMaxDim) throw ArgumentError("matrix dimension must lie in [1, 8]");
  q_ = F_->order();
  if (q_ > 256) throw ArgumentError("matrix entries need q <= 256");
  add_ = F_->add_table();
  mul_ = F_->mul_table();
}

Matrix MatrixSpace::zero() const {
  Matrix m;
  m.n = static_cast<std::uint8_t>(n_);
  return m;
}

Matrix MatrixSpace::identity() const { return scalar(1); }

Matrix MatrixSpace::scalar(std::uint8_t c) const {
  Matrix m = zero();
  for (int i = 0; i < n_; ++i) m(i, i) = c;
  return m;
}

Matrix MatrixSpace::from_rows(const std::vector<std::vector<int>>& rows) const {
  if (static_cast<int>(rows.size()) != n_) throw ArgumentError("row count does not match dimension");
  Matrix m = zero();
  for (int i = 0; i < n_; ++i) {
    if (static_cast<int>(rows[i].size()) != n_) throw ArgumentError("row length does not match dimension");
    for (int j = 0; j < n_; ++j) {
      if (rows[i][j] < 0 || rows[i][j] >= q_) throw ArgumentError("matrix entry outside the field");
      m(i, j) = static_cast<std::uint8_t>(rows[i][j]);
    }
  }
  return m;
}

Matrix MatrixSpace::diagonal(const std::vector<int>& d) const {
  if (static_cast<int>(d.size()) != n_) throw ArgumentError("diagonal length does not match dimension");
  Matrix m = zero();
  for (int i = 0; i < n_; ++i) m(i, i) = static_cast<std::uint8_t>(d[i]);
  return m;
}

Matrix MatrixSpace::companion(const ff::Poly& f) const {
  if (f.degree() != n_ || !f.is_monic()) throw ArgumentError("companion needs a monic polynomial of degree n");
  Matrix m = zero();
  for (int i = 1; i < n_; ++i) m(i, i - 1) = 1;
  for (int i = 0; i < n_; ++i) m(i, n_ - 1) = neg(f.coeff(i).v);
  return m;
}

Matrix MatrixSpace::mul(const Matrix& x, const Matrix& y) const noexcept {
  Matrix r = zero();
  for (int i = 0; i < n_; ++i) {
    for (int k = 0; k < n_; ++k) {
      const std::uint8_t a = x(i, k);
      if (a == 0) continue;
      const std::uint16_t* row = mul_ + a * q_;
      for (int j = 0; j < n_; ++j) r(i, j) = static_cast<std::uint8_t>(add_[r(i, j) * q_ + row[y(k, j)]]);
    }
  }
  return r;
}

Matrix MatrixSpace::add(const Matrix& x, const Matrix& y) const noexcept {
  Matrix r = zero();
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r(i, j) = add(x(i, j), y(i, j));
  return r;
}

Matrix MatrixSpace::sub(const Matrix& x, const Matrix& y) const noexcept {
  Matrix r = zero();
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r(i, j) = sub(x(i, j), y(i, j));
  return r;
}

Matrix MatrixSpace::scale(const Matrix& x, std::uint8_t c) const noexcept {
  Matrix r = zero();
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r(i, j) = mul(c, x(i, j));
  return r;
}

Matrix MatrixSpace::transpose(const Matrix& x) const noexcept {
  Matrix r = zero();
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r(i, j) = x(j, i);
  return r;
}

Matrix MatrixSpace::frobenius(const Matrix& x, int k) const noexcept {
  Matrix r = zero();
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r(i, j) = F_->frobenius({x(i, j)}, k).v;
  return r;
}

Matrix MatrixSpace::inverse(const Matrix& x) const {
  Matrix a = x;
  Matrix b = identity();
  for (int c = 0; c < n_; ++c) {
    int p = -1;
    for (int r = c; r < n_; ++r)
      if (a(r, c) != 0) {
        p = r;
        break;
      }
    if (p < 0) throw DomainError("matrix is singular");
    if (p != c)
      for (int j = 0; j < n_; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(b(p, j), b(c, j));
      }
    const std::uint8_t inv = F_->inv({a(c, c)}).v;
    for (int j = 0; j < n_; ++j) {
      a(c, j) = mul(inv, a(c, j));
      b(c, j) = mul(inv, b(c, j));
    }
    for (int r = 0; r < n_; ++r) {
      if (r == c || a(r, c) == 0) continue;
      const std::uint8_t f = neg(a(r, c));
      for (int j = 0; j < n_; ++j) {
        a(r, j) = add(a(r, j), mul(f, a(c, j)));
        b(r, j) = add(b(r, j), mul(f, b(c, j)));
      }
    }
  }
  return b;
}

std::uint8_t MatrixSpace::det(const Matrix& x) const noexcept {
  Matrix a = x;
  std::uint8_t d = 1;
  for (int c = 0; c < n_; ++c) {
    int p = -1;
    for (int r = c; r < n_; ++r)
      if (a(r, c) != 0) {
        p = r;
        break;
      }
    if (p < 0) return 0;
    if (p != c) {
      for (int j = 0; j < n_; ++j) std::swap(a(p, j), a(c, j));
      d = neg(d);
    }
    d = mul(d, a(c, c));
    const std::uint8_t inv = F_->inv({a(c, c)}).v;
    for (int r = c + 1; r < n_; ++r) {
      if (a(r, c) == 0) continue;
      const std::uint8_t f = neg(mul(a(r, c), inv));
      for (int j = c; j < n_; ++j) a(r, j) = add(a(r, j), mul(f, a(c, j)));
    }
  }
  return d;
}

int MatrixSpace::rank(const Matrix& x) const noexcept {
  Matrix a = x;
  int rk = 0;
  for (int c = 0; c < n_ && rk < n_; ++c) {
    int p = -1;
    for (int r = rk; r < n_; ++r)
      if (a(r, c) != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    if (p != rk)
      for (int j = 0; j < n_; ++j) std::swap(a(p, j), a(rk, j));
    const std::uint8_t inv = F_->inv({a(rk, c)}).v;
    for (int r = rk + 1; r < n_; ++r) {
      if (a(r, c) == 0) continue;
      const std::uint8_t f = neg(mul(a(r, c), inv));
      for (int j = c; j < n_; ++j) a(r, j) = add(a(r, j), mul(f, a(rk, j)));
    }
    ++rk;
  }
  return rk;
}

bool MatrixSpace::is_scalar(const Matrix& x) const noexcept {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      if (i != j && x(i, j) != 0) return false;
      if (i == j && x(i, i) != x(0, 0)) return false;
    }
  return true;
}

Vec MatrixSpace::apply(const Matrix& x, const Vec& v) const noexcept {
  Vec r{};
  for (int i = 0; i < n_; ++i) {
    std::uint8_t s = 0;
    for (int j = 0; j < n_; ++j)
      if (v[j] != 0 && x(i, j) != 0) s = add(s, mul(x(i, j), v[j]));
    r[i] = s;
  }
  return r;
}

std::vector<Vec> MatrixSpace::kernel(const Matrix& x) const {
  // Reduced row echelon form, then one basis vector per free column.
  Matrix a = x;
  std::vector<int> pivot_col;
  int rk = 0;
  for (int c = 0; c < n_ && rk < n_; ++c) {
    int p = -1;
    for (int r = rk; r < n_; ++r)
      if (a(r, c) != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    if (p != rk)
      for (int j = 0; j < n_; ++j) std::swap(a(p, j), a(rk, j));
    const std::uint8_t inv = F_->inv({a(rk, c)}).v;
    for (int j = 0; j < n_; ++j) a(rk, j) = mul(inv, a(rk, j));
    for (int r = 0; r < n_; ++r) {
      if (r == rk || a(r, c) == 0) continue;
      const std::uint8_t f = neg(a(r, c));
      for (int j = 0; j < n_; ++j) a(r, j) = add(a(r, j), mul(f, a(rk, j)));
    }
    pivot_col.push_back(c);
    ++rk;
  }
  std::vector<bool> is_pivot(n_, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<Vec> out;
  for (int f = 0; f < n_; ++f) {
    if (is_pivot[f]) continue;
    Vec v{};
    v[f] = 1;
    for (int r = 0; r < rk; ++r) v[pivot_col[r]] = neg(a(r, f));
    out.push_back(v);
  }
  return out;
}

void MatrixSpace::charpoly_coeffs(const Matrix& x, std::uint8_t* out) const noexcept {
  Matrix h = x;
  const int n = n_;
  // Upper Hessenberg form by similarity transforms.
  for (int j = 0; j + 2 < n; ++j) {
    int p = -1;
    for (int i = j + 1; i < n; ++i)
      if (h(i, j) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != j + 1) {
      for (int c = 0; c < n; ++c) std::swap(h(p, c), h(j + 1, c));
      for (int r = 0; r < n; ++r) std::swap(h(r, p), h(r, j + 1));
    }
    const std::uint8_t inv = F_->inv({h(j + 1, j)}).v;
    for (int r = j + 2; r < n; ++r) {
      if (h(r, j) == 0) continue;
      const std::uint8_t u = mul(h(r, j), inv);
      const std::uint8_t nu = neg(u);
      for (int c = 0; c < n; ++c) h(r, c) = add(h(r, c), mul(nu, h(j + 1, c)));
      for (int c = 0; c < n; ++c) h(c, j + 1) = add(h(c, j + 1), mul(u, h(c, r)));
    }
  }
  // p_k = (z - h_kk) p_{k-1} - sum_{i<k} h_ik (prod_{i<l<=k} h_{l,l-1}) p_{i-1}
  std::uint8_t p[kMaxDim + 1][kMaxDim + 1] = {};
  p[0][0] = 1;
  for (int k = 1; k <= n; ++k) {
    const std::uint8_t nh = neg(h(k - 1, k - 1));
    for (int d = 0; d <= k; ++d) {
      std::uint8_t v = (d >= 1) ? p[k - 1][d - 1] : 0;
      if (d <= k - 1) v = add(v, mul(nh, p[k - 1][d]));
      p[k][d] = v;
    }
    std::uint8_t beta = 1;
    for (int i = k - 1; i >= 1; --i) {
      beta = mul(beta, h(i, i - 1));
      if (beta == 0) break;
      const std::uint8_t c = neg(mul(h(i - 1, k - 1), beta));
      if (c == 0) continue;
      for (int d = 0; d <= i - 1; ++d) p[k][d] = add(p[k][d], mul(c, p[i - 1][d]));
    }
  }
  for (int d = 0; d <= n; ++d) out[d] = p[n][d];
}

ff::Poly MatrixSpace::charpoly(const Matrix& x) const {
  std::uint8_t c[kMaxDim + 1];
  charpoly_coeffs(x, c);
  std::vector<ff::FieldElement> v(n_ + 1);
  for (int i = 0; i <= n_; ++i) v[i] = {c[i]};
  return ff::Poly(std::move(v));
}

std::uint64_t MatrixSpace::charpoly_index(const Matrix& x) const noexcept {
  std::uint8_t c[kMaxDim + 1];
  charpoly_coeffs(x, c);
  std::uint64_t idx = 0;
  for (int i = n_ - 1; i >= 0; --i) idx = idx * static_cast<std::uint64_t>(q_) + c[i];
  return idx;
}

Matrix MatrixSpace::random_matrix(std::mt19937_64& rng) const {
  Matrix m = zero();
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m(i, j) = static_cast<std::uint8_t>(bounded(rng, static_cast<std::uint64_t>(q_)));
  return m;
}

std::string MatrixSpace::to_string(const Matrix& x) const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < n_; ++i) {
    if (i) os << ',';
    os << '[';
    for (int j = 0; j < n_; ++j) {
      if (j) os << ',';
      os << static_cast<int>(x(i, j));
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

namespace {

// det of a matrix of polynomials by cofactor expansion along row 0.
ff::Poly minors_det(const ff::Field& F, const std::vector<std::vector<ff::Poly>>& m) {
  const int n = static_cast<int>(m.size());
  if (n == 1) return m[0][0];
  ff::Poly total;
  for (int c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<ff::Poly>> sub;
    for (int r = 1; r < n; ++r) {
      std::vector<ff::Poly> row;
      for (int k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      sub.push_back(std::move(row));
    }
    ff::Poly term = ff::mul(F, m[0][c], minors_det(F, sub));
    total = (c % 2 == 0) ? ff::add(F, total, term) : ff::sub(F, total, term);
  }
  return total;
}

}  // namespace

ff::Poly charpoly_by_minors(const MatrixSpace& S, const Matrix& x) {
  const ff::Field& F = S.field();
  const int n = S.dim();
  std::vector<std::vector<ff::Poly>> m(n, std::vector<ff::Poly>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      ff::Poly c = ff::Poly::constant(F.neg({x(i, j)}));
      m[i][j] = (i == j) ? ff::add(F, ff::Poly::x(), c) : c;
    }
  return minors_det(F, m);
}

namespace {

bool free_of_small(const ff::Field& F, const ff::Poly& h, int t) {
  if (h.degree() < 1) return true;
  return !ff::has_small_degree_factor(F, h, t);
}

// f / (z - a) if a is a root, else an empty optional-like zero poly flagged by ok.
bool divide_linear(const ff::Field& F, const ff::Poly& f, ff::FieldElement a, ff::Poly& out) {
  if (f.degree() < 1 || ff::eval(F, f, a) != F.zero()) return false;
  ff::Poly lin({F.neg(a), F.one()});
  out = ff::divmod(F, f, lin).first;
  return true;
}

}  // namespace

std::uint8_t classify_poly(const ff::Field& F, const ff::Poly& f, int t) {
  if (t < 1) throw ArgumentError("t must be >= 1");
  std::uint8_t flags = 0;
  if (ff::has_small_degree_factor(F, f, t)) flags |= PolyClassTable::kSmallFactor;
  const ff::FieldElement one = F.one();
  const ff::FieldElement minus_one = F.neg(one);
  ff::Poly h;
  if (divide_linear(F, f, one, h) && free_of_small(F, h, t)) flags |= PolyClassTable::kOneTimesFree;
  if (divide_linear(F, f, minus_one, h) && free_of_small(F, h, t)) flags |= PolyClassTable::kMinusTimesFree;
  ff::Poly h1, h2;
  if (divide_linear(F, f, one, h1) && divide_linear(F, h1, minus_one, h2) && free_of_small(F, h2, t))
    flags |= PolyClassTable::kReflection;
  return flags;
}

PolyClassTable::PolyClassTable(std::shared_ptr<const ff::Field> F, int n, int t) : n_(n), t_(t) {
  if (n < 1) throw ArgumentError("degree must be >= 1");
  if (t < 1) throw ArgumentError("t must be >= 1");
  long long total = 1;
  for (int i = 0; i < n; ++i) {
    total *= F->order();
    if (total > kPolyClassTableCap) throw ResourceError("polynomial class table too large");
  }
  flags_.resize(static_cast<std::size_t>(total));
  for (long long idx = 0; idx < total; ++idx) flags_[static_cast<std::size_t>(idx)] = classify_poly(*F, ff::monic_from_index(*F, n, idx), t);
}

std::shared_ptr<const PolyClassTable> poly_class_table(int q, int n, int t) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, std::shared_ptr<const PolyClassTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(q, n, t);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto tab = std::make_shared<const PolyClassTable>(ff::field(q), n, t);
  cache.emplace(key, tab);
  return tab;
}

}  // namespace cgstat::mg
