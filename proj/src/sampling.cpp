#include "cgstat/sampling.hpp"


namespace cgstat::mg {

Matrix random_gl(const MatrixSpace& S, std::mt19937_64& rng, long long* tries) {
  for (long long k = 1;; ++k) {
    Matrix m = S.random_matrix(rng);
    if (S.is_invertible(m)) {
      if (tries) *tries = k;
      return m;
    }
  }
}

Matrix random_coset_gl(const MatrixSpace& S, int label, std::mt19937_64& rng) {
  const ff::Field& F = S.field();
  if (label < 0 || label >= F.order() - 1) throw ArgumentError("determinant label out of range");
  Matrix g = random_gl(S, rng);
  const int shift = label - F.log({S.det(g)});
  const std::uint8_t c = F.exp(shift).v;
  for (int i = 0; i < S.dim(); ++i) g(i, 0) = S.mul(g(i, 0), c);
  return g;
}

DenseGL::DenseGL(int q, int n) : F_(ff::field(q)), q_(q), n_(n) {
  if (q > 256) throw ArgumentError("dense matrices need q <= 256");
  if (n < 1) throw ArgumentError("dimension must be >= 1");
  add_ = F_->add_table();
  mul_ = F_->mul_table();
}

DenseGL::Mat DenseGL::random_matrix(std::mt19937_64& rng) const {
  Mat m(static_cast<std::size_t>(n_) * n_);
  for (auto& e : m) e = static_cast<std::uint8_t>(bounded(rng, static_cast<std::uint64_t>(q_)));
  return m;
}

DenseGL::Mat DenseGL::random_gl(std::mt19937_64& rng, long long* tries) const {
  for (long long k = 1;; ++k) {
    Mat m = random_matrix(rng);
    if (rank(m) == n_) {
      if (tries) *tries = k;
      return m;
    }
  }
}

DenseGL::Mat DenseGL::random_coset(int label, std::mt19937_64& rng) const {
  if (label < 0 || label >= q_ - 1) throw ArgumentError("determinant label out of range");
  Mat g = random_gl(rng);
  const std::uint8_t c = F_->exp(label - F_->log({det(g)})).v;
  for (int i = 0; i < n_; ++i) g[i * n_] = mulf(g[i * n_], c);
  return g;
}

DenseGL::Mat DenseGL::mul(const Mat& x, const Mat& y) const {
  Mat r(x.size(), 0);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const std::uint8_t a = x[i * n_ + k];
      if (a == 0) continue;
      for (int j = 0; j < n_; ++j) r[i * n_ + j] = add(r[i * n_ + j], mulf(a, y[k * n_ + j]));
    }
  return r;
}

DenseGL::Mat DenseGL::inverse_transpose(const Mat& x) const {
  const int n = n_;
  Mat a = x;
  Mat b(x.size(), 0);
  for (int i = 0; i < n; ++i) b[i * n + i] = 1;
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int r = c; r < n; ++r)
      if (a[r * n + c] != 0) {
        p = r;
        break;
      }
    if (p < 0) throw DomainError("matrix is singular");
    if (p != c)
      for (int j = 0; j < n; ++j) {
        std::swap(a[p * n + j], a[c * n + j]);
        std::swap(b[p * n + j], b[c * n + j]);
      }
    const std::uint8_t inv = F_->inv({a[c * n + c]}).v;
    for (int j = 0; j < n; ++j) {
      a[c * n + j] = mulf(inv, a[c * n + j]);
      b[c * n + j] = mulf(inv, b[c * n + j]);
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || a[r * n + c] == 0) continue;
      const std::uint8_t f = F_->neg({a[r * n + c]}).v;
      for (int j = 0; j < n; ++j) {
        a[r * n + j] = add(a[r * n + j], mulf(f, a[c * n + j]));
        b[r * n + j] = add(b[r * n + j], mulf(f, b[c * n + j]));
      }
    }
  }
  Mat t(b.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i * n + j] = b[j * n + i];
  return t;
}

std::uint8_t DenseGL::det(const Mat& x) const {
  const int n = n_;
  Mat a = x;
  std::uint8_t d = 1;
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int r = c; r < n; ++r)
      if (a[r * n + c] != 0) {
        p = r;
        break;
      }
    if (p < 0) return 0;
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(a[p * n + j], a[c * n + j]);
      d = F_->neg({d}).v;
    }
    d = mulf(d, a[c * n + c]);
    const std::uint8_t inv = F_->inv({a[c * n + c]}).v;
    for (int r = c + 1; r < n; ++r) {
      if (a[r * n + c] == 0) continue;
      const std::uint8_t f = F_->neg({mulf(a[r * n + c], inv)}).v;
      for (int j = c; j < n; ++j) a[r * n + j] = add(a[r * n + j], mulf(f, a[c * n + j]));
    }
  }
  return d;
}

int DenseGL::rank(const Mat& x) const {
  const int n = n_;
  Mat a = x;
  int rk = 0;
  for (int c = 0; c < n && rk < n; ++c) {
    int p = -1;
    for (int r = rk; r < n; ++r)
      if (a[r * n + c] != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    if (p != rk)
      for (int j = 0; j < n; ++j) std::swap(a[p * n + j], a[rk * n + j]);
    const std::uint8_t inv = F_->inv({a[rk * n + c]}).v;
    for (int r = rk + 1; r < n; ++r) {
      if (a[r * n + c] == 0) continue;
      const std::uint8_t f = F_->neg({mulf(a[r * n + c], inv)}).v;
      for (int j = c; j < n; ++j) a[r * n + j] = add(a[r * n + j], mulf(f, a[rk * n + j]));
    }
    ++rk;
  }
  return rk;
}

ff::Poly DenseGL::charpoly(const Mat& x) const {
  const int n = n_;
  Mat h = x;
  auto H = [&](int i, int j) -> std::uint8_t& { return h[i * n + j]; };
  auto neg = [&](std::uint8_t a) { return F_->neg({a}).v; };
  for (int j = 0; j + 2 < n; ++j) {
    int p = -1;
    for (int i = j + 1; i < n; ++i)
      if (H(i, j) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != j + 1) {
      for (int c = 0; c < n; ++c) std::swap(H(p, c), H(j + 1, c));
      for (int r = 0; r < n; ++r) std::swap(H(r, p), H(r, j + 1));
    }
    const std::uint8_t inv = F_->inv({H(j + 1, j)}).v;
    for (int r = j + 2; r < n; ++r) {
      if (H(r, j) == 0) continue;
      const std::uint8_t u = mulf(H(r, j), inv);
      const std::uint8_t nu = neg(u);
      for (int c = 0; c < n; ++c) H(r, c) = add(H(r, c), mulf(nu, H(j + 1, c)));
      for (int c = 0; c < n; ++c) H(c, j + 1) = add(H(c, j + 1), mulf(u, H(c, r)));
    }
  }
  std::vector<std::vector<std::uint8_t>> p(n + 1, std::vector<std::uint8_t>(n + 1, 0));
  p[0][0] = 1;
  for (int k = 1; k <= n; ++k) {
    const std::uint8_t nh = neg(H(k - 1, k - 1));
    for (int d = 0; d <= k; ++d) {
      std::uint8_t v = (d >= 1) ? p[k - 1][d - 1] : 0;
      if (d <= k - 1) v = add(v, mulf(nh, p[k - 1][d]));
      p[k][d] = v;
    }
    std::uint8_t beta = 1;
    for (int i = k - 1; i >= 1; --i) {
      beta = mulf(beta, H(i, i - 1));
      if (beta == 0) break;
      const std::uint8_t c = neg(mulf(H(i - 1, k - 1), beta));
      if (c == 0) continue;
      for (int d = 0; d <= i - 1; ++d) p[k][d] = add(p[k][d], mulf(c, p[i - 1][d]));
    }
  }
  std::vector<ff::FieldElement> v(n + 1);
  for (int i = 0; i <= n; ++i) v[i] = {p[n][i]};
  return ff::Poly(std::move(v));
}

bool DenseGL::has_eigenvalue(const Mat& x) const {
  for (int l = 1; l < q_; ++l) {
    Mat m = x;
    const std::uint8_t nl = F_->neg({static_cast<std::uint8_t>(l)}).v;
    for (int i = 0; i < n_; ++i) m[i * n_ + i] = add(m[i * n_ + i], nl);
    if (rank(m) < n_) return true;
  }
  return false;
}

namespace gf2 {

Rows random_matrix(int n, std::mt19937_64& rng) {
  if (n < 1 || n > 64) throw ArgumentError("gf2 matrices need 1 <= n <= 64");
  const std::uint64_t mask = n == 64 ? ~0ULL : ((1ULL << n) - 1);
  Rows m(n);
  for (auto& r : m) r = rng() & mask;
  return m;
}

int rank(Rows m, int n) {
  int rk = 0;
  for (int c = 0; c < n && rk < n; ++c) {
    const std::uint64_t bit = 1ULL << c;
    int p = -1;
    for (int r = rk; r < n; ++r)
      if (m[r] & bit) {
        p = r;
        break;
      }
    if (p < 0) continue;
    std::swap(m[p], m[rk]);
    for (int r = rk + 1; r < n; ++r)
      if (m[r] & bit) m[r] ^= m[rk];
    ++rk;
  }
  return rk;
}

Rows random_gl(int n, std::mt19937_64& rng, long long* tries) {
  for (long long k = 1;; ++k) {
    Rows m = random_matrix(n, rng);
    if (rank(m, n) == n) {
      if (tries) *tries = k;
      return m;
    }
  }
}

bool fixes_no_point(const Rows& g, int n) {
  Rows m = g;
  for (int i = 0; i < n; ++i) m[i] ^= 1ULL << i;
  return rank(std::move(m), n) == n;
}

}  // namespace gf2

}  // namespace cgstat::mg
