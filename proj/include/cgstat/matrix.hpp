#pragma once

#include "cgstat/errors.hpp"
#include "cgstat/finite_field.hpp"

#include <array>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

namespace cgstat::mg {

inline constexpr int kMaxDim = 8;

// Row-major with fixed stride kMaxDim; unused entries stay zero so that
// equality and hashing can look at the whole array.
struct Matrix {
  std::uint8_t n = 0;
  std::array<std::uint8_t, kMaxDim * kMaxDim> a{};

  std::uint8_t operator()(int i, int j) const noexcept { return a[i * kMaxDim + j]; }
  std::uint8_t& operator()(int i, int j) noexcept { return a[i * kMaxDim + j]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;
};

struct MatrixHash {
  std::size_t operator()(const Matrix& m) const noexcept;
};

using Vec = std::array<std::uint8_t, kMaxDim>;

// n x n matrices over a fixed field; vectors are columns.
class MatrixSpace {
 public:
  MatrixSpace(std::shared_ptr<const ff::Field> F, int n);

  const ff::Field& field() const noexcept { return *F_; }
  std::shared_ptr<const ff::Field> field_ptr() const noexcept { return F_; }
  int dim() const noexcept { return n_; }
  int q() const noexcept { return q_; }

  Matrix zero() const;
  Matrix identity() const;
  Matrix scalar(std::uint8_t c) const;
  Matrix from_rows(const std::vector<std::vector<int>>& rows) const;
  Matrix diagonal(const std::vector<int>& d) const;
  // Companion matrix of a monic polynomial of degree n.
  Matrix companion(const ff::Poly& f) const;

  std::uint8_t add(std::uint8_t a, std::uint8_t b) const noexcept { return static_cast<std::uint8_t>(add_[a * q_ + b]); }
  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const noexcept { return static_cast<std::uint8_t>(mul_[a * q_ + b]); }
  std::uint8_t neg(std::uint8_t a) const noexcept { return F_->neg({a}).v; }
  std::uint8_t sub(std::uint8_t a, std::uint8_t b) const noexcept { return add(a, neg(b)); }

  Matrix mul(const Matrix& x, const Matrix& y) const noexcept;
  Matrix add(const Matrix& x, const Matrix& y) const noexcept;
  Matrix sub(const Matrix& x, const Matrix& y) const noexcept;
  Matrix scale(const Matrix& x, std::uint8_t c) const noexcept;
  Matrix transpose(const Matrix& x) const noexcept;
  // Entrywise x -> x^(p^k).
  Matrix frobenius(const Matrix& x, int k) const noexcept;
  Matrix inverse(const Matrix& x) const;
  Matrix inverse_transpose(const Matrix& x) const { return transpose(inverse(x)); }
  std::uint8_t det(const Matrix& x) const noexcept;
  int rank(const Matrix& x) const noexcept;
  bool is_invertible(const Matrix& x) const noexcept { return rank(x) == n_; }
  bool is_scalar(const Matrix& x) const noexcept;
  bool is_identity(const Matrix& x) const noexcept { return x == identity(); }

  Vec apply(const Matrix& x, const Vec& v) const noexcept;
  // Kernel basis of x (columns solving x v = 0).
  std::vector<Vec> kernel(const Matrix& x) const;

  // Characteristic polynomial det(zI - x), coefficients low to high
  // written into out[0..n]; Hessenberg reduction, no allocation.
  void charpoly_coeffs(const Matrix& x, std::uint8_t* out) const noexcept;
  ff::Poly charpoly(const Matrix& x) const;
  // sum_{i<n} c_i q^i for the monic charpoly.
  std::uint64_t charpoly_index(const Matrix& x) const noexcept;

  Matrix random_matrix(std::mt19937_64& rng) const;

  std::string to_string(const Matrix& x) const;

 private:
  std::shared_ptr<const ff::Field> F_;
  int n_;
  int q_;
  const std::uint16_t* add_;
  const std::uint16_t* mul_;
};

// Expansion by minors; exponential, for checking small cases only.
ff::Poly charpoly_by_minors(const MatrixSpace& S, const Matrix& x);

// Flags for every monic degree-n polynomial, indexed like charpoly_index.
class PolyClassTable {
 public:
  enum Bits : std::uint8_t {
    kSmallFactor = 1,    // has an irreducible factor of degree <= t
    kOneTimesFree = 2,   // (z - 1) h, h without factors of degree <= t
    kMinusTimesFree = 4, // (z + 1) h
    kReflection = 8,     // (z - 1)(z + 1) h for odd q, (z + 1)^2 h for even q
  };

  PolyClassTable(std::shared_ptr<const ff::Field> F, int n, int t);

  int degree() const noexcept { return n_; }
  int t() const noexcept { return t_; }
  std::uint8_t flags(std::uint64_t index) const noexcept { return flags_[index]; }

 private:
  int n_;
  int t_;
  std::vector<std::uint8_t> flags_;
};

inline constexpr long long kPolyClassTableCap = 1LL << 22;

// Cached table per (q, n, t); ResourceError above kPolyClassTableCap entries.
std::shared_ptr<const PolyClassTable> poly_class_table(int q, int n, int t);

// Classification flags of a single monic polynomial (no table).
std::uint8_t classify_poly(const ff::Field& F, const ff::Poly& f, int t);

}  // namespace cgstat::mg
