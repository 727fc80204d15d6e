#pragma once

#include "cgstat/matrix.hpp"
#include "cgstat/random.hpp"

#include <cstdint>
#include <vector>

namespace cgstat::mg {

// Uniform over GL_n(q) by rejection from all matrices; tries counts draws.
Matrix random_gl(const MatrixSpace& S, std::mt19937_64& rng, long long* tries = nullptr);
// Uniform over {g : r(det g) = label}: a uniform g times diag(zeta^(label - r(det g)), 1, ..., 1).
Matrix random_coset_gl(const MatrixSpace& S, int label, std::mt19937_64& rng);

// Row-major n x n matrices of any size over GF(q), q <= 256.
class DenseGL {
 public:
  using Mat = std::vector<std::uint8_t>;

  DenseGL(int q, int n);
  int n() const noexcept { return n_; }
  const ff::Field& field() const noexcept { return *F_; }

  Mat random_matrix(std::mt19937_64& rng) const;
  Mat random_gl(std::mt19937_64& rng, long long* tries = nullptr) const;
  Mat random_coset(int label, std::mt19937_64& rng) const;

  Mat mul(const Mat& x, const Mat& y) const;
  Mat inverse_transpose(const Mat& x) const;
  std::uint8_t det(const Mat& x) const;
  int rank(const Mat& x) const;
  ff::Poly charpoly(const Mat& x) const;
  // Some eigenvalue lies in GF(q).
  bool has_eigenvalue(const Mat& x) const;

 private:
  std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return static_cast<std::uint8_t>(add_[a * q_ + b]); }
  std::uint8_t mulf(std::uint8_t a, std::uint8_t b) const { return static_cast<std::uint8_t>(mul_[a * q_ + b]); }

  std::shared_ptr<const ff::Field> F_;
  int q_, n_;
  const std::uint16_t* add_;
  const std::uint16_t* mul_;
};

// GF(2) matrices with up to 64 columns, one bit-packed word per row.
namespace gf2 {
using Rows = std::vector<std::uint64_t>;
Rows random_matrix(int n, std::mt19937_64& rng);
int rank(Rows m, int n);
// Uniform element of GL_n(2).
Rows random_gl(int n, std::mt19937_64& rng, long long* tries = nullptr);
// g fixes no 1-space iff g + I is invertible.
bool fixes_no_point(const Rows& g, int n);
}  // namespace gf2

}  // namespace cgstat::mg
