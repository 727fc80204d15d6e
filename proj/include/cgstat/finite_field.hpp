#pragma once

#include "cgstat/rational.hpp"

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace cgstat::ff {

// Largest field order with precomputed tables.
inline constexpr int kMaxFieldOrder = 1024;

struct FieldElement {
  std::uint16_t v = 0;

  friend constexpr bool operator==(FieldElement, FieldElement) = default;
  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

bool is_prime(long long n);
// True if q = p^e with p prime, e >= 1. Optionally reports p and e.
bool is_prime_power(long long q, int* p = nullptr, int* e = nullptr);

// GF(q) with elements indexed 0..q-1; index sum_i c_i p^i is the residue
// class of sum_i c_i z^i modulo the defining polynomial.
class Field {
 public:
  // Uses the least monic irreducible of degree e over GF(p).
  explicit Field(int q);
  // Explicit modulus, low-to-high coefficients, monic of degree e.
  Field(int p, std::vector<int> modulus);

  int characteristic() const noexcept { return p_; }
  int degree() const noexcept { return e_; }
  int order() const noexcept { return q_; }
  const std::vector<int>& modulus() const noexcept { return modulus_; }

  FieldElement zero() const noexcept { return {0}; }
  FieldElement one() const noexcept { return {1}; }
  FieldElement element(int index) const;
  FieldElement from_int(long long v) const;
  std::vector<int> coefficients(FieldElement a) const;

  FieldElement add(FieldElement a, FieldElement b) const noexcept {
    return {add_[static_cast<std::size_t>(a.v) * q_ + b.v]};
  }
  FieldElement sub(FieldElement a, FieldElement b) const noexcept {
    return add(a, neg(b));
  }
  FieldElement neg(FieldElement a) const noexcept { return {neg_[a.v]}; }
  FieldElement mul(FieldElement a, FieldElement b) const noexcept {
    return {mul_[static_cast<std::size_t>(a.v) * q_ + b.v]};
  }
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
  FieldElement pow(FieldElement a, long long k) const;
  // a^(p^k)
  FieldElement frobenius(FieldElement a, int k = 1) const noexcept;

  // Least primitive element by index.
  FieldElement generator() const noexcept { return {exp_[1 % (q_ - 1)]}; }
  // r(a) with generator^r(a) = a, in [0, q-1).
  int log(FieldElement a) const;
  FieldElement exp(long long k) const noexcept;

  // Raw table access for inner loops.
  const std::uint16_t* add_table() const noexcept { return add_.data(); }
  const std::uint16_t* mul_table() const noexcept { return mul_.data(); }

 private:
  void build();
  int mul_raw(int a, int b) const;

  int p_ = 0;
  int e_ = 0;
  int q_ = 0;
  std::vector<int> modulus_;
  std::vector<std::uint16_t> add_, mul_, neg_, inv_, frob_, exp_;
  std::vector<int> log_;
};

// Shared, lazily constructed default field of order q.
std::shared_ptr<const Field> field(int q);

// Least monic irreducible of degree e over GF(p), low-to-high.
std::vector<int> least_irreducible_modulus(int p, int e);

// Dense polynomial over a Field, coefficients low to high, no trailing zeros.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<FieldElement> coeffs);

  static Poly constant(FieldElement c);
  static Poly monomial(FieldElement c, int degree);
  static Poly x();

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_monic() const noexcept { return !c_.empty() && c_.back() == FieldElement{1}; }
  FieldElement coeff(int i) const noexcept {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : FieldElement{};
  }
  FieldElement leading() const noexcept { return c_.empty() ? FieldElement{} : c_.back(); }
  const std::vector<FieldElement>& coeffs() const noexcept { return c_; }

  friend bool operator==(const Poly&, const Poly&) = default;
  friend auto operator<=>(const Poly&, const Poly&) = default;

 private:
  void normalize();
  std::vector<FieldElement> c_;
};

Poly add(const Field& F, const Poly& a, const Poly& b);
Poly sub(const Field& F, const Poly& a, const Poly& b);
Poly mul(const Field& F, const Poly& a, const Poly& b);
Poly scale(const Field& F, const Poly& a, FieldElement c);
std::pair<Poly, Poly> divmod(const Field& F, const Poly& a, const Poly& b);
Poly mod(const Field& F, const Poly& a, const Poly& b);
Poly make_monic(const Field& F, const Poly& a);
Poly gcd(const Field& F, const Poly& a, const Poly& b);
Poly powmod(const Field& F, const Poly& base, const Integer& e, const Poly& m);
FieldElement eval(const Field& F, const Poly& f, FieldElement x);
// Applies x -> x^(p^k) to every coefficient.
Poly frobenius(const Field& F, const Poly& f, int k);

// Monic polynomial of degree d whose lower coefficients are the base-q
// digits of index (coefficient of z^0 is the least significant digit).
Poly monic_from_index(const Field& F, int d, long long index);

// True iff f has an irreducible factor of degree <= t (f monic, deg f >= 1).
bool has_small_degree_factor(const Field& F, const Poly& f, int t);
bool is_irreducible(const Field& F, const Poly& f);

// r(g) = r((-1)^deg g * g(0)).
int poly_log(const Field& F, const Poly& g);

// phi*(z) = phi(0)^{-1} z^n phi(1/z).
Poly conjugate_star(const Field& F, const Poly& f);
// Over GF(q^2) with sigma: x -> x^q,
// phi~(z) = phi(0)^{-sigma} z^n phi^sigma(1/z).
Poly conjugate_tilde(const Field& F, const Poly& f);

std::string to_string(const Field& F, const Poly& f);

}  // namespace cgstat::ff
