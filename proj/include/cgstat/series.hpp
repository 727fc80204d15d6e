#pragma once

#include "cgstat/errors.hpp"
#include "cgstat/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace cgstat::qs {

class RationalRing {
 public:
  using Element = Rational;

  Element zero() const { return Rational(0); }
  Element one() const { return Rational(1); }
  Element from_rational(const Rational& r) const { return r; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element scale(const Element& a, const Rational& r) const { return a * r; }
  bool is_zero(const Element& a) const { return a == 0; }
  bool is_rational(const Element&) const { return true; }
  Rational rational_part(const Element& a) const { return a; }
  std::string describe() const { return "Q"; }
};

// Q(zeta_m) as Q[x]/Phi_m(x); elements are coefficient vectors of length phi(m).
class CyclotomicRing {
 public:
  using Element = std::vector<Rational>;

  explicit CyclotomicRing(int m);

  int conductor() const noexcept { return m_; }
  int dimension() const noexcept { return static_cast<int>(phi_.size()) - 1; }
  // Phi_m, low to high, monic.
  const std::vector<long long>& cyclotomic_polynomial() const noexcept { return phi_; }

  Element zero() const { return Element(dimension()); }
  Element one() const { return from_rational(Rational(1)); }
  Element from_rational(const Rational& r) const;
  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element mul(const Element& a, const Element& b) const;
  Element scale(const Element& a, const Rational& r) const;
  bool is_zero(const Element& a) const;
  bool is_rational(const Element& a) const;
  // Throws ConstructionError when a has an irrational part.
  Rational rational_part(const Element& a) const;
  // zeta_m^k.
  Element zeta_power(long long k) const;
  std::string describe() const { return "Q(zeta_" + std::to_string(m_) + ")"; }

 private:
  int m_;
  std::vector<long long> phi_;
  std::vector<Element> powers_;
};

// Q[Z_m] = Q[w]/(w^m - 1); elements are coefficient vectors of length m.
class CyclicGroupRing {
 public:
  using Element = std::vector<Rational>;

  explicit CyclicGroupRing(int m) : m_(m) {
    if (m < 1) throw ArgumentError("group ring order must be >= 1");
  }
  int order() const noexcept { return m_; }

  Element zero() const { return Element(m_); }
  Element one() const { return from_rational(Rational(1)); }
  Element from_rational(const Rational& r) const {
    Element e(m_);
    e[0] = r;
    return e;
  }
  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element mul(const Element& a, const Element& b) const;
  Element scale(const Element& a, const Rational& r) const;
  bool is_zero(const Element& a) const;
  bool is_rational(const Element& a) const;
  Rational rational_part(const Element& a) const;
  // w^k.
  Element basis(long long k) const;
  std::string describe() const { return "Q[Z_" + std::to_string(m_) + "]"; }

 private:
  int m_;
};

// Power series c_0 + c_1 u + ... + c_N u^N over a coefficient ring.
template <class Ring>
class TruncatedSeries {
 public:
  using Element = typename Ring::Element;

  TruncatedSeries(Ring ring, int order) : ring_(std::move(ring)), order_(order) {
    if (order < 0) throw ArgumentError("series order must be >= 0");
    c_.assign(order + 1, ring_.zero());
  }

  static TruncatedSeries one(Ring ring, int order) {
    TruncatedSeries s(std::move(ring), order);
    s.c_[0] = s.ring_.one();
    return s;
  }

  const Ring& ring() const noexcept { return ring_; }
  int order() const noexcept { return order_; }
  const Element& operator[](int n) const { return c_.at(n); }
  Element& coeff(int n) { return c_.at(n); }
  const std::vector<Element>& coeffs() const noexcept { return c_; }

  TruncatedSeries add(const TruncatedSeries& o) const {
    TruncatedSeries r(ring_, std::min(order_, o.order_));
    for (int n = 0; n <= r.order_; ++n) r.c_[n] = ring_.add(c_[n], o.c_[n]);
    return r;
  }

  TruncatedSeries sub(const TruncatedSeries& o) const {
    TruncatedSeries r(ring_, std::min(order_, o.order_));
    for (int n = 0; n <= r.order_; ++n) r.c_[n] = ring_.sub(c_[n], o.c_[n]);
    return r;
  }

  TruncatedSeries mul(const TruncatedSeries& o) const {
    TruncatedSeries r(ring_, std::min(order_, o.order_));
    for (int i = 0; i <= r.order_; ++i) {
      if (ring_.is_zero(c_[i])) continue;
      for (int j = 0; i + j <= r.order_; ++j) {
        if (ring_.is_zero(o.c_[j])) continue;
        r.c_[i + j] = ring_.add(r.c_[i + j], ring_.mul(c_[i], o.c_[j]));
      }
    }
    return r;
  }

  TruncatedSeries scale(const Rational& s) const {
    TruncatedSeries r(*this);
    for (auto& v : r.c_) v = ring_.scale(v, s);
    return r;
  }

  TruncatedSeries scale_element(const Element& s) const {
    TruncatedSeries r(*this);
    for (auto& v : r.c_) v = ring_.mul(v, s);
    return r;
  }

  // Multiplication by 1/(1-u): partial sums.
  TruncatedSeries partial_sums() const {
    TruncatedSeries r(*this);
    for (int n = 1; n <= order_; ++n) r.c_[n] = ring_.add(r.c_[n - 1], c_[n]);
    return r;
  }

  // Integer power by the J.C.P. Miller recurrence. Needs a rational nonzero
  // constant term: P_n = 1/(n F_0) sum_{k=1}^n ((m+1)k - n) F_k P_{n-k}.
  TruncatedSeries pow(const Integer& m) const {
    if (!ring_.is_rational(c_[0]) || ring_.rational_part(c_[0]) == 0)
      throw DomainError("power series power needs a rational unit constant term");
    const Rational f0 = ring_.rational_part(c_[0]);
    TruncatedSeries r(ring_, order_);
    if (m == 0) {
      r.c_[0] = ring_.one();
      return r;
    }
    Rational p0 = 1;
    if (f0 != 1) {
      Integer e = m >= 0 ? m : Integer(-m);
      mpz_class num, den;
      mpz_pow_ui(num.get_mpz_t(), f0.get_num_mpz_t(), e.get_ui());
      mpz_pow_ui(den.get_mpz_t(), f0.get_den_mpz_t(), e.get_ui());
      p0 = m >= 0 ? make_rational(num, den) : make_rational(den, num);
    }
    r.c_[0] = ring_.from_rational(p0);
    const Integer mp1 = m + 1;
    for (int n = 1; n <= order_; ++n) {
      Element acc = ring_.zero();
      for (int k = 1; k <= n; ++k) {
        if (ring_.is_zero(c_[k])) continue;
        Integer w = mp1 * k - n;
        if (w == 0) continue;
        acc = ring_.add(acc, ring_.scale(ring_.mul(c_[k], r.c_[n - k]), Rational(w)));
      }
      r.c_[n] = ring_.scale(acc, Rational(1) / (f0 * n));
    }
    return r;
  }

  TruncatedSeries reciprocal() const { return pow(Integer(-1)); }

  // Substitutes u^k -> twist(k) u^k.
  template <class F>
  TruncatedSeries twisted(F twist) const {
    TruncatedSeries r(*this);
    for (int n = 0; n <= order_; ++n)
      if (!ring_.is_zero(c_[n])) r.c_[n] = ring_.mul(c_[n], twist(n));
    return r;
  }

 private:
  Ring ring_;
  int order_;
  std::vector<Element> c_;
};

using RationalSeries = TruncatedSeries<RationalRing>;
using CyclotomicSeries = TruncatedSeries<CyclotomicRing>;
using GroupRingSeries = TruncatedSeries<CyclicGroupRing>;

// Pi_{i>=1} (1 - u^j q^{-ij}) to order N via the Euler q-exponential identity.
RationalSeries euler_product_series(long long q, int j, int N);
// Pi_{i>=1} (1 - u^j q^{-ij}) truncated at i <= imax, multiplied out directly.
RationalSeries euler_product_truncated(long long q, int j, int imax, int N);
// (Pi_{i>=1} (1 - u^j q^{-ij}))^m.
RationalSeries euler_factor_series(long long q, int j, const Integer& m, int N);

// Coefficient n is a_n(q,t,GL).
RationalSeries gl_no_small_factor_series(long long q, int t, int N);

// Coefficient n (n >= 1) is the proportion of elements of the coset
// {g in GL_n(q): r(det g) = mu} with no charpoly factor of degree <= t;
// coefficient 0 is 1 for mu = 0 and 0 otherwise. Computed in Q(zeta_{q-1}).
RationalSeries sl_coset_series(int q, int t, int mu, int N);
// Same quantity through the group ring Q[Z_{q-1}] without roots of unity.
RationalSeries sl_coset_series_group_ring(int q, int t, int mu, int N);

// For every omega != 1 in Omega_{q-1}: Pi over irreducible phi != z with
// deg <= D of (1 - omega^{r(phi)} u^{deg phi}) is 1 + O(u^{D+1}).
bool linear_identity_check(int q, int D);
// For every omega != 1 in Omega_{q+1}: the self-conjugate/pair product over
// GF(q^2) irreducibles of degree <= D is 1 + O(u^{D+1}).
bool unitary_identity_check(int q, int D);

std::vector<std::string> to_strings(const RationalSeries& s);

}  // namespace cgstat::qs
