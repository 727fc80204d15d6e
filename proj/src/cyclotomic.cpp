#include "cgstat/series.hpp"

namespace cgstat::qs {

namespace {

std::vector<long long> cyclotomic_poly(int m) {
  // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d, exact integer division.
  std::vector<long long> num(m + 1, 0);
  num[0] = -1;
  num[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    std::vector<long long> den = cyclotomic_poly(d);
    int dn = static_cast<int>(num.size()) - 1;
    int dd = static_cast<int>(den.size()) - 1;
    std::vector<long long> quo(dn - dd + 1, 0);
    for (int i = dn; i >= dd; --i) {
      long long c = num[i];
      quo[i - dd] = c;
      for (int k = 0; k <= dd; ++k) num[i - dd + k] -= c * den[k];
    }
    num = quo;
  }
  return num;
}

}  // namespace

CyclotomicRing::CyclotomicRing(int m) : m_(m) {
  if (m < 1) throw ArgumentError("cyclotomic conductor must be >= 1");
  phi_ = cyclotomic_poly(m);
  powers_.reserve(m);
  Element x = one();
  Element z = zero();
  if (dimension() == 1) {
    // Phi_1 = x - 1, Phi_2 = x + 1: zeta is the root -phi_0.
    z[0] = Rational(static_cast<long>(-phi_[0]));
  } else {
    z[1] = 1;
  }
  for (int k = 0; k < m; ++k) {
    powers_.push_back(x);
    x = mul(x, z);
  }
}

CyclotomicRing::Element CyclotomicRing::from_rational(const Rational& r) const {
  Element e(dimension());
  e[0] = r;
  return e;
}

CyclotomicRing::Element CyclotomicRing::add(const Element& a, const Element& b) const {
  Element r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

CyclotomicRing::Element CyclotomicRing::sub(const Element& a, const Element& b) const {
  Element r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

CyclotomicRing::Element CyclotomicRing::mul(const Element& a, const Element& b) const {
  const int d = dimension();
  if (d == 1) return Element{a[0] * b[0]};
  std::vector<Rational> prod(2 * d - 1);
  for (int i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < d; ++j)
      if (b[j] != 0) prod[i + j] += a[i] * b[j];
  }
  for (int i = 2 * d - 2; i >= d; --i) {
    if (prod[i] == 0) continue;
    Rational c = prod[i];
    for (int k = 0; k <= d; ++k)
      if (phi_[k] != 0) prod[i - d + k] -= c * static_cast<long>(phi_[k]);
  }
  prod.resize(d);
  return prod;
}

CyclotomicRing::Element CyclotomicRing::scale(const Element& a, const Rational& r) const {
  Element e(a);
  for (auto& v : e) v *= r;
  return e;
}

bool CyclotomicRing::is_zero(const Element& a) const {
  for (const auto& v : a)
    if (v != 0) return false;
  return true;
}

bool CyclotomicRing::is_rational(const Element& a) const {
  for (std::size_t i = 1; i < a.size(); ++i)
    if (a[i] != 0) return false;
  return true;
}

Rational CyclotomicRing::rational_part(const Element& a) const {
  if (!is_rational(a)) throw ConstructionError("cyclotomic element is not rational");
  return a[0];
}

CyclotomicRing::Element CyclotomicRing::zeta_power(long long k) const {
  long long r = ((k % m_) + m_) % m_;
  return powers_[static_cast<std::size_t>(r)];
}

CyclicGroupRing::Element CyclicGroupRing::add(const Element& a, const Element& b) const {
  Element r(a);
  for (int i = 0; i < m_; ++i) r[i] += b[i];
  return r;
}

CyclicGroupRing::Element CyclicGroupRing::sub(const Element& a, const Element& b) const {
  Element r(a);
  for (int i = 0; i < m_; ++i) r[i] -= b[i];
  return r;
}

CyclicGroupRing::Element CyclicGroupRing::mul(const Element& a, const Element& b) const {
  Element r(m_);
  for (int i = 0; i < m_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < m_; ++j)
      if (b[j] != 0) r[(i + j) % m_] += a[i] * b[j];
  }
  return r;
}

CyclicGroupRing::Element CyclicGroupRing::scale(const Element& a, const Rational& r) const {
  Element e(a);
  for (auto& v : e) v *= r;
  return e;
}

bool CyclicGroupRing::is_zero(const Element& a) const {
  for (const auto& v : a)
    if (v != 0) return false;
  return true;
}

bool CyclicGroupRing::is_rational(const Element& a) const {
  for (int i = 1; i < m_; ++i)
    if (a[i] != 0) return false;
  return true;
}

Rational CyclicGroupRing::rational_part(const Element& a) const {
  if (!is_rational(a)) throw ConstructionError("group ring element is not a scalar");
  return a[0];
}

CyclicGroupRing::Element CyclicGroupRing::basis(long long k) const {
  Element e(m_);
  e[static_cast<std::size_t>(((k % m_) + m_) % m_)] = 1;
  return e;
}

}  // namespace cgstat::qs
