#include "cgstat/series.hpp"

#include "cgstat/counts.hpp"
#include "cgstat/finite_field.hpp"

#include <map>

namespace cgstat::qs {

namespace {

Rational q_power_inverse(long long q, unsigned long e) { return Rational(Integer(1), ipow(q, e)); }

void check_q(long long q) {
  if (q < 2) throw ArgumentError("q must be >= 2");
}

}  // namespace

RationalSeries euler_product_series(long long q, int j, int N) {
  check_q(q);
  if (j < 1) throw ArgumentError("j must be >= 1");
  if (N < 0) throw ArgumentError("series order must be >= 0");
  RationalSeries s(RationalRing{}, N);
  s.coeff(0) = 1;
  // Pi_{i>=1}(1 - x a^i) = sum_k (-1)^k a^{k(k+1)/2} x^k / Pi_{r<=k}(1 - a^r)
  const Rational a = q_power_inverse(q, static_cast<unsigned long>(j));
  Rational denom = 1;
  Rational apow = 1;  // a^{k(k+1)/2}
  Rational ar = 1;    // a^k
  for (int k = 1; static_cast<long long>(j) * k <= N; ++k) {
    ar *= a;
    denom *= (1 - ar);
    apow *= ar;
    Rational c = apow / denom;
    if (k % 2 == 1) c = -c;
    s.coeff(j * k) = c;
  }
  return s;
}

RationalSeries euler_product_truncated(long long q, int j, int imax, int N) {
  check_q(q);
  RationalSeries s = RationalSeries::one(RationalRing{}, N);
  for (int i = 1; i <= imax; ++i) {
    RationalSeries f = RationalSeries::one(RationalRing{}, N);
    if (j <= N) f.coeff(j) = -q_power_inverse(q, static_cast<unsigned long>(i) * j);
    s = s.mul(f);
  }
  return s;
}

RationalSeries euler_factor_series(long long q, int j, const Integer& m, int N) {
  if (N < 0) throw ArgumentError("series order must be >= 0");
  if (m == 0) return RationalSeries::one(RationalRing{}, N);
  return euler_product_series(q, j, N).pow(m);
}

RationalSeries gl_no_small_factor_series(long long q, int t, int N) {
  check_q(q);
  if (t < 1) throw ArgumentError("t must be >= 1");
  RationalSeries s = RationalSeries::one(RationalRing{}, N);
  for (int j = 1; j <= t && j <= N; ++j) {
    Integer nj = ff::count_irreducibles(ff::CountFamily::N, q, j).value;
    s = s.mul(euler_factor_series(q, j, nj, N));
  }
  return s.partial_sums();
}

namespace {

struct SlInputs {
  int m;
  // per degree j: counts of irreducibles phi != z by r(phi)
  std::vector<std::vector<long long>> by_log;
  std::vector<RationalSeries> euler;
};

SlInputs sl_inputs(int q, int t, int N) {
  auto F = ff::field(q);
  SlInputs in{q - 1, {}, {}};
  for (int j = 1; j <= t && j <= N; ++j) {
    in.by_log.push_back(ff::irreducible_counts_by_log(*F, j));
    in.euler.push_back(euler_product_series(q, j, N));
  }
  return in;
}

RationalSeries finish_coset_series(const RationalSeries& total, int mu, int m, int N) {
  RationalSeries out(RationalRing{}, N);
  out.coeff(0) = (mu == 0) ? 1 : 0;
  if (total[0] != ((mu == 0) ? m : 0)) throw ConstructionError("coset series constant term mismatch");
  for (int n = 1; n <= N; ++n) out.coeff(n) = total[n];
  return out;
}

void check_coset_args(int q, int t, int mu, int N) {
  if (!ff::is_prime_power(q)) throw ArgumentError("q must be a prime power");
  if (t < 1) throw ArgumentError("t must be >= 1");
  if (N < 0) throw ArgumentError("series order must be >= 0");
  if (mu < 0 || mu >= q - 1) throw ArgumentError("coset label must lie in [0, q-1)");
}

}  // namespace

RationalSeries sl_coset_series(int q, int t, int mu, int N) {
  check_coset_args(q, t, mu, N);
  if (q == 2) return gl_no_small_factor_series(q, t, N);
  const SlInputs in = sl_inputs(q, t, N);
  const int m = in.m;
  const CyclotomicRing ring(m);

  auto embed = [&](const RationalSeries& s) {
    CyclotomicSeries r(ring, N);
    for (int n = 0; n <= N; ++n) r.coeff(n) = ring.from_rational(s[n]);
    return r;
  };

  CyclotomicSeries total = embed(gl_no_small_factor_series(q, t, N));  // omega = 1
  for (int l = 1; l < m; ++l) {
    CyclotomicSeries k_omega = CyclotomicSeries::one(ring, N);
    for (std::size_t jj = 0; jj < in.by_log.size(); ++jj) {
      const int j = static_cast<int>(jj) + 1;
      // Collect exponents by twist class e = l*s mod m.
      std::map<int, long long> by_twist;
      for (int s = 0; s < m; ++s)
        if (in.by_log[jj][s] != 0) by_twist[(l * s) % m] += in.by_log[jj][s];
      const CyclotomicSeries base = embed(in.euler[jj]);
      for (const auto& [e, cnt] : by_twist) {
        // u^{jk} -> omega^{sk} u^{jk}
        CyclotomicSeries tw = base.twisted([&](int n) { return ring.zeta_power(static_cast<long long>(e) * (n / j)); });
        k_omega = k_omega.mul(tw.pow(Integer(static_cast<long>(cnt))));
      }
    }
    total = total.add(k_omega.scale_element(ring.zeta_power(-static_cast<long long>(l) * mu)));
  }
  RationalSeries rat(RationalRing{}, N);
  for (int n = 0; n <= N; ++n) rat.coeff(n) = ring.rational_part(total[n]);
  return finish_coset_series(rat, mu, m, N);
}

RationalSeries sl_coset_series_group_ring(int q, int t, int mu, int N) {
  check_coset_args(q, t, mu, N);
  if (q == 2) return gl_no_small_factor_series(q, t, N);
  const SlInputs in = sl_inputs(q, t, N);
  const int m = in.m;
  const CyclicGroupRing ring(m);
  // P(w) = Pi_{j,s} E_j(w^s u^j)^{n_j[s]}; the omega-sum equals
  // K_1 + m [w^mu]P - P(1).
  GroupRingSeries P = GroupRingSeries::one(ring, N);
  for (std::size_t jj = 0; jj < in.by_log.size(); ++jj) {
    const int j = static_cast<int>(jj) + 1;
    GroupRingSeries base(ring, N);
    for (int n = 0; n <= N; ++n) base.coeff(n) = ring.from_rational(in.euler[jj][n]);
    for (int s = 0; s < m; ++s) {
      if (in.by_log[jj][s] == 0) continue;
      GroupRingSeries tw = base.twisted([&](int n) { return ring.basis(static_cast<long long>(s) * (n / j)); });
      P = P.mul(tw.pow(Integer(static_cast<long>(in.by_log[jj][s]))));
    }
  }
  RationalSeries k1 = gl_no_small_factor_series(q, t, N);
  RationalSeries total(RationalRing{}, N);
  for (int n = 0; n <= N; ++n) {
    Rational p1 = 0;
    for (const auto& c : P[n]) p1 += c;
    total.coeff(n) = k1[n] + Rational(m) * P[n][mu] - p1;
  }
  return finish_coset_series(total, mu, m, N);
}

bool linear_identity_check(int q, int D) {
  if (!ff::is_prime_power(q)) throw ArgumentError("q must be a prime power");
  if (D < 1) throw ArgumentError("D must be >= 1");
  const int m = q - 1;
  if (m == 1) return true;
  auto F = ff::field(q);
  std::vector<std::vector<long long>> by_log;
  for (int j = 1; j <= D; ++j) by_log.push_back(ff::irreducible_counts_by_log(*F, j));
  const CyclotomicRing ring(m);
  for (int l = 1; l < m; ++l) {
    CyclotomicSeries prod = CyclotomicSeries::one(ring, D);
    for (int j = 1; j <= D; ++j) {
      for (int s = 0; s < m; ++s) {
        long long cnt = by_log[j - 1][s];
        if (cnt == 0) continue;
        CyclotomicSeries f = CyclotomicSeries::one(ring, D);
        f.coeff(j) = ring.sub(ring.zero(), ring.zeta_power(static_cast<long long>(l) * s));
        prod = prod.mul(f.pow(Integer(static_cast<long>(cnt))));
      }
    }
    for (int n = 1; n <= D; ++n)
      if (!ring.is_zero(prod[n])) return false;
  }
  return true;
}

bool unitary_identity_check(int q, int D) {
  if (!ff::is_prime_power(q)) throw ArgumentError("q must be a prime power");
  if (D < 1) throw ArgumentError("D must be >= 1");
  const int Q = q * q;
  auto F = ff::field(Q);
  const int m = q + 1;
  // s(phi) in Z_{q+1}: zeta^{(q-1)s} is the norm-one element attached to phi.
  std::map<std::pair<int, int>, long long> self_counts;  // (deg, s) -> count
  std::map<std::pair<int, int>, long long> pair_counts;  // (2 deg, s) -> number of pairs
  for (int j = 1; j <= D; ++j) {
    long long total = 1;
    for (int i = 0; i < j; ++i) total *= Q;
    for (long long idx = 0; idx < total; ++idx) {
      ff::Poly f = ff::monic_from_index(*F, j, idx);
      if (f.coeff(0).v == 0 || !ff::is_irreducible(*F, f)) continue;
      ff::Poly g = ff::conjugate_tilde(*F, f);
      ff::FieldElement y;
      bool self = (g == f);
      if (self) {
        y = f.coeff(0);
        if (j % 2 == 1) y = F->neg(y);
      } else {
        if (2 * j > D) continue;
        y = F->mul(f.coeff(0), g.coeff(0));
      }
      int lg = F->log(y);
      if (lg % (q - 1) != 0) throw ConstructionError("norm-one element expected");
      int s = (lg / (q - 1)) % m;
      if (self) ++self_counts[{j, s}];
      else ++pair_counts[{2 * j, s}];
    }
  }
  const CyclotomicRing ring(m);
  for (int l = 1; l < m; ++l) {
    CyclotomicSeries prod = CyclotomicSeries::one(ring, D);
    auto apply = [&](int deg, int s, long long cnt) {
      CyclotomicSeries f = CyclotomicSeries::one(ring, D);
      f.coeff(deg) = ring.sub(ring.zero(), ring.zeta_power(static_cast<long long>(l) * s));
      prod = prod.mul(f.pow(Integer(static_cast<long>(cnt))));
    };
    for (const auto& [key, cnt] : self_counts) apply(key.first, key.second, cnt);
    // each unordered pair was seen twice
    for (const auto& [key, cnt] : pair_counts) apply(key.first, key.second, cnt / 2);
    for (int n = 1; n <= D; ++n)
      if (!ring.is_zero(prod[n])) return false;
  }
  return true;
}

std::vector<std::string> to_strings(const RationalSeries& s) {
  std::vector<std::string> out;
  for (int n = 0; n <= s.order(); ++n) out.push_back(to_string(s[n]));
  return out;
}

}  // namespace cgstat::qs
