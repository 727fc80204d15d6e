#include "cgstat/counts.hpp"
#include "cgstat/enclosure.hpp"
#include "cgstat/series.hpp"

#include "doctest.h"

#include <cmath>

using namespace cgstat;
using namespace cgstat::qs;

TEST_CASE("euler identity matches a long truncated product") {
  for (long long q : {2LL, 3LL, 5LL}) {
    for (int j : {1, 2, 3}) {
      const int N = 12;
      RationalSeries exact = euler_product_series(q, j, N);
      RationalSeries trunc = euler_product_truncated(q, j, 64, N);
      for (int n = 0; n <= N; ++n) {
        Rational d = abs(exact[n] - trunc[n]);
        CHECK(d.get_d() < std::ldexp(1.0, -50));
      }
    }
  }
}

TEST_CASE("euler factor edge cases") {
  RationalSeries s = euler_factor_series(3, 2, Integer(0), 6);
  CHECK(s[0] == 1);
  for (int n = 1; n <= 6; ++n) CHECK(s[n] == 0);
  for (long long q : {2LL, 4LL}) {
    RationalSeries f = euler_factor_series(q, 1, Integer(5), 8);
    CHECK(f[0] == 1);
  }
  RationalSeries g = euler_factor_series(2, 1, Integer(1), 2);
  // prod_i (1 - u/2^i): u coefficient is -sum 2^{-i} = -1
  CHECK(g[1] == -1);
  CHECK_THROWS_AS(euler_factor_series(2, 1, Integer(1), -1), ArgumentError);
}

TEST_CASE("negative exponents invert the series") {
  RationalSeries a = euler_factor_series(3, 1, Integer(4), 10);
  RationalSeries b = euler_factor_series(3, 1, Integer(-4), 10);
  RationalSeries p = a.mul(b);
  CHECK(p[0] == 1);
  for (int n = 1; n <= 10; ++n) CHECK(p[n] == 0);
}

TEST_CASE("gl series small coefficients") {
  RationalSeries s = gl_no_small_factor_series(2, 1, 4);
  CHECK(s[0] == 1);
  CHECK(s[1] == 0);
  CHECK(s[2] == Rational(1, 3));
  for (long long q : {2LL, 3LL, 4LL}) {
    for (int t : {1, 2, 3}) {
      RationalSeries g = gl_no_small_factor_series(q, t, 8);
      for (int n = 1; n <= t; ++n) CHECK(g[n] == 0);
      for (int n = 0; n <= 8; ++n) {
        CHECK(g[n] >= 0);
        CHECK(g[n] <= 1);
      }
    }
  }
}

TEST_CASE("monotone in t") {
  for (long long q : {2LL, 3LL, 5LL}) {
    for (int t = 1; t <= 3; ++t) {
      RationalSeries a = gl_no_small_factor_series(q, t, 10);
      RationalSeries b = gl_no_small_factor_series(q, t + 1, 10);
      for (int n = 0; n <= 10; ++n) CHECK(b[n] <= a[n]);
    }
  }
}

TEST_CASE("q = 2 coset series is the gl series") {
  RationalSeries a = sl_coset_series(2, 2, 0, 8);
  RationalSeries b = gl_no_small_factor_series(2, 2, 8);
  for (int n = 0; n <= 8; ++n) CHECK(a[n] == b[n]);
}

TEST_CASE("cyclotomic and group ring coset routes agree") {
  for (int q : {3, 4, 5, 7}) {
    for (int t : {1, 2}) {
      for (int mu = 0; mu < q - 1; ++mu) {
        RationalSeries a = sl_coset_series(q, t, mu, 6);
        RationalSeries b = sl_coset_series_group_ring(q, t, mu, 6);
        for (int n = 0; n <= 6; ++n) CHECK(a[n] == b[n]);
      }
    }
  }
}

TEST_CASE("coset sum identity") {
  for (int q : {3, 4, 5}) {
    for (int t : {1, 2}) {
      const int N = 6;
      RationalSeries gl = gl_no_small_factor_series(q, t, N);
      std::vector<RationalSeries> cos;
      for (int mu = 0; mu < q - 1; ++mu) cos.push_back(sl_coset_series(q, t, mu, N));
      // Each coset has |SL_n| elements; |GL_n| = (q-1)|SL_n|.
      for (int n = 1; n <= N; ++n) {
        Rational s = 0;
        for (const auto& c : cos) s += c[n];
        CHECK(s == Rational(q - 1) * gl[n]);
      }
    }
  }
}

TEST_CASE("sl coset series small exact values") {
  // GL_1(3): the coset det = 1 has one element, z - 1, which is a factor of degree 1.
  RationalSeries s0 = sl_coset_series(3, 1, 0, 3);
  RationalSeries s1 = sl_coset_series(3, 1, 1, 3);
  CHECK(s0[0] == 1);
  CHECK(s1[0] == 0);
  CHECK(s0[1] == 0);
  CHECK(s1[1] == 0);
  // Each irreducible quadratic over GF(3) is the charpoly of |GL_2(3)|/(q^2-1) = 6
  // elements, and |SL_2(3)| = 24.
  auto F = ff::field(3);
  auto counts = ff::irreducible_counts_by_log(*F, 2);
  // r(g) = r(g(0)) for even degree: det = g(0)
  CHECK(s0[2] == make_rational(Integer(static_cast<long>(6 * counts[0])), Integer(24)));
  CHECK(s1[2] == make_rational(Integer(static_cast<long>(6 * counts[1])), Integer(24)));
  CHECK_THROWS_AS(sl_coset_series(3, 1, 2, 3), ArgumentError);
  CHECK_THROWS_AS(sl_coset_series(6, 1, 0, 3), ArgumentError);
}

TEST_CASE("identity checks for roots of unity") {
  for (int q : {2, 3, 4, 5}) CHECK(linear_identity_check(q, 6));
  for (int q : {2, 3}) CHECK(unitary_identity_check(q, 4));
}

TEST_CASE("gl limit enclosure") {
  Enclosure e = limit_value({LimitTag::GL, 2, 1}, 1e-6);
  CHECK(e.rigorous);
  CHECK(e.width() <= 1e-6);
  CHECK(e.contains(0.2887880950866));
  CHECK_FALSE(e.contains(0.2887));
}

TEST_CASE("enclosure soundness across truncations") {
  for (LimitTag tag : {LimitTag::GL, LimitTag::SU, LimitTag::SpOdd, LimitTag::OHalf}) {
    const LimitFamily fam{tag, 3, 2};
    Enclosure prev = limit_value_at_truncation(fam, 2);
    for (int I = 3; I <= 40; ++I) {
      Enclosure cur = limit_value_at_truncation(fam, I);
      CHECK(cur.lo >= prev.lo - 1e-15);
      CHECK(cur.hi <= prev.hi + 1e-15);
      CHECK(cur.lo <= cur.hi);
      prev = cur;
    }
  }
}

TEST_CASE("o-half is half the symplectic value") {
  for (long long q : {3LL, 4LL, 5LL}) {
    for (int t : {1, 2, 3}) {
      LimitTag sp = (q % 2 == 1) ? LimitTag::SpOdd : LimitTag::SpEven;
      for (int I : {5, 20}) {
        Enclosure s = limit_value_at_truncation({sp, q, t}, I);
        Enclosure o = limit_value_at_truncation({LimitTag::OHalf, q, t}, I);
        CHECK(o.lo == s.lo / 2);
        CHECK(o.hi == s.hi / 2);
      }
    }
  }
}

TEST_CASE("parity validation") {
  CHECK_THROWS_AS(limit_value({LimitTag::SpOdd, 2, 1}), ArgumentError);
  CHECK_THROWS_AS(limit_value({LimitTag::SpEven, 3, 1}), ArgumentError);
  CHECK_THROWS_AS(limit_value({LimitTag::GL, 2, 0}), ArgumentError);
  CHECK_THROWS_AS(parse_limit_tag("gu"), ArgumentError);
  CHECK(parse_limit_tag("o-half") == LimitTag::OHalf);
}

TEST_CASE("large q approaches the closed form") {
  for (int t : {1, 2, 3}) {
    Enclosure e = limit_value({LimitTag::GL, 10000, t});
    CHECK(std::fabs(e.mid() - q_infinity_limit(LimitTag::GL, t)) <= 1e-3);
  }
  CHECK(q_infinity_limit(LimitTag::GL, 1) == doctest::Approx(std::exp(-1.0)));
  CHECK(q_infinity_limit(LimitTag::GL, 2) == doctest::Approx(std::exp(-1.5)));
  CHECK(q_infinity_limit(LimitTag::SpOdd, 1) == doctest::Approx(std::exp(-0.5)));
  for (int t : {1, 2, 3}) {
    Enclosure sp = limit_value({LimitTag::SpOdd, 10001, t});
    CHECK(std::fabs(sp.mid() - q_infinity_limit(LimitTag::SpOdd, t)) <= 1e-3);
    Enclosure se = limit_value({LimitTag::SpEven, 10000, t});
    CHECK(std::fabs(se.mid() - q_infinity_limit(LimitTag::SpEven, t)) <= 1e-3);
    Enclosure su = limit_value({LimitTag::SU, 10001, t});
    CHECK(std::fabs(su.mid() - q_infinity_limit(LimitTag::SU, t)) <= 1e-3);
  }
}

TEST_CASE("series limit bridge") {
  RationalSeries s = gl_no_small_factor_series(2, 1, 40);
  Enclosure lim = limit_value({LimitTag::GL, 2, 1}, 1e-9);
  Enclosure ser = limit_from_series(s);
  CHECK_FALSE(ser.rigorous);
  CHECK(std::fabs(s[40].get_d() - lim.mid()) <= 1e-6);

  RationalSeries c = RationalSeries::one(RationalRing{}, 5);
  for (int n = 1; n <= 5; ++n) c.coeff(n) = Rational(1, 7);
  Enclosure ce = limit_from_series(c);
  CHECK(ce.lo == ce.hi);
  CHECK_THROWS_AS(limit_from_series(RationalSeries::one(RationalRing{}, 1)), ArgumentError);
}

TEST_CASE("coset limits agree at q = 3") {
  RationalSeries a = sl_coset_series(3, 1, 0, 40);
  RationalSeries b = sl_coset_series(3, 1, 1, 40);
  CHECK(std::fabs(a[40].get_d() - b[40].get_d()) <= 1e-4);
}

TEST_CASE("bound suite") {
  BoundReport rep = bound_suite({2, 3, 4, 5}, {1, 2, 3});
  CHECK(rep.pass());
  for (const auto& e : rep.entries) {
    CHECK(e.value.width() <= 1e-9);
    if (e.tag == LimitTag::GL && e.q == 2 && e.t == 1) CHECK(e.value.hi < 0.29);
  }
}
