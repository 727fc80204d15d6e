#include "doctest.h"

#include "cgstat/counts.hpp"
#include "cgstat/errors.hpp"
#include "cgstat/finite_field.hpp"

#include <random>

using namespace cgstat;
using namespace cgstat::ff;

namespace {

Poly poly_from_ints(const Field& F, std::vector<int> c) {
  std::vector<FieldElement> v;
  for (int x : c) v.push_back(F.element(x));
  return Poly(v);
}

// Irreducibility by trial division against every monic polynomial of degree
// at most deg/2.
bool irreducible_by_trial_division(const Field& F, const Poly& f) {
  int d = f.degree();
  if (d < 1) return false;
  for (int k = 1; 2 * k <= d; ++k) {
    long long count = 1;
    for (int i = 0; i < k; ++i) count *= F.order();
    for (long long idx = 0; idx < count; ++idx)
      if (mod(F, f, monic_from_index(F, k, idx)).is_zero()) return false;
  }
  return true;
}

std::vector<Poly> irreducibles_up_to(const Field& F, int t) {
  std::vector<Poly> out;
  for (int k = 1; k <= t; ++k) {
    long long count = 1;
    for (int i = 0; i < k; ++i) count *= F.order();
    for (long long idx = 0; idx < count; ++idx) {
      Poly g = monic_from_index(F, k, idx);
      if (irreducible_by_trial_division(F, g)) out.push_back(g);
    }
  }
  return out;
}

Poly random_monic(const Field& F, int deg, std::mt19937_64& rng) {
  std::vector<FieldElement> c(deg + 1);
  for (int i = 0; i < deg; ++i) c[i] = F.element(static_cast<int>(rng() % F.order()));
  c[deg] = F.one();
  return Poly(c);
}

}  // namespace

TEST_CASE("small field arithmetic") {
  Field f2(2), f3(3), f4(4);
  CHECK(f2.add(f2.one(), f2.one()) == f2.zero());
  CHECK(f3.inv(f3.element(2)) == f3.element(2));
  CHECK(f4.modulus() == std::vector<int>{1, 1, 1});
  FieldElement zeta = f4.generator();
  CHECK(zeta == f4.element(2));
  CHECK(f4.mul(zeta, zeta) == f4.add(zeta, f4.one()));
  CHECK_THROWS_AS(f3.inv(f3.zero()), DomainError);
  CHECK_THROWS_AS(Field(6), ArgumentError);
}

TEST_CASE("generators and discrete logs") {
  Field f2(2), f3(3), f5(5), f9(9);
  CHECK(f3.generator() == f3.element(2));
  CHECK(f5.generator() == f5.element(2));
  CHECK(f3.log(f3.element(2)) == 1);
  CHECK(f2.log(f2.one()) == 0);
  CHECK(f5.log(f5.element(4)) == 2);
  CHECK_THROWS_AS(f5.log(f5.zero()), DomainError);
  for (int a = 1; a < 9; ++a) CHECK(f9.exp(f9.log(f9.element(a))) == f9.element(a));
  // r(g) = r((-1)^deg g g(0)): z^2 + 1 over GF(5) has (-1)^2 * 1 = 1.
  CHECK(poly_log(f5, poly_from_ints(f5, {1, 0, 1})) == 0);
  CHECK(poly_log(f5, poly_from_ints(f5, {1, 1})) == f5.log(f5.element(4)));
}

TEST_CASE("field axioms and Frobenius") {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49, 81}) {
    Field F(q);
    std::mt19937_64 rng(q);
    for (int it = 0; it < 500; ++it) {
      FieldElement a = F.element(static_cast<int>(rng() % q));
      FieldElement b = F.element(static_cast<int>(rng() % q));
      FieldElement c = F.element(static_cast<int>(rng() % q));
      CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
      CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
      CHECK(F.add(a, F.neg(a)) == F.zero());
      if (a != F.zero()) CHECK(F.mul(a, F.inv(a)) == F.one());
      CHECK(F.frobenius(F.mul(a, b)) == F.mul(F.frobenius(a), F.frobenius(b)));
      CHECK(F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b)));
    }
    for (int a = 0; a < q; ++a) {
      FieldElement x = F.element(a);
      FieldElement y = x;
      for (int k = 0; k < F.degree(); ++k) y = F.frobenius(y);
      CHECK(y == x);
      CHECK(F.frobenius(x) == F.pow(x, F.characteristic()));
    }
  }
}

TEST_CASE("has_small_degree_factor examples") {
  Field F(2);
  Poly g = poly_from_ints(F, {1, 1, 1});
  Poly h = poly_from_ints(F, {1, 1, 0, 1});
  CHECK_FALSE(has_small_degree_factor(F, g, 1));
  CHECK(has_small_degree_factor(F, g, 2));
  CHECK(has_small_degree_factor(F, mul(F, g, h), 2));
  CHECK_FALSE(has_small_degree_factor(F, mul(F, g, h), 1));
  CHECK(has_small_degree_factor(F, poly_from_ints(F, {0, 1, 1, 1}), 1));
  CHECK_THROWS_AS(has_small_degree_factor(F, g, 0), ArgumentError);
}

TEST_CASE("distinct-degree sieve agrees with trial division") {
  for (int q : {2, 3, 4, 5}) {
    Field F(q);
    auto irr = irreducibles_up_to(F, 4);
    std::mt19937_64 rng(1000 + q);
    long long disagreements = 0;
    for (int deg = 1; deg <= 12; ++deg) {
      for (int t = 1; t <= 4; ++t) {
        for (int it = 0; it < 10000; ++it) {
          Poly f = random_monic(F, deg, rng);
          bool oracle = false;
          for (const auto& p : irr) {
            if (p.degree() > t) break;
            if (p.degree() <= deg && mod(F, f, p).is_zero()) {
              oracle = true;
              break;
            }
          }
          if (oracle != has_small_degree_factor(F, f, t)) ++disagreements;
        }
      }
    }
    CHECK(disagreements == 0);
  }
}

TEST_CASE("conjugation operators") {
  Field f3(3), f5(5), f4(4), f9(9), f25(25);
  CHECK(conjugate_star(f3, poly_from_ints(f3, {2, 1})) == poly_from_ints(f3, {2, 1}));
  CHECK(conjugate_star(f5, poly_from_ints(f5, {3, 1})) == poly_from_ints(f5, {2, 1}));
  FieldElement zeta = f4.generator();
  Poly lin({f4.neg(zeta), f4.one()});
  CHECK(conjugate_tilde(f4, lin) == lin);
  CHECK_THROWS_AS(conjugate_star(f5, poly_from_ints(f5, {0, 1})), DomainError);
  CHECK_THROWS_AS(conjugate_tilde(f5, poly_from_ints(f5, {1, 1})), ArgumentError);

  // Roots move as alpha -> alpha^{-q} under tilde and alpha -> alpha^{-1} under star.
  for (const Field* F : {&f4, &f9, &f25}) {
    int q = 1;
    while (q * q < F->order()) ++q;
    for (int a = 1; a < F->order(); ++a) {
      FieldElement al = F->element(a);
      Poly f({F->neg(al), F->one()});
      Poly ft = conjugate_tilde(*F, f);
      CHECK(eval(*F, ft, F->inv(F->pow(al, q))) == F->zero());
      Poly fs = conjugate_star(*F, f);
      CHECK(eval(*F, fs, F->inv(al)) == F->zero());
    }
  }
  std::mt19937_64 rng(7);
  for (int it = 0; it < 300; ++it) {
    Poly f = random_monic(f9, 1 + static_cast<int>(rng() % 6), rng);
    if (f.coeff(0) == f9.zero()) continue;
    CHECK(conjugate_star(f9, conjugate_star(f9, f)) == f);
    CHECK(conjugate_tilde(f9, conjugate_tilde(f9, f)) == f);
    CHECK(conjugate_tilde(f9, f).degree() == f.degree());
    CHECK(conjugate_tilde(f9, f).is_monic());
  }
}

TEST_CASE("count examples") {
  CHECK(count_irreducibles(CountFamily::N, 2, 1).value == 1);
  CHECK(count_irreducibles(CountFamily::Mstar, 5, 1).value == 1);
  CHECK(count_irreducibles(CountFamily::Ntilde, 2, 1).value == 3);
  CHECK(count_irreducibles(CountFamily::Mtilde, 2, 1).value == 0);
  CHECK(count_irreducibles(CountFamily::N, 2, 3).value == 2);
  CHECK(count_irreducibles(CountFamily::Mstar, 5, 1).method == CountMethod::PolynomialEnumeration);
  CHECK_THROWS_AS(count_irreducibles(CountFamily::N, 2, 0), ArgumentError);
}

TEST_CASE("degree identity q^J = sum over d|J of d times irreducible count") {
  for (int q : {2, 3, 4, 5}) {
    for (int J = 1; J <= 6; ++J) {
      Integer s = 0;
      for (int d = 1; d <= J; ++d) {
        if (J % d != 0) continue;
        Integer n = count_irreducibles(CountFamily::N, q, d).value + (d == 1 ? 1 : 0);
        s += n * d;
      }
      CHECK(s == ipow(q, J));
    }
  }
}

TEST_CASE("N by formula equals enumeration") {
  for (int q : {2, 3, 4, 5})
    for (int j = 1; j <= 6; ++j)
      CHECK(count_by_formula(CountFamily::N, q, j) == count_by_polynomial_enumeration(CountFamily::N, q, j));
}

TEST_CASE("conjugation classes partition the irreducibles") {
  for (int q : {2, 3, 4, 5, 7}) {
    for (int j = 1; j <= 5; ++j) {
      long long total = 1;
      for (int i = 0; i < j; ++i) total *= q;
      if (total > kPolynomialEnumerationCap) continue;
      Integer all = count_by_polynomial_enumeration(CountFamily::N, q, j);
      Integer ns = count_by_polynomial_enumeration(CountFamily::Nstar, q, j);
      Integer ms = count_by_polynomial_enumeration(CountFamily::Mstar, q, j);
      CHECK(ns + 2 * ms == all);
    }
  }
  for (int q : {2, 3, 4, 5}) {
    for (int j = 1; j <= 4; ++j) {
      long long total = 1;
      for (int i = 0; i < j; ++i) total *= q * q;
      if (total > kPolynomialEnumerationCap) continue;
      Integer all = count_by_polynomial_enumeration(CountFamily::N, q * q, j);
      Integer nt = count_by_polynomial_enumeration(CountFamily::Ntilde, q, j);
      Integer mt = count_by_polynomial_enumeration(CountFamily::Mtilde, q, j);
      CHECK(nt + 2 * mt == all);
      if (j % 2 == 0) CHECK(nt == 0);
    }
  }
}

TEST_CASE("three count routes agree") {
  const CountFamily fams[] = {CountFamily::N, CountFamily::Nstar, CountFamily::Mstar, CountFamily::Ntilde,
                              CountFamily::Mtilde};
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    for (int j = 1; j <= 4; ++j) {
      for (CountFamily fam : fams) {
        bool tilde = (fam == CountFamily::Ntilde || fam == CountFamily::Mtilde);
        long long work = 1;
        for (int i = 0; i < j; ++i) work *= tilde ? q * q : q;
        if (work > 6'000'000) continue;
        Integer formula = count_by_formula(fam, q, j);
        Integer orbits = count_by_root_orbits(fam, q, j);
        CHECK_MESSAGE(formula == orbits, family_name(fam) << " q=" << q << " j=" << j);
        try {
          Integer polys = count_by_polynomial_enumeration(fam, q, j);
          CHECK_MESSAGE(formula == polys, family_name(fam) << " q=" << q << " j=" << j);
        } catch (const ResourceError&) {
        }
      }
    }
  }
}

TEST_CASE("counts by discrete log class") {
  Field F(5);
  for (int j = 1; j <= 4; ++j) {
    auto by = irreducible_counts_by_log(F, j);
    Integer s = 0;
    for (auto c : by) s += static_cast<long>(c);
    CHECK(s == count_irreducibles(CountFamily::N, 5, j).value);
  }
  // Linear polynomials z - a, a != 0, have r = r(-(-a)) = r(a): one per class.
  for (auto c : irreducible_counts_by_log(F, 1)) CHECK(c == 1);
}
