#include "cgstat/series.hpp"
#include "cgstat/stats.hpp"

#include "doctest.h"

using namespace cgstat;
using namespace cgstat::stats;

namespace {

std::shared_ptr<const mg::GroupTable> G_(const std::string& name, int n, int q) { return mg::group(mg::parse_group(name, n, q)); }

mg::Action make(const mg::GroupTable& G, const std::string& a) { return mg::Action(G.space(), G.form(), mg::parse_action(a)); }

}  // namespace

TEST_CASE("wilson interval") {
  Interval a = wilson_interval(50, 100);
  CHECK(a.contains(0.5));
  CHECK(a.lo > 0.37);
  CHECK(a.hi < 0.63);
  Interval z = wilson_interval(0, 1000);
  CHECK(z.lo == doctest::Approx(0.0));
  CHECK(z.hi > 0.0);
  CHECK(wilson_interval(0, 0).hi == 1.0);
}

TEST_CASE("exact proportions") {
  ProportionQuery q;
  q.family = "gl";
  q.n = 2;
  CHECK(proportion(q).value == Rational(1, 3));
  q.n = 4;
  const Rational e = proportion(q).value;
  q.method = Method::Series;
  CHECK(proportion(q).value == e);
  q.family = "sl";
  q.n = 3;
  q.q = 3;
  q.method = Method::Enumeration;
  for (int mu = 0; mu < 2; ++mu) {
    q.coset = mu;
    ProportionReport en = proportion(q);
    q.method = Method::Series;
    CHECK(proportion(q).value == en.value);
    q.method = Method::Enumeration;
  }
  q = ProportionQuery{};
  q.family = "gl-tau";
  q.n = 3;
  CHECK(proportion(q).value == Rational(1, 3));
  q.family = "o+";
  q.n = 4;
  q.coset = 0;
  CHECK(proportion(q).value == Rational(4, 9));
  q.coset = 1;
  q.n = 6;
  CHECK(proportion(q).value == Rational(19, 45));
  q.family = "cube";
  CHECK_THROWS_AS(proportion(q), ArgumentError);
}

TEST_CASE("monte carlo agrees with exact values") {
  const Rational v = qs::gl_no_small_factor_series(2, 1, 10)[10];
  McResult r = monte_carlo_linear("gl", 10, 2, 1, -1, 60000, 7);
  CHECK(r.ci().contains(v.get_d()));
  McResult r2 = monte_carlo_linear("gl", 10, 2, 1, -1, 60000, 7, 1);
  CHECK(r.hits == r2.hits);
  const Rational w = qs::sl_coset_series(3, 2, 1, 5)[5];
  McResult s = monte_carlo_linear("sl", 5, 3, 2, 1, 30000, 11);
  CHECK(s.ci().contains(w.get_d()));
  ProportionQuery q;
  q.family = "gl-tau";
  q.n = 3;
  q.method = Method::MonteCarlo;
  q.samples = 30000;
  ProportionReport t = proportion(q);
  CHECK(t.ci.contains(1.0 / 3.0));
  CHECK_THROWS_AS(monte_carlo_linear("sp", 4, 2, 1, -1, 10, 1), ArgumentError);
}

TEST_CASE("coset averages of fixed points") {
  auto G = G_("gl", 3, 3);
  for (const char* a : {"subspace:1", "flag:1", "antiflag:1"}) {
    mg::Action A = make(*G, a);
    for (int mu = 0; mu < 2; ++mu) {
      ExpectationReport r = coset_average_fixed_points(*G, mu, A);
      CHECK(r.transitive);
      CHECK(r.value == 1);
    }
    if (A.spec().kind != mg::ActionKind::Subspace) CHECK(coset_average_fixed_points(*G, -1, A, true).value == 1);
  }
  auto sp = G_("sp", 4, 2);
  CHECK(coset_average_fixed_points(*sp, 0, make(*sp, "polar:plus")).value == 1);
}

TEST_CASE("subset expectations") {
  auto G = G_("gl", 4, 2);
  auto A = mg::no_small_factor_set(*G, 1);
  CHECK(subset_expectation(*G, A, make(*G, "subspace:1")).value == 0);
  for (int n : {4, 6}) {
    auto sp = G_("sp", n, 2);
    auto S = mg::no_small_factor_set(*sp, 2);
    const Rational plus = subset_expectation(*sp, S, make(*sp, "polar:plus")).value;
    const Rational minus = subset_expectation(*sp, S, make(*sp, "polar:minus")).value;
    CHECK(plus + minus == 1);
  }
  std::vector<std::uint32_t> bad = {1};
  CHECK_THROWS_AS(subset_expectation(*G, bad, make(*G, "subspace:1")), ArgumentError);
  CHECK_THROWS_AS(subset_expectation(*G, {}, make(*G, "subspace:1")), ArgumentError);
}

TEST_CASE("expectation inequality") {
  auto G = G_("gl", 3, 2);
  auto A = mg::no_small_factor_set(*G, 1);
  mg::Action act = make(*G, "flag:1");
  int checked = 0;
  for (std::uint32_t i = 0; i < G->size(); i += 7) {
    InequalityCheck c = expectation_inequality(*G, A, act, G->element(i));
    CHECK(c.holds);
    ++checked;
  }
  CHECK(checked > 10);
}

TEST_CASE("fixed point ratio bounds") {
  auto G = G_("gl", 4, 2);
  auto reps = fpr_bound_check(*G, true);
  CHECK(reps.size() > 8);
  for (const auto& r : reps) {
    CAPTURE(r.action);
    CAPTURE(r.bound_name);
    CAPTURE(r.tau);
    CHECK(r.violations == 0);
    CHECK(r.max_fpr < r.bound);
  }
  auto G3 = G_("gl", 3, 3);
  for (const auto& r : fpr_bound_check(*G3, true)) CHECK(r.violations == 0);
  CHECK_THROWS_AS(fpr_bound_check(*G_("sp", 4, 2), false), ArgumentError);
}

TEST_CASE("symmetric groups") {
  for (int n = 0; n <= 8; ++n)
    for (int t = 1; t <= 3; ++t) CHECK(symmetric_a(n, t) == symmetric_a_brute(n, t));
  CHECK(symmetric_a(4, 1) == Rational(3, 8));
  for (int n = 0; n <= 12; ++n) CHECK(symmetric_count(n, 1) == derangements(n));
  for (int n = 5; n <= 9; ++n)
    for (int k = 1; 2 * k < n; ++k)
      for (int t = 1; t <= k; ++t) CHECK(symmetric_expectation(n, k, t) == symmetric_expectation_brute(n, k, t));
  CHECK_THROWS_AS(symmetric_expectation(4, 2, 1), ArgumentError);
}

TEST_CASE("identities") {
  IdentityCheck a = inverse_transpose_identity_check(3, 2, 1);
  CHECK(a.holds);
  CHECK(inverse_transpose_identity_check(4, 2, 1).holds);
  CHECK(inverse_transpose_identity_check(4, 2, 2).holds);
  IdentityCheck o = orthogonal_reflection_identity_check(6, 2, 1, 1);
  CHECK(o.holds);
  CHECK(o.lhs == Rational(19, 45));
  CHECK_THROWS_AS(orthogonal_reflection_identity_check(4, 2, 1, 1), ArgumentError);
  CHECK_THROWS_AS(orthogonal_reflection_identity_check(5, 3, 1, 1), ArgumentError);
}

TEST_CASE("weyl statistic") {
  CHECK(weyl_exact(1) == 1);
  CHECK(weyl_exact(2) == Rational(3, 4));
  const Rational e4 = weyl_exact(4);
  McResult r = weyl_monte_carlo(4, 40000, 3);
  CHECK(r.ci().contains(e4.get_d()));
}

TEST_CASE("generation probe") {
  auto p7 = mg::psl2(7);
  ProbeReport r = generation_probe(p7, 2000, 5);
  CHECK(r.three_halves);
  CHECK(r.classes.size() == 5);
  for (const auto& c : r.classes) {
    CHECK(c.exact > 0);
    CHECK(c.ci.contains(c.exact.get_d()));
  }
  CHECK_THROWS_AS(probe_element(p7, p7.identity(), 10, 1), ArgumentError);
}
