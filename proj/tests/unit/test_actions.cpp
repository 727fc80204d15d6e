#include "cgstat/action.hpp"
#include "cgstat/cayley.hpp"
#include "cgstat/membership.hpp"
#include "cgstat/sampling.hpp"

#include "doctest.h"

using namespace cgstat;
using namespace cgstat::mg;

namespace {

std::shared_ptr<const GroupTable> G_(const std::string& name, int n, int q) { return group(parse_group(name, n, q)); }

Action make(const GroupTable& G, const std::string& a) { return Action(G.space(), G.form(), parse_action(a)); }

long long burnside_sum(const GroupTable& G, const Action& A, bool tau) {
  long long s = 0;
  for (const auto& g : G.elements()) {
    s += A.fixed_points(g);
    if (tau) s += A.fixed_points(g, true);
  }
  return s;
}

std::size_t orbit_count(const std::vector<std::uint32_t>& ids) {
  std::uint32_t m = 0;
  for (auto i : ids) m = std::max(m, i);
  return ids.empty() ? 0 : m + 1;
}

}  // namespace

TEST_CASE("point counts") {
  auto G = G_("gl", 4, 2);
  CHECK(make(*G, "subspace:1").size() == 15);
  CHECK(make(*G, "subspace:2").size() == 35);
  CHECK(make(*G, "flag:1").size() == 105);
  CHECK(make(*G, "antiflag:1").size() == 120);
  CHECK(make(*G, "antiflag:2").size() == 280);
  CHECK(gaussian_binomial(4, 2, 3) == 130);
  MatrixSpace S3(ff::field(3), 4);
  CHECK(all_subspaces(S3, 2).size() == 130);
  auto sp = G_("sp", 4, 2);
  CHECK(make(*sp, "subspace:1:singular").size() == 15);
  CHECK(make(*sp, "subspace:2:singular").size() == 15);
  CHECK(make(*sp, "subspace:2:nondegenerate").size() == 20);
  CHECK(make(*sp, "polar").size() == 16);
  CHECK(make(*sp, "polar:plus").size() == 10);
  CHECK(make(*sp, "polar:minus").size() == 6);
  auto op = G_("o+", 4, 2);
  auto om = G_("o-", 4, 2);
  CHECK(make(*op, "subspace:1:singular").size() == 9);
  CHECK(make(*op, "subspace:1:nonsingular").size() == 6);
  CHECK(make(*om, "subspace:1:singular").size() == 5);
  CHECK(make(*om, "subspace:1:nonsingular").size() == 10);
  CHECK(make(*op, "subspace:2:plus").size() + make(*op, "subspace:2:minus").size() ==
        make(*op, "subspace:2:nondegenerate").size());
  CHECK_THROWS_AS(parse_action("flag:1:singular"), ArgumentError);
  CHECK_THROWS_AS(parse_action("cube:1"), ArgumentError);
  CHECK_THROWS_AS(make(*G, "polar"), ArgumentError);
}

TEST_CASE("fixed points of simple elements") {
  auto G = G_("gl", 4, 2);
  const MatrixSpace& S = G->space();
  Action pts = make(*G, "subspace:1");
  CHECK(pts.fixed_points(S.identity()) == 15);
  Matrix tv = S.identity();
  tv(0, 1) = 1;
  CHECK(pts.fixed_points(tv) == 7);
  Action fl = make(*G, "flag:1");
  CHECK(fl.fixed_points(S.identity()) == 105);
  // identity composed with tau: U -> U^perp
  Action af = make(*G, "antiflag:1");
  long long fp = af.fixed_points(S.identity(), true);
  CHECK(fp >= 0);
  CHECK(fp < 120);
}

TEST_CASE("burnside consistency") {
  struct Case {
    std::string g;
    int n, q;
    std::string action;
    bool tau;
  };
  const std::vector<Case> cases = {
      {"gl", 3, 2, "subspace:1", false}, {"gl", 3, 2, "flag:1", false},       {"gl", 3, 2, "antiflag:1", false},
      {"gl", 3, 2, "flag:1", true},      {"gl", 3, 2, "antiflag:1", true},    {"gl", 4, 2, "subspace:2", true},
      {"sp", 4, 2, "subspace:1", false}, {"sp", 4, 2, "polar", false},        {"o+", 4, 3, "subspace:1", false},
      {"o-", 4, 2, "subspace:2", false}, {"gu", 3, 2, "subspace:1", false},   {"o", 5, 3, "subspace:1:nonsingular", false},
  };
  for (const auto& c : cases) {
    CAPTURE(c.g);
    CAPTURE(c.action);
    CAPTURE(c.tau);
    auto G = G_(c.g, c.n, c.q);
    Action A = make(*G, c.action);
    auto ids = A.orbits(G->generators().empty() ? G->elements() : G->generators(), c.tau);
    const long long mult = c.tau ? 2 : 1;
    CHECK(burnside_sum(*G, A, c.tau) == mult * static_cast<long long>(G->size() * orbit_count(ids)));
  }
}

TEST_CASE("charpoly and subspace duality") {
  std::mt19937_64 rng(2024);
  int checked = 0;
  for (int q : {2, 3}) {
    for (int n = 2; n <= 6; ++n) {
      MatrixSpace S(ff::field(q), n);
      const int tmax = (q == 3 && n >= 5) ? 1 : 2;
      for (int k = 0; k < 200; ++k) {
        Matrix g = random_gl(S, rng);
        for (int t = 1; t <= tmax; ++t) {
          const bool scan = fixes_small_subspace(S, g, t);
          const bool poly = ff::has_small_degree_factor(S.field(), S.charpoly(g), t);
          CHECK(scan == poly);
        }
        ++checked;
      }
    }
  }
  CHECK(checked == 2000);
}

TEST_CASE("linear membership sets") {
  auto G = G_("gl", 2, 2);
  auto A = no_small_factor_set(*G, 1);
  REQUIRE(A.size() == 2);
  MatrixSpace S = G->space();
  for (auto i : A) {
    Matrix g = G->element(i);
    CHECK(S.is_identity(S.mul(g, S.mul(g, g))));
  }
  CHECK(no_small_factor_set(*G, 2).empty());
  auto sp = G_("sp", 4, 2);
  CHECK(no_small_factor_set(*sp, 1) == no_small_factor_set_by_scan(*sp, 1));
  CHECK(no_small_factor_set(*sp, 2) == no_small_factor_set_by_scan(*sp, 2));
  auto gl33 = G_("gl", 3, 3);
  for (int mu = 0; mu < 2; ++mu) CHECK(no_small_factor_set(*gl33, 1, mu) == no_small_factor_set_by_scan(*gl33, 1, mu));
  auto gu = G_("gu", 3, 2);
  CHECK(no_small_factor_set(*gu, 1) == no_small_factor_set_by_scan(*gu, 1));
}

TEST_CASE("orthogonal sets by charpoly match the geometric scan") {
  for (auto [name, n, q] : std::vector<std::tuple<std::string, int, int>>{
           {"o+", 4, 2}, {"o-", 4, 2}, {"o+", 4, 3}, {"o-", 4, 3}, {"o", 3, 3}, {"o", 3, 5}}) {
    auto G = G_(name, n, q);
    for (int t : {1, 2}) {
      for (OrthSet c : {OrthSet::S, OrthSet::O}) {
        CAPTURE(name);
        CAPTURE(q);
        CAPTURE(t);
        CHECK(orthogonal_set(*G, t, c) == orthogonal_set_by_scan(*G, t, c));
      }
    }
  }
  auto G = G_("o+", 6, 2);
  std::vector<std::uint32_t> sample;
  for (std::uint32_t i = 0; i < G->size(); i += 37) sample.push_back(i);
  for (int t : {1, 2}) {
    auto full = orthogonal_set(*G, t, OrthSet::O);
    std::vector<std::uint32_t> expect;
    std::set_intersection(full.begin(), full.end(), sample.begin(), sample.end(), std::back_inserter(expect));
    CHECK(orthogonal_set_by_scan(*G, t, OrthSet::O, sample) == expect);
  }
  CHECK_THROWS_AS(orthogonal_set(*G_("sp", 4, 2), 1, OrthSet::S), ArgumentError);
}

TEST_CASE("inverse-transpose coset counts") {
  auto G = G_("gl", 3, 2);
  TauCount a = tau_coset_count(*G, 1);
  TauCount b = tau_coset_count(3, 2, 1);
  CHECK(a.members == b.members);
  CHECK(b.group_order == 168);
  CHECK(make_rational(a.members, a.group_order) == Rational(1, 3));
  auto G4 = G_("gl", 2, 3);
  TauCount c = tau_coset_count(*G4, 1);
  TauCount d = tau_coset_count(2, 3, 1);
  CHECK(c.members_by_label == d.members_by_label);
}

TEST_CASE("samplers") {
  MatrixSpace S(ff::field(5), 3);
  std::mt19937_64 rng(5);
  for (int mu = 0; mu < 4; ++mu)
    for (int k = 0; k < 20; ++k) CHECK(S.field().log({S.det(random_coset_gl(S, mu, rng))}) == mu);
  MatrixSpace S8(ff::field(2), 8);
  std::mt19937_64 r2(99);
  long long draws = 0;
  const int trials = 100000;
  for (int i = 0; i < trials; ++i) {
    long long k = 0;
    random_gl(S8, r2, &k);
    draws += k;
  }
  const double rate = static_cast<double>(trials) / static_cast<double>(draws);
  CHECK(std::abs(rate - 0.2889) < 0.01);
  std::mt19937_64 a(17), b(17);
  for (int i = 0; i < 10; ++i) CHECK(random_gl(S8, a) == random_gl(S8, b));
  DenseGL D(3, 5);
  std::mt19937_64 r3(8);
  for (int i = 0; i < 30; ++i) {
    auto g = D.random_coset(1, r3);
    CHECK(D.field().log({D.det(g)}) == 1);
  }
  DenseGL D2(2, 12);
  std::mt19937_64 r4(3);
  for (int i = 0; i < 200; ++i) {
    auto rows = gf2::random_gl(12, r4);
    DenseGL::Mat m(144);
    for (int r = 0; r < 12; ++r)
      for (int c = 0; c < 12; ++c) m[r * 12 + c] = (rows[r] >> c) & 1;
    CHECK(gf2::fixes_no_point(rows, 12) == !D2.has_eigenvalue(m));
    CHECK(D2.has_eigenvalue(m) == ff::has_small_degree_factor(D2.field(), D2.charpoly(m), 1));
  }
}

TEST_CASE("cayley groups and closures") {
  auto p7 = psl2(7);
  auto p11 = psl2(11);
  auto l32 = psl3_2();
  CHECK(p7.size() == 168);
  CHECK(p11.size() == 660);
  CHECK(l32.size() == 168);
  CHECK(p7.conjugacy_classes().size() == 6);
  CHECK(p11.conjugacy_classes().size() == 8);
  CHECK(l32.conjugacy_classes().size() == 6);
  CHECK(p7.generated_size({0}, 168) == 1);
  MatrixSpace S(ff::field(7), 2);
  auto r = subgroup_closure(S, {S.from_rows({{1, 1}, {0, 1}}), S.from_rows({{0, 6}, {1, 0}})}, 100000);
  CHECK(r.table->size() == 336);
  auto triv = subgroup_closure(S, {S.identity()}, 10);
  CHECK(triv.table->size() == 1);
  auto sp = G_("sp", 4, 2);
  bool found = false;
  for (std::uint32_t j = 1; j < sp->size() && !found; ++j) {
    auto c = subgroup_closure(sp->space(), {sp->generators()[0], sp->element(j)}, 720);
    found = c.table->size() == 720;
  }
  CHECK(found);
  CHECK_THROWS_AS(psl2(9), ArgumentError);
}
