#include "cgstat/stats.hpp"

#include "cgstat/random.hpp"
#include "cgstat/sampling.hpp"
#include "cgstat/series.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>
#include <unordered_set>

namespace cgstat::stats {

using mg::Action;
using mg::GroupTable;
using mg::Matrix;

Interval wilson_interval(long long hits, long long n, double z) {
  if (n <= 0) return {0.0, 1.0};
  const double nn = static_cast<double>(n);
  const double p = static_cast<double>(hits) / nn;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nn;
  const double center = (p + z2 / (2.0 * nn)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

std::string method_name(Method m) {
  switch (m) {
    case Method::Enumeration: return "enumeration";
    case Method::Series: return "series";
    case Method::MonteCarlo: return "montecarlo";
  }
  return "?";
}

Method parse_method(const std::string& s) {
  if (s == "enumeration" || s == "enum") return Method::Enumeration;
  if (s == "series") return Method::Series;
  if (s == "montecarlo" || s == "mc") return Method::MonteCarlo;
  throw ArgumentError("unknown method '" + s + "'");
}

namespace {

constexpr long long kChunk = 8192;

// Runs body(chunk_rng, count) over fixed-size chunks and sums the hits.
template <class Body>
McResult run_chunks(long long samples, std::uint64_t seed, int threads, Body body) {
  if (samples < 0) throw ArgumentError("sample count must be >= 0");
  const long long chunks = (samples + kChunk - 1) / kChunk;
  std::vector<long long> hits(static_cast<std::size_t>(chunks), 0);
  std::atomic<long long> next{0};
  auto worker = [&]() {
    for (;;) {
      const long long c = next.fetch_add(1);
      if (c >= chunks) return;
      std::mt19937_64 rng = substream(seed, static_cast<std::uint64_t>(c));
      const long long count = std::min(kChunk, samples - c * kChunk);
      hits[static_cast<std::size_t>(c)] = body(rng, count);
    }
  };
  if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  threads = static_cast<int>(std::min<long long>(threads, std::max<long long>(1, chunks)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  McResult r;
  r.samples = samples;
  r.hits = std::accumulate(hits.begin(), hits.end(), 0LL);
  return r;
}

bool poly_free(const ff::Field& F, const ff::Poly& f, int t) {
  return f.degree() < 1 || !ff::has_small_degree_factor(F, f, t);
}

// charpoly = (z - 1) h with h free of factors of degree <= t.
bool one_times_free(const ff::Field& F, const ff::Poly& f, int t) {
  const ff::Poly lin({F.neg(F.one()), F.one()});
  auto [h, r] = ff::divmod(F, f, lin);
  return r.is_zero() && poly_free(F, h, t);
}

mg::Family family_of(const std::string& f) {
  if (f == "gl" || f == "sl" || f == "gl-tau") return mg::Family::GL;
  if (f == "sp") return mg::Family::Sp;
  if (f == "gu" || f == "su") return mg::Family::GU;
  if (f == "o+") return mg::Family::OPlus;
  if (f == "o-") return mg::Family::OMinus;
  if (f == "o") return mg::Family::OOdd;
  throw ArgumentError("unknown family '" + f + "'");
}

Rational ratio(std::size_t a, std::size_t b) {
  return make_rational(Integer(static_cast<unsigned long>(a)), Integer(static_cast<unsigned long>(b)));
}

}  // namespace

McResult monte_carlo_linear(const std::string& family, int n, int q, int t, int coset, long long samples,
                            std::uint64_t seed, int threads) {
  if (family != "gl" && family != "sl" && family != "gl-tau")
    throw ArgumentError("Monte Carlo supports gl, sl and gl-tau");
  if (t < 1) throw ArgumentError("t must be >= 1");
  if (n < 1 || n > 64) throw ArgumentError("Monte Carlo needs 1 <= n <= 64");
  if (!ff::is_prime_power(q) || q > 256) throw ArgumentError("Monte Carlo needs a prime power q <= 256");
  const bool tau = family == "gl-tau";
  if (family == "sl" && coset < 0) coset = 0;
  if (coset >= q - 1) throw ArgumentError("coset label out of range");
  if (tau) coset = -1;
  if (q == 2 && t == 1 && !tau) {
    return run_chunks(samples, seed, threads, [n](std::mt19937_64& rng, long long count) {
      long long h = 0;
      for (long long i = 0; i < count; ++i)
        if (mg::gf2::fixes_no_point(mg::gf2::random_gl(n, rng), n)) ++h;
      return h;
    });
  }
  const mg::DenseGL D(q, n);
  return run_chunks(samples, seed, threads, [&D, n, t, tau, coset](std::mt19937_64& rng, long long count) {
    long long h = 0;
    const ff::Field& F = D.field();
    for (long long i = 0; i < count; ++i) {
      auto g = coset < 0 ? D.random_gl(rng) : D.random_coset(coset, rng);
      bool hit;
      if (tau) {
        const auto m = D.mul(g, D.inverse_transpose(g));
        const ff::Poly cp = D.charpoly(m);
        hit = n % 2 == 0 ? poly_free(F, cp, t) : one_times_free(F, cp, t);
      } else if (t == 1) {
        hit = !D.has_eigenvalue(g);
      } else {
        hit = poly_free(F, D.charpoly(g), t);
      }
      if (hit) ++h;
    }
    return h;
  });
}

ProportionReport proportion(const ProportionQuery& query) {
  ProportionQuery Q = query;
  if (Q.t < 1) throw ArgumentError("t must be >= 1");
  if (Q.n < 1) throw ArgumentError("n must be >= 1");
  const mg::Family fam = family_of(Q.family);
  if (Q.family == "sl" || Q.family == "su") Q.coset = std::max(Q.coset, 0);
  ProportionReport rep;
  rep.query = Q;
  if (Q.method == Method::MonteCarlo) {
    McResult r = monte_carlo_linear(Q.family, Q.n, Q.q, Q.t, Q.coset, Q.samples, Q.seed);
    rep.exact = false;
    rep.hits = r.hits;
    rep.samples = r.samples;
    rep.estimate = r.estimate();
    rep.ci = r.ci();
    return rep;
  }
  if (Q.method == Method::Series) {
    if (Q.family != "gl" && Q.family != "sl") throw ArgumentError("series method supports gl and sl only");
    if (Q.coset < 0) rep.value = qs::gl_no_small_factor_series(Q.q, Q.t, Q.n)[Q.n];
    else rep.value = qs::sl_coset_series(Q.q, Q.t, Q.coset, Q.n)[Q.n];
    return rep;
  }
  if (Q.family == "gl-tau") {
    const Integer order = mg::group_order(mg::Family::GL, Q.n, Q.q);
    mg::TauCount c = order <= static_cast<long>(mg::kDefaultGroupCap)
                         ? mg::tau_coset_count(*mg::group({mg::Family::GL, Q.n, Q.q, false}), Q.t)
                         : mg::tau_coset_count(Q.n, Q.q, Q.t);
    rep.value = make_rational(c.members, c.group_order);
    rep.subset_size = c.members.get_ui();
    rep.normalizer = c.group_order.get_ui();
    return rep;
  }
  auto G = mg::group({fam, Q.n, Q.q, false});
  std::vector<std::uint32_t> A;
  std::size_t norm = G->size();
  if (fam == mg::Family::OPlus || fam == mg::Family::OMinus || fam == mg::Family::OOdd) {
    if (Q.coset != 0 && Q.coset != 1) throw ArgumentError("orthogonal proportions need coset 0 (S) or 1 (O)");
    A = mg::orthogonal_set(*G, Q.t, Q.coset == 0 ? mg::OrthSet::S : mg::OrthSet::O);
    norm = G->kernel_size();
  } else {
    if (Q.coset >= G->label_count()) throw ArgumentError("coset label out of range");
    A = mg::no_small_factor_set(*G, Q.t, fam == mg::Family::Sp ? -1 : Q.coset);
    if (Q.coset >= 0 && fam != mg::Family::Sp) norm = G->kernel_size();
  }
  rep.subset_size = A.size();
  rep.normalizer = norm;
  rep.value = ratio(A.size(), norm);
  return rep;
}

Rational average_fixed_points(const GroupTable& G, const std::vector<std::uint32_t>& subset, const Action& A, bool tau) {
  if (subset.empty()) throw ArgumentError("empty element subset");
  long long s = 0;
  for (auto i : subset) s += A.fixed_points(G.element(i), tau);
  return make_rational(Integer(static_cast<long>(s)), Integer(static_cast<unsigned long>(subset.size())));
}

ExpectationReport coset_average_fixed_points(const GroupTable& G, int label, const Action& A, bool tau) {
  std::vector<std::uint32_t> subset;
  if (label < 0) {
    subset.resize(G.size());
    std::iota(subset.begin(), subset.end(), 0u);
  } else {
    if (label >= G.label_count()) throw ArgumentError("coset label out of range");
    subset = G.coset(label);
  }
  ExpectationReport rep;
  rep.action = mg::action_name(A.spec()) + (tau ? "+tau" : "");
  rep.subset_size = subset.size();
  rep.points = A.size();
  const auto kernel = G.coset(0);
  // Orbits of the label-0 subgroup.
  std::vector<std::int64_t> orbit(A.size(), -1);
  std::int64_t orbits = 0;
  for (std::uint32_t p = 0; p < A.size(); ++p) {
    if (orbit[p] >= 0) continue;
    for (auto k : kernel) orbit[A.image(G.element(k), p)] = orbits;
    ++orbits;
  }
  rep.transitive = orbits == 1;
  std::vector<long long> per(static_cast<std::size_t>(orbits), 0);
  long long total = 0;
  for (auto i : subset) {
    for (auto p : A.fixed_point_list(G.element(i), tau)) {
      ++per[static_cast<std::size_t>(orbit[p])];
      ++total;
    }
  }
  rep.value = make_rational(Integer(static_cast<long>(total)), Integer(static_cast<unsigned long>(subset.size())));
  if (!rep.transitive)
    for (auto c : per) rep.per_orbit.push_back(make_rational(Integer(static_cast<long>(c)), Integer(static_cast<unsigned long>(subset.size()))));
  return rep;
}

bool conjugation_stable(const GroupTable& G, const std::vector<std::uint32_t>& subset) {
  std::vector<bool> in(G.size(), false);
  for (auto i : subset) in[i] = true;
  const auto& gens = G.generators().empty() ? G.elements() : G.generators();
  const mg::MatrixSpace& S = G.space();
  for (const auto& s : gens) {
    const Matrix si = S.inverse(s);
    for (auto i : subset) {
      const long long j = G.index_of(S.mul(S.mul(s, G.element(i)), si));
      if (j < 0 || !in[static_cast<std::size_t>(j)]) return false;
    }
  }
  return true;
}

ExpectationReport subset_expectation(const GroupTable& G, const std::vector<std::uint32_t>& subset, const Action& A) {
  if (subset.empty()) throw ArgumentError("empty element subset");
  if (!conjugation_stable(G, subset)) throw ArgumentError("subset is not stable under conjugation");
  ExpectationReport rep;
  rep.action = mg::action_name(A.spec());
  rep.subset_size = subset.size();
  rep.points = A.size();
  rep.value = average_fixed_points(G, subset, A);
  return rep;
}

InequalityCheck expectation_inequality(const GroupTable& G, const std::vector<std::uint32_t>& subset, const Action& A,
                                  const Matrix& x) {
  if (subset.empty()) throw ArgumentError("empty element subset");
  const auto fx = A.fixed_point_list(x);
  long long common = 0, fp_sum = 0;
  for (auto i : subset) {
    const Matrix& a = G.element(i);
    const auto fa = A.fixed_point_list(a);
    fp_sum += static_cast<long long>(fa.size());
    bool hit = false;
    for (auto p : fx)
      if (std::binary_search(fa.begin(), fa.end(), p)) {
        hit = true;
        break;
      }
    if (hit) ++common;
  }
  InequalityCheck c;
  const Integer na(static_cast<unsigned long>(subset.size()));
  c.lhs = make_rational(Integer(static_cast<long>(common)), na);
  c.rhs = make_rational(Integer(static_cast<long>(fx.size())), Integer(static_cast<unsigned long>(A.size()))) *
          make_rational(Integer(static_cast<long>(fp_sum)), na);
  c.holds = c.lhs <= c.rhs;
  return c;
}

std::vector<FprBound> fpr_bounds(int n, int q, const mg::ActionSpec& a) {
  std::vector<FprBound> out;
  const int k = a.k;
  out.push_back({"gk-2/q^k", make_rational(Integer(2), ipow(q, k))});
  if (k == 1) out.push_back({"gk-k1", make_rational(Integer(1), Integer(q)) + make_rational(Integer(1), ipow(q, n - 1))});
  if (k == 1 && n >= 4 && (a.kind == mg::ActionKind::Flag || a.kind == mg::ActionKind::Antiflag))
    out.push_back({"improvement", make_rational(Integer(1), ipow(q, 2)) + make_rational(Integer(4), ipow(q, n - 1))});
  return out;
}

std::vector<FprReport> fpr_bound_check(const GroupTable& G, bool with_tau) {
  if (G.spec().family != mg::Family::GL || G.spec().kernel) throw ArgumentError("fpr bounds are checked on GL tables");
  const int n = G.spec().n, q = G.spec().q;
  const mg::MatrixSpace& S = G.space();
  std::vector<mg::ActionSpec> actions;
  for (int k = 1; 2 * k <= n; ++k) {
    actions.push_back({mg::ActionKind::Subspace, mg::SubspaceFilter::Any, k});
    if (2 * k < n) actions.push_back({mg::ActionKind::Flag, mg::SubspaceFilter::Any, k});
    actions.push_back({mg::ActionKind::Antiflag, mg::SubspaceFilter::Any, k});
  }
  std::vector<FprReport> out;
  for (const auto& spec : actions) {
    Action A(S, G.form(), spec);
    const auto bounds = fpr_bounds(n, q, spec);
    const bool tau_ok = spec.kind != mg::ActionKind::Subspace || 2 * spec.k == n;
    for (bool tau : {false, true}) {
      if (tau && (!with_tau || !tau_ok)) continue;
      std::vector<FprReport> reps(bounds.size());
      for (std::size_t b = 0; b < bounds.size(); ++b) {
        reps[b].action = mg::action_name(spec);
        reps[b].tau = tau;
        reps[b].bound_name = bounds[b].name;
        reps[b].bound = bounds[b].bound;
        reps[b].max_fpr = 0;
      }
      for (std::uint32_t i = 0; i < G.size(); ++i) {
        const Matrix& g = G.element(i);
        if (!tau && S.is_scalar(g)) continue;
        const Rational f = make_rational(Integer(static_cast<long>(A.fixed_points(g, tau))), Integer(static_cast<unsigned long>(A.size())));
        for (auto& r : reps) {
          ++r.elements;
          if (f > r.max_fpr) {
            r.max_fpr = f;
            r.worst = i;
          }
          if (!(f < r.bound)) ++r.violations;
        }
      }
      for (auto& r : reps) out.push_back(std::move(r));
    }
  }
  return out;
}

Integer symmetric_count(int n, int t) {
  if (n < 0 || t < 0) throw ArgumentError("n and t must be >= 0");
  std::vector<Integer> c(n + 1, 0);
  c[0] = 1;
  for (int m = 1; m <= n; ++m) {
    // Choose the cycle through point m: length l, (m-1)!/(m-l)! orderings.
    Integer falling = 1;
    for (int l = 1; l <= m; ++l) {
      if (l > 1) falling *= m - l + 1;
      if (l > t) c[m] += falling * c[m - l];
    }
  }
  return c[n];
}

Rational symmetric_a(int n, int t) {
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return make_rational(symmetric_count(n, t), f);
}

Rational symmetric_expectation(int n, int k, int t) {
  if (!(1 <= t && t <= k && 2 * k < n)) throw ArgumentError("need 1 <= t <= k < n/2");
  Integer binom = 1;
  for (int i = 0; i < k; ++i) binom = binom * (n - i) / (i + 1);
  return make_rational(binom * symmetric_count(k, t) * symmetric_count(n - k, t), symmetric_count(n, t));
}

namespace {

template <class F>
void for_each_cycle_type(int n, F f) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<int> lens;
  std::vector<bool> seen(n);
  do {
    lens.clear();
    std::fill(seen.begin(), seen.end(), false);
    for (int i = 0; i < n; ++i) {
      if (seen[i]) continue;
      int l = 0;
      for (int j = i; !seen[j]; j = p[j]) {
        seen[j] = true;
        ++l;
      }
      lens.push_back(l);
    }
    f(lens);
  } while (std::next_permutation(p.begin(), p.end()));
}

}  // namespace

Rational symmetric_a_brute(int n, int t) {
  if (n > 10) throw ResourceError("brute force limited to n <= 10");
  long long hit = 0, total = 0;
  for_each_cycle_type(n, [&](const std::vector<int>& lens) {
    ++total;
    if (std::all_of(lens.begin(), lens.end(), [t](int l) { return l > t; })) ++hit;
  });
  return make_rational(Integer(static_cast<long>(hit)), Integer(static_cast<long>(total)));
}

Rational symmetric_expectation_brute(int n, int k, int t) {
  if (n > 10) throw ResourceError("brute force limited to n <= 10");
  long long members = 0, fixed = 0;
  for_each_cycle_type(n, [&](const std::vector<int>& lens) {
    if (!std::all_of(lens.begin(), lens.end(), [t](int l) { return l > t; })) return;
    ++members;
    // Fixed k-sets are unions of cycles.
    std::vector<long long> ways(k + 1, 0);
    ways[0] = 1;
    for (int l : lens)
      for (int s = k; s >= l; --s) ways[s] += ways[s - l];
    fixed += ways[k];
  });
  if (members == 0) throw ArgumentError("A_n(t) is empty");
  return make_rational(Integer(static_cast<long>(fixed)), Integer(static_cast<long>(members)));
}

Integer derangements(int n) {
  if (n < 0) throw ArgumentError("n must be >= 0");
  Integer a = 1, b = 0;
  if (n == 0) return a;
  for (int i = 2; i <= n; ++i) {
    Integer c = (i - 1) * (a + b);
    a = b;
    b = c;
  }
  return b;
}

IdentityCheck inverse_transpose_identity_check(int n, int q, int t) {
  if (n < 2) throw ArgumentError("need n >= 2");
  if (t < 1) throw ArgumentError("t must be >= 1");
  const Integer order = mg::group_order(mg::Family::GL, n, q);
  const bool streamed = order > static_cast<long>(mg::kDefaultGroupCap);
  const mg::TauCount c =
      streamed ? mg::tau_coset_count(n, q, t) : mg::tau_coset_count(*mg::group({mg::Family::GL, n, q, false}), t);
  const int m = n - (n % 2);
  auto sp = mg::group({mg::Family::Sp, m, q, false});
  const auto A = mg::no_small_factor_set(*sp, t);
  IdentityCheck r;
  r.lhs = make_rational(c.members, c.group_order);
  r.rhs = ratio(A.size(), sp->size());
  r.holds = r.lhs == r.rhs;
  r.detail = std::string(streamed ? "streamed" : "table") + " GL_" + std::to_string(n) + "(" + std::to_string(q) +
             "), members " + c.members.get_str() + " of " + c.group_order.get_str() + "; Sp_" + std::to_string(m) +
             " set " + std::to_string(A.size()) + " of " + std::to_string(sp->size());
  return r;
}

IdentityCheck orthogonal_reflection_identity_check(int n, int q, int eps, int t) {
  if (n < 5) throw ArgumentError("the identity needs n >= 5");
  mg::Family f;
  if (n % 2 == 0) {
    if (eps != 1 && eps != -1) throw ArgumentError("even n needs eps = +1 or -1");
    f = eps == 1 ? mg::Family::OPlus : mg::Family::OMinus;
  } else {
    if (eps != 0) throw ArgumentError("odd n needs eps = 0");
    f = mg::Family::OOdd;
  }
  auto G = mg::group({f, n, q, false});
  const auto O = mg::orthogonal_set(*G, t, mg::OrthSet::O);
  const int m = n - (n % 2 == 0 ? 2 : 1);
  auto P = mg::group({mg::Family::OPlus, m, q, false});
  auto M = mg::group({mg::Family::OMinus, m, q, false});
  const auto SP = mg::orthogonal_set(*P, t, mg::OrthSet::S);
  const auto SM = mg::orthogonal_set(*M, t, mg::OrthSet::S);
  IdentityCheck r;
  r.lhs = mg::notation_proportion(*G, O.size());
  r.rhs = (mg::notation_proportion(*P, SP.size()) + mg::notation_proportion(*M, SM.size())) / 2;
  r.holds = r.lhs == r.rhs;
  r.detail = mg::group_name(G->spec()) + " O-set " + std::to_string(O.size()) + "; " + mg::group_name(P->spec()) +
             " S-set " + std::to_string(SP.size()) + "; " + mg::group_name(M->spec()) + " S-set " +
             std::to_string(SM.size());
  return r;
}

namespace {

// True iff every even length carries an even number of negative cycles.
bool weyl_condition(const std::vector<int>& perm, const std::vector<std::uint8_t>& sign) {
  const int m = static_cast<int>(perm.size());
  std::vector<bool> seen(m, false);
  std::vector<int> neg_count(m + 1, 0);
  for (int i = 0; i < m; ++i) {
    if (seen[i]) continue;
    int l = 0, s = 0;
    for (int j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++l;
      s ^= sign[j];
    }
    if (s) ++neg_count[l];
  }
  for (int k = 2; k <= m; k += 2)
    if (neg_count[k] % 2) return false;
  return true;
}

}  // namespace

Rational weyl_exact(int m) {
  if (m < 1 || m > 8) throw ArgumentError("exact Weyl enumeration needs 1 <= m <= 8");
  std::vector<int> p(m);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::uint8_t> sign(m);
  long long hit = 0, total = 0;
  do {
    for (int mask = 0; mask < (1 << m); ++mask) {
      for (int i = 0; i < m; ++i) sign[i] = (mask >> i) & 1;
      ++total;
      if (weyl_condition(p, sign)) ++hit;
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return make_rational(Integer(static_cast<long>(hit)), Integer(static_cast<long>(total)));
}

McResult weyl_monte_carlo(int m, long long trials, std::uint64_t seed) {
  if (m < 1) throw ArgumentError("m must be >= 1");
  return run_chunks(trials, seed, 0, [m](std::mt19937_64& rng, long long count) {
    long long h = 0;
    std::vector<int> p(m);
    std::vector<std::uint8_t> sign(m);
    for (long long s = 0; s < count; ++s) {
      std::iota(p.begin(), p.end(), 0);
      for (int i = m - 1; i > 0; --i) std::swap(p[i], p[bounded(rng, static_cast<std::uint64_t>(i + 1))]);
      std::uint64_t bits = 0;
      for (int i = 0; i < m; ++i) {
        if (i % 64 == 0) bits = rng();
        sign[i] = static_cast<std::uint8_t>((bits >> (i % 64)) & 1);
      }
      if (weyl_condition(p, sign)) ++h;
    }
    return h;
  });
}

McResult probe_element(const mg::CayleyGroup& G, std::uint32_t x, long long trials, std::uint64_t seed) {
  if (x == G.identity()) throw ArgumentError("probe element must be nontrivial");
  return run_chunks(trials, seed, 1, [&G, x](std::mt19937_64& rng, long long count) {
    long long h = 0;
    for (long long i = 0; i < count; ++i) {
      const auto s = static_cast<std::uint32_t>(bounded(rng, G.size()));
      if (G.generates(x, s)) ++h;
    }
    return h;
  });
}

ProbeReport generation_probe(const mg::CayleyGroup& G, long long trials, std::uint64_t seed) {
  ProbeReport rep;
  rep.group = G.name();
  rep.order = G.size();
  rep.three_halves = true;
  const auto classes = G.conjugacy_classes();
  for (std::size_t ci = 0; ci < classes.size(); ++ci) {
    const auto x = classes[ci].front();
    if (x == G.identity()) continue;
    ClassProbe c;
    c.representative = x;
    c.class_size = classes[ci].size();
    c.order = G.order(x);
    std::size_t good = 0;
    for (std::uint32_t s = 0; s < G.size(); ++s)
      if (G.generates(x, s)) ++good;
    c.exact = ratio(good, G.size());
    c.has_partner = good > 0;
    if (!c.has_partner) rep.three_halves = false;
    if (trials > 0) {
      McResult r = probe_element(G, x, trials, seed + ci);
      c.hits = r.hits;
      c.trials = r.samples;
      c.ci = r.ci();
    }
    rep.classes.push_back(c);
  }
  return rep;
}

}  // namespace cgstat::stats
