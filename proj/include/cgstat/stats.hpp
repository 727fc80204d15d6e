#pragma once

#include "cgstat/action.hpp"
#include "cgstat/cayley.hpp"
#include "cgstat/membership.hpp"
#include "cgstat/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cgstat::stats {

inline constexpr double kZ99 = 2.5758293035489004;

struct Interval {
  double lo = 0;
  double hi = 1;
  bool contains(double x) const { return lo <= x && x <= hi; }
};

// Wilson score interval for hits out of n trials.
Interval wilson_interval(long long hits, long long n, double z = kZ99);

enum class Method { Enumeration, Series, MonteCarlo };
std::string method_name(Method m);
Method parse_method(const std::string& s);

// family: gl, sl (coset label), gl-tau, sp, gu, su (coset label), o+, o-, o
// (coset 0 = S, 1 = O).
struct ProportionQuery {
  std::string family = "gl";
  int n = 2;
  int q = 2;
  int t = 1;
  int coset = -1;
  Method method = Method::Enumeration;
  long long samples = 100000;
  std::uint64_t seed = 1;
};

struct ProportionReport {
  ProportionQuery query;
  bool exact = true;
  Rational value;       // exact methods
  double estimate = 0;  // Monte Carlo
  long long hits = 0;
  long long samples = 0;
  Interval ci;
  std::size_t subset_size = 0;
  std::size_t normalizer = 0;
};

ProportionReport proportion(const ProportionQuery& query);

// Monte Carlo hit count; samples are split into fixed chunks, each with its
// own substream, so results do not depend on the thread count.
struct McResult {
  long long hits = 0;
  long long samples = 0;
  double estimate() const { return samples ? static_cast<double>(hits) / static_cast<double>(samples) : 0.0; }
  Interval ci() const { return wilson_interval(hits, samples); }
};
McResult monte_carlo_linear(const std::string& family, int n, int q, int t, int coset, long long samples,
                            std::uint64_t seed, int threads = 0);

struct ExpectationReport {
  std::string action;
  std::size_t subset_size = 0;
  std::size_t points = 0;
  Rational value;
  bool transitive = true;
  std::vector<Rational> per_orbit;  // filled when the normal subgroup is intransitive
};

// Average of fp(g) over the positions in `subset`; tau composes each element
// with the inverse-transpose automorphism.
Rational average_fixed_points(const mg::GroupTable& G, const std::vector<std::uint32_t>& subset, const mg::Action& A,
                              bool tau = false);

// Average over the coset with the given label (tau: the coset GL tau) of the
// fixed points; 1 whenever the label-0 subgroup is transitive.
ExpectationReport coset_average_fixed_points(const mg::GroupTable& G, int label, const mg::Action& A, bool tau = false);

// Throws ArgumentError on an empty subset or one that is not stable under
// conjugation by the generators of G.
ExpectationReport subset_expectation(const mg::GroupTable& G, const std::vector<std::uint32_t>& subset,
                                     const mg::Action& A);
bool conjugation_stable(const mg::GroupTable& G, const std::vector<std::uint32_t>& subset);

struct InequalityCheck {
  Rational lhs;  // Pr_{a in A}[x and a fix a common point]
  Rational rhs;  // fpr(x) * average fp over A
  bool holds = false;
};
InequalityCheck expectation_inequality(const mg::GroupTable& G, const std::vector<std::uint32_t>& subset,
                                  const mg::Action& A, const mg::Matrix& x);

struct FprBound {
  std::string name;  // gk-2/q^k, gk-k1, improvement
  Rational bound;
};
struct FprReport {
  std::string action;
  bool tau = false;
  std::string bound_name;
  Rational bound;
  Rational max_fpr;
  std::size_t elements = 0;
  std::size_t violations = 0;
  std::uint32_t worst = 0;
};

// Bounds that apply to an action of GL_n(q) (flags and antiflags need tau in
// the group, so they are checked for both g and g tau).
std::vector<FprBound> fpr_bounds(int n, int q, const mg::ActionSpec& a);
// Every non-scalar element of a GL table, plus every g tau when with_tau,
// against every applicable bound on every k <= n/2 action.
std::vector<FprReport> fpr_bound_check(const mg::GroupTable& G, bool with_tau);

// Permutations of n points with every cycle longer than t.
Integer symmetric_count(int n, int t);
Rational symmetric_a(int n, int t);
// Expected number of fixed k-sets over A_n(t).
Rational symmetric_expectation(int n, int k, int t);
Rational symmetric_a_brute(int n, int t);
Rational symmetric_expectation_brute(int n, int k, int t);
Integer derangements(int n);

struct IdentityCheck {
  Rational lhs;
  Rational rhs;
  bool holds = false;
  std::string detail;
};
// a_n(q,t,GL tau) against a_{n-delta}(q,t,Sp).
IdentityCheck inverse_transpose_identity_check(int n, int q, int t);
// a_n(q,t,O,O^eps) against the mean of the S-statistics of O+ and O- in
// dimension n - (2,n). eps is +1, -1 or 0 (odd n).
IdentityCheck orthogonal_reflection_identity_check(int n, int q, int eps, int t);

// Signed permutations of m points with an even number of negative k-cycles
// for every even k.
Rational weyl_exact(int m);
McResult weyl_monte_carlo(int m, long long trials, std::uint64_t seed);

struct ClassProbe {
  std::uint32_t representative = 0;
  std::size_t class_size = 0;
  int order = 1;
  Rational exact;         // proportion of s in G with <x, s> = G
  bool has_partner = false;
  long long hits = 0;     // Monte Carlo over uniform s
  long long trials = 0;
  Interval ci;
};
struct ProbeReport {
  std::string group;
  std::size_t order = 0;
  bool three_halves = false;
  std::vector<ClassProbe> classes;
};
// trials = 0: exact proportions only.
ProbeReport generation_probe(const mg::CayleyGroup& G, long long trials, std::uint64_t seed);
// Proportion of s in G generating G together with x.
McResult probe_element(const mg::CayleyGroup& G, std::uint32_t x, long long trials, std::uint64_t seed);

}  // namespace cgstat::stats
