#include "cgstat/counts.hpp"

#include "cgstat/errors.hpp"

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

namespace cgstat::ff {

int moebius(long long n) {
  if (n < 1) throw ArgumentError("moebius of non-positive integer");
  int sign = 1;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    n /= d;
    if (n % d == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

std::string family_name(CountFamily f) {
  switch (f) {
    case CountFamily::N: return "N";
    case CountFamily::Nstar: return "Nstar";
    case CountFamily::Mstar: return "Mstar";
    case CountFamily::Ntilde: return "Ntilde";
    case CountFamily::Mtilde: return "Mtilde";
  }
  return "?";
}

std::string method_name(CountMethod m) {
  switch (m) {
    case CountMethod::MoebiusFormula: return "moebius_formula";
    case CountMethod::PolynomialEnumeration: return "polynomial_enumeration";
    case CountMethod::RootOrbitEnumeration: return "root_orbit_enumeration";
    case CountMethod::ClosedForm: return "closed_form";
  }
  return "?";
}

namespace {

void check_args(CountFamily family, long long q, int j) {
  if (j < 1) throw ArgumentError("degree j must be >= 1");
  if (q < 2) throw ArgumentError("q must be >= 2");
  switch (family) {
    case CountFamily::N:
    case CountFamily::Nstar:
    case CountFamily::Mstar:
    case CountFamily::Ntilde:
    case CountFamily::Mtilde:
      return;
  }
  throw ArgumentError("unsupported count family");
}

// Irreducible monic polynomials of degree N(q;j) counted by Moebius, z excluded.
Integer moebius_count(long long q, int j) {
  if (j == 1) return Integer(static_cast<long>(q - 1));
  Integer s = 0;
  for (int d = 1; d <= j; ++d) {
    if (j % d != 0) continue;
    int mu = moebius(j / d);
    if (mu == 0) continue;
    Integer term = ipow(q, static_cast<unsigned long>(d));
    if (mu > 0) s += term;
    else s -= term;
  }
  return s / j;
}

Integer nstar_formula(long long q, int j) {
  int c = (q % 2 == 1) ? 2 : 1;
  if (j == 1) return Integer(c);
  if (j % 2 == 1) return Integer(0);
  int h = j / 2;
  Integer x = 0;
  for (int d = 1; d <= h; d += 2) {
    if (h % d != 0) continue;
    int mu = moebius(d);
    if (mu == 0) continue;
    Integer term = ipow(q, static_cast<unsigned long>(h / d)) + 1 - c;
    if (mu > 0) x += term;
    else x -= term;
  }
  return x / j;
}

Integer ntilde_formula(long long q, int j) {
  if (j % 2 == 0) return Integer(0);
  Integer s = 0;
  for (int d = 1; d <= j; ++d) {
    if (j % d != 0) continue;
    int mu = moebius(j / d);
    if (mu == 0) continue;
    Integer term = ipow(q, static_cast<unsigned long>(d)) + 1;
    if (mu > 0) s += term;
    else s -= term;
  }
  return s / j;
}

// Irreducibility bitmap over monic degree-j polynomials indexed as in
// monic_from_index, by marking every product of two monic factors.
std::vector<bool> irreducible_bitmap(const Field& F, int j) {
  const long long Q = F.order();
  long long total = 1;
  for (int i = 0; i < j; ++i) total *= Q;
  std::vector<bool> irred(static_cast<std::size_t>(total), true);
  if (j == 1) return irred;
  std::vector<long long> pw(j + 1, 1);
  for (int i = 1; i <= j; ++i) pw[i] = pw[i - 1] * Q;
  std::vector<FieldElement> prod(j + 1);
  for (int d = 1; 2 * d <= j; ++d) {
    int e = j - d;
    for (long long ia = 0; ia < pw[d]; ++ia) {
      Poly a = monic_from_index(F, d, ia);
      for (long long ib = 0; ib < pw[e]; ++ib) {
        Poly b = monic_from_index(F, e, ib);
        std::fill(prod.begin(), prod.end(), FieldElement{});
        for (int x = 0; x <= d; ++x)
          for (int y = 0; y <= e; ++y) prod[x + y] = F.add(prod[x + y], F.mul(a.coeff(x), b.coeff(y)));
        long long idx = 0;
        for (int k = j - 1; k >= 0; --k) idx = idx * Q + prod[k].v;
        irred[static_cast<std::size_t>(idx)] = false;
      }
    }
  }
  return irred;
}

long long poly_index(const Field& F, const Poly& f) {
  long long idx = 0;
  for (int k = f.degree() - 1; k >= 0; --k) idx = idx * F.order() + f.coeff(k).v;
  return idx;
}

}  // namespace

Integer count_by_formula(CountFamily family, long long q, int j) {
  check_args(family, q, j);
  switch (family) {
    case CountFamily::N: return moebius_count(q, j);
    case CountFamily::Nstar: return nstar_formula(q, j);
    case CountFamily::Mstar: return (moebius_count(q, j) - nstar_formula(q, j)) / 2;
    case CountFamily::Ntilde: return ntilde_formula(q, j);
    case CountFamily::Mtilde: return (moebius_count(q * q, j) - ntilde_formula(q, j)) / 2;
  }
  throw ArgumentError("unsupported count family");
}

Integer count_by_polynomial_enumeration(CountFamily family, long long q, int j) {
  check_args(family, q, j);
  const bool tilde = (family == CountFamily::Ntilde || family == CountFamily::Mtilde);
  const long long Q = tilde ? q * q : q;
  if (!is_prime_power(q) || Q > kMaxFieldOrder) throw ResourceError("field outside table range");
  long long total = 1;
  for (int i = 0; i < j; ++i) {
    total *= Q;
    if (total > kPolynomialEnumerationCap) throw ResourceError("polynomial enumeration cap exceeded");
  }
  auto Fp = field(static_cast<int>(Q));
  const Field& F = *Fp;
  auto irred = irreducible_bitmap(F, j);
  long long all = 0, self = 0;
  for (long long idx = 0; idx < total; ++idx) {
    if (!irred[static_cast<std::size_t>(idx)]) continue;
    Poly f = monic_from_index(F, j, idx);
    if (f.coeff(0).v == 0) continue;
    ++all;
    if (family == CountFamily::N) continue;
    Poly g = tilde ? conjugate_tilde(F, f) : conjugate_star(F, f);
    if (poly_index(F, g) == idx) ++self;
  }
  switch (family) {
    case CountFamily::N: return Integer(static_cast<long>(all));
    case CountFamily::Nstar:
    case CountFamily::Ntilde: return Integer(static_cast<long>(self));
    case CountFamily::Mstar:
    case CountFamily::Mtilde: return Integer(static_cast<long>((all - self) / 2));
  }
  throw ArgumentError("unsupported count family");
}

Integer count_by_root_orbits(CountFamily family, long long q, int j) {
  check_args(family, q, j);
  if (!is_prime_power(q)) throw ArgumentError("root orbits need a prime power q");
  const bool tilde = (family == CountFamily::Ntilde || family == CountFamily::Mtilde);
  const unsigned long long Q = tilde ? static_cast<unsigned long long>(q * q) : static_cast<unsigned long long>(q);
  unsigned long long M = 1;
  for (int i = 0; i < j; ++i) {
    M *= Q;
    if (M > static_cast<unsigned long long>(kRootOrbitCap) + 1) throw ResourceError("root orbit cap exceeded");
  }
  M -= 1;
  // alpha = g^k in GF(Q^j)^*; Frobenius over GF(Q) is k -> Qk, and the
  // conjugation is alpha -> alpha^{-1} (star) or alpha^{-q} (tilde).
  const unsigned long long conj_mult = tilde ? (M - static_cast<unsigned long long>(q) % M) % M : M - 1;
  std::vector<bool> seen(M, false);
  std::vector<unsigned long long> orbit;
  long long self = 0, other = 0;
  for (unsigned long long k = 0; k < M; ++k) {
    if (seen[k]) continue;
    orbit.clear();
    unsigned long long x = k;
    do {
      seen[x] = true;
      orbit.push_back(x);
      x = static_cast<unsigned long long>((static_cast<unsigned __int128>(x) * Q) % M);
    } while (x != k);
    if (static_cast<int>(orbit.size()) != j) continue;
    unsigned long long c = static_cast<unsigned long long>((static_cast<unsigned __int128>(k) * conj_mult) % M);
    bool is_self = false;
    for (auto y : orbit)
      if (y == c) is_self = true;
    if (is_self) ++self;
    else ++other;
  }
  switch (family) {
    case CountFamily::N: return Integer(static_cast<long>(self + other));
    case CountFamily::Nstar:
    case CountFamily::Ntilde: return Integer(static_cast<long>(self));
    case CountFamily::Mstar:
    case CountFamily::Mtilde: return Integer(static_cast<long>(other / 2));
  }
  throw ArgumentError("unsupported count family");
}

namespace {

CountEntry compute_entry(CountFamily family, long long q, int j) {
  if (family == CountFamily::N) return {moebius_count(q, j), CountMethod::MoebiusFormula};
  if (is_prime_power(q)) {
    try {
      return {count_by_polynomial_enumeration(family, q, j), CountMethod::PolynomialEnumeration};
    } catch (const ResourceError&) {
    }
    try {
      return {count_by_root_orbits(family, q, j), CountMethod::RootOrbitEnumeration};
    } catch (const ResourceError&) {
    }
  }
  return {count_by_formula(family, q, j), CountMethod::ClosedForm};
}

}  // namespace

CountEntry count_irreducibles(CountFamily family, long long q, int j) {
  check_args(family, q, j);
  static std::mutex mu;
  static std::map<std::tuple<int, long long, int>, CountEntry> cache;
  const auto key = std::make_tuple(static_cast<int>(family), q, j);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  CountEntry e = compute_entry(family, q, j);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, e);
  return e;
}

CountTable count_table(CountFamily family, long long q, int jmax) {
  CountTable t{family, q, {}, {}};
  for (int j = 1; j <= jmax; ++j) {
    CountEntry e = count_irreducibles(family, q, j);
    t.values[j] = e.value;
    t.methods[j] = e.method;
  }
  return t;
}

std::vector<long long> irreducible_counts_by_log(const Field& F, int j) {
  long long total = 1;
  for (int i = 0; i < j; ++i) {
    total *= F.order();
    if (total > kPolynomialEnumerationCap) throw ResourceError("polynomial enumeration cap exceeded");
  }
  auto irred = irreducible_bitmap(F, j);
  std::vector<long long> counts(F.order() - 1, 0);
  for (long long idx = 0; idx < total; ++idx) {
    if (!irred[static_cast<std::size_t>(idx)]) continue;
    Poly f = monic_from_index(F, j, idx);
    if (f.coeff(0).v == 0) continue;
    ++counts[poly_log(F, f)];
  }
  return counts;
}

}  // namespace cgstat::ff
