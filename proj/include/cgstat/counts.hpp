#pragma once

#include "cgstat/finite_field.hpp"
#include "cgstat/rational.hpp"

#include <map>
#include <string>

namespace cgstat::ff {

// N: monic irreducibles of degree j other than z.
// Nstar/Mstar: self-conjugate / conjugate pairs under phi -> phi*.
// Ntilde/Mtilde: same under phi -> phi~ over GF(q^2).
enum class CountFamily { N, Nstar, Mstar, Ntilde, Mtilde };

enum class CountMethod { MoebiusFormula, PolynomialEnumeration, RootOrbitEnumeration, ClosedForm };

struct CountEntry {
  Integer value;
  CountMethod method;
};

struct CountTable {
  CountFamily family;
  long long q;
  std::map<int, Integer> values;
  std::map<int, CountMethod> methods;
};

// Work caps for the exhaustive routes (number of polynomials / group elements).
inline constexpr long long kPolynomialEnumerationCap = 600'000;
inline constexpr long long kRootOrbitCap = 120'000'000;

int moebius(long long n);

// Dispatch: N by the Moebius formula; the conjugation families by polynomial
// enumeration when it fits, else root-orbit enumeration, else closed form.
CountEntry count_irreducibles(CountFamily family, long long q, int j);
CountTable count_table(CountFamily family, long long q, int jmax);

// Individual routes. Exhaustive routes throw ResourceError beyond their caps.
Integer count_by_formula(CountFamily family, long long q, int j);
Integer count_by_polynomial_enumeration(CountFamily family, long long q, int j);
Integer count_by_root_orbits(CountFamily family, long long q, int j);

// Number of monic irreducibles of degree j over GF(q) grouped by r(phi),
// excluding z. Index s in [0, q-1).
std::vector<long long> irreducible_counts_by_log(const Field& F, int j);

std::string family_name(CountFamily f);
std::string method_name(CountMethod m);

}  // namespace cgstat::ff
