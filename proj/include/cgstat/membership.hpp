#pragma once

#include "cgstat/group_table.hpp"

#include <cstdint>
#include <vector>

namespace cgstat::mg {

enum class OrthSet { S, O };

// Elements of G with the given label (all labels when label < 0) whose
// characteristic polynomial has no irreducible factor of degree <= t.
std::vector<std::uint32_t> no_small_factor_set(const GroupTable& G, int t, int label = -1);
// Same set by scanning every subspace of dimension <= t.
std::vector<std::uint32_t> no_small_factor_set_by_scan(const GroupTable& G, int t, int label = -1);

// True iff g leaves some subspace of dimension in [1, t] invariant, by scan.
bool fixes_small_subspace(const MatrixSpace& S, const Matrix& g, int t);
// Cached RREF list of k-subspaces of GF(q)^n.
const std::vector<Matrix>& subspace_list(const MatrixSpace& S, int k);

// Orthogonal S and O sets of an ambient orthogonal table, from charpoly
// patterns and coset labels.
std::vector<std::uint32_t> orthogonal_set(const GroupTable& G, int t, OrthSet c);
// Same sets by searching for the reflection 2-space (n even) or the
// eigenvector 1-space (n odd) and scanning its perpendicular complement.
// Only positions listed in `which` are tested (all when empty).
std::vector<std::uint32_t> orthogonal_set_by_scan(const GroupTable& G, int t, OrthSet c,
                                                  const std::vector<std::uint32_t>& which = {});

// |A| / |L| for an ambient table G, with |L| the label-0 count.
Rational notation_proportion(const GroupTable& G, std::size_t count);

// Membership of g tau in the inverse-transpose set: g g^{-T} has no factor of
// degree <= t (n even), or has charpoly (z - 1) h with h free of such factors
// (n odd).
bool tau_member(const MatrixSpace& S, const Matrix& g, int t);

struct TauCount {
  Integer group_order;
  Integer members;
  std::vector<Integer> members_by_label;  // by r(det g)
};

// Streams over every invertible n x n matrix; no group table is stored.
TauCount tau_coset_count(int n, int q, int t);
// Same count over an enumerated GL table.
TauCount tau_coset_count(const GroupTable& G, int t);

}  // namespace cgstat::mg
