#pragma once

#include "cgstat/forms.hpp"

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace cgstat::mg {

enum class SubspaceFilter { Any, TotallySingular, Nondegenerate, NondegPlus, NondegMinus, Nonsingular };
enum class ActionKind { Subspace, Flag, Antiflag, PolarForm };

// Flags pair a k-space with an (n-k)-space containing it, antiflags with a
// complement (unordered when k = n/2). PolarForm is the action of Sp_n(q),
// q even, on quadratic forms polarizing to the symplectic form; filter
// NondegPlus/NondegMinus selects the type.
struct ActionSpec {
  ActionKind kind = ActionKind::Subspace;
  SubspaceFilter filter = SubspaceFilter::Any;
  int k = 1;
};

// "subspace:K[:any|singular|nondegenerate|plus|minus|nonsingular]",
// "flag:K", "antiflag:K", "polar[:plus|minus]".
ActionSpec parse_action(const std::string& text);
std::string action_name(const ActionSpec& a);

// Reduced row echelon form of the first `rows` rows of m; returns the rank.
// Nonzero rows come first.
int rref(const MatrixSpace& S, Matrix& m, int rows);

// Span of g u_i for the basis rows u_i of U (dim k), in RREF.
Matrix image_subspace(const MatrixSpace& S, const Matrix& g, const Matrix& U, int k);
// Orthogonal complement under the standard dot product, in RREF.
Matrix dot_complement(const MatrixSpace& S, const Matrix& U, int k);

// All k-subspaces as RREF bases (rows 0..k-1).
std::vector<Matrix> all_subspaces(const MatrixSpace& S, int k);
Integer gaussian_binomial(int n, int k, int q);

bool subspace_matches(const MatrixSpace& S, const FormSpec& form, const Matrix& U, int k, SubspaceFilter f);

class Action {
 public:
  Action(const MatrixSpace& S, const FormSpec& form, ActionSpec spec, long long cap = 20000000);

  const ActionSpec& spec() const noexcept { return spec_; }
  std::size_t size() const noexcept { return points_.size(); }
  // Image of point i under g, or under g composed with the inverse-transpose
  // automorphism (U -> g U^perp).
  std::uint32_t image(const Matrix& g, std::uint32_t i, bool tau = false) const;
  long long fixed_points(const Matrix& g, bool tau = false) const;
  // Positions of the points fixed by g.
  std::vector<std::uint32_t> fixed_point_list(const Matrix& g, bool tau = false) const;
  // Orbit id per point under the group generated by gens.
  std::vector<std::uint32_t> orbits(const std::vector<Matrix>& gens, bool tau = false) const;
  std::vector<std::uint32_t> orbit_representatives(const std::vector<Matrix>& gens) const;
  std::string point_string(std::uint32_t i) const;

 private:
  struct Layer {
    int k = 0;
    std::vector<Matrix> spaces;
    std::unordered_map<Matrix, std::uint32_t, MatrixHash> index;
  };
  std::uint32_t lookup(const Layer& L, const Matrix& U) const;
  const Layer& layer(int k) const;
  std::uint32_t map_space(const Matrix& g, bool tau, int k, std::uint32_t id) const;
  std::uint32_t point_id(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t polar_image(const Matrix& g, std::uint32_t a) const;

  MatrixSpace S_;
  FormSpec form_;
  ActionSpec spec_;
  std::vector<Layer> layers_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> points_;
  std::unordered_map<std::uint64_t, std::uint32_t> point_index_;
};

}  // namespace cgstat::mg
