#pragma once

#include "cgstat/group_table.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cgstat::mg {

// Finite group given by its full multiplication table.
class CayleyGroup {
 public:
  // G modulo its scalar matrices when mod_scalars is set.
  static CayleyGroup from_table(const GroupTable& G, bool mod_scalars, std::string name);

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return n_; }
  std::uint32_t identity() const noexcept { return 0; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  std::uint32_t inv(std::uint32_t a) const { return inv_.at(a); }
  int order(std::uint32_t a) const;
  // Conjugacy classes, each sorted, ordered by least element.
  std::vector<std::vector<std::uint32_t>> conjugacy_classes() const;
  // Order of the subgroup generated by gens; stops counting at `stop`.
  std::size_t generated_size(const std::vector<std::uint32_t>& gens, std::size_t stop) const;
  bool generates(std::uint32_t a, std::uint32_t b) const { return generated_size({a, b}, n_) == n_; }

 private:
  std::string name_;
  std::size_t n_ = 0;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inv_;
};

// PSL_2(p) = SL_2(p) / {+-I}; PSL_3(2) = GL_3(2).
CayleyGroup psl2(int p);
CayleyGroup psl3_2();
// "psl2(7)", "psl2(11)", "psl3(2)".
CayleyGroup small_group(const std::string& name);

}  // namespace cgstat::mg
