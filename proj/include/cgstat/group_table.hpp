#pragma once

#include "cgstat/forms.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace cgstat::mg {

// kernel = true selects L_n(q): SL, Sp, SU, SO (odd q) or Omega (even q).
struct GroupSpec {
  Family family = Family::GL;
  int n = 1;
  int q = 2;
  bool kernel = false;
};

// gl, sl, sp, gu, su, o+, o-, o, so+, so-, so, omega+, omega-.
GroupSpec parse_group(const std::string& name, int n, int q);
std::string group_name(const GroupSpec& spec);

inline constexpr long long kDefaultGroupCap = 20000000;

// Open-addressing index from matrix to position.
class MatrixIndex {
 public:
  void reserve(std::size_t n);
  // Returns the existing position or inserts pos and returns -1.
  long long find_or_insert(const std::vector<Matrix>& elems, const Matrix& m, std::uint32_t pos);
  long long find(const std::vector<Matrix>& elems, const Matrix& m) const;
  void clear() { slots_.clear(); used_ = 0; }

 private:
  void grow(const std::vector<Matrix>& elems);
  std::vector<std::uint32_t> slots_;  // position + 1, 0 = empty
  std::size_t used_ = 0;
};

// Fully enumerated matrix group with per-element coset labels:
// GL: r(det); GU: s with det = zeta^{(q-1)s}; Sp: 0;
// O: det class (odd q) or Dickson invariant rank(g - 1) mod 2 (even q).
class GroupTable {
 public:
  GroupTable(GroupSpec spec, MatrixSpace space, FormSpec form);

  const GroupSpec& spec() const noexcept { return spec_; }
  const MatrixSpace& space() const noexcept { return space_; }
  const FormSpec& form() const noexcept { return form_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const Matrix& element(std::size_t i) const { return elements_.at(i); }
  const std::vector<Matrix>& elements() const noexcept { return elements_; }
  int label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::uint8_t>& labels() const noexcept { return labels_; }
  const std::vector<Matrix>& generators() const noexcept { return generators_; }
  int label_count() const noexcept { return label_count_; }
  long long index_of(const Matrix& m) const { return index_.find(elements_, m); }
  bool contains(const Matrix& m) const { return index_of(m) >= 0; }
  // Element positions with the given label.
  std::vector<std::uint32_t> coset(int label) const;
  // Size of the label-0 subgroup.
  std::size_t kernel_size() const;

  int label_of(const Matrix& g) const;

  // Incremental closure: add a generator and close under right
  // multiplication. Returns false if g was already present.
  bool add_generator(const Matrix& g, long long cap);
  void assign(std::vector<Matrix> elems, std::vector<Matrix> gens);
  void compute_labels();

 private:
  GroupSpec spec_;
  MatrixSpace space_;
  FormSpec form_;
  std::vector<Matrix> elements_;
  std::vector<std::uint8_t> labels_;
  std::vector<Matrix> generators_;
  MatrixIndex index_;
  int label_count_ = 1;
};

struct BuildOptions {
  long long cap = kDefaultGroupCap;
  bool use_cache = true;
  // Overrides CGSTAT_CACHE_DIR when non-empty.
  std::string cache_dir;
};

// Breadth-first closure from rank-one candidates I + c x y^T filtered by
// form preservation, stopped at the classical order. Throws ResourceError
// above the cap, ConstructionError on an order mismatch.
std::shared_ptr<const GroupTable> build_group(const GroupSpec& spec, const BuildOptions& opts = {});

// Process-wide memoized build.
std::shared_ptr<const GroupTable> group(const GroupSpec& spec);

struct ClosureResult {
  std::shared_ptr<GroupTable> table;
  bool capped = false;  // closure stopped at cap elements
};

// Subgroup generated by gens; stops once cap elements are present.
ClosureResult subgroup_closure(const MatrixSpace& space, const std::vector<Matrix>& gens, long long cap);

// Binary cache with a versioned header.
bool save_group(const GroupTable& g, const std::string& path);
std::shared_ptr<GroupTable> load_group(const GroupSpec& spec, const std::string& path);
std::string cache_file_name(const GroupSpec& spec);

}  // namespace cgstat::mg
