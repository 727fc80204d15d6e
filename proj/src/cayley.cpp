#include "cgstat/cayley.hpp"

#include <algorithm>

namespace cgstat::mg {

CayleyGroup CayleyGroup::from_table(const GroupTable& G, bool mod_scalars, std::string name) {
  const MatrixSpace& S = G.space();
  std::vector<std::uint32_t> scalars;
  if (mod_scalars)
    for (std::uint32_t i = 0; i < G.size(); ++i)
      if (S.is_scalar(G.element(i))) scalars.push_back(i);
  if (scalars.empty()) scalars.push_back(0);
  // Quotient classes; the class of the identity comes first.
  const std::uint32_t none = UINT32_MAX;
  std::vector<std::uint32_t> cls(G.size(), none);
  std::vector<std::uint32_t> rep;
  for (std::uint32_t i = 0; i < G.size(); ++i) {
    if (cls[i] != none) continue;
    const auto id = static_cast<std::uint32_t>(rep.size());
    rep.push_back(i);
    for (auto z : scalars) {
      const long long j = G.index_of(S.mul(G.element(i), G.element(z)));
      if (j < 0) throw ConstructionError("scalar product left the group");
      cls[j] = id;
    }
  }
  if (G.size() % rep.size() != 0) throw ConstructionError("scalar quotient is uneven");
  CayleyGroup C;
  C.name_ = std::move(name);
  C.n_ = rep.size();
  C.table_.resize(C.n_ * C.n_);
  for (std::size_t a = 0; a < C.n_; ++a)
    for (std::size_t b = 0; b < C.n_; ++b) {
      const long long j = G.index_of(S.mul(G.element(rep[a]), G.element(rep[b])));
      C.table_[a * C.n_ + b] = cls[j];
    }
  C.inv_.assign(C.n_, none);
  for (std::uint32_t a = 0; a < C.n_; ++a)
    for (std::uint32_t b = 0; b < C.n_; ++b)
      if (C.mul(a, b) == 0) {
        C.inv_[a] = b;
        break;
      }
  return C;
}

int CayleyGroup::order(std::uint32_t a) const {
  int k = 1;
  for (std::uint32_t x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

std::vector<std::vector<std::uint32_t>> CayleyGroup::conjugacy_classes() const {
  std::vector<bool> seen(n_, false);
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t a = 0; a < n_; ++a) {
    if (seen[a]) continue;
    std::vector<std::uint32_t> c;
    for (std::uint32_t g = 0; g < n_; ++g) {
      const std::uint32_t b = mul(mul(g, a), inv(g));
      if (!seen[b]) {
        seen[b] = true;
        c.push_back(b);
      }
    }
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
  }
  return out;
}

std::size_t CayleyGroup::generated_size(const std::vector<std::uint32_t>& gens, std::size_t stop) const {
  std::vector<bool> in(n_, false);
  std::vector<std::uint32_t> elems{0};
  in[0] = true;
  for (std::size_t i = 0; i < elems.size() && elems.size() < stop; ++i)
    for (auto s : gens) {
      const std::uint32_t x = mul(elems[i], s);
      if (!in[x]) {
        in[x] = true;
        elems.push_back(x);
      }
    }
  return elems.size();
}

CayleyGroup psl2(int p) {
  int pp = 0, e = 0;
  if (!ff::is_prime_power(p, &pp, &e) || e != 1 || p < 5) throw ArgumentError("psl2 needs a prime p >= 5");
  auto G = group(GroupSpec{Family::GL, 2, p, true});
  return CayleyGroup::from_table(*G, true, "psl2(" + std::to_string(p) + ")");
}

CayleyGroup psl3_2() {
  auto G = group(GroupSpec{Family::GL, 3, 2, false});
  return CayleyGroup::from_table(*G, false, "psl3(2)");
}

CayleyGroup small_group(const std::string& name) {
  if (name == "psl3(2)") return psl3_2();
  if (name.rfind("psl2(", 0) == 0 && name.back() == ')') {
    int p = 0;
    try {
      p = std::stoi(name.substr(5, name.size() - 6));
    } catch (const std::exception&) {
      throw ArgumentError("bad group name '" + name + "'");
    }
    return psl2(p);
  }
  throw ArgumentError("unknown probe group '" + name + "'");
}

}  // namespace cgstat::mg
