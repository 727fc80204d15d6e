#include "cgstat/membership.hpp"

#include "cgstat/action.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace cgstat::mg {

namespace {

class Classifier {
 public:
  Classifier(const MatrixSpace& S, int t) : S_(S), t_(t) {
    long long total = 1;
    for (int i = 0; i < S.dim() && total <= kPolyClassTableCap; ++i) total *= S.q();
    if (total <= kPolyClassTableCap) table_ = poly_class_table(S.q(), S.dim(), t);
  }

  std::uint8_t operator()(const Matrix& g) const {
    if (table_) return table_->flags(S_.charpoly_index(g));
    return classify_poly(S_.field(), S_.charpoly(g), t_);
  }

 private:
  const MatrixSpace& S_;
  int t_;
  std::shared_ptr<const PolyClassTable> table_;
};

bool is_orthogonal(Family f) { return f == Family::OPlus || f == Family::OMinus || f == Family::OOdd; }

// Matrix of g on the span of the d RREF rows of B, in the pivot coordinates.
Matrix restrict_to(const MatrixSpace& S, const MatrixSpace& Sd, const Matrix& g, const Matrix& B, int d) {
  const int n = S.dim();
  std::vector<int> piv(d);
  for (int i = 0; i < d; ++i) {
    int c = 0;
    while (B(i, c) == 0) ++c;
    piv[i] = c;
  }
  Matrix r = Sd.zero();
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) {
      std::uint8_t s = 0;
      for (int l = 0; l < n; ++l) s = S.add(s, S.mul(g(piv[i], l), B(j, l)));
      r(i, j) = s;
    }
  }
  return r;
}

// Perpendicular complement under the form's Gram matrix.
Matrix form_complement(const MatrixSpace& S, const FormSpec& form, const Matrix& U, int k) {
  Matrix rows = S.zero();
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < S.dim(); ++j) {
      std::uint8_t s = 0;
      for (int l = 0; l < S.dim(); ++l) s = S.add(s, S.mul(U(i, l), form.gram(l, j)));
      rows(i, j) = s;
    }
  return dot_complement(S, rows, k);
}

bool complement_free(const MatrixSpace& S, const FormSpec& form, const Matrix& g, const Matrix& U, int k, int t) {
  const int d = S.dim() - k;
  if (d == 0) return true;
  const Matrix P = form_complement(S, form, U, k);
  MatrixSpace Sd(S.field_ptr(), d);
  return !fixes_small_subspace(Sd, restrict_to(S, Sd, g, P, d), t);
}

}  // namespace

const std::vector<Matrix>& subspace_list(const MatrixSpace& S, int k) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, std::vector<Matrix>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(S.q(), S.dim(), k);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, all_subspaces(S, k)).first;
  return it->second;
}

bool fixes_small_subspace(const MatrixSpace& S, const Matrix& g, int t) {
  for (int k = 1; k <= std::min(t, S.dim()); ++k)
    for (const Matrix& U : subspace_list(S, k))
      if (image_subspace(S, g, U, k) == U) return true;
  return false;
}

std::vector<std::uint32_t> no_small_factor_set(const GroupTable& G, int t, int label) {
  if (t < 1) throw ArgumentError("t must be >= 1");
  Classifier cls(G.space(), t);
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (label >= 0 && G.label(i) != label) continue;
    if (!(cls(G.element(i)) & PolyClassTable::kSmallFactor)) out.push_back(static_cast<std::uint32_t>(i));
  }
  return out;
}

std::vector<std::uint32_t> no_small_factor_set_by_scan(const GroupTable& G, int t, int label) {
  if (t < 1) throw ArgumentError("t must be >= 1");
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (label >= 0 && G.label(i) != label) continue;
    if (!fixes_small_subspace(G.space(), G.element(i), t)) out.push_back(static_cast<std::uint32_t>(i));
  }
  return out;
}

std::vector<std::uint32_t> orthogonal_set(const GroupTable& G, int t, OrthSet c) {
  if (t < 1) throw ArgumentError("t must be >= 1");
  if (!is_orthogonal(G.spec().family) || G.spec().kernel) throw ArgumentError("orthogonal sets need an ambient orthogonal table");
  const bool odd = G.spec().n % 2 == 1;
  std::uint8_t bit;
  if (!odd) bit = c == OrthSet::S ? 0 : PolyClassTable::kReflection;
  else bit = c == OrthSet::S ? PolyClassTable::kOneTimesFree : PolyClassTable::kMinusTimesFree;
  const int want = c == OrthSet::S ? 0 : 1;
  Classifier cls(G.space(), t);
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (G.label(i) != want) continue;
    const std::uint8_t f = cls(G.element(i));
    const bool in = bit == 0 ? !(f & PolyClassTable::kSmallFactor) : (f & bit) != 0;
    if (in) out.push_back(static_cast<std::uint32_t>(i));
  }
  return out;
}

std::vector<std::uint32_t> orthogonal_set_by_scan(const GroupTable& G, int t, OrthSet c, const std::vector<std::uint32_t>& which) {
  if (t < 1) throw ArgumentError("t must be >= 1");
  if (!is_orthogonal(G.spec().family) || G.spec().kernel) throw ArgumentError("orthogonal sets need an ambient orthogonal table");
  const MatrixSpace& S = G.space();
  const FormSpec& form = G.form();
  const int n = S.dim();
  const bool odd = n % 2 == 1;
  std::vector<Matrix> spaces;
  if (!odd && c == OrthSet::O) {
    for (const Matrix& W : subspace_list(S, 2))
      if (subspace_matches(S, form, W, 2, SubspaceFilter::Nondegenerate)) spaces.push_back(W);
  } else if (odd) {
    for (const Matrix& W : subspace_list(S, 1))
      if (subspace_matches(S, form, W, 1, SubspaceFilter::Nondegenerate)) spaces.push_back(W);
  }
  const std::uint8_t minus_one = S.neg(1);
  auto member = [&](const Matrix& g) {
    if (!odd && c == OrthSet::S) return !fixes_small_subspace(S, g, t);
    for (const Matrix& W : spaces) {
      if (odd) {
        const std::uint8_t lam = c == OrthSet::S ? 1 : minus_one;
        bool ok = true;
        for (int r = 0; r < n && ok; ++r) {
          std::uint8_t s = 0;
          for (int l = 0; l < n; ++l) s = S.add(s, S.mul(g(r, l), W(0, l)));
          ok = s == S.mul(lam, W(0, r));
        }
        if (ok && complement_free(S, form, g, W, 1, t)) return true;
        continue;
      }
      if (!(image_subspace(S, g, W, 2) == W)) continue;
      Matrix d = S.zero();
      for (int i = 0; i < 2; ++i)
        for (int r = 0; r < n; ++r) {
          std::uint8_t s = 0;
          for (int l = 0; l < n; ++l) s = S.add(s, S.mul(g(r, l), W(i, l)));
          d(i, r) = S.sub(s, W(i, r));
        }
      if (rref(S, d, 2) != 1) continue;
      if (complement_free(S, form, g, W, 2, t)) return true;
    }
    return false;
  };
  std::vector<std::uint32_t> out;
  if (which.empty()) {
    for (std::size_t i = 0; i < G.size(); ++i)
      if (member(G.element(i))) out.push_back(static_cast<std::uint32_t>(i));
  } else {
    for (auto i : which)
      if (member(G.element(i))) out.push_back(i);
  }
  return out;
}

Rational notation_proportion(const GroupTable& G, std::size_t count) {
  const std::size_t k = G.kernel_size();
  return make_rational(Integer(static_cast<unsigned long>(count)), Integer(static_cast<unsigned long>(k)));
}

bool tau_member(const MatrixSpace& S, const Matrix& g, int t) {
  const Matrix m = S.mul(g, S.inverse_transpose(g));
  const std::uint8_t f = Classifier(S, t)(m);
  if (S.dim() % 2 == 0) return !(f & PolyClassTable::kSmallFactor);
  return (f & PolyClassTable::kOneTimesFree) != 0;
}

namespace {

struct TauAccumulator {
  TauAccumulator(const MatrixSpace& S, int t) : S(S), cls(S, t), even(S.dim() % 2 == 0) {
    by_label.assign(S.q() - 1, 0);
  }
  void add(const Matrix& g) {
    ++total;
    const Matrix m = S.mul(g, S.inverse_transpose(g));
    const std::uint8_t f = cls(m);
    const bool in = even ? !(f & PolyClassTable::kSmallFactor) : (f & PolyClassTable::kOneTimesFree) != 0;
    if (in) ++by_label[S.field().log({S.det(g)})];
  }
  TauCount result() const {
    TauCount r;
    r.group_order = Integer(static_cast<unsigned long>(total));
    r.members = 0;
    for (auto c : by_label) {
      r.members_by_label.push_back(Integer(static_cast<unsigned long>(c)));
      r.members += static_cast<unsigned long>(c);
    }
    return r;
  }
  const MatrixSpace& S;
  Classifier cls;
  bool even;
  std::uint64_t total = 0;
  std::vector<std::uint64_t> by_label;
};

}  // namespace

TauCount tau_coset_count(int n, int q, int t) {
  if (t < 1) throw ArgumentError("t must be >= 1");
  validate_family(Family::GL, n, q);
  long long total = 1;
  for (int i = 0; i < n * n; ++i) {
    total *= q;
    if (total > (1LL << 36)) throw ResourceError("matrix space too large to stream");
  }
  MatrixSpace S(ff::field(q), n);
  TauAccumulator acc(S, t);
  Matrix m = S.zero();
  for (long long idx = 0; idx < total; ++idx) {
    if (S.is_invertible(m)) acc.add(m);
    for (int p = 0; p < n * n; ++p) {
      std::uint8_t& e = m(p / n, p % n);
      if (++e < q) break;
      e = 0;
    }
  }
  TauCount r = acc.result();
  if (r.group_order != group_order(Family::GL, n, q)) throw ConstructionError("streamed GL count mismatch");
  return r;
}

TauCount tau_coset_count(const GroupTable& G, int t) {
  if (t < 1) throw ArgumentError("t must be >= 1");
  if (G.spec().family != Family::GL || G.spec().kernel) throw ArgumentError("inverse-transpose coset needs a GL table");
  TauAccumulator acc(G.space(), t);
  for (const auto& g : G.elements()) acc.add(g);
  return acc.result();
}

}  // namespace cgstat::mg
