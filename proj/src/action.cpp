#include "cgstat/action.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cgstat::mg {

namespace {

SubspaceFilter parse_filter(const std::string& s) {
  if (s == "any") return SubspaceFilter::Any;
  if (s == "singular") return SubspaceFilter::TotallySingular;
  if (s == "nondegenerate") return SubspaceFilter::Nondegenerate;
  if (s == "plus") return SubspaceFilter::NondegPlus;
  if (s == "minus") return SubspaceFilter::NondegMinus;
  if (s == "nonsingular") return SubspaceFilter::Nonsingular;
  throw ArgumentError("unknown subspace filter '" + s + "'");
}

std::string filter_name(SubspaceFilter f) {
  switch (f) {
    case SubspaceFilter::Any: return "any";
    case SubspaceFilter::TotallySingular: return "singular";
    case SubspaceFilter::Nondegenerate: return "nondegenerate";
    case SubspaceFilter::NondegPlus: return "plus";
    case SubspaceFilter::NondegMinus: return "minus";
    case SubspaceFilter::Nonsingular: return "nonsingular";
  }
  return "?";
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

Vec row(const Matrix& m, int i) {
  Vec v{};
  for (int j = 0; j < m.n; ++j) v[j] = m(i, j);
  return v;
}

Vec vector_from_index(int n, int q, long long idx) {
  Vec v{};
  for (int i = 0; i < n; ++i) {
    v[i] = static_cast<std::uint8_t>(idx % q);
    idx /= q;
  }
  return v;
}

long long vector_index(int n, int q, const Vec& v) {
  long long idx = 0;
  for (int i = n - 1; i >= 0; --i) idx = idx * q + v[i];
  return idx;
}

// Linear combinations sum c_i u_i of the first k rows.
std::vector<Vec> span_vectors(const MatrixSpace& S, const Matrix& U, int k) {
  long long total = 1;
  for (int i = 0; i < k; ++i) total *= S.q();
  std::vector<Vec> out;
  out.reserve(total);
  for (long long idx = 0; idx < total; ++idx) {
    Vec c = vector_from_index(k, S.q(), idx);
    Vec v{};
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < S.dim(); ++j) v[j] = S.add(v[j], S.mul(c[i], U(i, j)));
    out.push_back(v);
  }
  return out;
}

// Q_0(v) = sum_i v_i v_{m+i}, polarizing to the standard symplectic form.
std::uint8_t polar_base(const MatrixSpace& S, const Vec& v) {
  const int m = S.dim() / 2;
  std::uint8_t s = 0;
  for (int i = 0; i < m; ++i) s = S.add(s, S.mul(v[i], v[m + i]));
  return s;
}

std::uint8_t polar_value(const MatrixSpace& S, const FormSpec& form, const Vec& a, const Vec& v) {
  const std::uint8_t b = form_value(S, form, a, v);
  return S.add(polar_base(S, v), S.mul(b, b));
}

}  // namespace

ActionSpec parse_action(const std::string& text) {
  auto parts = split(text, ':');
  if (parts.empty()) throw ArgumentError("empty action");
  ActionSpec a;
  const std::string& kind = parts[0];
  if (kind == "polar") {
    a.kind = ActionKind::PolarForm;
    a.k = 1;
    if (parts.size() > 2) throw ArgumentError("bad polar action");
    if (parts.size() == 2) a.filter = parse_filter(parts[1]);
    if (a.filter != SubspaceFilter::Any && a.filter != SubspaceFilter::NondegPlus && a.filter != SubspaceFilter::NondegMinus)
      throw ArgumentError("polar forms take plus or minus");
    return a;
  }
  if (kind == "subspace") a.kind = ActionKind::Subspace;
  else if (kind == "flag") a.kind = ActionKind::Flag;
  else if (kind == "antiflag") a.kind = ActionKind::Antiflag;
  else throw ArgumentError("unknown action kind '" + kind + "'");
  if (parts.size() < 2 || parts.size() > 3) throw ArgumentError("action needs a dimension");
  try {
    a.k = std::stoi(parts[1]);
  } catch (const std::exception&) {
    throw ArgumentError("bad action dimension '" + parts[1] + "'");
  }
  if (parts.size() == 3) {
    if (a.kind != ActionKind::Subspace) throw ArgumentError("filters apply to subspace actions only");
    a.filter = parse_filter(parts[2]);
  }
  return a;
}

std::string action_name(const ActionSpec& a) {
  switch (a.kind) {
    case ActionKind::Subspace:
      return "subspace:" + std::to_string(a.k) + (a.filter == SubspaceFilter::Any ? "" : ":" + filter_name(a.filter));
    case ActionKind::Flag: return "flag:" + std::to_string(a.k);
    case ActionKind::Antiflag: return "antiflag:" + std::to_string(a.k);
    case ActionKind::PolarForm: return a.filter == SubspaceFilter::Any ? "polar" : "polar:" + filter_name(a.filter);
  }
  return "?";
}

int rref(const MatrixSpace& S, Matrix& m, int rows) {
  const int n = S.dim();
  const ff::Field& F = S.field();
  int rk = 0;
  for (int c = 0; c < n && rk < rows; ++c) {
    int p = -1;
    for (int r = rk; r < rows; ++r)
      if (m(r, c) != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    if (p != rk)
      for (int j = 0; j < n; ++j) std::swap(m(p, j), m(rk, j));
    const std::uint8_t inv = F.inv({m(rk, c)}).v;
    for (int j = 0; j < n; ++j) m(rk, j) = S.mul(inv, m(rk, j));
    for (int r = 0; r < rows; ++r) {
      if (r == rk || m(r, c) == 0) continue;
      const std::uint8_t f = S.neg(m(r, c));
      for (int j = 0; j < n; ++j) m(r, j) = S.add(m(r, j), S.mul(f, m(rk, j)));
    }
    ++rk;
  }
  for (int r = rk; r < rows; ++r)
    for (int j = 0; j < n; ++j) m(r, j) = 0;
  return rk;
}

Matrix image_subspace(const MatrixSpace& S, const Matrix& g, const Matrix& U, int k) {
  const int n = S.dim();
  Matrix m = S.zero();
  for (int i = 0; i < k; ++i)
    for (int r = 0; r < n; ++r) {
      std::uint8_t s = 0;
      for (int j = 0; j < n; ++j) s = S.add(s, S.mul(g(r, j), U(i, j)));
      m(i, r) = s;
    }
  rref(S, m, k);
  return m;
}

Matrix dot_complement(const MatrixSpace& S, const Matrix& U, int k) {
  Matrix a = U;
  for (int i = k; i < S.dim(); ++i)
    for (int j = 0; j < S.dim(); ++j) a(i, j) = 0;
  auto ker = S.kernel(a);
  Matrix m = S.zero();
  for (std::size_t i = 0; i < ker.size(); ++i)
    for (int j = 0; j < S.dim(); ++j) m(static_cast<int>(i), j) = ker[i][j];
  rref(S, m, static_cast<int>(ker.size()));
  return m;
}

Integer gaussian_binomial(int n, int k, int q) {
  if (k < 0 || k > n) return 0;
  Integer num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= ipow(q, n - i) - 1;
    den *= ipow(q, i + 1) - 1;
  }
  return num / den;
}

std::vector<Matrix> all_subspaces(const MatrixSpace& S, int k) {
  const int n = S.dim(), q = S.q();
  if (k < 0 || k > n) throw ArgumentError("subspace dimension out of range");
  std::vector<Matrix> out;
  std::vector<int> piv(k);
  std::iota(piv.begin(), piv.end(), 0);
  for (;;) {
    std::vector<std::pair<int, int>> free;
    std::vector<bool> is_piv(n, false);
    for (int c : piv) is_piv[c] = true;
    for (int i = 0; i < k; ++i)
      for (int j = piv[i] + 1; j < n; ++j)
        if (!is_piv[j]) free.emplace_back(i, j);
    long long total = 1;
    for (std::size_t i = 0; i < free.size(); ++i) total *= q;
    for (long long idx = 0; idx < total; ++idx) {
      Matrix m = S.zero();
      for (int i = 0; i < k; ++i) m(i, piv[i]) = 1;
      long long r = idx;
      for (auto [i, j] : free) {
        m(i, j) = static_cast<std::uint8_t>(r % q);
        r /= q;
      }
      out.push_back(m);
    }
    int i = k - 1;
    while (i >= 0 && piv[i] == n - k + i) --i;
    if (i < 0) break;
    ++piv[i];
    for (int j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
  }
  return out;
}

bool subspace_matches(const MatrixSpace& S, const FormSpec& form, const Matrix& U, int k, SubspaceFilter f) {
  if (f == SubspaceFilter::Any) return true;
  if (form.kind == FormKind::None) {
    if (f == SubspaceFilter::TotallySingular) return true;
    throw ArgumentError("form-dependent filter without a form");
  }
  Matrix B = S.zero();
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) B(i, j) = form_value(S, form, row(U, i), row(U, j));
  const bool quad = form.kind == FormKind::Quadratic;
  switch (f) {
    case SubspaceFilter::TotallySingular: {
      if (!(B == S.zero())) return false;
      if (quad)
        for (int i = 0; i < k; ++i)
          if (quadratic_value(S, form, row(U, i)) != 0) return false;
      return true;
    }
    case SubspaceFilter::Nonsingular:
      if (k != 1 || !quad) throw ArgumentError("nonsingular filter needs 1-spaces and a quadratic form");
      return quadratic_value(S, form, row(U, 0)) != 0;
    case SubspaceFilter::Nondegenerate:
    case SubspaceFilter::NondegPlus:
    case SubspaceFilter::NondegMinus: {
      const int rk = S.rank(B);
      bool nondeg = rk == k;
      if (quad && S.q() % 2 == 0 && k % 2 == 1) {
        nondeg = false;
        if (rk == k - 1) {
          auto ker = S.kernel(B);
          Vec r{};
          for (int i = 0; i < k; ++i)
            for (int j = 0; j < S.dim(); ++j) r[j] = S.add(r[j], S.mul(ker[0][i], U(i, j)));
          nondeg = quadratic_value(S, form, r) != 0;
        }
      }
      if (!nondeg || f == SubspaceFilter::Nondegenerate) return nondeg;
      if (!quad || k % 2 != 0) throw ArgumentError("plus/minus type needs an even-dimensional orthogonal subspace");
      long long singular = 0;
      for (const Vec& v : span_vectors(S, U, k))
        if (quadratic_value(S, form, v) == 0) ++singular;
      const int m = k / 2;
      const Integer plus = (ipow(S.q(), m) - 1) * (ipow(S.q(), m - 1) + 1) + 1;
      const bool is_plus = Integer(static_cast<long>(singular)) == plus;
      return (f == SubspaceFilter::NondegPlus) == is_plus;
    }
    default: return true;
  }
}

Action::Action(const MatrixSpace& S, const FormSpec& form, ActionSpec spec, long long cap)
    : S_(S), form_(form), spec_(spec) {
  const int n = S.dim(), k = spec.k;
  auto add_layer = [&](int d) {
    for (const auto& L : layers_)
      if (L.k == d) return;
    if (gaussian_binomial(n, d, S.q()) > static_cast<long>(cap)) throw ResourceError("subspace count exceeds the cap");
    Layer L;
    L.k = d;
    L.spaces = all_subspaces(S, d);
    for (std::size_t i = 0; i < L.spaces.size(); ++i) L.index.emplace(L.spaces[i], static_cast<std::uint32_t>(i));
    layers_.push_back(std::move(L));
  };
  auto add_point = [&](std::uint32_t a, std::uint32_t b) {
    if (static_cast<long long>(points_.size()) >= cap) throw ResourceError("action point count exceeds the cap");
    point_index_.emplace((static_cast<std::uint64_t>(a) << 32) | b, static_cast<std::uint32_t>(points_.size()));
    points_.emplace_back(a, b);
  };
  switch (spec.kind) {
    case ActionKind::Subspace: {
      if (k < 1 || k >= n) throw ArgumentError("subspace dimension must lie in [1, n-1]");
      add_layer(k);
      if (2 * k == n) add_layer(n - k);
      const Layer& L = layer(k);
      for (std::size_t i = 0; i < L.spaces.size(); ++i)
        if (subspace_matches(S, form, L.spaces[i], k, spec.filter)) add_point(static_cast<std::uint32_t>(i), 0);
      break;
    }
    case ActionKind::Flag:
    case ActionKind::Antiflag: {
      if (k < 1 || 2 * k > n) throw ArgumentError("flag dimension must lie in [1, n/2]");
      if (spec.filter != SubspaceFilter::Any) throw ArgumentError("flags take no filter");
      add_layer(k);
      add_layer(n - k);
      const Layer& A = layer(k);
      const Layer& B = layer(n - k);
      for (std::size_t i = 0; i < A.spaces.size(); ++i)
        for (std::size_t j = 0; j < B.spaces.size(); ++j) {
          if (spec.kind == ActionKind::Antiflag && 2 * k == n && j <= i) continue;
          Matrix m = S.zero();
          for (int r = 0; r < k; ++r)
            for (int c = 0; c < n; ++c) m(r, c) = A.spaces[i](r, c);
          for (int r = 0; r < n - k; ++r)
            for (int c = 0; c < n; ++c) m(k + r, c) = B.spaces[j](r, c);
          const int rk = rref(S, m, n);
          const bool keep = spec.kind == ActionKind::Flag ? rk == n - k : rk == n;
          if (keep) add_point(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
        }
      break;
    }
    case ActionKind::PolarForm: {
      if (form.kind != FormKind::Symplectic || S.q() % 2 != 0) throw ArgumentError("polar forms need a symplectic group at even q");
      long long total = 1;
      for (int i = 0; i < n; ++i) total *= S.q();
      if (total > cap) throw ResourceError("form count exceeds the cap");
      const int m = n / 2;
      const Integer plus = (ipow(S.q(), m) - 1) * (ipow(S.q(), m - 1) + 1);
      for (long long a = 0; a < total; ++a) {
        if (spec.filter != SubspaceFilter::Any) {
          const Vec av = vector_from_index(n, S.q(), a);
          long long singular = 0;
          for (long long v = 1; v < total; ++v)
            if (polar_value(S, form, av, vector_from_index(n, S.q(), v)) == 0) ++singular;
          const bool is_plus = Integer(static_cast<long>(singular)) == plus;
          if (is_plus != (spec.filter == SubspaceFilter::NondegPlus)) continue;
        }
        add_point(static_cast<std::uint32_t>(a), 0);
      }
      break;
    }
  }
}

const Action::Layer& Action::layer(int k) const {
  for (const auto& L : layers_)
    if (L.k == k) return L;
  throw ArgumentError("no subspaces of dimension " + std::to_string(k) + " in this action");
}

std::uint32_t Action::lookup(const Layer& L, const Matrix& U) const {
  auto it = L.index.find(U);
  if (it == L.index.end()) throw ConstructionError("subspace lookup failed");
  return it->second;
}

std::uint32_t Action::map_space(const Matrix& g, bool tau, int k, std::uint32_t id) const {
  const Matrix& U = layer(k).spaces[id];
  if (!tau) return lookup(layer(k), image_subspace(S_, g, U, k));
  const int d = S_.dim() - k;
  return lookup(layer(d), image_subspace(S_, g, dot_complement(S_, U, k), d));
}

std::uint32_t Action::point_id(std::uint32_t a, std::uint32_t b) const {
  auto it = point_index_.find((static_cast<std::uint64_t>(a) << 32) | b);
  if (it == point_index_.end()) throw ArgumentError("element does not preserve the point set");
  return it->second;
}

std::uint32_t Action::polar_image(const Matrix& g, std::uint32_t a) const {
  // Q_a o g^{-1} = Q_b; b is read off from Q_b - Q_0 = B(b, .)^2 on a basis.
  const int n = S_.dim();
  const Matrix h = S_.inverse(g);
  const ff::Field& F = S_.field();
  const Vec av = vector_from_index(n, S_.q(), a);
  Vec s{};
  for (int i = 0; i < n; ++i) {
    Vec col{};
    for (int r = 0; r < n; ++r) col[r] = h(r, i);
    Vec e{};
    e[i] = 1;
    const std::uint8_t diff = S_.sub(polar_value(S_, form_, av, col), polar_base(S_, e));
    s[i] = F.frobenius({diff}, F.degree() - 1).v;
  }
  // B(b, e_i) = (G^T b)_i
  const Vec b = S_.apply(S_.inverse(S_.transpose(form_.gram)), s);
  return point_id(static_cast<std::uint32_t>(vector_index(n, S_.q(), b)), 0);
}

std::uint32_t Action::image(const Matrix& g, std::uint32_t i, bool tau) const {
  const auto [a, b] = points_.at(i);
  const int n = S_.dim(), k = spec_.k;
  if (tau && form_.kind != FormKind::None) throw ArgumentError("inverse-transpose needs the general linear group");
  switch (spec_.kind) {
    case ActionKind::Subspace:
      if (tau && 2 * k != n) throw ArgumentError("inverse-transpose swaps k- and (n-k)-spaces");
      return point_id(map_space(g, tau, k, a), 0);
    case ActionKind::Flag:
    case ActionKind::Antiflag: {
      std::uint32_t u, w;
      if (!tau) {
        u = map_space(g, false, k, a);
        w = map_space(g, false, n - k, b);
      } else {
        u = map_space(g, true, n - k, b);
        w = map_space(g, true, k, a);
      }
      if (spec_.kind == ActionKind::Antiflag && 2 * k == n && w < u) std::swap(u, w);
      return point_id(u, w);
    }
    case ActionKind::PolarForm:
      if (tau) throw ArgumentError("inverse-transpose does not act on polar forms");
      return polar_image(g, a);
  }
  return 0;
}

std::vector<std::uint32_t> Action::fixed_point_list(const Matrix& g, bool tau) const {
  std::vector<std::uint32_t> out;
  const int n = S_.dim(), k = spec_.k;
  if (spec_.kind == ActionKind::PolarForm && !tau) {
    // Forms with the same polarization agree iff they agree on a basis.
    std::vector<Vec> cols(n), basis(n);
    for (int i = 0; i < n; ++i) {
      for (int r = 0; r < n; ++r) cols[i][r] = g(r, i);
      basis[i][i] = 1;
    }
    for (std::uint32_t i = 0; i < points_.size(); ++i) {
      const Vec av = vector_from_index(n, S_.q(), points_[i].first);
      bool fixed = true;
      for (int c = 0; c < n && fixed; ++c)
        fixed = polar_value(S_, form_, av, cols[c]) == polar_value(S_, form_, av, basis[c]);
      if (fixed) out.push_back(i);
    }
    return out;
  }
  if (spec_.kind == ActionKind::PolarForm || tau) {
    for (std::uint32_t i = 0; i < points_.size(); ++i)
      if (image(g, i, tau) == i) out.push_back(i);
    return out;
  }
  // Cache subspace images so that each subspace is mapped once.
  std::vector<std::vector<std::int64_t>> img(layers_.size());
  auto mapped = [&](int d, std::uint32_t id) {
    std::size_t li = 0;
    while (layers_[li].k != d) ++li;
    auto& v = img[li];
    if (v.empty()) v.assign(layers_[li].spaces.size(), -1);
    if (v[id] < 0) v[id] = map_space(g, false, d, id);
    return static_cast<std::uint32_t>(v[id]);
  };
  for (std::uint32_t i = 0; i < points_.size(); ++i) {
    const auto [a, b] = points_[i];
    if (spec_.kind == ActionKind::Subspace) {
      if (mapped(k, a) == a) out.push_back(i);
      continue;
    }
    const std::uint32_t u = mapped(k, a), w = mapped(n - k, b);
    if ((u == a && w == b) || (spec_.kind == ActionKind::Antiflag && 2 * k == n && u == b && w == a)) out.push_back(i);
  }
  return out;
}

long long Action::fixed_points(const Matrix& g, bool tau) const {
  return static_cast<long long>(fixed_point_list(g, tau).size());
}

std::vector<std::uint32_t> Action::orbits(const std::vector<Matrix>& gens, bool tau) const {
  const std::uint32_t none = UINT32_MAX;
  std::vector<std::uint32_t> id(points_.size(), none);
  std::uint32_t next = 0;
  for (std::uint32_t s = 0; s < points_.size(); ++s) {
    if (id[s] != none) continue;
    std::vector<std::uint32_t> stack{s};
    id[s] = next;
    while (!stack.empty()) {
      const std::uint32_t p = stack.back();
      stack.pop_back();
      auto visit = [&](std::uint32_t r) {
        if (id[r] == none) {
          id[r] = next;
          stack.push_back(r);
        }
      };
      for (const auto& g : gens) visit(image(g, p, false));
      if (tau) visit(image(S_.identity(), p, true));
    }
    ++next;
  }
  return id;
}

std::vector<std::uint32_t> Action::orbit_representatives(const std::vector<Matrix>& gens) const {
  auto id = orbits(gens);
  std::vector<std::uint32_t> reps;
  for (std::uint32_t i = 0; i < id.size(); ++i)
    if (id[i] == reps.size()) reps.push_back(i);
  return reps;
}

std::string Action::point_string(std::uint32_t i) const {
  const auto [a, b] = points_.at(i);
  const int n = S_.dim(), k = spec_.k;
  auto space = [&](int d, std::uint32_t id) {
    const Matrix& U = layer(d).spaces[id];
    std::ostringstream os;
    os << "<";
    for (int r = 0; r < d; ++r) {
      if (r) os << ";";
      for (int c = 0; c < n; ++c) os << (c ? " " : "") << static_cast<int>(U(r, c));
    }
    os << ">";
    return os.str();
  };
  switch (spec_.kind) {
    case ActionKind::Subspace: return space(k, a);
    case ActionKind::Flag:
    case ActionKind::Antiflag: return space(k, a) + (spec_.kind == ActionKind::Flag ? " < " : " + ") + space(n - k, b);
    case ActionKind::PolarForm: {
      Vec v = vector_from_index(n, S_.q(), a);
      std::ostringstream os;
      os << "Q[";
      for (int c = 0; c < n; ++c) os << (c ? " " : "") << static_cast<int>(v[c]);
      os << "]";
      return os.str();
    }
  }
  return "";
}

}  // namespace cgstat::mg
