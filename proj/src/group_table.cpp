#include "cgstat/group_table.hpp"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <map>
#include <mutex>
#include <tuple>

namespace cgstat::mg {

GroupSpec parse_group(const std::string& name, int n, int q) {
  GroupSpec s{Family::GL, n, q, false};
  if (name == "gl") s.family = Family::GL;
  else if (name == "sl") s = {Family::GL, n, q, true};
  else if (name == "sp") s.family = Family::Sp;
  else if (name == "gu") s.family = Family::GU;
  else if (name == "su") s = {Family::GU, n, q, true};
  else if (name == "o+") s.family = Family::OPlus;
  else if (name == "o-") s.family = Family::OMinus;
  else if (name == "o") s.family = Family::OOdd;
  else if (name == "so+" || name == "so-" || name == "so" || name == "omega+" || name == "omega-") {
    const bool omega = name.rfind("omega", 0) == 0;
    if (omega && q % 2 == 1) throw ArgumentError("omega at odd q needs the spinor norm, which is not supported");
    if (!omega && q % 2 == 0) throw ArgumentError("use omega+/omega- at even q");
    const char last = name.back();
    s.family = last == '+' ? Family::OPlus : (last == '-' ? Family::OMinus : Family::OOdd);
    s.kernel = true;
  } else {
    throw ArgumentError("unknown group family '" + name + "'");
  }
  validate_family(s.family, n, q);
  return s;
}

std::string group_name(const GroupSpec& spec) {
  std::string base;
  switch (spec.family) {
    case Family::GL: base = spec.kernel ? "sl" : "gl"; break;
    case Family::Sp: base = "sp"; break;
    case Family::GU: base = spec.kernel ? "su" : "gu"; break;
    case Family::OPlus:
    case Family::OMinus:
    case Family::OOdd: {
      const std::string sign = spec.family == Family::OPlus ? "+" : (spec.family == Family::OMinus ? "-" : "");
      if (!spec.kernel) base = "o" + sign;
      else base = (spec.q % 2 == 0 ? "omega" : "so") + sign;
      break;
    }
  }
  return base + "(" + std::to_string(spec.n) + "," + std::to_string(spec.q) + ")";
}

void MatrixIndex::reserve(std::size_t n) {
  std::size_t cap = 16;
  while (cap < 2 * n) cap *= 2;
  if (cap > slots_.size()) slots_.assign(cap, 0), used_ = 0;
}

void MatrixIndex::grow(const std::vector<Matrix>& elems) {
  std::vector<std::uint32_t> old;
  old.swap(slots_);
  slots_.assign(std::max<std::size_t>(16, old.size() * 2), 0);
  const std::size_t mask = slots_.size() - 1;
  for (std::uint32_t s : old) {
    if (s == 0) continue;
    std::size_t h = MatrixHash{}(elems[s - 1]) & mask;
    while (slots_[h] != 0) h = (h + 1) & mask;
    slots_[h] = s;
  }
}

long long MatrixIndex::find_or_insert(const std::vector<Matrix>& elems, const Matrix& m, std::uint32_t pos) {
  if (slots_.empty() || 2 * (used_ + 1) > slots_.size()) grow(elems);
  const std::size_t mask = slots_.size() - 1;
  std::size_t h = MatrixHash{}(m) & mask;
  while (slots_[h] != 0) {
    if (elems[slots_[h] - 1] == m) return slots_[h] - 1;
    h = (h + 1) & mask;
  }
  slots_[h] = pos + 1;
  ++used_;
  return -1;
}

long long MatrixIndex::find(const std::vector<Matrix>& elems, const Matrix& m) const {
  if (slots_.empty()) return -1;
  const std::size_t mask = slots_.size() - 1;
  std::size_t h = MatrixHash{}(m) & mask;
  while (slots_[h] != 0) {
    if (elems[slots_[h] - 1] == m) return slots_[h] - 1;
    h = (h + 1) & mask;
  }
  return -1;
}

GroupTable::GroupTable(GroupSpec spec, MatrixSpace space, FormSpec form)
    : spec_(spec), space_(std::move(space)), form_(std::move(form)) {
  elements_.push_back(space_.identity());
  index_.find_or_insert(elements_, elements_[0], 0);
  labels_.push_back(0);
}

std::vector<std::uint32_t> GroupTable::coset(int label) const {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (labels_[i] == label) out.push_back(static_cast<std::uint32_t>(i));
  return out;
}

std::size_t GroupTable::kernel_size() const {
  std::size_t c = 0;
  for (auto l : labels_)
    if (l == 0) ++c;
  return c;
}

int GroupTable::label_of(const Matrix& g) const {
  const ff::Field& F = space_.field();
  switch (spec_.family) {
    case Family::GL: return F.log({space_.det(g)});
    case Family::GU: {
      const int q = spec_.q;
      const int lg = F.log({space_.det(g)});
      if (lg % (q - 1) != 0) throw ConstructionError("unitary determinant outside the norm-one group");
      return (lg / (q - 1)) % (q + 1);
    }
    case Family::Sp: return 0;
    case Family::OPlus:
    case Family::OMinus:
    case Family::OOdd:
      if (spec_.q % 2 == 1) return space_.det(g) == 1 ? 0 : 1;
      return space_.rank(space_.sub(g, space_.identity())) % 2;
  }
  return 0;
}

void GroupTable::compute_labels() {
  label_count_ = spec_.kernel ? 1 : kernel_index(spec_.family, spec_.q);
  labels_.resize(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) labels_[i] = static_cast<std::uint8_t>(spec_.kernel ? 0 : label_of(elements_[i]));
}

bool GroupTable::add_generator(const Matrix& g, long long cap) {
  if (index_.find(elements_, g) >= 0) return false;
  generators_.push_back(g);
  const std::size_t old = elements_.size();
  auto push = [&](const Matrix& m) {
    if (static_cast<long long>(elements_.size()) >= cap) return false;
    const auto pos = static_cast<std::uint32_t>(elements_.size());
    elements_.push_back(m);
    if (index_.find_or_insert(elements_, m, pos) >= 0) {
      elements_.pop_back();
    }
    return true;
  };
  for (std::size_t i = 0; i < old; ++i)
    if (!push(space_.mul(elements_[i], g))) break;
  for (std::size_t i = old; i < elements_.size(); ++i) {
    for (const auto& s : generators_)
      if (!push(space_.mul(elements_[i], s))) break;
    if (static_cast<long long>(elements_.size()) >= cap) break;
  }
  labels_.resize(elements_.size(), 0);
  return true;
}

void GroupTable::assign(std::vector<Matrix> elems, std::vector<Matrix> gens) {
  elements_ = std::move(elems);
  generators_ = std::move(gens);
  index_.clear();
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (index_.find_or_insert(elements_, elements_[i], static_cast<std::uint32_t>(i)) >= 0)
      throw ConstructionError("duplicate group element");
  labels_.assign(elements_.size(), 0);
}

namespace {

// Next candidate in the rank-one stream I + c x y^T over nonzero x, y.
class CandidateStream {
 public:
  explicit CandidateStream(const MatrixSpace& S) : S_(S) {
    long long t = 1;
    for (int i = 0; i < S.dim(); ++i) t *= S.q();
    vectors_ = t;
  }

  bool next(Matrix& out) {
    const int q = S_.q();
    for (;;) {
      if (x_ >= vectors_) return false;
      const long long x = x_, y = y_;
      const int c = c_;
      if (++c_ >= q) {
        c_ = 1;
        if (++y_ >= vectors_) {
          y_ = 1;
          ++x_;
        }
      }
      Vec xv = digits(x), yv = digits(y);
      Matrix m = S_.identity();
      for (int i = 0; i < S_.dim(); ++i)
        for (int j = 0; j < S_.dim(); ++j)
          m(i, j) = S_.add(m(i, j), S_.mul(static_cast<std::uint8_t>(c), S_.mul(xv[i], yv[j])));
      ++count_;
      out = m;
      return true;
    }
  }

  long long count() const noexcept { return count_; }

 private:
  Vec digits(long long idx) const {
    Vec v{};
    for (int i = 0; i < S_.dim(); ++i) {
      v[i] = static_cast<std::uint8_t>(idx % S_.q());
      idx /= S_.q();
    }
    return v;
  }

  const MatrixSpace& S_;
  long long vectors_ = 0;
  long long x_ = 1, y_ = 1;
  int c_ = 1;
  long long count_ = 0;
};

constexpr long long kCandidateLimit = 5000000;
constexpr long long kExhaustiveLimit = 1LL << 24;

void fill_extra_candidates(const MatrixSpace& S, std::vector<Matrix>& out) {
  // Diagonals with two non-trivial entries and transposition matrices.
  const ff::Field& F = S.field();
  const int n = S.dim();
  const std::uint8_t z = F.generator().v;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Matrix p = S.identity();
      p(i, i) = p(j, j) = 0;
      p(i, j) = p(j, i) = 1;
      out.push_back(p);
      for (int a = 0; a < F.order() - 1; ++a)
        for (int b = 0; b < F.order() - 1; ++b) {
          Matrix d = S.identity();
          d(i, i) = F.exp(a).v;
          d(j, j) = F.exp(b).v;
          out.push_back(d);
        }
    }
  Matrix d = S.identity();
  d(0, 0) = z;
  out.push_back(d);
}

void exhaustive_scan(GroupTable& G, const Integer& target) {
  const MatrixSpace& S = G.space();
  const int n = S.dim();
  long long total = 1;
  for (int i = 0; i < n * n; ++i) {
    total *= S.q();
    if (total > kExhaustiveLimit) throw ConstructionError("candidate generators do not reach the group order");
  }
  std::vector<Matrix> elems;
  for (long long idx = 0; idx < total; ++idx) {
    Matrix m = S.zero();
    long long r = idx;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        m(i, j) = static_cast<std::uint8_t>(r % S.q());
        r /= S.q();
      }
    if (!preserves_form(S, G.form(), m) || !S.is_invertible(m)) continue;
    elems.push_back(m);
  }
  if (Integer(static_cast<unsigned long>(elems.size())) != target) throw ConstructionError("form stabilizer has the wrong order");
  // Identity first.
  for (std::size_t i = 0; i < elems.size(); ++i)
    if (S.is_identity(elems[i])) {
      std::swap(elems[0], elems[i]);
      break;
    }
  GroupTable closure(G.spec(), S, G.form());
  for (const auto& m : elems) {
    if (closure.size() == elems.size()) break;
    closure.add_generator(m, static_cast<long long>(elems.size()));
  }
  G.assign(std::move(elems), closure.generators());
}

std::shared_ptr<GroupTable> build_ambient(const GroupSpec& spec, long long cap) {
  const GroupSpec amb{spec.family, spec.n, spec.q, false};
  MatrixSpace S(ff::field(matrix_field_order(spec.family, spec.q)), spec.n);
  FormSpec form = standard_form(S, spec.family);
  auto G = std::make_shared<GroupTable>(amb, S, form);
  const Integer target = group_order(spec.family, spec.n, spec.q);
  if (target > static_cast<long>(cap)) throw ResourceError("group order " + target.get_str() + " exceeds the enumeration cap");
  const auto tgt = static_cast<std::size_t>(target.get_ui());
  auto consider = [&](const Matrix& m) {
    if (G->size() >= tgt) return;
    if (!S.is_invertible(m) || !preserves_form(S, form, m)) return;
    G->add_generator(m, cap);
    if (G->size() > tgt) throw ConstructionError("closure exceeded the group order for " + group_name(amb));
  };
  std::vector<Matrix> extra;
  fill_extra_candidates(S, extra);
  for (const auto& m : extra) consider(m);
  CandidateStream stream(S);
  Matrix m;
  while (G->size() < tgt && stream.count() < kCandidateLimit && stream.next(m)) consider(m);
  if (G->size() != tgt) exhaustive_scan(*G, target);
  G->compute_labels();
  return G;
}

std::shared_ptr<GroupTable> build_kernel(const GroupTable& amb, const GroupSpec& spec, long long cap) {
  auto K = std::make_shared<GroupTable>(spec, amb.space(), amb.form());
  const std::size_t target = amb.kernel_size();
  for (std::size_t i = 0; i < amb.size() && K->size() < target; ++i) {
    if (amb.label(i) != 0) continue;
    K->add_generator(amb.element(i), cap);
  }
  if (K->size() != target) throw ConstructionError("kernel closure mismatch");
  K->compute_labels();
  return K;
}

std::string cache_dir_from(const BuildOptions& opts) {
  if (!opts.cache_dir.empty()) return opts.cache_dir;
  const char* env = std::getenv("CGSTAT_CACHE_DIR");
  return env ? std::string(env) : std::string();
}

constexpr char kMagic[8] = {'C', 'G', 'S', 'T', 'G', 'T', '\0', '\1'};
constexpr std::uint32_t kCacheVersion = 1;
constexpr std::uint32_t kLayoutTag = 0x52503155;  // row-major packed u8 entries + label byte

}  // namespace

std::shared_ptr<const GroupTable> build_group(const GroupSpec& spec, const BuildOptions& opts) {
  validate_family(spec.family, spec.n, spec.q);
  if (spec.kernel && spec.family == Family::Sp) throw ArgumentError("Sp is its own kernel");
  const std::string dir = opts.use_cache ? cache_dir_from(opts) : std::string();
  const std::string path = dir.empty() ? std::string() : dir + "/" + cache_file_name(spec);
  if (!path.empty()) {
    if (auto g = load_group(spec, path)) return g;
  }
  std::shared_ptr<GroupTable> G = build_ambient(spec, opts.cap);
  if (spec.kernel) G = build_kernel(*G, spec, opts.cap);
  if (!path.empty()) save_group(*G, path);
  return G;
}

std::shared_ptr<const GroupTable> group(const GroupSpec& spec) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int, bool>, std::shared_ptr<const GroupTable>> cache;
  const auto key = std::make_tuple(static_cast<int>(spec.family), spec.n, spec.q, spec.kernel);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto g = build_group(spec);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, g);
  return g;
}

ClosureResult subgroup_closure(const MatrixSpace& space, const std::vector<Matrix>& gens, long long cap) {
  if (cap < 1) throw ArgumentError("cap must be >= 1");
  GroupSpec spec{Family::GL, space.dim(), space.q(), false};
  FormSpec none;
  none.gram = space.zero();
  none.quad = space.zero();
  auto G = std::make_shared<GroupTable>(spec, space, none);
  for (const auto& g : gens) {
    if (g.n != space.dim()) throw ArgumentError("generator dimension mismatch");
    if (!space.is_invertible(g)) throw ArgumentError("generator is not invertible");
  }
  for (const auto& g : gens) {
    if (static_cast<long long>(G->size()) >= cap) break;
    G->add_generator(g, cap);
  }
  ClosureResult r;
  r.capped = static_cast<long long>(G->size()) >= cap && cap > 1;
  r.table = G;
  return r;
}

std::string cache_file_name(const GroupSpec& spec) {
  return family_name(spec.family) + (spec.kernel ? "k" : "") + "_" + std::to_string(spec.n) + "_" + std::to_string(spec.q) + ".cgt";
}

bool save_group(const GroupTable& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return false;
  const auto& s = g.spec();
  const int n = s.n;
  auto put32 = [&](std::uint32_t v) { out.write(reinterpret_cast<const char*>(&v), 4); };
  out.write(kMagic, 8);
  put32(kCacheVersion);
  put32(kLayoutTag);
  put32(static_cast<std::uint32_t>(s.family));
  put32(static_cast<std::uint32_t>(n));
  put32(static_cast<std::uint32_t>(s.q));
  put32(s.kernel ? 1u : 0u);
  const std::uint64_t count = g.size();
  out.write(reinterpret_cast<const char*>(&count), 8);
  put32(static_cast<std::uint32_t>(g.generators().size()));
  auto put_matrix = [&](const Matrix& m) {
    for (int i = 0; i < n; ++i) out.write(reinterpret_cast<const char*>(m.a.data() + i * kMaxDim), n);
  };
  for (const auto& m : g.generators()) put_matrix(m);
  for (std::size_t i = 0; i < g.size(); ++i) {
    put_matrix(g.element(i));
    const char l = static_cast<char>(g.label(i));
    out.write(&l, 1);
  }
  return static_cast<bool>(out);
}

std::shared_ptr<GroupTable> load_group(const GroupSpec& spec, const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return nullptr;
  char magic[8];
  in.read(magic, 8);
  if (!in || std::memcmp(magic, kMagic, 8) != 0) return nullptr;
  auto get32 = [&]() {
    std::uint32_t v = 0;
    in.read(reinterpret_cast<char*>(&v), 4);
    return v;
  };
  if (get32() != kCacheVersion || get32() != kLayoutTag) return nullptr;
  if (get32() != static_cast<std::uint32_t>(spec.family) || get32() != static_cast<std::uint32_t>(spec.n) ||
      get32() != static_cast<std::uint32_t>(spec.q) || get32() != (spec.kernel ? 1u : 0u))
    return nullptr;
  std::uint64_t count = 0;
  in.read(reinterpret_cast<char*>(&count), 8);
  const std::uint32_t ngens = get32();
  if (!in) return nullptr;
  Integer expect = group_order(spec.family, spec.n, spec.q);
  if (spec.kernel) expect /= kernel_index(spec.family, spec.q);
  if (Integer(static_cast<unsigned long>(count)) != expect) return nullptr;
  MatrixSpace S(ff::field(matrix_field_order(spec.family, spec.q)), spec.n);
  FormSpec form = standard_form(S, spec.family);
  const int n = spec.n;
  auto get_matrix = [&]() {
    Matrix m = S.zero();
    for (int i = 0; i < n; ++i) in.read(reinterpret_cast<char*>(m.a.data() + i * kMaxDim), n);
    return m;
  };
  std::vector<Matrix> gens(ngens);
  for (auto& g : gens) g = get_matrix();
  std::vector<Matrix> elems(count);
  std::vector<std::uint8_t> labels(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    elems[i] = get_matrix();
    char l = 0;
    in.read(&l, 1);
    labels[i] = static_cast<std::uint8_t>(l);
  }
  if (!in) return nullptr;
  for (const auto& m : elems)
    if (!preserves_form(S, form, m)) return nullptr;
  auto G = std::make_shared<GroupTable>(spec, S, form);
  try {
    G->assign(std::move(elems), std::move(gens));
  } catch (const ConstructionError&) {
    return nullptr;
  }
  G->compute_labels();
  for (std::uint64_t i = 0; i < count; ++i)
    if (G->label(i) != labels[i]) return nullptr;
  return G;
}

}  // namespace cgstat::mg
