#include "cgstat/finite_field.hpp"

#include "cgstat/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace cgstat::ff {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_prime_power(long long q, int* p, int* e) {
  if (q < 2) return false;
  long long d = 2;
  while (d * d <= q && q % d != 0) ++d;
  if (q % d != 0) d = q;
  int k = 0;
  long long r = q;
  while (r % d == 0) {
    r /= d;
    ++k;
  }
  if (r != 1) return false;
  if (p) *p = static_cast<int>(d);
  if (e) *e = k;
  return true;
}

namespace {

// Polynomials over Z_p as int vectors, low to high.
using ZpPoly = std::vector<int>;

void trim(ZpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZpPoly zp_mod(ZpPoly a, const ZpPoly& b, int p) {
  trim(a);
  int db = static_cast<int>(b.size()) - 1;
  int inv_lead = 1;
  while ((inv_lead * b.back()) % p != 1) ++inv_lead;
  while (static_cast<int>(a.size()) - 1 >= db) {
    int shift = static_cast<int>(a.size()) - 1 - db;
    int c = (a.back() * inv_lead) % p;
    for (int i = 0; i <= db; ++i) a[shift + i] = ((a[shift + i] - c * b[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

bool zp_is_irreducible(const ZpPoly& f, int p) {
  int d = static_cast<int>(f.size()) - 1;
  for (int k = 1; 2 * k <= d; ++k) {
    long long count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    for (long long idx = 0; idx < count; ++idx) {
      ZpPoly g(k + 1, 0);
      long long r = idx;
      for (int i = 0; i < k; ++i) {
        g[i] = static_cast<int>(r % p);
        r /= p;
      }
      g[k] = 1;
      if (zp_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<int> least_irreducible_modulus(int p, int e) {
  long long count = 1;
  for (int i = 0; i < e; ++i) count *= p;
  for (long long idx = 0; idx < count; ++idx) {
    ZpPoly f(e + 1, 0);
    long long r = idx;
    for (int i = 0; i < e; ++i) {
      f[i] = static_cast<int>(r % p);
      r /= p;
    }
    f[e] = 1;
    if (zp_is_irreducible(f, p)) return f;
  }
  throw ConstructionError("no irreducible polynomial found");
}

Field::Field(int q) {
  int p = 0, e = 0;
  if (!is_prime_power(q, &p, &e)) throw ArgumentError("field order must be a prime power");
  if (q > kMaxFieldOrder) throw ResourceError("field order exceeds table cap");
  p_ = p;
  e_ = e;
  q_ = q;
  modulus_ = least_irreducible_modulus(p, e);
  build();
}

Field::Field(int p, std::vector<int> modulus) : p_(p), modulus_(std::move(modulus)) {
  if (!is_prime(p)) throw ArgumentError("characteristic must be prime");
  for (int& c : modulus_) c = ((c % p) + p) % p;
  trim(modulus_);
  if (modulus_.size() < 2 || modulus_.back() != 1) throw ArgumentError("modulus must be monic of degree >= 1");
  if (!zp_is_irreducible(modulus_, p)) throw ArgumentError("modulus is reducible");
  e_ = static_cast<int>(modulus_.size()) - 1;
  long long q = 1;
  for (int i = 0; i < e_; ++i) q *= p;
  if (q > kMaxFieldOrder) throw ResourceError("field order exceeds table cap");
  q_ = static_cast<int>(q);
  build();
}

int Field::mul_raw(int a, int b) const {
  ZpPoly x(e_, 0), y(e_, 0);
  for (int i = 0; i < e_; ++i) {
    x[i] = a % p_;
    a /= p_;
    y[i] = b % p_;
    b /= p_;
  }
  ZpPoly prod(2 * e_, 0);
  for (int i = 0; i < e_; ++i)
    for (int j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
  ZpPoly r = zp_mod(prod, modulus_, p_);
  int idx = 0;
  for (int i = static_cast<int>(r.size()) - 1; i >= 0; --i) idx = idx * p_ + r[i];
  return idx;
}

void Field::build() {
  const std::size_t qq = static_cast<std::size_t>(q_) * q_;
  add_.assign(qq, 0);
  mul_.assign(qq, 0);
  neg_.assign(q_, 0);
  inv_.assign(q_, 0);
  frob_.assign(q_, 0);
  exp_.assign(q_ - 1, 0);
  log_.assign(q_, -1);

  std::vector<std::vector<int>> digits(q_, std::vector<int>(e_));
  for (int a = 0; a < q_; ++a) {
    int r = a;
    for (int i = 0; i < e_; ++i) {
      digits[a][i] = r % p_;
      r /= p_;
    }
  }
  auto index_of = [&](const std::vector<int>& d) {
    int idx = 0;
    for (int i = e_ - 1; i >= 0; --i) idx = idx * p_ + d[i];
    return idx;
  };
  std::vector<int> tmp(e_);
  for (int a = 0; a < q_; ++a) {
    for (int i = 0; i < e_; ++i) tmp[i] = (p_ - digits[a][i]) % p_;
    neg_[a] = static_cast<std::uint16_t>(index_of(tmp));
    for (int b = 0; b < q_; ++b) {
      for (int i = 0; i < e_; ++i) tmp[i] = (digits[a][i] + digits[b][i]) % p_;
      add_[static_cast<std::size_t>(a) * q_ + b] = static_cast<std::uint16_t>(index_of(tmp));
    }
  }

  int gen = -1;
  for (int g = 1; g < q_ && gen < 0; ++g) {
    int x = g, ord = 1;
    while (x != 1) {
      x = mul_raw(x, g);
      ++ord;
    }
    if (ord == q_ - 1) gen = g;
  }
  if (gen < 0) throw ConstructionError("no primitive element");
  int x = 1;
  for (int k = 0; k < q_ - 1; ++k) {
    exp_[k] = static_cast<std::uint16_t>(x);
    log_[x] = k;
    x = mul_raw(x, gen);
  }
  for (int a = 1; a < q_; ++a) {
    for (int b = 1; b < q_; ++b)
      mul_[static_cast<std::size_t>(a) * q_ + b] = exp_[(log_[a] + log_[b]) % (q_ - 1)];
    inv_[a] = exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    frob_[a] = exp_[(static_cast<long long>(log_[a]) * p_) % (q_ - 1)];
  }
}

FieldElement Field::element(int index) const {
  if (index < 0 || index >= q_) throw ArgumentError("field element index out of range");
  return {static_cast<std::uint16_t>(index)};
}

FieldElement Field::from_int(long long v) const {
  long long r = ((v % p_) + p_) % p_;
  return {static_cast<std::uint16_t>(r)};
}

std::vector<int> Field::coefficients(FieldElement a) const {
  std::vector<int> c(e_);
  int r = a.v;
  for (int i = 0; i < e_; ++i) {
    c[i] = r % p_;
    r /= p_;
  }
  return c;
}

FieldElement Field::inv(FieldElement a) const {
  if (a.v == 0) throw DomainError("inverse of zero");
  return {inv_[a.v]};
}

FieldElement Field::pow(FieldElement a, long long k) const {
  if (a.v == 0) {
    if (k < 0) throw DomainError("negative power of zero");
    return k == 0 ? one() : zero();
  }
  long long m = q_ - 1;
  long long r = ((static_cast<long long>(log_[a.v]) * (k % m)) % m + m) % m;
  return {exp_[r]};
}

FieldElement Field::frobenius(FieldElement a, int k) const noexcept {
  k %= e_;
  for (int i = 0; i < k; ++i) a.v = frob_[a.v];
  return a;
}

int Field::log(FieldElement a) const {
  if (a.v == 0) throw DomainError("discrete log of zero");
  return log_[a.v];
}

FieldElement Field::exp(long long k) const noexcept {
  long long m = q_ - 1;
  return {exp_[((k % m) + m) % m]};
}

std::shared_ptr<const Field> field(int q) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const Field>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it != cache.end()) return it->second;
  auto f = std::make_shared<const Field>(q);
  cache.emplace(q, f);
  return f;
}

// ---------------------------------------------------------------------------

Poly::Poly(std::vector<FieldElement> coeffs) : c_(std::move(coeffs)) { normalize(); }

void Poly::normalize() {
  while (!c_.empty() && c_.back().v == 0) c_.pop_back();
}

Poly Poly::constant(FieldElement c) { return Poly(std::vector<FieldElement>{c}); }

Poly Poly::monomial(FieldElement c, int degree) {
  std::vector<FieldElement> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

Poly Poly::x() { return monomial(FieldElement{1}, 1); }

Poly add(const Field& F, const Poly& a, const Poly& b) {
  std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  std::vector<FieldElement> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = F.add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
  return Poly(std::move(c));
}

Poly sub(const Field& F, const Poly& a, const Poly& b) {
  std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  std::vector<FieldElement> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = F.sub(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
  return Poly(std::move(c));
}

Poly mul(const Field& F, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<FieldElement> c(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].v == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) c[i + j] = F.add(c[i + j], F.mul(x[i], y[j]));
  }
  return Poly(std::move(c));
}

Poly scale(const Field& F, const Poly& a, FieldElement s) {
  std::vector<FieldElement> c(a.coeffs());
  for (auto& v : c) v = F.mul(v, s);
  return Poly(std::move(c));
}

std::pair<Poly, Poly> divmod(const Field& F, const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<FieldElement> r(a.coeffs());
  int db = b.degree();
  if (a.degree() < db) return {Poly{}, a};
  std::vector<FieldElement> quo(a.degree() - db + 1);
  FieldElement inv_lead = F.inv(b.leading());
  const auto& bc = b.coeffs();
  for (int i = a.degree(); i >= db; --i) {
    FieldElement c = F.mul(r[i], inv_lead);
    if (c.v == 0) continue;
    quo[i - db] = c;
    for (int k = 0; k <= db; ++k) r[i - db + k] = F.sub(r[i - db + k], F.mul(c, bc[k]));
  }
  r.resize(db);
  return {Poly(std::move(quo)), Poly(std::move(r))};
}

Poly mod(const Field& F, const Poly& a, const Poly& b) { return divmod(F, a, b).second; }

Poly make_monic(const Field& F, const Poly& a) {
  if (a.is_zero()) return a;
  return scale(F, a, F.inv(a.leading()));
}

Poly gcd(const Field& F, const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = mod(F, x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return make_monic(F, x);
}

Poly powmod(const Field& F, const Poly& base, const Integer& e, const Poly& m) {
  if (e < 0) throw ArgumentError("negative exponent");
  Poly result = mod(F, Poly::constant(F.one()), m);
  Poly b = mod(F, base, m);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mod(F, mul(F, result, result), m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mod(F, mul(F, result, b), m);
  }
  return result;
}

FieldElement eval(const Field& F, const Poly& f, FieldElement x) {
  FieldElement acc = F.zero();
  for (int i = f.degree(); i >= 0; --i) acc = F.add(F.mul(acc, x), f.coeff(i));
  return acc;
}

Poly frobenius(const Field& F, const Poly& f, int k) {
  std::vector<FieldElement> c(f.coeffs());
  for (auto& v : c) v = F.frobenius(v, k);
  return Poly(std::move(c));
}

Poly monic_from_index(const Field& F, int d, long long index) {
  std::vector<FieldElement> c(d + 1);
  for (int i = 0; i < d; ++i) {
    c[i] = FieldElement{static_cast<std::uint16_t>(index % F.order())};
    index /= F.order();
  }
  c[d] = F.one();
  return Poly(std::move(c));
}

bool has_small_degree_factor(const Field& F, const Poly& f, int t) {
  if (t < 1) throw ArgumentError("t must be >= 1");
  if (f.degree() < 1 || !f.is_monic()) throw ArgumentError("f must be monic of degree >= 1");
  if (f.degree() <= t) return true;
  const Poly z = Poly::x();
  const Integer q(F.order());
  Poly h = mod(F, z, f);
  for (int d = 1; d <= t; ++d) {
    h = powmod(F, h, q, f);
    Poly g = gcd(F, f, sub(F, h, z));
    if (g.degree() >= 1) return true;
  }
  return false;
}

bool is_irreducible(const Field& F, const Poly& f) {
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  return !has_small_degree_factor(F, make_monic(F, f), f.degree() / 2);
}

int poly_log(const Field& F, const Poly& g) {
  FieldElement c = g.coeff(0);
  if (g.degree() % 2 != 0) c = F.neg(c);
  return F.log(c);
}

namespace {

Poly reverse_normalized(const Field& F, const Poly& f, int sigma_power) {
  if (f.is_zero() || !f.is_monic()) throw ArgumentError("polynomial must be monic");
  if (f.coeff(0).v == 0) throw DomainError("zero constant term");
  int n = f.degree();
  std::vector<FieldElement> c(n + 1);
  for (int i = 0; i <= n; ++i) c[i] = F.frobenius(f.coeff(n - i), sigma_power);
  FieldElement s = F.inv(c[n]);
  for (auto& v : c) v = F.mul(v, s);
  return Poly(std::move(c));
}

}  // namespace

Poly conjugate_star(const Field& F, const Poly& f) { return reverse_normalized(F, f, 0); }

Poly conjugate_tilde(const Field& F, const Poly& f) {
  if (F.degree() % 2 != 0) throw ArgumentError("tilde conjugation needs a field of square order");
  return reverse_normalized(F, f, F.degree() / 2);
}

std::string to_string(const Field& F, const Poly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = f.degree(); i >= 0; --i) {
    FieldElement c = f.coeff(i);
    if (c.v == 0) continue;
    if (!first) os << " + ";
    first = false;
    bool unit = (c.v == 1);
    if (!unit || i == 0) {
      if (F.degree() == 1) os << c.v;
      else os << "[" << c.v << "]";
    }
    if (i >= 1) os << "z";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

}  // namespace cgstat::ff
