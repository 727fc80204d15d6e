#include "cgstat/enclosure.hpp"

#include "cgstat/counts.hpp"
#include "cgstat/errors.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>

namespace cgstat::qs {

std::string limit_tag_name(LimitTag tag) {
  switch (tag) {
    case LimitTag::GL: return "gl";
    case LimitTag::SU: return "su";
    case LimitTag::SpOdd: return "sp-odd";
    case LimitTag::SpEven: return "sp-even";
    case LimitTag::OHalf: return "o-half";
  }
  return "?";
}

LimitTag parse_limit_tag(const std::string& name) {
  if (name == "gl") return LimitTag::GL;
  if (name == "su") return LimitTag::SU;
  if (name == "sp-odd") return LimitTag::SpOdd;
  if (name == "sp-even") return LimitTag::SpEven;
  if (name == "o-half") return LimitTag::OHalf;
  throw ArgumentError("unknown limit family '" + name + "'");
}

void validate(const LimitFamily& fam) {
  if (fam.q < 2) throw ArgumentError("q must be >= 2");
  if (fam.t < 1) throw ArgumentError("t must be >= 1");
  if (fam.tag == LimitTag::SpOdd && fam.q % 2 == 0) throw ArgumentError("sp-odd needs odd q");
  if (fam.tag == LimitTag::SpEven && fam.q % 2 == 1) throw ArgumentError("sp-even needs even q");
}

namespace {

Integer count(ff::CountFamily f, long long q, int j) { return ff::count_irreducibles(f, q, j).value; }

void symplectic_factors(long long q, int t, bool odd, std::vector<ProductFactor>& out) {
  out.push_back({2, -1, SignRule::Minus, Integer(odd ? 2 : 1)});
  for (int j = 1; 2 * j <= t; ++j) out.push_back({j, 0, SignRule::AlternatingIndex, count(ff::CountFamily::Nstar, q, 2 * j)});
  for (int j = 1; j <= t; ++j) out.push_back({j, 0, SignRule::Minus, count(ff::CountFamily::Mstar, q, j)});
}

// RAII wrapper for a handful of mpfr variables.
struct Mpfr {
  mpfr_t v;
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v, prec); }
  ~Mpfr() { mpfr_clear(v); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
};

}  // namespace

std::vector<ProductFactor> limit_factors(const LimitFamily& fam) {
  validate(fam);
  std::vector<ProductFactor> out;
  const long long q = fam.q;
  switch (fam.tag) {
    case LimitTag::GL:
      for (int j = 1; j <= fam.t; ++j) out.push_back({j, 0, SignRule::Minus, count(ff::CountFamily::N, q, j)});
      break;
    case LimitTag::SU:
      for (int j = 1; j <= fam.t; ++j) {
        out.push_back({j, 0, SignRule::AlternatingPower, count(ff::CountFamily::Ntilde, q, j)});
        out.push_back({2 * j, 0, SignRule::Minus, count(ff::CountFamily::Mtilde, q, j)});
      }
      break;
    case LimitTag::SpOdd: symplectic_factors(q, fam.t, true, out); break;
    case LimitTag::SpEven: symplectic_factors(q, fam.t, false, out); break;
    case LimitTag::OHalf: symplectic_factors(q, fam.t, q % 2 == 1, out); break;
  }
  return out;
}

Enclosure product_enclosure(long long q, const std::vector<ProductFactor>& factors, int I, bool halve) {
  if (q < 2) throw ArgumentError("q must be >= 2");
  if (I < 1) throw ArgumentError("truncation must be >= 1");
  long long max_exp = 1;
  std::size_t exp_bits = 1;
  for (const auto& f : factors) {
    if (f.step < 1 || f.step + f.offset < 1) throw ArgumentError("factor exponents must be >= 1");
    if (f.exponent < 0) throw ArgumentError("negative factor exponent");
    max_exp = std::max(max_exp, static_cast<long long>(f.step) * I + f.offset);
    exp_bits = std::max(exp_bits, mpz_sizeinbase(f.exponent.get_mpz_t(), 2));
  }
  const double log2q = std::log2(static_cast<double>(q));
  long long bits = 128 + static_cast<long long>(exp_bits) + static_cast<long long>(std::ceil(max_exp * log2q));
  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(std::min<long long>(bits, 1 << 16));

  Mpfr lo(prec), hi(prec), qv(prec), x_lo(prec), x_hi(prec), b_lo(prec), b_hi(prec), tail(prec), tmp(prec), tmp2(prec);
  mpfr_set_ui(lo.v, 1, MPFR_RNDN);
  mpfr_set_ui(hi.v, 1, MPFR_RNDN);
  mpfr_set_ui(tail.v, 0, MPFR_RNDN);
  mpfr_set_si(qv.v, static_cast<long>(q), MPFR_RNDN);

  for (const auto& f : factors) {
    if (f.exponent == 0) continue;
    for (int i = 1; i <= I; ++i) {
      const long e = static_cast<long>(f.step) * i + f.offset;
      mpfr_pow_si(x_lo.v, qv.v, -e, MPFR_RNDD);
      mpfr_pow_si(x_hi.v, qv.v, -e, MPFR_RNDU);
      int s = -1;
      if (f.sign == SignRule::AlternatingIndex) s = (i % 2 == 0) ? 1 : -1;
      if (f.sign == SignRule::AlternatingPower) s = (e % 2 == 0) ? 1 : -1;
      if (s < 0) {
        mpfr_ui_sub(b_lo.v, 1, x_hi.v, MPFR_RNDD);
        mpfr_ui_sub(b_hi.v, 1, x_lo.v, MPFR_RNDU);
      } else {
        mpfr_add_ui(b_lo.v, x_lo.v, 1, MPFR_RNDD);
        mpfr_add_ui(b_hi.v, x_hi.v, 1, MPFR_RNDU);
      }
      mpfr_pow_z(b_lo.v, b_lo.v, f.exponent.get_mpz_t(), MPFR_RNDD);
      mpfr_pow_z(b_hi.v, b_hi.v, f.exponent.get_mpz_t(), MPFR_RNDU);
      mpfr_mul(lo.v, lo.v, b_lo.v, MPFR_RNDD);
      mpfr_mul(hi.v, hi.v, b_hi.v, MPFR_RNDU);
    }
    // 2 m q^{-(step(I+1)+offset)} / (1 - q^{-step})
    const long e_tail = static_cast<long>(f.step) * (I + 1) + f.offset;
    mpfr_pow_si(tmp.v, qv.v, -e_tail, MPFR_RNDU);
    mpfr_mul_z(tmp.v, tmp.v, f.exponent.get_mpz_t(), MPFR_RNDU);
    mpfr_mul_ui(tmp.v, tmp.v, 2, MPFR_RNDU);
    mpfr_pow_si(tmp2.v, qv.v, -f.step, MPFR_RNDU);
    mpfr_ui_sub(tmp2.v, 1, tmp2.v, MPFR_RNDD);
    mpfr_div(tmp.v, tmp.v, tmp2.v, MPFR_RNDU);
    mpfr_add(tail.v, tail.v, tmp.v, MPFR_RNDU);
  }
  // exp(-T) >= 1 - T and exp(T) <= 1/(1 - T)
  if (mpfr_cmp_ui(tail.v, 1) >= 0) {
    mpfr_set_ui(lo.v, 0, MPFR_RNDN);
    mpfr_set_inf(hi.v, 1);
  } else {
    mpfr_ui_sub(tmp.v, 1, tail.v, MPFR_RNDD);
    mpfr_mul(lo.v, lo.v, tmp.v, MPFR_RNDD);
    mpfr_div(hi.v, hi.v, tmp.v, MPFR_RNDU);
  }
  if (halve) {
    mpfr_div_ui(lo.v, lo.v, 2, MPFR_RNDD);
    mpfr_div_ui(hi.v, hi.v, 2, MPFR_RNDU);
  }
  Enclosure enc;
  enc.lo = mpfr_get_d(lo.v, MPFR_RNDD);
  enc.hi = mpfr_get_d(hi.v, MPFR_RNDU);
  enc.rigorous = true;
  enc.truncation = I;
  return enc;
}

namespace {

Enclosure refine(long long q, const std::vector<ProductFactor>& factors, bool halve, double tol) {
  if (!(tol > 0)) throw ArgumentError("tolerance must be positive");
  for (int I = 4;; I *= 2) {
    Enclosure e = product_enclosure(q, factors, I, halve);
    if (e.width() <= tol) return e;
    if (I >= 8192) throw ResourceError("enclosure did not reach the requested width");
  }
}

}  // namespace

Enclosure limit_value_at_truncation(const LimitFamily& fam, int I) {
  return product_enclosure(fam.q, limit_factors(fam), I, fam.tag == LimitTag::OHalf);
}

Enclosure limit_value(const LimitFamily& fam, double tol) {
  return refine(fam.q, limit_factors(fam), fam.tag == LimitTag::OHalf, tol);
}

Enclosure gl_factor_enclosure(long long q, int j, double tol) {
  std::vector<ProductFactor> f{{j, 0, SignRule::Minus, count(ff::CountFamily::N, q, j)}};
  return refine(q, f, false, tol);
}

Enclosure gl_factor_comparison_enclosure(long long q, int j, double tol) {
  std::vector<ProductFactor> f{{j, 0, SignRule::Minus, ipow(q, static_cast<unsigned long>(j))}};
  return refine(q, f, false, tol);
}

double q_infinity_limit(LimitTag tag, int t) {
  if (t < 1) throw ArgumentError("t must be >= 1");
  auto harmonic = [](int n) {
    double s = 0;
    for (int k = 1; k <= n; ++k) s += 1.0 / k;
    return s;
  };
  switch (tag) {
    case LimitTag::GL: return std::exp(-harmonic(t));
    case LimitTag::SpOdd:
    case LimitTag::SpEven: return std::exp(-0.5 * (harmonic(t / 2) + harmonic(t)));
    case LimitTag::OHalf: return 0.5 * std::exp(-0.5 * (harmonic(t / 2) + harmonic(t)));
    case LimitTag::SU: {
      double odd = 0;
      for (int j = 1; j <= t; j += 2) odd += 1.0 / j;
      return std::exp(-(odd + 0.5 * harmonic(t)));
    }
  }
  return 0;
}

Enclosure limit_from_series(const RationalSeries& s) {
  const int N = s.order();
  if (N < 2) throw ArgumentError("series order must be >= 2");
  Rational gap = abs(s[N] - s[N - 1]);
  Enclosure e;
  e.lo = Rational(s[N] - gap).get_d();
  e.hi = Rational(s[N] + gap).get_d();
  e.lo = std::nextafter(e.lo, -1.0);
  e.hi = std::nextafter(e.hi, 2.0);
  if (gap == 0) e.lo = e.hi = s[N].get_d();
  e.rigorous = false;
  e.truncation = N;
  return e;
}

bool BoundReport::pass() const noexcept {
  return std::all_of(entries.begin(), entries.end(), [](const BoundEntry& e) { return e.pass(); });
}

BoundReport bound_suite(const std::vector<long long>& qs, const std::vector<int>& ts, double tol) {
  BoundReport rep;
  rep.floor_constant = std::exp(-2.0 - 2.0 / 3.0);
  rep.upper_constant = 1.0 / std::sqrt(std::exp(1.0));
  // Round the constants conservatively against the checks.
  const double floor_c = std::nextafter(rep.floor_constant, 1.0);
  const double upper_c = std::nextafter(rep.upper_constant, 0.0);
  for (long long q : qs) {
    for (int t : ts) {
      const LimitTag sp = (q % 2 == 1) ? LimitTag::SpOdd : LimitTag::SpEven;
      for (LimitTag tag : {LimitTag::GL, LimitTag::SU, sp, LimitTag::OHalf}) {
        BoundEntry e;
        e.tag = tag;
        e.q = q;
        e.t = t;
        e.value = limit_value({tag, q, t}, tol);
        e.in_unit_interval = e.value.lo > 0 && e.value.hi < 1;
        if (tag == LimitTag::GL) {
          e.below_inv_sqrt_e = e.value.hi <= upper_c;
          e.upper_margin = upper_c - e.value.hi;
          for (int j = 1; j <= t; ++j) {
            e.min_factor_lo = std::min(e.min_factor_lo, gl_factor_enclosure(q, j, tol).lo);
            e.min_comparison_lo = std::min(e.min_comparison_lo, gl_factor_comparison_enclosure(q, j, tol).lo);
          }
          e.floor_ok = e.min_factor_lo >= floor_c && e.min_comparison_lo >= floor_c;
        }
        rep.entries.push_back(e);
      }
    }
  }
  return rep;
}

}  // namespace cgstat::qs
