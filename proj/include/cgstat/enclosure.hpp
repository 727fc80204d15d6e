#pragma once

#include "cgstat/rational.hpp"
#include "cgstat/series.hpp"

#include <string>
#include <vector>

namespace cgstat::qs {

// lo <= value <= hi. Rigorous enclosures come from outward-rounded
// interval arithmetic; series-based estimates are flagged non-rigorous.
struct Enclosure {
  double lo = 0;
  double hi = 0;
  bool rigorous = true;
  int truncation = 0;

  double width() const noexcept { return hi - lo; }
  double mid() const noexcept { return 0.5 * (lo + hi); }
  bool contains(double x) const noexcept { return lo <= x && x <= hi; }
};

enum class LimitTag { GL, SU, SpOdd, SpEven, OHalf };

struct LimitFamily {
  LimitTag tag;
  long long q;
  int t;
};

std::string limit_tag_name(LimitTag tag);
// Accepts gl, su, sp-odd, sp-even, o-half.
LimitTag parse_limit_tag(const std::string& name);
// Throws ArgumentError on parity mismatch, q < 2 or t < 1.
void validate(const LimitFamily& fam);

// Pi_{i>=1} (1 + s_i q^{-(step*i + offset)})^exponent
enum class SignRule { Minus, AlternatingIndex, AlternatingPower };

struct ProductFactor {
  int step;
  int offset;
  SignRule sign;
  Integer exponent;
};

std::vector<ProductFactor> limit_factors(const LimitFamily& fam);

// Enclosure of the infinite product with the first I terms of every factor
// multiplied out and the rest bounded.
Enclosure product_enclosure(long long q, const std::vector<ProductFactor>& factors, int I, bool halve = false);
Enclosure limit_value_at_truncation(const LimitFamily& fam, int I);
Enclosure limit_value(const LimitFamily& fam, double tol = 1e-9);

// Pi_{i>=1}(1 - q^{-ij})^{N(q;j)} and the proof's comparison form
// Pi_{i>=1}(1 - q^{-ij})^{q^j}.
Enclosure gl_factor_enclosure(long long q, int j, double tol = 1e-9);
Enclosure gl_factor_comparison_enclosure(long long q, int j, double tol = 1e-9);

double q_infinity_limit(LimitTag tag, int t);

// Last coefficient with gap |c_N - c_{N-1}|; non-rigorous.
Enclosure limit_from_series(const RationalSeries& s);

struct BoundEntry {
  LimitTag tag;
  long long q;
  int t;
  Enclosure value;
  bool in_unit_interval = false;
  // GL only
  bool below_inv_sqrt_e = true;
  double upper_margin = 0;
  double min_factor_lo = 1;
  double min_comparison_lo = 1;
  bool floor_ok = true;
  bool pass() const noexcept { return in_unit_interval && below_inv_sqrt_e && floor_ok; }
};

struct BoundReport {
  std::vector<BoundEntry> entries;
  double floor_constant;
  double upper_constant;
  bool pass() const noexcept;
};

// Every family limit in (0,1); GL limit <= 1/sqrt(e); every GL per-j factor
// and its comparison form >= e^{-2-2/3}.
BoundReport bound_suite(const std::vector<long long>& qs, const std::vector<int>& ts, double tol = 1e-9);

}  // namespace cgstat::qs
