#include "cgstat/cli.hpp"

#include "cgstat/enclosure.hpp"
#include "cgstat/errors.hpp"
#include "cgstat/series.hpp"
#include "cgstat/stats.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#ifndef CGSTAT_VERSION
#define CGSTAT_VERSION "0"
#endif

#ifndef CGSTAT_PRESETS_FILE
#define CGSTAT_PRESETS_FILE "presets/choice.json"
#endif

namespace cgstat::cli {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::string rat(const Rational& r) { return r.get_str(); }

// mpq get_d truncates; round to nearest instead.
double nearest_double(const Rational& r) {
  const double d = r.get_d();
  const double up = std::nextafter(d, d < 0 ? -HUGE_VAL : HUGE_VAL);
  return abs(Rational(up) - r) < abs(Rational(d) - r) ? up : d;
}

std::string fmt(double x) {
  std::ostringstream s;
  s << std::setprecision(17) << x;
  return s.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string r = "\"";
  for (char c : s) {
    if (c == '"') r += '"';
    r += c;
  }
  return r + "\"";
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string str() const {
    std::ostringstream s;
    for (std::size_t i = 0; i < header.size(); ++i) s << (i ? "," : "") << csv_field(header[i]);
    s << "\n";
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i) s << (i ? "," : "") << csv_field(r[i]);
      s << "\n";
    }
    return s.str();
  }
};

struct Output {
  ordered_json doc;
  Table table;
  bool pass = true;
  std::vector<std::string> failures;
};

ordered_json envelope(const RunConfig& c) {
  ordered_json j;
  j["schema"] = kSchema;
  j["version"] = CGSTAT_VERSION;
  j["config"] = config_json(c);
  return j;
}

ordered_json enclosure_json(const qs::Enclosure& e) {
  return {{"lo", e.lo}, {"hi", e.hi}, {"mid", e.mid()}, {"rigorous", e.rigorous}, {"truncation", e.truncation}};
}

ordered_json interval_json(const stats::Interval& i) { return {{"lo", i.lo}, {"hi", i.hi}, {"level", 0.99}}; }

void require_seed(const RunConfig& c, const std::string& what) {
  if (!c.seed) throw ArgumentError(what + " is stochastic and needs --seed");
}

Output cmd_limit(const RunConfig& c) {
  const qs::LimitFamily fam{qs::parse_limit_tag(c.family), c.q, c.t == 0 ? 1 : c.t};
  qs::validate(fam);
  const qs::Enclosure e = qs::limit_value(fam, c.tol);
  const double qinf = qs::q_infinity_limit(fam.tag, fam.t);
  Output o;
  o.doc = envelope(c);
  o.doc["family"] = qs::limit_tag_name(fam.tag);
  o.doc["q"] = fam.q;
  o.doc["t"] = fam.t;
  o.doc["enclosure"] = enclosure_json(e);
  o.doc["q_infinity"] = qinf;
  o.table.header = {"family", "q", "t", "lo", "hi", "truncation", "rigorous", "q_infinity"};
  o.table.rows.push_back({qs::limit_tag_name(fam.tag), std::to_string(fam.q), std::to_string(fam.t), fmt(e.lo),
                          fmt(e.hi), std::to_string(e.truncation), e.rigorous ? "true" : "false", fmt(qinf)});
  return o;
}

Output cmd_series(const RunConfig& c) {
  if (c.family != "gl" && c.family != "sl") throw ArgumentError("series supports the gl and sl families");
  if (c.order < 1 || c.order > 400) throw ArgumentError("--order must be in [1, 400]");
  const int t = c.t == 0 ? 1 : c.t;
  const bool coset = c.family == "sl" || c.coset >= 0;
  const qs::RationalSeries s =
      coset ? qs::sl_coset_series(c.q, t, std::max(c.coset, 0), c.order) : qs::gl_no_small_factor_series(c.q, t, c.order);
  const auto coeffs = qs::to_strings(s);
  Output o;
  o.doc = envelope(c);
  o.doc["coefficients"] = coeffs;
  o.doc["tail_estimate"] = enclosure_json(qs::limit_from_series(s));
  o.table.header = {"n", "coefficient"};
  for (std::size_t n = 0; n < coeffs.size(); ++n) o.table.rows.push_back({std::to_string(n), coeffs[n]});
  return o;
}

std::string base_family(const std::string& f) { return f == "gl-tau" ? "gl" : f; }

Output cmd_enumerate(const RunConfig& c) {
  if (c.n < 1 || c.q < 2) throw ArgumentError("enumerate needs --n and --q");
  const stats::Method method = stats::parse_method(c.method);
  Output o;
  o.doc = envelope(c);
  o.table.header = {"key", "value"};
  std::shared_ptr<const mg::GroupTable> G;
  mg::GroupSpec spec;
  if (method != stats::Method::Enumeration) {
    // Only linear families run without a table; n may exceed the table limit.
    if (c.family != "gl" && c.family != "sl" && c.family != "gl-tau")
      throw ArgumentError("series and montecarlo methods support gl, sl and gl-tau");
    if (!ff::is_prime_power(c.q)) throw ArgumentError("q must be a prime power");
    Integer order = 1;
    for (int i = 0; i < c.n; ++i) order *= ipow(c.q, c.n) - ipow(c.q, i);
    const std::string name = "gl(" + std::to_string(c.n) + "," + std::to_string(c.q) + ")";
    o.doc["group"] = name;
    o.doc["order"] = order.get_str();
    o.table.rows.push_back({"group", name});
  } else {
    spec = mg::parse_group(base_family(c.family), c.n, c.q);
    o.doc["group"] = mg::group_name(spec);
    o.doc["order"] = mg::group_order(spec.family, c.n, c.q).get_str();
    o.table.rows.push_back({"group", mg::group_name(spec)});
    G = mg::group(spec);
    o.doc["elements"] = G->size();
    o.doc["generators"] = G->generators().size();
    o.table.rows.push_back({"elements", std::to_string(G->size())});
  }
  if (c.t > 0) {
    stats::ProportionQuery pq;
    pq.family = c.family;
    pq.n = c.n;
    pq.q = c.q;
    pq.t = c.t;
    pq.coset = c.coset;
    pq.method = method;
    pq.samples = c.samples;
    if (method == stats::Method::MonteCarlo) {
      require_seed(c, "the montecarlo method");
      pq.seed = *c.seed;
    }
    const stats::ProportionReport r = stats::proportion(pq);
    ordered_json p;
    p["method"] = stats::method_name(method);
    p["exact"] = r.exact;
    if (r.exact) {
      p["value"] = rat(r.value);
      p["decimal"] = nearest_double(r.value);
      if (r.normalizer) {
        p["subset_size"] = r.subset_size;
        p["normalizer"] = r.normalizer;
      }
      o.table.rows.push_back({"proportion", rat(r.value)});
    } else {
      p["estimate"] = r.estimate;
      p["hits"] = r.hits;
      p["samples"] = r.samples;
      p["ci"] = interval_json(r.ci);
      o.table.rows.push_back({"hits", std::to_string(r.hits)});
      o.table.rows.push_back({"samples", std::to_string(r.samples)});
    }
    o.doc["proportion"] = p;
  }
  if (!c.action.empty()) {
    if (!G) throw ArgumentError("--action needs the enumeration method");
    auto amb = mg::group({spec.family, c.n, c.q, false});
    const mg::Action A(amb->space(), amb->form(), mg::parse_action(c.action));
    const bool tau = c.tau || c.family == "gl-tau";
    const int label = c.family == "sl" || c.family == "su" ? std::max(c.coset, 0) : c.coset;
    const stats::ExpectationReport e = stats::coset_average_fixed_points(*amb, tau ? -1 : label, A, tau);
    ordered_json x;
    x["action"] = e.action;
    x["points"] = e.points;
    x["coset_size"] = e.subset_size;
    x["coset_average"] = rat(e.value);
    x["kernel_transitive"] = e.transitive;
    if (!e.per_orbit.empty()) {
      std::vector<std::string> po;
      for (const auto& v : e.per_orbit) po.push_back(rat(v));
      x["per_orbit"] = po;
    }
    o.table.rows.push_back({"coset_average", rat(e.value)});
    if (c.t > 0 && !tau) {
      std::vector<std::uint32_t> subset;
      const auto f = spec.family;
      if (f == mg::Family::OPlus || f == mg::Family::OMinus || f == mg::Family::OOdd)
        subset = mg::orthogonal_set(*amb, c.t, c.coset == 1 ? mg::OrthSet::O : mg::OrthSet::S);
      else
        subset = mg::no_small_factor_set(*amb, c.t, f == mg::Family::Sp ? -1 : label);
      if (!subset.empty()) {
        const stats::ExpectationReport s = stats::subset_expectation(*amb, subset, A);
        x["subset_size"] = s.subset_size;
        x["subset_average"] = rat(s.value);
        o.table.rows.push_back({"subset_average", rat(s.value)});
      }
    }
    o.doc["expectation"] = x;
  }
  return o;
}

struct Check {
  std::string name;
  bool pass = false;
  std::string lhs, rhs, detail;
};

std::vector<Check> suite_exactness(const RunConfig& c) {
  const int n = c.n ? c.n : 3, q = c.q ? c.q : 2, t = c.t ? c.t : 1;
  std::vector<Check> out;
  stats::ProportionQuery pq;
  pq.family = "gl";
  pq.n = n;
  pq.q = q;
  pq.t = t;
  const Rational e = stats::proportion(pq).value;
  const Rational s = qs::gl_no_small_factor_series(q, t, n)[n];
  out.push_back({"gl enumeration = series", e == s, rat(e), rat(s), ""});
  for (int mu = 0; mu < q - 1; ++mu) {
    pq.family = "sl";
    pq.coset = mu;
    const Rational ce = stats::proportion(pq).value;
    const Rational cs = qs::sl_coset_series(q, t, mu, n)[n];
    out.push_back({"coset " + std::to_string(mu) + " enumeration = series", ce == cs, rat(ce), rat(cs), ""});
  }
  return out;
}

std::vector<Check> suite_bounds(const RunConfig& c) {
  std::vector<long long> qs_ = {2, 3, 4, 5, 7, 8, 9};
  if (c.q) qs_ = {c.q};
  std::vector<int> ts = {1, 2, 3, 4};
  if (c.t) ts = {c.t};
  const qs::BoundReport r = qs::bound_suite(qs_, ts, c.tol);
  std::vector<Check> out;
  for (const auto& e : r.entries) {
    out.push_back({qs::limit_tag_name(e.tag) + " q=" + std::to_string(e.q) + " t=" + std::to_string(e.t), e.pass(),
                   fmt(e.value.lo), fmt(e.value.hi),
                   e.tag == qs::LimitTag::GL ? "min factor " + fmt(e.min_factor_lo) + ", comparison " + fmt(e.min_comparison_lo)
                                             : ""});
  }
  return out;
}

std::vector<Check> suite_identities(const RunConfig& c) {
  const int q = c.q ? c.q : 3;
  const int D = c.order;
  if (D < 1 || D > 12) throw ArgumentError("--order must be in [1, 12] for identities");
  std::vector<Check> out;
  out.push_back({"linear product identity q=" + std::to_string(q) + " D=" + std::to_string(D), qs::linear_identity_check(q, D), "", "", ""});
  out.push_back({"unitary product identity q=" + std::to_string(q) + " D=" + std::to_string(D), qs::unitary_identity_check(q, D), "", "", ""});
  if (c.n >= 5) {
    const int eps = c.n % 2 ? 0 : (c.eps == 0 ? 1 : c.eps);
    const stats::IdentityCheck r = stats::orthogonal_reflection_identity_check(c.n, q, eps, c.t ? c.t : 1);
    out.push_back({"orthogonal reflection identity", r.holds, rat(r.lhs), rat(r.rhs), r.detail});
  }
  return out;
}

std::vector<Check> suite_inverse_transpose(const RunConfig& c) {
  const int n = c.n ? c.n : 4, q = c.q ? c.q : 2, t = c.t ? c.t : 1;
  const stats::IdentityCheck r = stats::inverse_transpose_identity_check(n, q, t);
  return {{"inverse-transpose n=" + std::to_string(n) + " q=" + std::to_string(q) + " t=" + std::to_string(t), r.holds,
           rat(r.lhs), rat(r.rhs), r.detail}};
}

std::vector<Check> suite_expectation(const RunConfig& c) {
  const int n = c.n ? c.n : 3, q = c.q ? c.q : 3, t = c.t ? c.t : 1;
  auto G = mg::group({mg::Family::GL, n, q, false});
  std::vector<std::string> actions;
  for (int k = 1; 2 * k <= n; ++k) actions.push_back("subspace:" + std::to_string(k));
  if (n >= 3) {
    actions.push_back("flag:1");
    actions.push_back("antiflag:1");
  }
  std::vector<Check> out;
  for (const auto& a : actions) {
    const mg::Action A(G->space(), G->form(), mg::parse_action(a));
    for (int mu = 0; mu < G->label_count(); ++mu) {
      const auto r = stats::coset_average_fixed_points(*G, mu, A);
      out.push_back({a + " coset " + std::to_string(mu) + " average", r.value == 1 && r.transitive, rat(r.value), "1", ""});
    }
  }
  const auto subset = mg::no_small_factor_set(*G, t);
  if (!subset.empty() && n >= 3) {
    const mg::Action A(G->space(), G->form(), mg::parse_action("flag:1"));
    const std::uint32_t stride = std::max<std::uint32_t>(1, static_cast<std::uint32_t>(G->size() / 25));
    for (std::uint32_t i = 1; i < G->size(); i += stride) {
      const auto r = stats::expectation_inequality(*G, subset, A, G->element(i));
      out.push_back({"inequality flag:1 x=" + std::to_string(i), r.holds, rat(r.lhs), rat(r.rhs), ""});
    }
  }
  return out;
}

std::vector<Check> suite_fpr(const RunConfig& c) {
  const int n = c.n ? c.n : 4, q = c.q ? c.q : 2;
  auto G = mg::group({mg::Family::GL, n, q, false});
  std::vector<Check> out;
  for (const auto& r : stats::fpr_bound_check(*G, n >= 3)) {
    out.push_back({r.action + (r.tau ? "+tau " : " ") + r.bound_name, r.violations == 0, rat(r.max_fpr), rat(r.bound),
                   std::to_string(r.elements) + " elements, " + std::to_string(r.violations) + " violations"});
  }
  return out;
}

std::vector<Check> suite_symmetric(const RunConfig& c) {
  const int nmax = c.n ? std::min(c.n, 9) : 8;
  std::vector<Check> out;
  for (int n = 1; n <= nmax; ++n)
    for (int t = 1; t <= 3; ++t) {
      const Rational a = stats::symmetric_a(n, t), b = stats::symmetric_a_brute(n, t);
      out.push_back({"a_" + std::to_string(n) + "(" + std::to_string(t) + ")", a == b, rat(a), rat(b), ""});
    }
  return out;
}

Output cmd_verify(const RunConfig& c) {
  std::vector<Check> checks;
  if (c.suite == "exactness-bridge") checks = suite_exactness(c);
  else if (c.suite == "bounds") checks = suite_bounds(c);
  else if (c.suite == "identities") checks = suite_identities(c);
  else if (c.suite == "expectation") checks = suite_expectation(c);
  else if (c.suite == "fpr") checks = suite_fpr(c);
  else if (c.suite == "inverse-transpose") checks = suite_inverse_transpose(c);
  else if (c.suite == "symmetric") checks = suite_symmetric(c);
  else throw ArgumentError("unknown suite '" + c.suite + "'");
  Output o;
  o.doc = envelope(c);
  o.doc["suite"] = c.suite;
  ordered_json arr = ordered_json::array();
  o.table.header = {"check", "pass", "lhs", "rhs", "detail"};
  for (const auto& k : checks) {
    arr.push_back({{"check", k.name}, {"pass", k.pass}, {"lhs", k.lhs}, {"rhs", k.rhs}, {"detail", k.detail}});
    o.table.rows.push_back({k.name, k.pass ? "PASS" : "FAIL", k.lhs, k.rhs, k.detail});
    if (!k.pass) {
      o.pass = false;
      o.failures.push_back(k.name + ": lhs " + k.lhs + ", rhs " + k.rhs + (k.detail.empty() ? "" : " (" + k.detail + ")"));
    }
  }
  o.doc["checks"] = arr;
  o.doc["pass"] = o.pass;
  return o;
}

Output cmd_probe(const RunConfig& c) {
  if (c.samples > 0) require_seed(c, "probe with --trials > 0");
  const mg::CayleyGroup G = mg::small_group(c.group.empty() ? "psl2(7)" : c.group);
  const stats::ProbeReport r = stats::generation_probe(G, c.samples, c.seed.value_or(0));
  Output o;
  o.doc = envelope(c);
  o.doc["group"] = r.group;
  o.doc["order"] = r.order;
  o.doc["three_halves"] = r.three_halves;
  ordered_json arr = ordered_json::array();
  o.table.header = {"representative", "order", "class_size", "exact", "hits", "trials"};
  for (const auto& k : r.classes) {
    ordered_json e = {{"representative", k.representative}, {"order", k.order}, {"class_size", k.class_size},
                      {"exact", rat(k.exact)}, {"has_partner", k.has_partner}};
    if (k.trials) {
      e["hits"] = k.hits;
      e["trials"] = k.trials;
      e["ci"] = interval_json(k.ci);
    }
    arr.push_back(e);
    o.table.rows.push_back({std::to_string(k.representative), std::to_string(k.order), std::to_string(k.class_size),
                            rat(k.exact), std::to_string(k.hits), std::to_string(k.trials)});
  }
  o.doc["classes"] = arr;
  return o;
}

}  // namespace

nlohmann::json config_json(const RunConfig& c) {
  json j;
  j["command"] = c.command;
  if (!c.family.empty()) j["family"] = c.family;
  if (c.n) j["n"] = c.n;
  if (c.q) j["q"] = c.q;
  if (c.t) j["t"] = c.t;
  if (c.coset >= 0) j["coset"] = c.coset;
  if (c.command == "enumerate") j["method"] = c.method;
  if (c.command == "enumerate" || c.command == "probe") j["samples"] = c.samples;
  if (c.seed) j["seed"] = *c.seed;
  if (c.command == "series" || c.command == "verify") j["order"] = c.order;
  if (c.command == "limit" || c.command == "verify") j["tol"] = c.tol;
  if (!c.suite.empty()) j["suite"] = c.suite;
  if (!c.action.empty()) j["action"] = c.action;
  if (c.tau) j["tau"] = true;
  if (c.eps) j["eps"] = c.eps;
  if (!c.group.empty()) j["group"] = c.group;
  if (!c.preset.empty()) j["preset"] = c.preset;
  j["format"] = c.format;
  return j;
}

void apply_preset(RunConfig& c, const std::string& file, const std::string& name, const std::vector<std::string>& given) {
  std::ifstream in(file);
  if (!in) throw ArgumentError("cannot open preset file '" + file + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw ArgumentError(std::string("bad preset file: ") + e.what());
  }
  if (!doc.contains("presets") || !doc["presets"].contains(name)) throw ArgumentError("unknown preset '" + name + "'");
  const json& p = doc["presets"][name];
  auto is_given = [&](const char* f) { return std::find(given.begin(), given.end(), f) != given.end(); };
  if (p.contains("family") && !is_given("family")) c.family = p["family"].get<std::string>();
  if (p.contains("q") && !is_given("q")) c.q = p["q"].get<int>();
  if (p.contains("t") && !is_given("t")) c.t = p["t"].get<int>();
  if (p.contains("coset") && !is_given("coset")) c.coset = p["coset"].get<int>();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  c.presets_file = CGSTAT_PRESETS_FILE;
  std::uint64_t seed = 0;
  CLI::App app{"Statistics of finite classical groups: limits, series, enumerations and checks", "cgstat"};
  app.set_version_flag("--version", CGSTAT_VERSION);
  app.require_subcommand(1);
  std::vector<std::string> given;

  auto common = [&](CLI::App* s) {
    s->add_option("--output,-o", c.output, "Write the report here instead of stdout");
    s->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  };
  auto grp = [&](CLI::App* s) {
    s->add_option("--family", c.family, "Family name");
    s->add_option("--n", c.n, "Dimension");
    s->add_option("--q", c.q, "Field size");
    s->add_option("--t", c.t, "Largest forbidden factor degree");
    s->add_option("--coset", c.coset, "Coset label");
    s->add_option("--preset", c.preset, "Named preset from the presets file");
    s->add_option("--presets-file", c.presets_file, "Preset file");
  };

  auto* lim = app.add_subcommand("limit", "Enclosure of the n -> infinity limit");
  lim->add_option("--family", c.family, "gl, su, sp-odd, sp-even or o-half")->required();
  lim->add_option("--q", c.q, "Field size")->required();
  lim->add_option("--t", c.t, "Largest forbidden factor degree");
  lim->add_option("--tol", c.tol, "Enclosure width target");
  common(lim);

  auto* ser = app.add_subcommand("series", "Exact generating-function coefficients");
  grp(ser);
  ser->add_option("--order", c.order, "Truncation order N");
  common(ser);

  auto* en = app.add_subcommand("enumerate", "Build a group and count a subset or fixed points");
  grp(en);
  en->add_option("--method", c.method, "enumeration, series or montecarlo");
  en->add_option("--samples,--trials", c.samples, "Monte Carlo sample count");
  auto* seed_opt_en = en->add_option("--seed", seed, "Random seed");
  en->add_option("--action", c.action, "Action for fixed-point averages");
  en->add_flag("--tau", c.tau, "Compose with the inverse-transpose automorphism");
  common(en);

  auto* ver = app.add_subcommand("verify", "Run a named check suite");
  ver->add_option("--suite", c.suite, "exactness-bridge, bounds, identities, expectation, fpr, inverse-transpose, symmetric")
      ->required();
  grp(ver);
  ver->add_option("--order", c.order, "Degree bound for product identities");
  ver->add_option("--eps", c.eps, "Orthogonal type +1 or -1");
  ver->add_option("--tol", c.tol, "Enclosure width target");
  common(ver);

  auto* pr = app.add_subcommand("probe", "Generation probe on a small simple group");
  pr->add_option("--group", c.group, "psl2(p) or psl3(2)");
  auto* trials_opt = pr->add_option("--trials,--samples", c.samples, "Monte Carlo trials per class (0: exact only)");
  auto* seed_opt_pr = pr->add_option("--seed", seed, "Random seed");
  common(pr);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  c.command = sub->get_name();
  if (seed_opt_en->count() || seed_opt_pr->count()) c.seed = seed;
  if (c.command == "probe" && !trials_opt->count()) c.samples = 0;
  for (const char* f : {"family", "q", "t", "coset"})
    if (sub->get_option_no_throw(std::string("--") + f) && sub->get_option(std::string("--") + f)->count()) given.push_back(f);
  if (c.format.empty()) c.format = c.command == "series" ? "csv" : "json";

  Output o;
  try {
    if (!c.preset.empty()) apply_preset(c, c.presets_file, c.preset, given);
    if (c.command == "limit") o = cmd_limit(c);
    else if (c.command == "series") o = cmd_series(c);
    else if (c.command == "enumerate") o = cmd_enumerate(c);
    else if (c.command == "verify") o = cmd_verify(c);
    else o = cmd_probe(c);
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::bad_alloc&) {
    err << "resource limit: out of memory\n";
    return kResource;
  } catch (const std::exception& e) {
    err << "internal check failed: " << e.what() << "\n";
    return kAssertionFailed;
  }

  const std::string text = c.format == "csv" ? o.table.str() : o.doc.dump(2) + "\n";
  if (c.output.empty()) {
    out << text;
  } else {
    std::ofstream f(c.output, std::ios::binary);
    if (!f) {
      err << "error: cannot write '" << c.output << "'\n";
      return kUsage;
    }
    f << text;
  }
  if (!o.pass) {
    for (const auto& s : o.failures) err << "FAIL " << s << "\n";
    return kAssertionFailed;
  }
  return kPass;
}

}  // namespace cgstat::cli
