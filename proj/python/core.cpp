#include "cgstat/cli.hpp"
#include "cgstat/enclosure.hpp"
#include "cgstat/series.hpp"
#include "cgstat/stats.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace cgstat;

namespace {

// Rationals and big integers cross as strings; the package wraps them.
std::vector<std::string> strings(const qs::RationalSeries& s) { return qs::to_strings(s); }

py::dict enclosure(const qs::Enclosure& e) {
  py::dict d;
  d["lo"] = e.lo;
  d["hi"] = e.hi;
  d["rigorous"] = e.rigorous;
  d["truncation"] = e.truncation;
  return d;
}

py::dict mc(const stats::McResult& r) {
  py::dict d;
  d["hits"] = r.hits;
  d["samples"] = r.samples;
  d["estimate"] = r.estimate();
  d["ci"] = py::make_tuple(r.ci().lo, r.ci().hi);
  return d;
}

py::dict identity(const stats::IdentityCheck& c) {
  py::dict d;
  d["lhs"] = c.lhs.get_str();
  d["rhs"] = c.rhs.get_str();
  d["holds"] = c.holds;
  d["detail"] = c.detail;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact and Monte Carlo statistics of finite classical groups.";
  m.attr("__version__") = CGSTAT_VERSION;

  static py::exception<ArgumentError> arg_exc(m, "ArgumentError", PyExc_ValueError);
  static py::exception<ResourceError> res_exc(m, "ResourceError", PyExc_MemoryError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ArgumentError& e) {
      arg_exc(e.what());
    } catch (const ResourceError& e) {
      res_exc(e.what());
    } catch (const DomainError& e) {
      PyErr_SetString(PyExc_ArithmeticError, e.what());
    }
  });

  m.def(
      "limit",
      [](const std::string& family, long long q, int t, double tol) {
        return enclosure(qs::limit_value({qs::parse_limit_tag(family), q, t}, tol));
      },
      py::arg("family"), py::arg("q"), py::arg("t") = 1, py::arg("tol") = 1e-9);
  m.def("q_infinity", [](const std::string& family, int t) { return qs::q_infinity_limit(qs::parse_limit_tag(family), t); },
        py::arg("family"), py::arg("t") = 1);
  m.def("gl_series", [](long long q, int t, int order) { return strings(qs::gl_no_small_factor_series(q, t, order)); },
        py::arg("q"), py::arg("t"), py::arg("order"));
  m.def("sl_coset_series", [](int q, int t, int mu, int order) { return strings(qs::sl_coset_series(q, t, mu, order)); },
        py::arg("q"), py::arg("t"), py::arg("mu"), py::arg("order"));

  m.def(
      "proportion",
      [](const std::string& family, int n, int q, int t, int coset, const std::string& method, long long samples,
         std::uint64_t seed) {
        stats::ProportionQuery pq;
        pq.family = family;
        pq.n = n;
        pq.q = q;
        pq.t = t;
        pq.coset = coset;
        pq.method = stats::parse_method(method);
        pq.samples = samples;
        pq.seed = seed;
        stats::ProportionReport r;
        {
          py::gil_scoped_release release;
          r = stats::proportion(pq);
        }
        py::dict d;
        d["exact"] = r.exact;
        if (r.exact) {
          d["value"] = r.value.get_str();
        } else {
          d["hits"] = r.hits;
          d["samples"] = r.samples;
          d["estimate"] = r.estimate;
          d["ci"] = py::make_tuple(r.ci.lo, r.ci.hi);
        }
        return d;
      },
      py::arg("family"), py::arg("n"), py::arg("q"), py::arg("t") = 1, py::arg("coset") = -1,
      py::arg("method") = "enumeration", py::arg("samples") = 100000, py::arg("seed") = 1);
  m.def(
      "monte_carlo",
      [](const std::string& family, int n, int q, int t, int coset, long long samples, std::uint64_t seed) {
        stats::McResult r;
        {
          py::gil_scoped_release release;
          r = stats::monte_carlo_linear(family, n, q, t, coset, samples, seed);
        }
        return mc(r);
      },
      py::arg("family"), py::arg("n"), py::arg("q"), py::arg("t") = 1, py::arg("coset") = -1, py::arg("samples") = 100000,
      py::arg("seed") = 1);

  m.def("group_order", [](const std::string& family, int n, int q) {
    const auto spec = mg::parse_group(family, n, q);
    return mg::group_order(spec.family, n, q).get_str();
  });
  m.def(
      "coset_average",
      [](const std::string& family, int n, int q, const std::string& action, int label, bool tau) {
        auto G = mg::group(mg::parse_group(family, n, q));
        const mg::Action A(G->space(), G->form(), mg::parse_action(action));
        return stats::coset_average_fixed_points(*G, label, A, tau).value.get_str();
      },
      py::arg("family"), py::arg("n"), py::arg("q"), py::arg("action"), py::arg("label") = -1, py::arg("tau") = false);

  m.def("symmetric_a", [](int n, int t) { return stats::symmetric_a(n, t).get_str(); });
  m.def("symmetric_expectation", [](int n, int k, int t) { return stats::symmetric_expectation(n, k, t).get_str(); });
  m.def("derangements", [](int n) { return stats::derangements(n).get_str(); });
  m.def("weyl_exact", [](int m_) { return stats::weyl_exact(m_).get_str(); });
  m.def("weyl_monte_carlo", [](int m_, long long trials, std::uint64_t seed) { return mc(stats::weyl_monte_carlo(m_, trials, seed)); });

  m.def("inverse_transpose_identity", [](int n, int q, int t) { return identity(stats::inverse_transpose_identity_check(n, q, t)); });
  m.def("orthogonal_reflection_identity",
        [](int n, int q, int eps, int t) { return identity(stats::orthogonal_reflection_identity_check(n, q, eps, t)); });

  m.def(
      "generation_probe",
      [](const std::string& name, long long trials, std::uint64_t seed) {
        const stats::ProbeReport r = stats::generation_probe(mg::small_group(name), trials, seed);
        py::list classes;
        for (const auto& c : r.classes) {
          py::dict d;
          d["order"] = c.order;
          d["class_size"] = c.class_size;
          d["exact"] = c.exact.get_str();
          d["has_partner"] = c.has_partner;
          classes.append(d);
        }
        py::dict d;
        d["group"] = r.group;
        d["order"] = r.order;
        d["three_halves"] = r.three_halves;
        d["classes"] = classes;
        return d;
      },
      py::arg("name"), py::arg("trials") = 0, py::arg("seed") = 1);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
