#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <tuple>
#include <vector>

#include "acm/chern.hpp"
#include "acm/constraints.hpp"
#include "acm/errors.hpp"
#include "acm/extensions.hpp"
#include "acm/report.hpp"
#include "acm/selfcheck.hpp"

namespace py = pybind11;

namespace {

// Arbitrary-precision values cross the boundary as Python ints and Fractions.
acm::Integer to_integer(const py::int_& v) { return acm::parse_integer(py::str(v)); }

py::int_ to_py(const acm::Integer& v) {
  return py::int_(py::reinterpret_steal<py::object>(
      PyLong_FromString(acm::to_string(v).c_str(), nullptr, 10)));
}

py::object to_py(const acm::Rational& q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(q.numerator()), to_py(q.denominator()));
}

using Quad = std::tuple<int, py::int_, py::int_, py::int_>;

acm::BundleInvariants to_inv(const Quad& q) {
  return acm::BundleInvariants(std::get<0>(q), to_integer(std::get<1>(q)),
                               to_integer(std::get<2>(q)), to_integer(std::get<3>(q)));
}

py::tuple to_py(const acm::BundleInvariants& e) {
  return py::make_tuple(e.rank(), to_py(e.c1()), to_py(e.c2()), to_py(e.c3()));
}

acm::Rank2Class to_class(const std::pair<py::int_, py::int_>& c) {
  return {to_integer(c.first), to_integer(c.second)};
}

acm::Pool to_pool(const std::string& name) {
  if (name == "star") return acm::Pool::StarOnly;
  if (name == "normalized") return acm::Pool::Normalized;
  throw acm::InvalidArgument("pool must be 'star' or 'normalized', got '" + name + "'");
}

py::list tags(const std::vector<acm::BoundTag>& ts) {
  py::list out;
  for (auto t : ts) out.append(acm::to_string(t));
  return out;
}

py::dict witness(const acm::ExtensionWitness& w) {
  py::dict d;
  d["left"] = py::make_tuple(to_py(w.left.chern.c1), to_py(w.left.chern.c2));
  d["right"] = py::make_tuple(to_py(w.right.chern.c1), to_py(w.right.chern.c2));
  d["result"] = to_py(w.result);
  d["genus"] = to_py(acm::genus_r4(w.result));
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Chern-class arithmetic for ACM bundles on hypersurfaces in P^4";

  static py::exception<acm::Error> error(m, "AcmError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const acm::Error& e) {
      py::set_error(error, e.what());
    }
  });

  m.def("chi_line_bundle", [](int r, const py::int_& a) {
    return to_py(acm::chi_line_bundle(acm::HypersurfaceContext(r), to_integer(a)));
  }, py::arg("r"), py::arg("a"));

  m.def("chi_bundle", [](int r, const Quad& inv) {
    return to_py(acm::chi_bundle(acm::HypersurfaceContext(r), to_inv(inv)));
  }, py::arg("r"), py::arg("inv"));

  m.def("twist", [](int r, const Quad& inv, const py::int_& n) {
    return to_py(acm::twist(acm::HypersurfaceContext(r), to_inv(inv), to_integer(n)));
  }, py::arg("r"), py::arg("inv"), py::arg("n"));

  m.def("genus_general", [](int r, const Quad& inv) {
    return to_py(acm::genus_general(acm::HypersurfaceContext(r), to_inv(inv)));
  }, py::arg("r"), py::arg("inv"));

  m.def("genus_r4", [](const Quad& inv) { return to_py(acm::genus_r4(to_inv(inv))); },
        py::arg("inv"));

  m.def("c3_from_acm", [](int k, const py::int_& c1, const py::int_& c2) {
    return to_py(acm::c3_from_acm(k, to_integer(c1), to_integer(c2)));
  }, py::arg("k"), py::arg("c1"), py::arg("c2"));

  m.def("genus_from_acm", [](int k, const py::int_& c1, const py::int_& c2) {
    return to_py(acm::genus_from_acm(k, to_integer(c1), to_integer(c2)));
  }, py::arg("k"), py::arg("c1"), py::arg("c2"));

  m.def("c2_interval", [](int k, const py::int_& c1) {
    const auto iv = acm::c2_interval_r4(k, to_integer(c1));
    py::dict d;
    d["lower"] = to_py(iv.lower);
    d["upper"] = to_py(iv.upper);
    d["lower_bound_from"] = tags(iv.lower_tags);
    d["upper_bound_from"] = tags(iv.upper_tags);
    return d;
  }, py::arg("k"), py::arg("c1"));

  m.def("enumerate_acm", [](int k) {
    py::list rows;
    for (const auto& row : acm::enumerate_acm_r4(k)) {
      for (const auto& p : row.points) {
        rows.append(py::make_tuple(k, to_py(row.c1), to_py(p.c2), to_py(p.c3), to_py(p.genus)));
      }
    }
    return rows;
  }, py::arg("k"), "Admissible (k, c1, c2, c3, g) on the quartic threefold.");

  m.def("extend_rank2", [](int r, const std::pair<py::int_, py::int_>& sub,
                           const std::pair<py::int_, py::int_>& quot) {
    return to_py(acm::extend_rank2(acm::HypersurfaceContext(r), to_class(sub), to_class(quot)));
  }, py::arg("r"), py::arg("sub"), py::arg("quotient"));

  m.def("extensions", [](int r, const std::string& pool) {
    py::list out;
    for (const auto& w : acm::extension_quadruples(acm::Catalog::builtin(), r, to_pool(pool))) {
      out.append(witness(w));
    }
    return out;
  }, py::arg("r") = 4, py::arg("pool") = "star");

  m.def("decompose", [](const Quad& target, int r, const std::string& pool) {
    py::list out;
    for (const auto& w :
         acm::decompose(acm::Catalog::builtin(), r, to_inv(target), to_pool(pool))) {
      out.append(witness(w));
    }
    return out;
  }, py::arg("target"), py::arg("r") = 4, py::arg("pool") = "star");

  m.def("coverage", [](int k) {
    py::list out;
    for (const auto& e : acm::coverage_report(acm::Catalog::builtin(), k).entries) {
      py::dict d;
      d["invariants"] = to_py(e.invariants);
      d["genus"] = to_py(e.genus);
      d["status"] = acm::to_string(e.realization);
      d["evidence"] = e.citations;
      out.append(d);
    }
    return out;
  }, py::arg("k"));

  m.def("selfcheck", [] {
    const auto report = acm::run_selfcheck();
    py::list checks;
    for (const auto& c : report.checks) {
      py::dict d;
      d["name"] = c.name;
      d["passed"] = c.passed;
      d["cases"] = c.cases;
      d["detail"] = c.detail;
      checks.append(d);
    }
    return py::make_tuple(report.ok(), checks);
  });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    const auto r = acm::run_cli(args);
    return py::make_tuple(r.exit_code, r.out, r.err);
  }, py::arg("args"), "Runs the acmcalc front end; returns (exit_code, stdout, stderr).");
}
