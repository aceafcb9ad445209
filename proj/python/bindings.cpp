// Python face of the library.  Exact values cross the boundary as decimal
// strings (integers or "p/q" rationals, coefficients as "a" or "a+b*w") so
// nothing is ever rounded; fractions.Fraction reconstitutes them losslessly.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <thread>
#include <vector>

#include "qmf/arith.hpp"
#include "qmf/counting.hpp"
#include "qmf/errors.hpp"
#include "qmf/forms.hpp"
#include "qmf/identity.hpp"
#include "qmf/pf.hpp"
#include "qmf/puiseux.hpp"
#include "qmf/rational.hpp"

namespace py = pybind11;

namespace {

qmf::Rational order_arg(const std::string& text) {
  const qmf::Rational r = qmf::rat_parse(text);
  if (r <= 0) throw std::invalid_argument("order must be positive");
  return r;
}

int jobs_arg(int jobs) {
  if (jobs > 0) return jobs;
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : static_cast<int>(n);
}

py::list expand(const std::string& name, const std::string& order) {
  const qmf::Puiseux s = qmf::eval_form(name, order_arg(order));
  py::list out;
  for (const auto& [e, c] : s.terms())
    out.append(py::make_tuple(qmf::rat_str(e), c.str()));
  return out;
}

py::dict form_info_dict(const std::string& name) {
  const qmf::FormInfo& info = qmf::form_info(name);
  py::dict d;
  d["name"] = info.name;
  d["field"] = info.disc;
  d["weight"] = qmf::rat_str(info.weight);
  d["order"] = qmf::rat_str(info.order);
  d["group"] = info.group;
  d["routes"] = info.route_labels;
  return d;
}

py::list verify(const std::string& suite, const std::string& order, int jobs) {
  auto recs = qmf::load_catalog(qmf::default_catalog_path());
  if (!order.empty()) {
    const qmf::Rational prec = order_arg(order);
    for (auto& r : recs) r.prec = prec;
  }
  std::vector<qmf::VerifyOutcome> outs;
  {
    py::gil_scoped_release release;
    outs = qmf::verify_records(recs, "", suite, jobs_arg(jobs));
  }
  py::list out;
  for (const auto& o : outs) {
    py::dict row;
    row["id"] = o.id;
    row["tier"] = o.tier;
    row["citation"] = o.cite;
    row["pass"] = o.pass;
    row["detail"] = o.detail;
    if (o.mismatch) {
      py::dict ff;
      ff["exponent"] = qmf::rat_str(o.mismatch->expo);
      ff["lhs"] = o.mismatch->lhs.str();
      ff["rhs"] = o.mismatch->rhs.str();
      row["first_failure"] = ff;
    }
    out.append(row);
  }
  return out;
}

py::dict counts(const std::string& kind_name, int s, long max_n) {
  if (kind_name != "squares" && kind_name != "triangles")
    throw std::invalid_argument("kind must be 'squares' or 'triangles'");
  const qmf::TupleKind kind =
      kind_name == "squares" ? qmf::TupleKind::squares : qmf::TupleKind::triangles;
  const auto lattice = qmf::lattice_counts(kind, s, max_n);
  const auto theta = qmf::theta_counts(kind, s, max_n);
  const auto& formulas = qmf::count_formulas(kind, s);
  const long start = kind == qmf::TupleKind::squares ? 1 : 0;

  py::list labels, rows;
  for (const auto& f : formulas) labels.append(f.label);
  for (long n = 0; n <= max_n; ++n) {
    py::dict row;
    row["n"] = n;
    row["lattice"] = lattice[n].get_str();
    row["theta"] = qmf::rat_str(theta[n]);
    bool ok = qmf::Rational(lattice[n]) == theta[n];
    py::list vals;
    for (const auto& f : formulas) {
      if (n < start) {
        vals.append(py::none());
        continue;
      }
      const qmf::Rational v = f.value(n);
      ok = ok && v == theta[n];
      vals.append(qmf::rat_str(v));
    }
    row["formulas"] = vals;
    row["agree"] = ok;
    rows.append(row);
  }
  py::dict out;
  out["kind"] = kind_name;
  out["s"] = s;
  out["labels"] = labels;
  out["rows"] = rows;
  return out;
}

py::list pf_check(long samples, unsigned long long seed, int jobs) {
  std::vector<qmf::FamilyReport> reports;
  {
    py::gil_scoped_release release;
    reports = qmf::verify_theorem_general(samples, seed, jobs_arg(jobs));
  }
  py::list out;
  for (const auto& r : reports) {
    py::dict row;
    row["family"] = r.family;
    row["checked"] = r.checked;
    row["failures"] = r.failures;
    out.append(row);
  }
  return out;
}

py::list crosscheck(const std::string& order) {
  const qmf::Rational prec = order_arg(order);
  std::vector<qmf::CrosscheckResult> results;
  {
    py::gil_scoped_release release;
    results = qmf::registry_crosschecks(prec);
  }
  py::list out;
  for (const auto& r : results) {
    py::dict row;
    row["form"] = r.form;
    row["route_a"] = r.route_a;
    row["route_b"] = r.route_b;
    row["pass"] = r.pass;
    if (!r.pass) row["detail"] = r.detail;
    out.append(row);
  }
  return out;
}

std::string sigma(long n, long k, const std::vector<long>& weights, bool conj) {
  qmf::WeightVector w;
  w.reserve(weights.size());
  for (long v : weights) w.push_back(qmf::Rational(v));
  return qmf::rat_str(conj ? qmf::sigma_weighted_conj(n, k, w) : qmf::sigma_weighted(n, k, w));
}

}  // namespace

PYBIND11_MODULE(_qmf, m) {
  m.doc() =
      "Exact q-series and modular-form identity toolkit.  All exact values "
      "are returned as strings; use fractions.Fraction to compute with them.";

  py::register_exception<qmf::UnknownFormError>(m, "UnknownFormError", PyExc_KeyError);
  py::register_exception<qmf::CatalogError>(m, "CatalogError", PyExc_ValueError);

  m.def("form_names", &qmf::form_names, "Sorted names of every registered form.");
  m.def("form_info", &form_info_dict, py::arg("name"),
        "Declared field, weight, leading order, group, and construction routes.");
  m.def("expand", &expand, py::arg("name"), py::arg("order") = "16",
        "q-expansion as (exponent, coefficient) string pairs, ascending.");
  m.def("verify", &verify, py::arg("suite") = "", py::arg("order") = "", py::arg("jobs") = 0,
        "Verify catalog identities whose id matches the glob; order overrides "
        "the per-record comparison precision.");
  m.def("counts", &counts, py::arg("kind"), py::arg("s") = 1, py::arg("max_n") = 50,
        "Representation counts three ways: lattice walk, theta power, divisor "
        "formulas (None where a formula starts at n = 1).");
  m.def("pf_check", &pf_check, py::arg("samples") = 100, py::arg("seed") = 7,
        py::arg("jobs") = 0,
        "Verify the hat-ladder polynomial families; returns per-family reports.");
  m.def("crosscheck", &crosscheck, py::arg("order") = "30",
        "Compare every alternate construction route against the primary one.");
  m.def("sigma", &sigma, py::arg("n"), py::arg("k"), py::arg("weights"),
        py::arg("conj") = false,
        "Weighted divisor sum with weights indexed by d mod len(weights) "
        "(conj indexes by (n/d) instead).");
}
