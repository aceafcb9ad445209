// Command-line front end over the library: expansion printing, catalog
// verification, representation counting, hat-ladder family checks, and
// registry crosschecks.
//
// Output discipline: everything is plain ASCII, and json reports contain
// no timing or other run-dependent data, so a given invocation is
// byte-identical across runs and job counts.  Exit codes: 0 success,
// 1 verification failure or internal error, 2 unknown form, 3 catalog
// parse error.

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qmf/counting.hpp"
#include "qmf/errors.hpp"
#include "qmf/forms.hpp"
#include "qmf/identity.hpp"
#include "qmf/pf.hpp"
#include "qmf/puiseux.hpp"
#include "qmf/rational.hpp"

using nlohmann::json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUnknownForm = 2;
constexpr int kExitCatalog = 3;

int default_jobs() {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : static_cast<int>(n);
}

qmf::Rational parse_order(const std::string& text) {
  const qmf::Rational r = qmf::rat_parse(text);
  if (r <= 0) throw std::invalid_argument("order must be positive");
  return r;
}

std::string ms_str(double seconds) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(1) << seconds * 1e3 << " ms";
  return os.str();
}

int cmd_expand(const std::string& name, const qmf::Rational& order, int field, bool field_given,
               const std::string& format) {
  if (!qmf::has_form(name)) {
    std::cerr << "unknown form: " << name << " (see README or form_names())\n";
    return kExitUnknownForm;
  }
  const qmf::FormInfo& info = qmf::form_info(name);
  int d = info.disc;
  if (field_given) {
    if (d != 0 && field != d) {
      std::cerr << "form " << name << " has coefficients in d = " << d
                << "; cannot present in d = " << field << "\n";
      return kExitFail;
    }
    d = field;
  }
  const qmf::Puiseux s = qmf::eval_form(name, order);
  const auto terms = s.terms();
  if (format == "json") {
    json out;
    out["form"] = name;
    out["field"] = d;
    out["order"] = qmf::rat_str(order);
    json rows = json::array();
    for (const auto& [e, c] : terms)
      rows.push_back(json{{"exponent", qmf::rat_str(e)}, {"coefficient", c.str()}});
    out["terms"] = std::move(rows);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "form " << name << "  field d = " << d << "  order < " << qmf::rat_str(order)
              << "\n";
    for (const auto& [e, c] : terms)
      std::cout << "q^(" << qmf::rat_str(e) << ")\t" << c.str() << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& suite, bool order_given, const qmf::Rational& order,
               const std::string& format, int jobs) {
  std::vector<qmf::CatalogRecord> recs;
  try {
    recs = qmf::load_catalog(qmf::default_catalog_path());
  } catch (const qmf::CatalogError& err) {
    std::cerr << "catalog error: " << err.what() << "\n";
    return kExitCatalog;
  }
  if (order_given)
    for (auto& r : recs) r.prec = order;
  auto outs = qmf::verify_records(recs, "", suite, jobs);
  if (outs.empty()) std::cerr << "warning: no catalog records match '" << suite << "'\n";
  std::sort(outs.begin(), outs.end(),
            [](const qmf::VerifyOutcome& a, const qmf::VerifyOutcome& b) { return a.id < b.id; });
  bool all = true;
  for (const auto& o : outs) all = all && o.pass;

  if (format == "json") {
    json arr = json::array();
    for (const auto& o : outs) {
      json row{{"id", o.id}, {"tier", o.tier}, {"citation", o.cite}, {"pass", o.pass}};
      if (o.mismatch)
        row["first_failure"] = json{{"exponent", qmf::rat_str(o.mismatch->expo)},
                                    {"lhs", o.mismatch->lhs.str()},
                                    {"rhs", o.mismatch->rhs.str()}};
      arr.push_back(std::move(row));
    }
    std::cout << arr.dump(2) << "\n";
  } else {
    long passed = 0;
    for (const auto& o : outs) {
      if (o.pass) {
        ++passed;
        std::cout << "[PASS] " << o.id << " (" << o.tier << ", " << ms_str(o.seconds) << ")\n";
      } else {
        std::cout << "[FAIL] " << o.id << " (" << o.tier << "): " << o.detail << "\n";
      }
    }
    std::cout << passed << " of " << outs.size() << " records passed\n";
  }
  return all ? 0 : kExitFail;
}

int cmd_counts(const std::string& kind_name, int s, long max_n, const std::string& format) {
  const qmf::TupleKind kind =
      kind_name == "squares" ? qmf::TupleKind::squares : qmf::TupleKind::triangles;
  const auto lattice = qmf::lattice_counts(kind, s, max_n);
  const auto theta = qmf::theta_counts(kind, s, max_n);
  const auto& formulas = qmf::count_formulas(kind, s);
  // The divisor formulas for squares index n >= 1; the n = 0 cell is blank.
  const long formula_start = kind == qmf::TupleKind::squares ? 1 : 0;

  bool all = true;
  json rows = json::array();
  std::ostringstream table;
  table << "n\tlattice\ttheta";
  for (const auto& f : formulas) table << "\t" << f.label;
  table << "\tok\n";
  for (long n = 0; n <= max_n; ++n) {
    bool ok = qmf::Rational(lattice[n]) == theta[n];
    std::vector<std::string> cells;
    for (const auto& f : formulas) {
      if (n < formula_start) {
        cells.push_back("-");
        continue;
      }
      const qmf::Rational v = f.value(n);
      ok = ok && v == theta[n];
      cells.push_back(qmf::rat_str(v));
    }
    all = all && ok;
    table << n << "\t" << lattice[n].get_str() << "\t" << qmf::rat_str(theta[n]);
    for (const auto& c : cells) table << "\t" << c;
    table << "\t" << (ok ? "yes" : "NO") << "\n";
    if (format == "json") {
      json row{{"n", n},
               {"lattice", lattice[n].get_str()},
               {"theta", qmf::rat_str(theta[n])},
               {"agree", ok}};
      json fv = json::array();
      for (const auto& c : cells) fv.push_back(c);
      row["formulas"] = std::move(fv);
      rows.push_back(std::move(row));
    }
  }
  if (format == "json") {
    json labels = json::array();
    for (const auto& f : formulas) labels.push_back(f.label);
    std::cout << json{{"kind", kind_name}, {"s", s}, {"labels", std::move(labels)},
                      {"rows", std::move(rows)}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << table.str();
  }
  return all ? 0 : kExitFail;
}

int cmd_pf_check(long samples, unsigned long long seed, int jobs, const std::string& format) {
  const auto reports = qmf::verify_theorem_general(samples, seed, jobs);
  bool all = true;
  for (const auto& r : reports) all = all && r.failures.empty();
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : reports) {
      json fails = json::array();
      for (const auto& f : r.failures) fails.push_back(f);
      arr.push_back(json{{"family", r.family}, {"checked", r.checked},
                         {"failures", std::move(fails)}});
    }
    std::cout << arr.dump(2) << "\n";
  } else {
    std::cout << "family          checks  result\n";
    for (const auto& r : reports) {
      std::cout << std::left << std::setw(16) << r.family << std::right << std::setw(6)
                << r.checked << "  " << (r.failures.empty() ? "ok" : "FAIL") << "\n";
      for (const auto& f : r.failures) std::cout << "    ! " << f << "\n";
    }
  }
  return all ? 0 : kExitFail;
}

int cmd_crosscheck(const qmf::Rational& order, const std::string& format) {
  const auto results = qmf::registry_crosschecks(order);
  bool all = true;
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : results) {
      all = all && r.pass;
      json row{{"form", r.form}, {"route_a", r.route_a}, {"route_b", r.route_b},
               {"pass", r.pass}};
      if (!r.pass) row["detail"] = r.detail;
      arr.push_back(std::move(row));
    }
    std::cout << arr.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      all = all && r.pass;
      if (r.pass) {
        std::cout << "[PASS] " << r.form << ": " << r.route_a << " == " << r.route_b << "\n";
      } else {
        std::cout << "[FAIL] " << r.form << ": " << r.route_a << " vs " << r.route_b << ": "
                  << r.detail << "\n";
      }
    }
    std::cout << results.size() << " route comparisons\n";
  }
  return all ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact q-series and modular-form identity toolkit"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value file; '#' starts a comment; flags take precedence");

  std::string order_str;
  int field = 0;
  std::string suite;
  std::string format = "text";
  int jobs = default_jobs();
  unsigned long long seed = 7;

  auto* opt_order = app.add_option("--order", order_str,
                                   "expansion/comparison order (rational, e.g. 40 or 81/2)");
  auto* opt_field =
      app.add_option("--field", field, "quadratic field discriminant for printing");
  app.add_option("--suite", suite, "record id glob, e.g. chazy.* (verify)");
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--jobs", jobs, "worker threads; 1 forces serial")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "sampling seed (pf-check)");

  auto* expand = app.add_subcommand("expand", "print a registered form's expansion");
  std::string form_name;
  expand->add_option("name", form_name, "registered form name")->required();
  expand->fallthrough();

  auto* verify = app.add_subcommand("verify", "verify catalog identities");
  verify->fallthrough();

  auto* counts = app.add_subcommand("counts", "representation counts: lattice, theta, formulas");
  std::string kind_name;
  int count_s = 1;
  long max_n = 50;
  counts->add_option("kind", kind_name, "squares or triangles")
      ->required()
      ->check(CLI::IsMember({"squares", "triangles"}));
  counts->add_option("--s", count_s, "tuples counted are 2s-long")->check(CLI::Range(1, 4));
  counts->add_option("--max-n", max_n, "table rows run n = 0..max-n")
      ->check(CLI::NonNegativeNumber);
  counts->fallthrough();

  auto* pf = app.add_subcommand("pf-check", "verify the hat-ladder polynomial families");
  long samples = 100;
  pf->add_option("--samples", samples, "random parameter triples")->check(CLI::PositiveNumber);
  pf->fallthrough();

  auto* cross = app.add_subcommand("crosscheck", "compare alternate construction routes");
  cross->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (expand->parsed())
      return cmd_expand(form_name, opt_order->count() ? parse_order(order_str) : qmf::Rational(16),
                        field, opt_field->count() > 0, format);
    if (verify->parsed())
      return cmd_verify(suite, opt_order->count() > 0,
                        opt_order->count() ? parse_order(order_str) : qmf::Rational(0), format,
                        jobs);
    if (counts->parsed()) return cmd_counts(kind_name, count_s, max_n, format);
    if (pf->parsed()) return cmd_pf_check(samples, seed, jobs, format);
    if (cross->parsed())
      return cmd_crosscheck(opt_order->count() ? parse_order(order_str) : qmf::Rational(30),
                            format);
  } catch (const qmf::UnknownFormError& err) {
    std::cerr << "unknown form: " << err.what() << "\n";
    return kExitUnknownForm;
  } catch (const qmf::CatalogError& err) {
    std::cerr << "catalog error: " << err.what() << "\n";
    return kExitCatalog;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitFail;
  }
  return 0;
}
