#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qmf/forms.hpp"
#include "qmf/puiseux.hpp"

namespace qmf {

// S-expression node: an atom holding its token text, or a list of children.
struct SExpr {
  bool atom = false;
  std::string text;
  std::vector<SExpr> kids;
};

// Parses a single expression from src starting at pos; advances pos past it.
// Strings are quoted with '"', comments run from '#' to end of line.
SExpr parse_sexpr(const std::string& src, size_t& pos);

// One verifiable identity.  lhs and rhs are expression trees over the form
// registry vocabulary; prec is the comparison precision (both sides must
// evaluate to at least prec and agree strictly below it); field is the
// ambient quadratic field discriminant, used by (sc a b) scalars.
struct CatalogRecord {
  std::string id;
  std::string tier;
  std::string cite;
  int field = 0;
  Rational prec;
  SExpr lhs, rhs;
};

// Comparison precision a tier uses when a record does not override it.
Rational tier_default_precision(const std::string& tier);

// Catalog text -> records.  Throws CatalogError on malformed input or
// duplicate ids.
std::vector<CatalogRecord> parse_catalog(const std::string& text);
std::vector<CatalogRecord> load_catalog(const std::string& path);

// Path baked in at configure time; overridable through QMF_CATALOG.
std::string default_catalog_path();

// Evaluates an expression tree, aiming for the given precision.  Operator
// nodes pad the targets they pass down so that ordinary precision loss
// (division, fractional powers) still meets the caller's target; the
// verifier checks the achieved precision afterwards.
//
// Grammar:
//   e := RATIONAL | q | (form NAME) | (sc a b)
//      | (+ e...) | (* e...) | (- e1 e2) | (neg e) | (/ e1 e2)
//      | (pow e r) | (d e) | (subst e m) | (trunc e P)
//      | (qpoly c0 c1 ...)
//      | (sigma k (w...) den) | (sigmac k (w...) den)
//      | (2f1 a b c e) | (3f2 a1 a2 a3 b1 b2 e)
//      | (uladder s k e)
//      | (hypode a b c y x) | (hypode3 a1 a2 a3 b1 b2 y x)
// (sc a b) is the scalar a + b sqrt(field); (qpoly ...) the polynomial
// sum c_k q^k.  (uladder s k e) is the quadratic-ladder member of weight
// k in {4, 6, 8} built from the weight-2 series e with integer scale s:
//   u4 = s e' - e^2,  u_{k+2} = u_k' - (k/s) e u_k.
Puiseux eval_expr(const SExpr& e, const Rational& target, int field);

struct VerifyOutcome {
  std::string id;
  std::string tier;
  std::string cite;
  bool pass = false;
  std::string detail;  // empty on success, else first mismatch or error text
  std::optional<SeriesDiff> mismatch;  // set when detail is a coefficient mismatch
  double seconds = 0.0;
};

// '*' matches any run of characters, '?' a single one; everything else is
// literal.  Used for id filters.
bool glob_match(const std::string& pattern, const std::string& text);

// Verifies the records whose tier matches tier_filter (empty = all) and
// whose id matches id_glob (empty = all), running up to jobs records in
// parallel.  Outcomes come back in catalog order regardless of jobs.
std::vector<VerifyOutcome> verify_records(const std::vector<CatalogRecord>& recs,
                                          const std::string& tier_filter,
                                          const std::string& id_glob, int jobs);

}  // namespace qmf
