#include "qmf/identity.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <future>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qmf/errors.hpp"
#include "qmf/forms.hpp"
#include "qmf/hyp.hpp"

namespace qmf {

namespace {

void skip_blanks(const std::string& s, size_t& pos) {
  while (pos < s.size()) {
    char c = s[pos];
    if (c == '#') {
      while (pos < s.size() && s[pos] != '\n') ++pos;
    } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++pos;
    } else {
      return;
    }
  }
}

size_t line_of(const std::string& s, size_t pos) {
  return 1 + static_cast<size_t>(std::count(s.begin(), s.begin() + static_cast<long>(pos), '\n'));
}

[[noreturn]] void fail_at(const std::string& s, size_t pos, const std::string& msg) {
  std::ostringstream os;
  os << "catalog line " << line_of(s, pos) << ": " << msg;
  throw CatalogError(os.str());
}

}  // namespace

SExpr parse_sexpr(const std::string& src, size_t& pos) {
  skip_blanks(src, pos);
  if (pos >= src.size()) fail_at(src, pos, "unexpected end of input");
  SExpr node;
  char c = src[pos];
  if (c == '(') {
    ++pos;
    for (;;) {
      skip_blanks(src, pos);
      if (pos >= src.size()) fail_at(src, pos, "unterminated list");
      if (src[pos] == ')') {
        ++pos;
        return node;
      }
      node.kids.push_back(parse_sexpr(src, pos));
    }
  }
  if (c == ')') fail_at(src, pos, "stray ')'");
  node.atom = true;
  if (c == '"') {
    ++pos;
    while (pos < src.size() && src[pos] != '"') node.text += src[pos++];
    if (pos >= src.size()) fail_at(src, pos, "unterminated string");
    ++pos;
    return node;
  }
  while (pos < src.size() && !std::isspace(static_cast<unsigned char>(src[pos])) &&
         src[pos] != '(' && src[pos] != ')' && src[pos] != '#')
    node.text += src[pos++];
  return node;
}

Rational tier_default_precision(const std::string& tier) {
  if (tier == "golden") return Rational(50);
  if (tier == "system") return Rational(50);
  if (tier == "chazy") return Rational(40);
  if (tier == "hypergeometric") return Rational(30);
  if (tier == "agm") return Rational(50);
  if (tier == "counting") return Rational(200);
  throw CatalogError("unknown tier '" + tier + "'");
}

namespace {

const SExpr* find_field(const SExpr& rec, const std::string& key) {
  for (size_t i = 1; i < rec.kids.size(); ++i) {
    const SExpr& kid = rec.kids[i];
    if (!kid.atom && !kid.kids.empty() && kid.kids[0].atom && kid.kids[0].text == key)
      return &kid;
  }
  return nullptr;
}

std::string atom_field(const SExpr& rec, const std::string& key, bool required,
                       const std::string& src, size_t pos) {
  const SExpr* f = find_field(rec, key);
  if (f == nullptr) {
    if (required) fail_at(src, pos, "record is missing (" + key + " ...)");
    return "";
  }
  if (f->kids.size() != 2 || !f->kids[1].atom)
    fail_at(src, pos, "(" + key + " ...) expects a single atom");
  return f->kids[1].text;
}

}  // namespace

std::vector<CatalogRecord> parse_catalog(const std::string& text) {
  std::vector<CatalogRecord> out;
  std::set<std::string> seen;
  size_t pos = 0;
  for (;;) {
    skip_blanks(text, pos);
    if (pos >= text.size()) break;
    size_t start = pos;
    SExpr rec = parse_sexpr(text, pos);
    if (rec.atom || rec.kids.empty() || !rec.kids[0].atom || rec.kids[0].text != "record")
      fail_at(text, start, "top-level entries must be (record ...)");
    CatalogRecord r;
    r.id = atom_field(rec, "id", true, text, start);
    r.tier = atom_field(rec, "tier", true, text, start);
    r.cite = atom_field(rec, "cite", false, text, start);
    std::string field = atom_field(rec, "field", false, text, start);
    if (!field.empty()) {
      try {
        r.field = std::stoi(field);
      } catch (const std::exception&) {
        fail_at(text, start, "bad field discriminant '" + field + "'");
      }
    }
    std::string prec = atom_field(rec, "prec", false, text, start);
    try {
      r.prec = prec.empty() ? tier_default_precision(r.tier) : rat_parse(prec);
    } catch (const Error& err) {
      fail_at(text, start, err.what());
    }
    if (r.prec <= 0) fail_at(text, start, "precision must be positive");
    const SExpr* lhs = find_field(rec, "lhs");
    const SExpr* rhs = find_field(rec, "rhs");
    if (lhs == nullptr || lhs->kids.size() != 2) fail_at(text, start, "record needs (lhs expr)");
    if (rhs == nullptr || rhs->kids.size() != 2) fail_at(text, start, "record needs (rhs expr)");
    r.lhs = lhs->kids[1];
    r.rhs = rhs->kids[1];
    if (!seen.insert(r.id).second) fail_at(text, start, "duplicate id '" + r.id + "'");
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<CatalogRecord> load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CatalogError("cannot open catalog file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_catalog(buf.str());
}

std::string default_catalog_path() {
  if (const char* env = std::getenv("QMF_CATALOG"); env != nullptr && *env != '\0') return env;
  return std::string(QMF_SOURCE_DATA_DIR) + "/catalog.txt";
}

namespace {

Rational expr_rational(const SExpr& e) {
  if (!e.atom) throw CatalogError("expected a number, found a list");
  return rat_parse(e.text);
}

long expr_long(const SExpr& e) {
  Rational r = expr_rational(e);
  if (!rat_is_integer(r)) throw CatalogError("expected an integer, found " + e.text);
  return rat_long(r);
}

WeightVector expr_weights(const SExpr& e) {
  if (e.atom) throw CatalogError("expected a weight list, found an atom");
  WeightVector w;
  w.reserve(e.kids.size());
  for (const SExpr& k : e.kids) w.push_back(expr_rational(k));
  return w;
}

void need_args(const SExpr& e, size_t n, const char* op) {
  if (e.kids.size() != n + 1)
    throw CatalogError(std::string("(") + op + " ...) expects " + std::to_string(n) +
                       " arguments, got " + std::to_string(e.kids.size() - 1));
}

}  // namespace

Puiseux eval_expr(const SExpr& e, const Rational& target, int field) {
  if (e.atom) {
    if (e.text == "q") return Puiseux::q(target);
    return Puiseux::constant(QuadExt(rat_parse(e.text)), target);
  }
  if (e.kids.empty() || !e.kids[0].atom) throw CatalogError("malformed expression");
  const std::string& op = e.kids[0].text;

  if (op == "form") {
    need_args(e, 1, "form");
    if (!e.kids[1].atom) throw CatalogError("(form ...) expects a name");
    return eval_form(e.kids[1].text, target);
  }
  if (op == "sc") {
    need_args(e, 2, "sc");
    Rational rad_part = expr_rational(e.kids[2]);
    if (rad_part != 0 && field == 0)
      throw CatalogError("(sc ...) with a radical part needs a record with a nonzero field");
    return Puiseux::constant(QuadExt(expr_rational(e.kids[1]), rad_part, field), target, field);
  }
  if (op == "qpoly") {
    if (e.kids.size() < 2) throw CatalogError("(qpoly ...) expects at least one coefficient");
    Puiseux p = Puiseux::zero(0, target);
    for (size_t i = 1; i < e.kids.size(); ++i) {
      Rational c = expr_rational(e.kids[i]);
      if (c != 0 && Rational(i - 1) < target) p.set_coeff(Rational(i - 1), QuadExt(c));
    }
    return p;
  }
  if (op == "trunc") {
    need_args(e, 2, "trunc");
    Rational cap = expr_rational(e.kids[2]);
    if (cap <= 0) throw CatalogError("(trunc ...) expects a positive precision");
    return truncate(eval_expr(e.kids[1], cap, field), cap);
  }
  if (op == "+" || op == "*") {
    if (e.kids.size() < 3) throw CatalogError("(" + op + " ...) expects at least two arguments");
    Rational child_target = op == "*" ? target + 4 : target;
    Puiseux acc = eval_expr(e.kids[1], child_target, field);
    for (size_t i = 2; i < e.kids.size(); ++i) {
      Puiseux next = eval_expr(e.kids[i], child_target, field);
      acc = op == "+" ? add(acc, next) : mul(acc, next);
    }
    return acc;
  }
  if (op == "-") {
    need_args(e, 2, "-");
    return sub(eval_expr(e.kids[1], target, field), eval_expr(e.kids[2], target, field));
  }
  if (op == "neg") {
    need_args(e, 1, "neg");
    return -eval_expr(e.kids[1], target, field);
  }
  if (op == "/") {
    need_args(e, 2, "/");
    Puiseux den = eval_expr(e.kids[2], target + 6, field);
    return mul(eval_expr(e.kids[1], target + 6, field), invert(den));
  }
  if (op == "pow") {
    need_args(e, 2, "pow");
    return rational_pow(eval_expr(e.kids[1], target + 6, field), expr_rational(e.kids[2]));
  }
  if (op == "d") {
    need_args(e, 1, "d");
    return derive(eval_expr(e.kids[1], target, field));
  }
  if (op == "subst") {
    need_args(e, 2, "subst");
    Rational m = expr_rational(e.kids[2]);
    if (m <= 0) throw CatalogError("(subst ...) expects a positive exponent");
    return substitute_power(eval_expr(e.kids[1], target / m + 1, field), m);
  }
  if (op == "sigma" || op == "sigmac") {
    need_args(e, 3, op.c_str());
    long k = expr_long(e.kids[1]);
    WeightVector w = expr_weights(e.kids[2]);
    long den = expr_long(e.kids[3]);
    return divisor_series(k, w, op == "sigmac", Rational(0), QuadExt(1), den, target);
  }
  if (op == "2f1") {
    need_args(e, 4, "2f1");
    return hyp2f1(expr_rational(e.kids[1]), expr_rational(e.kids[2]), expr_rational(e.kids[3]),
                  eval_expr(e.kids[4], target + 2, field));
  }
  if (op == "3f2") {
    need_args(e, 6, "3f2");
    return hyp3f2(expr_rational(e.kids[1]), expr_rational(e.kids[2]), expr_rational(e.kids[3]),
                  expr_rational(e.kids[4]), expr_rational(e.kids[5]),
                  eval_expr(e.kids[6], target + 2, field));
  }
  if (op == "uladder") {
    need_args(e, 3, "uladder");
    long s = expr_long(e.kids[1]);
    long k = expr_long(e.kids[2]);
    if (s == 0 || (k != 4 && k != 6 && k != 8))
      throw CatalogError("(uladder s k e) expects nonzero scale and k in {4, 6, 8}");
    Puiseux en = eval_expr(e.kids[3], target + 2, field);
    Puiseux uk = sub(scalar_mul(QuadExt(s), derive(en)), mul(en, en));
    for (long j = 4; j < k; j += 2)
      uk = sub(derive(uk), scalar_mul(QuadExt(rat(j, s)), mul(en, uk)));
    return uk;
  }
  if (op == "hypode") {
    need_args(e, 5, "hypode");
    return hyp2f1_ode_residual(expr_rational(e.kids[1]), expr_rational(e.kids[2]),
                               expr_rational(e.kids[3]), eval_expr(e.kids[4], target + 8, field),
                               eval_expr(e.kids[5], target + 8, field));
  }
  if (op == "hypode3") {
    need_args(e, 7, "hypode3");
    return hyp3f2_ode_residual(expr_rational(e.kids[1]), expr_rational(e.kids[2]),
                               expr_rational(e.kids[3]), expr_rational(e.kids[4]),
                               expr_rational(e.kids[5]), eval_expr(e.kids[6], target + 10, field),
                               eval_expr(e.kids[7], target + 10, field));
  }
  throw CatalogError("unknown operator '" + op + "'");
}

bool glob_match(const std::string& pattern, const std::string& text) {
  size_t p = 0, t = 0, star = std::string::npos, mark = 0;
  while (t < text.size()) {
    if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
      ++p;
      ++t;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = t;
    } else if (star != std::string::npos) {
      p = star + 1;
      t = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

namespace {

VerifyOutcome verify_one(const CatalogRecord& rec) {
  VerifyOutcome out;
  out.id = rec.id;
  out.tier = rec.tier;
  out.cite = rec.cite;
  auto t0 = std::chrono::steady_clock::now();
  try {
    Puiseux lhs = eval_expr(rec.lhs, rec.prec, rec.field);
    Puiseux rhs = eval_expr(rec.rhs, rec.prec, rec.field);
    if (lhs.precision() < rec.prec || rhs.precision() < rec.prec) {
      out.detail = "evaluated precision " + rat_str(rat_min(lhs.precision(), rhs.precision())) +
                   " falls short of declared " + rat_str(rec.prec);
    } else {
      auto diff = first_difference(truncate(lhs, rec.prec), truncate(rhs, rec.prec));
      if (!diff) {
        out.pass = true;
      } else {
        out.detail = "first mismatch at q^(" + rat_str(diff->expo) + "): " + diff->lhs.str() +
                     " vs " + diff->rhs.str();
        out.mismatch = *diff;
      }
    }
  } catch (const std::exception& err) {
    out.detail = std::string("evaluation failed: ") + err.what();
  }
  out.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

}  // namespace

std::vector<VerifyOutcome> verify_records(const std::vector<CatalogRecord>& recs,
                                          const std::string& tier_filter,
                                          const std::string& id_glob, int jobs) {
  std::vector<const CatalogRecord*> picked;
  for (const CatalogRecord& r : recs) {
    if (!tier_filter.empty() && r.tier != tier_filter) continue;
    if (!id_glob.empty() && !glob_match(id_glob, r.id)) continue;
    picked.push_back(&r);
  }
  std::vector<VerifyOutcome> out(picked.size());
  if (jobs < 1) jobs = 1;
  if (jobs == 1 || picked.size() <= 1) {
    for (size_t i = 0; i < picked.size(); ++i) out[i] = verify_one(*picked[i]);
    return out;
  }
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= picked.size()) return;
      out[i] = verify_one(*picked[i]);
    }
  };
  std::vector<std::future<void>> pool;
  for (int j = 1; j < jobs; ++j) pool.push_back(std::async(std::launch::async, worker));
  worker();
  for (std::future<void>& f : pool) f.get();
  return out;
}

}  // namespace qmf
