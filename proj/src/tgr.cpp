#include "fgc/tgr.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "fgc/breadth.hpp"
#include "fgc/error.hpp"

namespace fgc {

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

class UnitProvider final : public CoefficientProvider {
 public:
  std::string name() const override { return "unit"; }
  Coefficient at(i64, i64, double, double) const override {
    return Coefficient::rational(Rational(1));
  }
};

bool near_integer(double v, i64& out) {
  double rounded = std::round(v);
  if (std::abs(v - rounded) > 1e-12) return false;
  if (std::abs(rounded) > 62) return false;  // keep 2^k within rationals
  out = i64(rounded);
  return true;
}

Rational integer_power(i64 base, i64 exp) {
  Rational r(1);
  Rational b = exp >= 0 ? Rational(base) : Rational(1, base);
  for (i64 i = 0; i < std::abs(exp); ++i) r = r * b;
  return r;
}

class ParamPowerProvider final : public CoefficientProvider {
 public:
  std::string name() const override { return "param"; }
  Coefficient at(i64 k, i64, double r, double s) const override {
    i64 ri, si;
    if (near_integer(r, ri) && near_integer(s, si))
      return Coefficient::rational(integer_power(k, ri) * integer_power(totient(k), si));
    return Coefficient::floating(std::pow(double(k), r) * std::pow(double(totient(k)), s));
  }
};

class TableProvider final : public CoefficientProvider {
 public:
  TableProvider(std::map<std::pair<i64, i64>, Rational> table, std::string name)
      : table_(std::move(table)), name_(std::move(name)) {}

  std::string name() const override { return name_; }
  Coefficient at(i64 k, i64 cok, double, double) const override {
    auto it = table_.find({k, cok});
    if (it == table_.end()) {
      Coefficient c = Coefficient::rational(Rational(1));
      c.defaulted = true;
      return c;
    }
    return Coefficient::rational(it->second);
  }

 private:
  std::map<std::pair<i64, i64>, Rational> table_;
  std::string name_;
};

}  // namespace

std::unique_ptr<CoefficientProvider> unit_provider() { return std::make_unique<UnitProvider>(); }

std::unique_ptr<CoefficientProvider> param_power_provider() {
  return std::make_unique<ParamPowerProvider>();
}

std::unique_ptr<CoefficientProvider> table_provider(std::map<std::pair<i64, i64>, Rational> table,
                                                    std::string name) {
  return std::make_unique<TableProvider>(std::move(table), std::move(name));
}

std::unique_ptr<CoefficientProvider> table_provider_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Io, "coefficient table: cannot open '" + path + "'");
  std::map<std::pair<i64, i64>, Rational> table;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream row(line);
    i64 k, cok;
    std::string value;
    if (!(row >> k >> cok >> value))
      fail(ErrorCode::Parse, "coefficient table: malformed line " + std::to_string(line_no) +
                                 " in '" + path + "'");
    Rational g = Rational::parse(value);
    if (g.is_negative())
      fail(ErrorCode::Validate, "coefficient table: negative coefficient " + g.str() +
                                    " at line " + std::to_string(line_no) +
                                    "; coefficients must be nonnegative");
    table[{k, cok}] = g;
  }
  return table_provider(std::move(table), "table:" + path);
}

std::unique_ptr<CoefficientProvider> make_provider(const std::string& spec) {
  if (spec == "unit") return unit_provider();
  if (spec == "param") return param_power_provider();
  if (spec.rfind("table:", 0) == 0) return table_provider_from_file(spec.substr(6));
  fail(ErrorCode::InvalidArgument,
       "provider: expected unit | param | table:<path>, got '" + spec + "'");
}

bool TgrReport::total_is_zero() const {
  if (exact) return total.is_zero();
  return std::abs(total_value) <= kFloatZeroTolerance;
}

TgrReport evaluate_tgr(const FiniteGroup& g, const CoefficientProvider& provider, double r,
                       double s) {
  TgrReport report;
  report.n = g.order();
  report.scheme = provider.name();
  report.r = r;
  report.s = s;
  Rational exact_total(0);
  double float_total = 0.0;
  for (i64 k : divisors(report.n).divisors) {
    TgrTerm term;
    term.k = k;
    term.f = local_breadth(g, k);
    term.g = provider.at(k, report.n / k, r, s);
    if (term.g.negative())
      fail(ErrorCode::Validate, "evaluate_tgr: provider '" + report.scheme +
                                    "' returned a negative coefficient at k = " +
                                    std::to_string(k) + "; coefficients must be nonnegative");
    if (term.g.defaulted)
      report.warnings.push_back("coefficient (" + std::to_string(k) + "," +
                                std::to_string(report.n / k) + ") missing, defaulted to 1");
    if (term.g.exact) {
      term.term = Coefficient::rational(term.g.q * Rational(k) * Rational(term.f - 1));
    } else {
      term.term = Coefficient::floating(term.g.x * double(k) * double(term.f - 1));
      report.exact = false;
    }
    float_total += term.term.value();
    if (term.term.exact) exact_total += term.term.q;
    report.terms.push_back(term);
  }
  report.total = exact_total;
  report.total_value = report.exact ? exact_total.to_double() : float_total;
  report.tolerance = report.exact ? 0.0 : kFloatZeroTolerance;
  return report;
}

HypothesisVerdict check_t1_hypotheses(const FiniteGroup& g, const CoefficientProvider& provider,
                                      double r, double s) {
  HypothesisVerdict verdict;
  const i64 n = g.order();
  for (i64 k : divisors(n).divisors) {
    DivisorHypothesis check;
    check.k = k;
    check.f = local_breadth(g, k);
    check.g = provider.at(k, n / k, r, s);
    if (check.g.negative())
      fail(ErrorCode::Validate, "check_t1_hypotheses: provider returned a negative coefficient");
    if (check.g.exact) {
      const Rational& q = check.g.q;
      check.ge_one = Rational(1) <= q;
      check.f_le_inv_sqrt = Rational(check.f * check.f) * q <= Rational(1);
      check.inv_sqrt_le_k = q * Rational(k * k) >= Rational(1);
    } else {
      double x = check.g.x;
      check.ge_one = 1.0 <= x;
      check.f_le_inv_sqrt = double(check.f) * double(check.f) * x <= 1.0;
      check.inv_sqrt_le_k = x * double(k) * double(k) >= 1.0;
    }
    if (!check.pass() && verdict.holds) {
      verdict.holds = false;
      verdict.witness_k = k;
      if (!check.ge_one) verdict.witness_clause = "1 <= g";
      else if (!check.f_le_inv_sqrt) verdict.witness_clause = "f(k) <= g^(-1/2)";
      else verdict.witness_clause = "g^(-1/2) <= k";
    }
    verdict.checks.push_back(check);
  }
  return verdict;
}

ImplicationReport verify_theorem_t1(const FiniteGroup& g, const CoefficientProvider& provider,
                                    double r, double s) {
  ImplicationReport report;
  report.hypotheses = check_t1_hypotheses(g, provider, r, s);
  report.tgr = evaluate_tgr(g, provider, r, s);
  if (!report.hypotheses.holds) {
    report.verdict = ImplicationVerdict::NotApplicable;
    return report;
  }
  report.t_is_zero = report.tgr.total_is_zero();
  report.solvable = is_solvable(g);
  report.verdict = report.t_is_zero && report.solvable ? ImplicationVerdict::Pass
                                                       : ImplicationVerdict::Fail;
  return report;
}

std::vector<ScanRow> scan_rs(const FiniteGroup& g,
                             const std::vector<std::pair<double, double>>& grid) {
  auto provider = param_power_provider();
  std::vector<std::pair<double, double>> sorted = grid;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<ScanRow> rows;
  for (auto [r, s] : sorted) {
    ScanRow row;
    row.r = r;
    row.s = s;
    row.holds = check_t1_hypotheses(g, *provider, r, s).holds;
    row.t = evaluate_tgr(g, *provider, r, s).total_value;
    row.t_zero = std::abs(row.t) <= kFloatZeroTolerance;
    rows.push_back(row);
  }
  return rows;
}

std::string scan_rows_tsv(const std::vector<ScanRow>& rows) {
  std::string out = "r\ts\thypotheses\tT\tT_zero\n";
  for (const auto& row : rows) {
    out += format_double(row.r) + "\t" + format_double(row.s) + "\t" +
           (row.holds ? "holds" : "fails") + "\t" + format_double(row.t) + "\t" +
           (row.t_zero ? "yes" : "no") + "\n";
  }
  return out;
}

}  // namespace fgc
