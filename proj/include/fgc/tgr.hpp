#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "fgc/group.hpp"
#include "fgc/rational.hpp"

namespace fgc {

/// Tolerance used whenever a floating-point total is compared against zero.
inline constexpr double kFloatZeroTolerance = 1e-9;

// A coefficient value: exact rational whenever the scheme allows it, a
// double otherwise. `defaulted` marks table lookups that fell back to 1.
struct Coefficient {
  bool exact = true;
  Rational q;
  double x = 0.0;
  bool defaulted = false;

  static Coefficient rational(Rational value) { return {true, value, value.to_double(), false}; }
  static Coefficient floating(double value) { return {false, Rational(), value, false}; }
  double value() const { return exact ? q.to_double() : x; }
  bool negative() const { return exact ? q.is_negative() : x < 0.0; }
};

// Pluggable source for the coefficients g_{k,cok}; evaluation must be pure.
class CoefficientProvider {
 public:
  virtual ~CoefficientProvider() = default;
  virtual std::string name() const = 0;
  virtual Coefficient at(i64 k, i64 cok, double r, double s) const = 0;
};

/// g = 1 everywhere.
std::unique_ptr<CoefficientProvider> unit_provider();

/// g = k^r * phi(k)^s; exact rational when r and s are integers.
std::unique_ptr<CoefficientProvider> param_power_provider();

/// Explicit table (k, cok) -> rational; missing pairs default to 1 and are
/// flagged. File lines: "k<TAB>cok<TAB>p/q" (plain integers allowed).
std::unique_ptr<CoefficientProvider> table_provider(std::map<std::pair<i64, i64>, Rational> table,
                                                    std::string name = "table");
std::unique_ptr<CoefficientProvider> table_provider_from_file(const std::string& path);

/// Parse "unit" | "param" | "table:<path>".
std::unique_ptr<CoefficientProvider> make_provider(const std::string& spec);

struct TgrTerm {
  i64 k = 1;
  i64 f = 1;
  Coefficient g;
  Coefficient term;  // g * k * (f - 1)
};

struct TgrReport {
  i64 n = 1;
  std::string scheme;
  double r = 0.0, s = 0.0;
  std::vector<TgrTerm> terms;  // one per divisor k of n, ascending
  bool exact = true;
  Rational total;          // meaningful when exact
  double total_value = 0;  // always filled
  double tolerance = 0.0;  // kFloatZeroTolerance when !exact, else 0
  std::vector<std::string> warnings;

  bool total_is_zero() const;
};

/// T = sum over k | n of g_{k,n/k} * k * (f(k) - 1). Negative coefficients
/// are rejected.
TgrReport evaluate_tgr(const FiniteGroup& g, const CoefficientProvider& provider, double r,
                       double s);

struct DivisorHypothesis {
  i64 k = 1;
  i64 f = 1;
  Coefficient g;
  bool ge_one = true;       // 1 <= g
  bool f_le_inv_sqrt = true;  // f <= g^(-1/2), checked as f^2 * g <= 1
  bool inv_sqrt_le_k = true;  // g^(-1/2) <= k, checked as g * k^2 >= 1
  bool pass() const { return ge_one && f_le_inv_sqrt && inv_sqrt_le_k; }
};

struct HypothesisVerdict {
  bool holds = true;
  std::vector<DivisorHypothesis> checks;
  i64 witness_k = 0;            // least failing divisor when !holds
  std::string witness_clause;   // which inequality failed there
};

/// The square-root-free form of the hypotheses: 1 <= g, f^2 g <= 1,
/// g k^2 >= 1, for every divisor k of |G|; exact whenever g is rational.
HypothesisVerdict check_t1_hypotheses(const FiniteGroup& g, const CoefficientProvider& provider,
                                      double r, double s);

enum class ImplicationVerdict { NotApplicable, Pass, Fail };

struct ImplicationReport {
  ImplicationVerdict verdict = ImplicationVerdict::NotApplicable;
  HypothesisVerdict hypotheses;
  TgrReport tgr;
  bool t_is_zero = false;
  bool solvable = false;
};

/// When the hypotheses hold, verify T = 0 and solvability; a Fail verdict is
/// a reportable counterexample.
ImplicationReport verify_theorem_t1(const FiniteGroup& g, const CoefficientProvider& provider,
                                    double r, double s);

struct ScanRow {
  double r = 0, s = 0;
  bool holds = false;
  double t = 0;
  bool t_zero = false;
};

/// Evaluate the parametric scheme over a grid of (r, s); floating
/// evaluation with the fixed zero tolerance, rows sorted by (r, s).
std::vector<ScanRow> scan_rs(const FiniteGroup& g, const std::vector<std::pair<double, double>>& grid);

/// Tab-separated rendering of scan rows (header + one line per row).
std::string scan_rows_tsv(const std::vector<ScanRow>& rows);

}  // namespace fgc
