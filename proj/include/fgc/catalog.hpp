#pragma once

#include <set>
#include <string>
#include <vector>

#include "fgc/breadth.hpp"
#include "fgc/classify.hpp"
#include "fgc/descriptor.hpp"

namespace fgc {

inline constexpr i64 kMaxCatalogOrder = 200;

struct CatalogEntry {
  GroupDescriptor descriptor;
  std::string text;
  i64 order = 1;
  Fingerprint fp;
  BreadthProfile profile;
  bool q_group = false;
  bool f_le_2 = false;
  bool solvable = false;
  bool nilpotent = false;
  bool metabelian = false;
};

/// Deterministic catalog of descriptor-expressible groups of order up to
/// max_order: the constructor set closed under direct products, deduplicated
/// by exact isomorphism up to order 64 and by fingerprint above. Entries are
/// sorted by (order, descriptor text).
std::vector<CatalogEntry> generate_catalog(i64 max_order);

/// One entry (with cached data) for a single descriptor.
CatalogEntry make_entry(const GroupDescriptor& d);

enum class Check { Frobenius, Eq2, ThmMs, ThmQgroups, ThmT1 };

std::string check_name(Check c);
std::set<Check> parse_checks(const std::string& csv);  // "all" or comma list
std::set<Check> all_checks();

struct SweepRow {
  i64 order = 1;
  std::string descriptor;
  std::string check;
  std::string result;  // PASS | FAIL | NA
  std::string detail;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  i64 pass = 0, fail = 0, na = 0;
  std::string report_path;      // empty when out_dir empty
  std::vector<std::string> counterexample_dirs;
};

/// Run the selected checks over every entry. Rows come out sorted by
/// (order, descriptor, check). When out_dir is nonempty, writes report.tsv
/// and catalog.manifest there and a counterexample bundle per FAIL.
SweepResult sweep(const std::vector<CatalogEntry>& catalog, const std::set<Check>& checks,
                  const std::string& out_dir);

std::string render_report_tsv(const std::vector<SweepRow>& rows);

/// Manifest: one descriptor expression per line.
void write_manifest(const std::vector<CatalogEntry>& catalog, const std::string& path);
std::vector<CatalogEntry> load_manifest(const std::string& path);

/// Serialized group + provenance note, in a directory named by a content
/// hash of the group file. Returns the bundle directory.
std::string write_counterexample_bundle(const std::string& out_dir, const FiniteGroup& g,
                                        const std::string& provenance);

/// The provider battery used by the thm_t1 sweep check: unit, the parametric
/// scheme over r,s in {-2,...,2}, and 20 seeded random rational tables with
/// g in [1, k^2].
struct ProviderCase {
  std::string name;
  std::shared_ptr<CoefficientProvider> provider;
  double r = 0, s = 0;
};
std::vector<ProviderCase> theorem_provider_battery(i64 group_order);

}  // namespace fgc
