#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "negapoly/closed_forms.hpp"

namespace negapoly {

enum class RecordStatus { Pass, Fail, NoClosedForm };
enum class OutputFormat { Json, Csv };
enum class EvalMode { Closed, Oracle, Both };

std::string_view to_string(RecordStatus s);
std::string_view to_string(OutputFormat f);
std::string_view to_string(EvalMode m);
OutputFormat parse_format(std::string_view text);
EvalMode parse_mode(std::string_view text);

/// One verified quantity.
///
/// suite "closed_form": a family member against the oracle; pass iff
///   abs_diff <= max(rel_tol |closed_value|, safety_factor oracle_error_estimate).
/// suite "no_closed_form": oracle value only.
/// suite "identity": a residual (closed_value) checked against `threshold`;
///   for exact identities abs_diff counts mismatching cases.
/// suite "special_value": closed form against the constant expression
///   (reference_diff within 1e-10) and the oracle (abs_diff within 1e-8).
/// Fields that do not apply to a suite hold NaN and are written as null.
struct VerificationRecord {
  std::string suite;
  std::string name;
  FamilyId family;
  bool has_family = false;
  double q = 0;
  double closed_value = 0;
  double oracle_value = 0;
  double reference_value = 0;
  double abs_diff = 0;
  double rel_diff = 0;
  double reference_diff = 0;
  double oracle_error_estimate = 0;
  double threshold = 0;
  std::size_t evaluations = 0;
  RecordStatus status = RecordStatus::Pass;
};

struct SuiteConfig {
  double rel_tol = 1e-9;
  double safety_factor = 10;
  std::vector<double> q_grid{0.25, 0.5, 1, 2, 4};
  int k_max_I = 8;
  int k_max_T = 5;  // T_2k for k = 0..k_max_T
  int k_max_L = 5;  // L_{2k+1} for k = 0..k_max_L
  int k_max_variant = 3;
  double oracle_rel_tol = 1e-12;
  OutputFormat format = OutputFormat::Json;

  /// Throws ArgumentError when a field is out of range.
  void validate() const;
  /// Overrides fields present in a JSON object (keys as the member names,
  /// "format" as "json"/"csv").
  void merge_json(std::string_view text);
  /// Default config, then the file named by NEGAPOLY_CONFIG if set.
  static SuiteConfig from_environment();
};

struct SuiteSummary {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t no_closed_form = 0;
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<VerificationRecord> records;
  SuiteSummary summary;
};

inline constexpr int kReportSchemaVersion = 1;

/// Every implemented closed form against the oracle over the q grid, the
/// quadrature-only members, the recursion and exact identity suites, and the
/// special-value table. Family records come first, ordered by (family, index,
/// kernel, q), then identities, then special values.
/// An empty q grid yields an empty report.
SuiteReport verify_suite(const SuiteConfig& config);

/// JSON Lines (header, records, summary) or CSV; numbers with 17 significant digits.
void write_report(const SuiteReport& report, std::ostream& out);

/// Evaluates one family member. Exit code 0 on success, 1 when the oracle
/// fails or closed form and oracle disagree, 2 on domain errors and missing
/// closed forms. Diagnostics go to `err`.
int eval_cmd(const FamilyId& id, double q, EvalMode mode, const SuiteConfig& config, std::ostream& out,
             std::ostream& err);

/// "special_values", "bernoulli" or "constants". Exit code 0, or 2 for an
/// unknown selector.
int table_cmd(std::string_view which, OutputFormat format, std::ostream& out, std::ostream& err);

}  // namespace negapoly
