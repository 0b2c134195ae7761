#include "negapoly/harness.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <tuple>

#include "negapoly/combinatorics.hpp"
#include "negapoly/constants.hpp"
#include "negapoly/errors.hpp"
#include "negapoly/expansions.hpp"
#include "negapoly/special.hpp"

namespace negapoly {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kSpecialReferenceTol = 1e-10;
constexpr double kSpecialOracleTol = 1e-8;

std::string number(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string csv_number(double x) { return std::isfinite(x) ? number(x) : ""; }

std::string quoted(std::string_view s) { return nlohmann::json(std::string(s)).dump(); }

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

VerificationRecord blank(std::string suite, std::string name, double q) {
  VerificationRecord r;
  r.suite = std::move(suite);
  r.name = std::move(name);
  r.q = q;
  r.closed_value = r.oracle_value = r.reference_value = kNaN;
  r.abs_diff = r.rel_diff = r.reference_diff = r.oracle_error_estimate = r.threshold = kNaN;
  return r;
}

std::string member_name(const FamilyId& id) {
  return std::string(to_string(id.family)) + "_" + std::to_string(id.index) + "/" + std::string(to_string(id.kernel));
}

VerificationRecord family_record(const FamilyId& id, double q, const SuiteConfig& config) {
  const bool closed = has_closed_form(id);
  VerificationRecord r = blank(closed ? "closed_form" : "no_closed_form", member_name(id), q);
  r.family = id;
  r.has_family = true;
  bool oracle_ok = true;
  try {
    const auto o = oracle(id, q, config.oracle_rel_tol);
    r.oracle_value = o.value;
    r.oracle_error_estimate = o.abs_error_estimate;
    r.evaluations = o.evaluations;
  } catch (const AccuracyError& e) {
    r.oracle_value = e.best_value();
    r.oracle_error_estimate = e.best_error();
    oracle_ok = false;
  }
  if (!closed) {
    r.status = oracle_ok ? RecordStatus::NoClosedForm : RecordStatus::Fail;
    return r;
  }
  r.closed_value = closed_form(id, q).value;
  r.abs_diff = std::abs(r.closed_value - r.oracle_value);
  r.rel_diff = r.closed_value != 0 ? r.abs_diff / std::abs(r.closed_value) : r.abs_diff;
  r.threshold = std::max(config.rel_tol * std::abs(r.closed_value), config.safety_factor * r.oracle_error_estimate);
  r.status = (oracle_ok && r.abs_diff <= r.threshold) ? RecordStatus::Pass : RecordStatus::Fail;
  return r;
}

VerificationRecord residual_record(std::string name, double q, double residual, double threshold) {
  VerificationRecord r = blank("identity", std::move(name), q);
  r.closed_value = residual;
  r.abs_diff = std::abs(residual);
  r.threshold = threshold;
  r.status = r.abs_diff <= threshold ? RecordStatus::Pass : RecordStatus::Fail;
  return r;
}

VerificationRecord exact_record(std::string name, std::size_t cases, std::size_t mismatches) {
  VerificationRecord r = blank("identity", std::move(name), kNaN);
  r.closed_value = static_cast<double>(cases);
  r.abs_diff = static_cast<double>(mismatches);
  r.threshold = 0;
  r.status = mismatches == 0 ? RecordStatus::Pass : RecordStatus::Fail;
  return r;
}

std::vector<VerificationRecord> exact_identity_records() {
  std::vector<VerificationRecord> out;
  std::size_t cases = 0;
  std::size_t bad = 0;
  for (int m = 1; m <= 40; ++m) {
    for (int j = 0; j <= (m - 1) / 2; ++j) {
      const auto [lhs, rhs] = binomial_collapse_identity(m, j);
      ++cases;
      if (lhs != rhs) ++bad;
    }
  }
  out.push_back(exact_record("binomial_collapse(m<=40)", cases, bad));

  cases = bad = 0;
  for (int k = 1; k <= 25; ++k) {
    for (int p = 1; p <= k; ++p) {
      const BigInt expected = p == k ? BigInt(k % 2 == 0 ? k : -k) : BigInt(0);
      ++cases;
      if (orthogonality_sum(k, p) != expected) ++bad;
    }
  }
  out.push_back(exact_record("orthogonality_sum(k<=25)", cases, bad));

  cases = bad = 0;
  for (int k = 1; k <= 25; ++k) {
    const auto [s1, s2] = evaluation_sums(k);
    cases += 2;
    if (s1 != (BigInt(1) << (2 * k - 1))) ++bad;
    if (s2 != binomial(2 * k, k) * k) ++bad;
  }
  out.push_back(exact_record("evaluation_sums(k<=25)", cases, bad));

  cases = bad = 0;
  for (int m = 1; m <= 20; ++m) {
    for (Parity parity : {Parity::SineLike, Parity::CosineLike}) {
      const auto converted = to_one_plus_t2_basis(trig_poly_in_t(m, parity));
      const auto direct = trig_poly_in_1pt2(m, parity);
      ++cases;
      if (converted.coeffs != direct.coeffs) ++bad;
    }
  }
  out.push_back(exact_record("trig_basis_conversion(m<=20)", cases, bad));
  return out;
}

bool in_grid(double q, const std::vector<double>& grid) {
  return std::find(grid.begin(), grid.end(), q) != grid.end();
}

VerificationRecord special_record(const SpecialValueRow& row) {
  VerificationRecord r = blank("special_value", row.name, row.q);
  r.closed_value = row.closed;
  r.oracle_value = row.oracle;
  r.reference_value = row.symbolic;
  r.oracle_error_estimate = row.oracle_error;
  r.abs_diff = std::abs(row.closed - row.oracle);
  r.rel_diff = row.closed != 0 ? r.abs_diff / std::abs(row.closed) : r.abs_diff;
  r.reference_diff = std::abs(row.closed - row.symbolic);
  r.threshold = kSpecialOracleTol;
  const bool ok = r.reference_diff <= kSpecialReferenceTol && r.abs_diff <= kSpecialOracleTol;
  r.status = ok ? RecordStatus::Pass : RecordStatus::Fail;
  return r;
}

std::string config_json(const SuiteConfig& c) {
  std::string grid = "[";
  for (std::size_t i = 0; i < c.q_grid.size(); ++i) grid += (i ? "," : "") + number(c.q_grid[i]);
  grid += "]";
  std::ostringstream os;
  os << "{\"rel_tol\":" << number(c.rel_tol) << ",\"safety_factor\":" << number(c.safety_factor)
     << ",\"q_grid\":" << grid << ",\"k_max_I\":" << c.k_max_I << ",\"k_max_T\":" << c.k_max_T
     << ",\"k_max_L\":" << c.k_max_L << ",\"k_max_variant\":" << c.k_max_variant
     << ",\"oracle_rel_tol\":" << number(c.oracle_rel_tol) << ",\"format\":" << quoted(to_string(c.format)) << "}";
  return os.str();
}

void write_json_record(const VerificationRecord& r, std::ostream& out) {
  out << "{\"type\":\"record\",\"suite\":" << quoted(r.suite) << ",\"name\":" << quoted(r.name);
  if (r.has_family) {
    out << ",\"family\":" << quoted(to_string(r.family.family)) << ",\"index\":" << r.family.index
        << ",\"kernel\":" << quoted(to_string(r.family.kernel));
  } else {
    out << ",\"family\":null,\"index\":null,\"kernel\":null";
  }
  out << ",\"q\":" << number(r.q) << ",\"closed_value\":" << number(r.closed_value)
      << ",\"oracle_value\":" << number(r.oracle_value) << ",\"reference_value\":" << number(r.reference_value)
      << ",\"abs_diff\":" << number(r.abs_diff) << ",\"rel_diff\":" << number(r.rel_diff)
      << ",\"reference_diff\":" << number(r.reference_diff)
      << ",\"oracle_error_estimate\":" << number(r.oracle_error_estimate) << ",\"threshold\":" << number(r.threshold)
      << ",\"evaluations\":" << r.evaluations << ",\"status\":" << quoted(to_string(r.status)) << "}\n";
}

constexpr const char* kCsvHeader =
    "suite,name,family,index,kernel,q,closed_value,oracle_value,reference_value,abs_diff,rel_diff,"
    "reference_diff,oracle_error_estimate,threshold,evaluations,status\n";

void write_csv_record(const VerificationRecord& r, std::ostream& out) {
  out << csv_field(r.suite) << ',' << csv_field(r.name) << ',';
  if (r.has_family) {
    out << to_string(r.family.family) << ',' << r.family.index << ',' << to_string(r.family.kernel) << ',';
  } else {
    out << ",,,";
  }
  out << csv_number(r.q) << ',' << csv_number(r.closed_value) << ',' << csv_number(r.oracle_value) << ','
      << csv_number(r.reference_value) << ',' << csv_number(r.abs_diff) << ',' << csv_number(r.rel_diff) << ','
      << csv_number(r.reference_diff) << ',' << csv_number(r.oracle_error_estimate) << ','
      << csv_number(r.threshold) << ',' << r.evaluations << ',' << to_string(r.status) << '\n';
}

SuiteSummary summarize(const std::vector<VerificationRecord>& records) {
  SuiteSummary s;
  s.total = records.size();
  for (const auto& r : records) {
    switch (r.status) {
      case RecordStatus::Pass: ++s.passed; break;
      case RecordStatus::Fail: ++s.failed; break;
      case RecordStatus::NoClosedForm: ++s.no_closed_form; break;
    }
  }
  return s;
}

void check_range(bool ok, const std::string& what) {
  if (!ok) throw ArgumentError("config: " + what);
}

}  // namespace

std::string_view to_string(RecordStatus s) {
  switch (s) {
    case RecordStatus::Pass: return "pass";
    case RecordStatus::Fail: return "fail";
    case RecordStatus::NoClosedForm: return "no_closed_form";
  }
  return "?";
}

std::string_view to_string(OutputFormat f) { return f == OutputFormat::Json ? "json" : "csv"; }

std::string_view to_string(EvalMode m) {
  switch (m) {
    case EvalMode::Closed: return "closed";
    case EvalMode::Oracle: return "oracle";
    case EvalMode::Both: return "both";
  }
  return "?";
}

OutputFormat parse_format(std::string_view text) {
  if (text == "json") return OutputFormat::Json;
  if (text == "csv") return OutputFormat::Csv;
  throw ArgumentError("unknown format '" + std::string(text) + "' (expected json or csv)");
}

EvalMode parse_mode(std::string_view text) {
  if (text == "closed") return EvalMode::Closed;
  if (text == "oracle") return EvalMode::Oracle;
  if (text == "both") return EvalMode::Both;
  throw ArgumentError("unknown mode '" + std::string(text) + "' (expected closed, oracle or both)");
}

void SuiteConfig::validate() const {
  check_range(rel_tol >= 1e-13 && rel_tol <= 1e-3, "rel_tol must lie in [1e-13, 1e-3]");
  check_range(safety_factor > 0 && std::isfinite(safety_factor), "safety_factor must be > 0");
  check_range(oracle_rel_tol >= 1e-14 && oracle_rel_tol <= 1e-3, "oracle_rel_tol must lie in [1e-14, 1e-3]");
  for (double q : q_grid) check_range(q > 0 && std::isfinite(q), "q_grid entries must be finite and > 0");
  check_range(k_max_I >= 0 && k_max_I <= 40, "k_max_I must lie in [0, 40]");
  check_range(k_max_T >= 0 && k_max_T <= 20, "k_max_T must lie in [0, 20]");
  check_range(k_max_L >= 0 && k_max_L <= 20, "k_max_L must lie in [0, 20]");
  check_range(k_max_variant >= 0 && k_max_variant <= 20, "k_max_variant must lie in [0, 20]");
}

void SuiteConfig::merge_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ArgumentError(std::string("config: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ArgumentError("config: expected a JSON object");
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "rel_tol") rel_tol = value.get<double>();
      else if (key == "safety_factor") safety_factor = value.get<double>();
      else if (key == "q_grid") q_grid = value.get<std::vector<double>>();
      else if (key == "k_max_I") k_max_I = value.get<int>();
      else if (key == "k_max_T") k_max_T = value.get<int>();
      else if (key == "k_max_L") k_max_L = value.get<int>();
      else if (key == "k_max_variant") k_max_variant = value.get<int>();
      else if (key == "oracle_rel_tol") oracle_rel_tol = value.get<double>();
      else if (key == "format") format = parse_format(value.get<std::string>());
      else throw ArgumentError("config: unknown key '" + key + "'");
    }
  } catch (const nlohmann::json::type_error& e) {
    throw ArgumentError(std::string("config: wrong value type: ") + e.what());
  }
  validate();
}

SuiteConfig SuiteConfig::from_environment() {
  SuiteConfig c;
  const char* path = std::getenv("NEGAPOLY_CONFIG");
  if (path == nullptr || *path == '\0') return c;
  std::ifstream in(path);
  if (!in) throw std::runtime_error(std::string("cannot read config file ") + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  c.merge_json(buffer.str());
  return c;
}

SuiteReport verify_suite(const SuiteConfig& config) {
  config.validate();
  SuiteReport report;
  report.config = config;
  if (config.q_grid.empty()) return report;

  std::vector<double> grid = config.q_grid;
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  std::vector<FamilyId> members;
  const KernelKind kernels[] = {KernelKind::BoseMinus, KernelKind::FermiPlus, KernelKind::Csch};
  for (int k = 0; k <= config.k_max_I; ++k) members.push_back({Family::I, k, KernelKind::BoseMinus});
  for (int k = 1; k <= config.k_max_variant; ++k) {
    members.push_back({Family::I, k, KernelKind::FermiPlus});
    members.push_back({Family::I, k, KernelKind::Csch});
  }
  for (int k = 0; k <= std::max(config.k_max_T, config.k_max_variant); ++k) {
    for (KernelKind kernel : kernels) {
      const int limit = kernel == KernelKind::BoseMinus ? config.k_max_T : config.k_max_variant;
      if (k <= limit) members.push_back({Family::T, 2 * k, kernel});
    }
  }
  for (int k = 0; k < config.k_max_T; ++k) members.push_back({Family::T, 2 * k + 1, KernelKind::BoseMinus});
  for (int k = 0; k <= std::max(config.k_max_L, config.k_max_variant); ++k) {
    for (KernelKind kernel : kernels) {
      const int limit = kernel == KernelKind::BoseMinus ? config.k_max_L : config.k_max_variant;
      if (k <= limit) members.push_back({Family::L, 2 * k + 1, kernel});
    }
  }
  for (int k = 0; k <= config.k_max_L; ++k) members.push_back({Family::L, 2 * k, KernelKind::BoseMinus});

  std::sort(members.begin(), members.end(), [](const FamilyId& a, const FamilyId& b) {
    return std::tuple(static_cast<int>(a.family), a.index, static_cast<int>(a.kernel)) <
           std::tuple(static_cast<int>(b.family), b.index, static_cast<int>(b.kernel));
  });
  for (const auto& id : members) {
    for (double q : grid) report.records.push_back(family_record(id, q, config));
  }

  for (double q : grid) {
    for (int m = 1; m <= 8; ++m) {
      report.records.push_back(residual_record("I_recursion(m=" + std::to_string(m) + ")", q,
                                               I_recursion_check(m, q), config.rel_tol));
    }
    for (int m = 0; m <= 8; ++m) {
      report.records.push_back(
          residual_record("jplusk(m=" + std::to_string(m) + ")", q, jplusk_residual(m, q), config.rel_tol));
    }
    for (int m = 0; m <= 8; ++m) {
      const double scale = std::max(1.0, std::abs(bernoulli_polynomial(m + 1, q)));
      report.records.push_back(residual_record("bernoulli_from_hurwitz(m=" + std::to_string(m) + ")", q,
                                               bernoulli_from_hurwitz_check(m, q), config.rel_tol * scale));
    }
  }
  for (auto& r : exact_identity_records()) report.records.push_back(std::move(r));

  for (const auto& row : special_value_table(true)) {
    if (in_grid(row.q, grid)) report.records.push_back(special_record(row));
  }
  report.summary = summarize(report.records);
  return report;
}

void write_report(const SuiteReport& report, std::ostream& out) {
  const auto& s = report.summary;
  if (report.config.format == OutputFormat::Json) {
    out << "{\"type\":\"header\",\"schema_version\":" << kReportSchemaVersion
        << ",\"generator\":\"negapoly\",\"config\":" << config_json(report.config) << "}\n";
    for (const auto& r : report.records) write_json_record(r, out);
    out << "{\"type\":\"summary\",\"total\":" << s.total << ",\"pass\":" << s.passed << ",\"fail\":" << s.failed
        << ",\"no_closed_form\":" << s.no_closed_form << "}\n";
  } else {
    out << kCsvHeader;
    for (const auto& r : report.records) write_csv_record(r, out);
    out << "# schema_version=" << kReportSchemaVersion << " total=" << s.total << " pass=" << s.passed
        << " fail=" << s.failed << " no_closed_form=" << s.no_closed_form << '\n';
  }
  if (!out) throw std::runtime_error("failed to write report");
}

int eval_cmd(const FamilyId& id, double q, EvalMode mode, const SuiteConfig& config, std::ostream& out,
             std::ostream& err) {
  VerificationRecord r = blank("eval", member_name(id), q);
  r.family = id;
  r.has_family = true;
  int code = 0;
  try {
    require_positive(q, "eval");
    if (id.index < 0) throw ArgumentError("eval: k must be >= 0");
    if (mode != EvalMode::Oracle) {
      if (!has_closed_form(id)) {
        throw NoClosedFormError("no closed form for " + member_name(id) + ", use --mode oracle");
      }
      r.closed_value = closed_form(id, q).value;
    }
    if (mode != EvalMode::Closed) {
      try {
        const auto o = oracle(id, q, config.oracle_rel_tol);
        r.oracle_value = o.value;
        r.oracle_error_estimate = o.abs_error_estimate;
        r.evaluations = o.evaluations;
      } catch (const AccuracyError& e) {
        r.oracle_value = e.best_value();
        r.oracle_error_estimate = e.best_error();
        err << "error: " << e.what() << '\n';
        code = 1;
      }
    }
    if (mode == EvalMode::Both) {
      r.abs_diff = std::abs(r.closed_value - r.oracle_value);
      r.rel_diff = r.closed_value != 0 ? r.abs_diff / std::abs(r.closed_value) : r.abs_diff;
      r.threshold =
          std::max(config.rel_tol * std::abs(r.closed_value), config.safety_factor * r.oracle_error_estimate);
      if (!(r.abs_diff <= r.threshold)) code = 1;
    }
    r.status = code == 0 ? RecordStatus::Pass : RecordStatus::Fail;
  } catch (const NoClosedFormError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  if (config.format == OutputFormat::Json) {
    write_json_record(r, out);
  } else {
    out << kCsvHeader;
    write_csv_record(r, out);
  }
  return code;
}

int table_cmd(std::string_view which, OutputFormat format, std::ostream& out, std::ostream& err) {
  const bool json = format == OutputFormat::Json;
  if (which == "special_values") {
    if (!json) out << "name,expression,q,closed,symbolic,oracle,oracle_error\n";
    for (const auto& row : special_value_table(true)) {
      if (json) {
        out << "{\"name\":" << quoted(row.name) << ",\"expression\":" << quoted(row.expression)
            << ",\"q\":" << number(row.q) << ",\"closed\":" << number(row.closed)
            << ",\"symbolic\":" << number(row.symbolic) << ",\"oracle\":" << number(row.oracle)
            << ",\"oracle_error\":" << number(row.oracle_error) << "}\n";
      } else {
        out << csv_field(row.name) << ',' << csv_field(row.expression) << ',' << number(row.q) << ','
            << number(row.closed) << ',' << number(row.symbolic) << ',' << number(row.oracle) << ','
            << number(row.oracle_error) << '\n';
      }
    }
    return 0;
  }
  if (which == "bernoulli") {
    if (!json) out << "k,fraction,value\n";
    for (int k = 0; k <= 20; ++k) {
      const Rational b = bernoulli_number(k);
      if (json) {
        out << "{\"k\":" << k << ",\"fraction\":" << quoted(b.to_string()) << ",\"value\":" << number(b.to_double())
            << "}\n";
      } else {
        out << k << ',' << b.to_string() << ',' << number(b.to_double()) << '\n';
      }
    }
    return 0;
  }
  if (which == "constants") {
    const auto& c = special_constants();
    const std::pair<const char*, double> rows[] = {
        {"euler_gamma", c.euler_gamma}, {"catalan", c.catalan},   {"zeta_prime_minus1", c.zeta_prime_minus1},
        {"ln_gamma_quarter", c.ln_gamma_quarter}, {"ln_sqrt_2pi", c.ln_sqrt_2pi}, {"ln2", c.ln2},
        {"ln_pi", c.ln_pi}};
    if (!json) out << "name,value\n";
    for (const auto& [name, value] : rows) {
      if (json) {
        out << "{\"name\":" << quoted(name) << ",\"value\":" << number(value) << "}\n";
      } else {
        out << name << ',' << number(value) << '\n';
      }
    }
    return 0;
  }
  err << "error: unknown table '" << which << "' (expected special_values, bernoulli or constants)\n";
  return 2;
}

}  // namespace negapoly
