// negapoly: evaluate and verify integral closed forms.
//
//   negapoly eval --family T --k 0 --kernel bose --q 1 --mode both
//   negapoly verify --format json --out report.jsonl
//   negapoly table special_values

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "negapoly/errors.hpp"
#include "negapoly/harness.hpp"

namespace {

struct Options {
  std::string family = "T";
  int k = 0;
  std::string kernel = "bose";
  double q = 1;
  std::string mode = "both";
  std::string table;
  std::optional<double> rel_tol;
  std::optional<std::string> format;
  std::string out_path;
};

std::ostream& output_stream(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot open output file " + path);
  return file;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Closed forms of integrals against Bose, Fermi and csch kernels"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&opt](CLI::App* cmd) {
    cmd->add_option("--rel-tol", opt.rel_tol, "Relative tolerance for closed form vs oracle");
    cmd->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", opt.out_path, "Output path (default stdout)");
  };

  auto* eval = app.add_subcommand("eval", "Evaluate one integral");
  eval->add_option("--family", opt.family, "I, T or L")->check(CLI::IsMember({"I", "T", "L", "i", "t", "l"}));
  eval->add_option("--k", opt.k, "Family index")->check(CLI::NonNegativeNumber);
  eval->add_option("--kernel", opt.kernel, "bose, fermi or csch")->check(CLI::IsMember({"bose", "fermi", "csch"}));
  eval->add_option("--q", opt.q, "Kernel parameter q > 0");
  eval->add_option("--mode", opt.mode, "closed, oracle or both")->check(CLI::IsMember({"closed", "oracle", "both"}));
  add_common(eval);

  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  add_common(verify);

  auto* table = app.add_subcommand("table", "Print a reference table");
  table->add_option("which", opt.table, "special_values, bernoulli or constants")->required();
  add_common(table);

  CLI11_PARSE(app, argc, argv);

  try {
    negapoly::SuiteConfig config = negapoly::SuiteConfig::from_environment();
    if (opt.rel_tol) config.rel_tol = *opt.rel_tol;
    if (opt.format) config.format = negapoly::parse_format(*opt.format);
    config.validate();

    std::ofstream file;
    std::ostream& out = output_stream(opt.out_path, file);

    if (*eval) {
      const negapoly::FamilyId id{negapoly::parse_family(opt.family), opt.k, negapoly::parse_kernel(opt.kernel)};
      return negapoly::eval_cmd(id, opt.q, negapoly::parse_mode(opt.mode), config, out, std::cerr);
    }
    if (*verify) {
      const auto report = negapoly::verify_suite(config);
      negapoly::write_report(report, out);
      const auto& s = report.summary;
      std::cerr << "verify: " << s.total << " records, " << s.passed << " pass, " << s.failed << " fail, "
                << s.no_closed_form << " oracle only\n";
      return s.failed == 0 ? 0 : 1;
    }
    return negapoly::table_cmd(opt.table, config.format, out, std::cerr);
  } catch (const negapoly::ArgumentError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}
