// verify: run the eTNC criteria on one or more problem files.
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "etnc/errors.hpp"
#include "etnc/io.hpp"

namespace {

int combine(int acc, int code) {
  // input error > fail > inconclusive > pass
  auto rank = [](int c) { return c == 3 ? 3 : c == 1 ? 2 : c == 2 ? 1 : 0; };
  return rank(code) > rank(acc) ? code : acc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verify explicit eTNC criteria for abelian varieties over cyclic p-power extensions"};
  std::vector<std::string> files;
  std::vector<std::string> checks;
  std::string tol, denom_bound, report_path, fetch_endpoint, format = "text";
  long precision_bits = etnc::kDefaultPrecision;
  int threads = 1;
  bool normalize = false;

  app.add_option("files", files, "problem files (etnc-problem/1 JSON)")->required()->check(CLI::ExistingFile);
  app.add_option("--check", checks, "checks to run: rat, max, zpg, cor1, bsd, all (repeatable)")
      ->check(CLI::IsMember({"rat", "max", "zpg", "cor1", "bsd", "all"}));
  app.add_option("--tol", tol, "residual tolerance (decimal), overrides the digit-based default");
  app.add_option("--denom-bound", denom_bound, "largest denominator accepted by rational recognition");
  app.add_option("--precision-bits", precision_bits, "working precision in bits")->check(CLI::Range(64L, 1L << 16));
  app.add_option("--threads", threads, "worker threads for orbit recognition")->check(CLI::Range(1, 256));
  app.add_option("--report", report_path, "write the JSON report to this path");
  app.add_option("--format", format, "stdout format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--fetch", fetch_endpoint, "metadata endpoint used to fill missing curve fields");
  app.add_flag("--normalize", normalize, "print the normalized problem file instead of verifying");
  CLI11_PARSE(app, argc, argv);

  etnc::RunConfig config;
  for (const auto& c : checks)
    if (c != "all") config.checks.insert(c);
  config.prec = precision_bits;
  config.threads = threads;
  try {
    if (!tol.empty()) config.tol = etnc::parse_decimal(tol);
    if (!denom_bound.empty()) config.denom_bound = etnc::Integer(denom_bound, 10);
  } catch (const std::exception& e) {
    std::cerr << "input error: bad numeric option: " << e.what() << "\n";
    return 3;
  }

  int exit_code = 0;
  etnc::Json reports = etnc::Json::array();
  for (const auto& file : files) {
    try {
      etnc::ProblemFile pf = etnc::load_problem(file);
      if (normalize) {
        std::cout << etnc::to_json(pf).dump(2) << "\n";
        continue;
      }
      if (!fetch_endpoint.empty()) {
        try {
          etnc::merge_missing(pf.curve, etnc::fetch_metadata(pf.curve.label, fetch_endpoint));
        } catch (const etnc::NetworkError& e) {
          std::cerr << "warning: " << e.what() << "\n";
        }
      }
      const etnc::VerificationReport rep = etnc::run_all(pf, config);
      if (format == "json")
        std::cout << rep.to_json().dump(2) << "\n";
      else
        std::cout << rep.to_text();
      reports.push_back(rep.to_json());
      exit_code = combine(exit_code, rep.exit_code());
    } catch (const etnc::SchemaError& e) {
      std::cerr << "input error: " << file << ": " << e.what() << "\n";
      exit_code = combine(exit_code, 3);
    } catch (const etnc::Error& e) {
      std::cerr << "input error: " << file << ": " << e.what() << "\n";
      exit_code = combine(exit_code, 3);
    }
  }
  if (!report_path.empty() && !normalize) {
    std::ofstream out(report_path);
    if (!out) {
      std::cerr << "cannot write report to " << report_path << "\n";
      return 3;
    }
    out << (reports.size() == 1 ? reports[0] : reports).dump(2) << "\n";
  }
  return exit_code;
}
