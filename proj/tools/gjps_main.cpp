// gjps: exact Poisson (co)homology of generalized Jacobian Poisson
// structures on K[x,y,z].
//
// Subcommands:
//   analyze <file> [--json out.json] [--max-grade N]   full dimension tables
//   verify  <file>                                     PASS/FAIL per statement
//   series  <file> --i {0..3}                          one homology series
//   milnor  <file>                                     Milnor data only
//
// Exit codes: 0 success, 2 malformed input, 3 failed mathematical
// hypothesis (the failing check is named on stderr). GJPS_THREADS caps the
// number of worker threads.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "gjps/calculus.hpp"
#include "gjps/parser.hpp"
#include "gjps/report.hpp"
#include "gjps/singularity.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailedChecks = 1;
constexpr int kExitInput = 2;
constexpr int kExitHypothesis = 3;

int run_analyze(const std::string& path, const std::string& json_path, long max_grade_override) {
  gjps::ProblemSpec spec = gjps::ProblemSpec::parse_file(path);
  if (max_grade_override >= 0) spec.max_grade = max_grade_override;
  gjps::AnalysisResult result = gjps::analyze(spec);
  std::cout << gjps::render_table(result);
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw gjps::InputError("cannot write JSON report: " + json_path);
    out << result.report.dump(2) << "\n";
  }
  return kExitOk;
}

int run_verify(const std::string& path) {
  gjps::ProblemSpec spec = gjps::ProblemSpec::parse_file(path);
  gjps::AnalysisResult result = gjps::analyze(spec);
  std::cout << gjps::render_verify(result);
  return result.all_checks_pass ? kExitOk : kExitFailedChecks;
}

int run_series(const std::string& path, int index) {
  gjps::ProblemSpec spec = gjps::ProblemSpec::parse_file(path);
  spec.checks = {"homology", "series"};
  gjps::AnalysisResult result = gjps::analyze(spec);
  const auto& series = result.report["series"];
  const std::string key = "PH_" + std::to_string(index);
  std::cout << "computed " << key << ": " << series["computed"][key].dump() << "\n";
  std::cout << "sequence-derived: " << series["sequence_derived"][key]["closed_form"].get<std::string>()
            << " -> " << series["sequence_derived"][key]["expansion"].dump() << "\n";
  if (series["quadratic_case"].get<bool>()) {
    std::cout << "printed: " << series["printed"][key]["closed_form"].get<std::string>() << " -> "
              << series["printed"][key]["expansion"].dump() << "\n";
    if (index == 1) {
      std::cout << "PH_1 matching closed form: "
                << series["ph1_matching_closed_form"].get<std::string>() << "\n";
    }
  }
  return kExitOk;
}

int run_milnor(const std::string& path) {
  gjps::ProblemSpec spec = gjps::ProblemSpec::parse_file(path);
  gjps::Polynomial casimir =
      gjps::parse_polynomial(spec.casimir_text, gjps::default_variable_names(3));
  gjps::WeightSystem weights(spec.weights);
  auto info = casimir.weight_degree(weights);
  if (casimir.is_zero() || !info.homogeneous) {
    throw gjps::HypothesisError("weight_homogeneous_casimir", "Casimir must be nonzero and homogeneous");
  }
  gjps::SingularityRing ring = gjps::analyze_singularity(casimir, weights);
  std::cout << "quotient dims: [";
  for (size_t i = 0; i < ring.quotient_dims.size(); ++i) {
    std::cout << (i ? "," : "") << ring.quotient_dims[i];
  }
  std::cout << "]  cutoff " << ring.cutoff << "\n";
  if (!ring.milnor) {
    std::cout << "milnor: NON_ISOLATED\n";
    throw gjps::HypothesisError("isolated_singularity", "Casimir has a non-isolated singularity");
  }
  std::cout << "milnor: " << *ring.milnor << "\nbasis:";
  for (const auto& m : ring.basis) std::cout << " " << m.to_string(gjps::default_variable_names(3));
  std::cout << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Poisson (co)homology of GJPS on K[x,y,z]"};
  app.require_subcommand(1);

  std::string path, json_path;
  long max_grade_override = -1;
  int series_index = 0;

  auto* analyze_cmd = app.add_subcommand("analyze", "Run the full analysis pipeline");
  analyze_cmd->add_option("file", path, "problem file")->required();
  analyze_cmd->add_option("--json", json_path, "write the machine-readable report here");
  analyze_cmd->add_option("--max-grade", max_grade_override, "override max_grade");

  auto* verify_cmd = app.add_subcommand("verify", "PASS/FAIL line per paper statement");
  verify_cmd->add_option("file", path, "problem file")->required();

  auto* series_cmd = app.add_subcommand("series", "Print one Poisson homology series");
  series_cmd->add_option("file", path, "problem file")->required();
  series_cmd->add_option("--i", series_index, "homology index 0..3")
      ->required()
      ->check(CLI::Range(0, 3));

  auto* milnor_cmd = app.add_subcommand("milnor", "Milnor number and singularity basis");
  milnor_cmd->add_option("file", path, "problem file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze_cmd->parsed()) return run_analyze(path, json_path, max_grade_override);
    if (verify_cmd->parsed()) return run_verify(path);
    if (series_cmd->parsed()) return run_series(path, series_index);
    if (milnor_cmd->parsed()) return run_milnor(path);
  } catch (const gjps::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const gjps::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const gjps::HypothesisError& e) {
    std::cerr << "hypothesis failure: " << e.check() << ": " << e.what() << "\n";
    return kExitHypothesis;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
