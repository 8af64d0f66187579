#include <doctest.h>

#include "gjps/report.hpp"
#include "test_util.hpp"

using namespace gjps;

namespace {

ProblemSpec exgur_spec(long max_grade = 8) {
  ProblemSpec spec;
  spec.lambda_text = "z";
  spec.casimir_text = "x*y + 1/2*z^2";
  spec.weights = {1, 1, 1};
  spec.max_grade = max_grade;
  spec.mode = StructureMode::Section6;
  return spec;
}

}  // namespace

TEST_CASE("problem file parsing") {
  ProblemSpec spec = ProblemSpec::parse(
      "# comment\n"
      "lambda = z\n"
      "casimir = x*y + 1/2*z^2   # inline comment\n"
      "weights = 1, 1, 1\n"
      "max_grade = 9\n"
      "mode = section6\n"
      "checks = milnor modular\n");
  CHECK(spec.lambda_text == "z");
  CHECK(spec.casimir_text == "x*y + 1/2*z^2");
  CHECK(spec.weights == std::vector<int>{1, 1, 1});
  CHECK(spec.max_grade == 9);
  CHECK(spec.mode == StructureMode::Section6);
  CHECK(spec.checks == std::vector<std::string>{"milnor", "modular"});
  CHECK(spec.wants("milnor"));
  CHECK_FALSE(spec.wants("series"));
}

TEST_CASE("problem file validation errors") {
  CHECK_THROWS_AS(ProblemSpec::parse("lambda = z\n"), InputError);
  CHECK_THROWS_AS(ProblemSpec::parse("lambda = z\ncasimir = x\nweights = 1 1\nmode = section5\n"),
                  InputError);
  CHECK_THROWS_AS(
      ProblemSpec::parse("lambda = z\ncasimir = x\nweights = 0 1 1\nmode = section5\n"),
      InputError);
  CHECK_THROWS_AS(
      ProblemSpec::parse("lambda = z\ncasimir = x\nweights = 1 1 1\nmode = section7\n"),
      InputError);
  CHECK_THROWS_AS(ProblemSpec::parse("lambda = z\ncasimir = x\nweights = 1 1 1\nmode = section5\n"
                                     "checks = nonsense\n"),
                  InputError);
  CHECK_THROWS_AS(ProblemSpec::parse("bogus line\n"), InputError);
  CHECK_THROWS_AS(ProblemSpec::parse("lambda = z\ncasimir = x\nweights = 1 1 1\nmode = section5\n"
                                     "max_grade = -2\n"),
                  InputError);
  CHECK_THROWS_AS(ProblemSpec::parse_file("/nonexistent/problem.txt"), InputError);
}

TEST_CASE("default checks depend on the mode") {
  ProblemSpec spec = exgur_spec();
  CHECK(spec.effective_checks().size() == known_checks().size());
  spec.mode = StructureMode::Section5;
  auto checks = spec.effective_checks();
  CHECK(std::find(checks.begin(), checks.end(), "structure") == checks.end());
}

TEST_CASE("analyze produces a deterministic machine-readable report") {
  ProblemSpec spec = exgur_spec(6);
  spec.checks = {"homology", "series", "milnor", "modular"};
  AnalysisResult a = analyze(spec);
  AnalysisResult b = analyze(spec);
  CHECK(a.report.dump(2) == b.report.dump(2));
  CHECK(a.all_checks_pass);

  const auto& r = a.report;
  CHECK(r["structure"]["lambda"] == "z");
  CHECK(r["structure"]["shift"] == 0);
  CHECK(r["homology"]["PH_0"]["dims"] == std::vector<long>{1, 3, 3, 5, 5, 7, 7});
  CHECK(r["series"]["quadratic_case"] == true);
  CHECK(r["series"]["ph1_matching_closed_form"] == "sequence_derived");
  CHECK(r["milnor"]["milnor"] == 1);
  CHECK(r["modular"]["verdict"] == "NONTRIVIAL");
  CHECK(r["modular"]["field"] == "(-x, y, 0)");

  std::string table = render_table(a);
  CHECK(table.find("PH_0") != std::string::npos);
  std::string verify = render_verify(a);
  CHECK(verify.find("NOTE PH_1 printed numerator discrepancy") != std::string::npos);
  CHECK(verify.find("PASS overall") != std::string::npos);
}

TEST_CASE("analyze maps malformed polynomials to InputError") {
  ProblemSpec spec = exgur_spec();
  spec.casimir_text = "x*y + 1/2*w^2";
  CHECK_THROWS_AS(analyze(spec), InputError);
}

TEST_CASE("analyze surfaces hypothesis failures with check names") {
  ProblemSpec spec = exgur_spec();
  spec.casimir_text = "x^2";
  spec.mode = StructureMode::Section5;
  try {
    analyze(spec);
    FAIL("expected HypothesisError");
  } catch (const HypothesisError& e) {
    CHECK(e.check() == "isolated_singularity");
  }

  // Requesting a section-5 check on a structure without a regular sequence.
  ProblemSpec control = exgur_spec();
  control.lambda_text = "1";
  control.mode = StructureMode::Section5;
  control.checks = {"homology"};
  try {
    analyze(control);
    FAIL("expected HypothesisError");
  } catch (const HypothesisError& e) {
    CHECK(e.check() == "regular_sequence");
  }

  // The same structure is fine for the modular check alone.
  control.checks = {"modular"};
  AnalysisResult result = analyze(control);
  CHECK(result.report["modular"]["verdict"] == "TRIVIAL");
  CHECK(result.all_checks_pass);
}

TEST_CASE("nh report echoes the rescaled section-6 data") {
  ProblemSpec spec;
  spec.lambda_text = "z";
  spec.casimir_text = "x^2 + y^2 + z^3";
  spec.weights = {3, 3, 2};
  spec.max_grade = 8;
  spec.mode = StructureMode::Section6;
  spec.checks = {"milnor", "modular"};
  AnalysisResult result = analyze(spec);
  const auto& s6 = result.report["structure"]["section6"];
  CHECK(s6["z_coefficient"] == "3");
  CHECK(s6["casimir_rescaled"] == true);
  CHECK(s6["r"] == 1);
  CHECK(result.report["milnor"]["planar_milnor"] == 1);
  CHECK(result.report["milnor"]["relation_mu_P_eq_r_plus_1_mu_planar"] == true);
}
