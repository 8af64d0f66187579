#include "gjps/gjps_structure.hpp"

#include <numeric>

#include "gjps/calculus.hpp"

namespace gjps {

namespace {

long require_homogeneous(const Polynomial& p, const WeightSystem& w, const std::string& check,
                         const std::string& what) {
  if (p.is_zero()) throw HypothesisError(check, what + " must be nonzero");
  auto info = p.weight_degree(w);
  if (!info.homogeneous) {
    throw HypothesisError(check, what + " is not weight homogeneous for weights " +
                                     [&] {
                                       std::string s;
                                       for (int i = 0; i < w.arity(); ++i) {
                                         if (i) s += ",";
                                         s += std::to_string(w.weight(i));
                                       }
                                       return "(" + s + ")";
                                     }());
  }
  return *info.degree;
}

Section6Data split_section6(Polynomial& casimir, const Polynomial& lambda, const WeightSystem& w,
                            long casimir_degree) {
  if (!(lambda == Polynomial::variable(3, 2))) {
    throw HypothesisError("section6_lambda_is_z", "section 6 requires lambda = z");
  }
  Polynomial planar3(3);  // z-free part, still in three variables
  std::optional<std::pair<int, Rational>> z_term;
  for (const auto& [m, c] : casimir.terms()) {
    if (m.exponent(2) == 0) {
      planar3.add_term(m, c);
    } else if (m.exponent(0) == 0 && m.exponent(1) == 0) {
      if (z_term) throw HypothesisError("section6_casimir_form", "more than one pure z power");
      z_term = {m.exponent(2), c};
    } else {
      throw HypothesisError("section6_casimir_form",
                            "Casimir mixes z with x,y; needs P = Ptilde(x,y) + c/(r+2) z^(r+2)");
    }
  }
  if (!z_term) {
    throw HypothesisError("section6_casimir_form", "Casimir has no pure z^(r+2) term");
  }
  auto [m_exp, coeff] = *z_term;
  if (m_exp < 2) {
    throw HypothesisError("section6_casimir_form", "z exponent must be at least 2 (r >= 0)");
  }
  if (planar3.is_zero()) {
    throw HypothesisError("section6_casimir_form", "planar part Ptilde must be nonzero");
  }

  Section6Data data{.planar_casimir = Polynomial(2),
                    .z_exponent = m_exp,
                    .r = m_exp - 2,
                    .z_coefficient = coeff * m_exp,
                    .normalized = false,
                    .planar_weights = WeightSystem({w.weight(0), w.weight(1)}),
                    .alpha = std::gcd(w.weight(0), w.weight(1)),
                    .planar_degree = 0,
                    .planar_singularity = {}};

  // The theorems are stated for c = 1; scaling the Casimir by 1/c is exact
  // and leaves every dimension and quotient unchanged.
  if (data.z_coefficient != 1) {
    casimir = casimir * (Rational(1) / data.z_coefficient);
    data.normalized = true;
    planar3 = planar3 * (Rational(1) / data.z_coefficient);
  }
  data.planar_casimir = restrict_planar(planar3);

  auto planar_info = data.planar_casimir.weight_degree(data.planar_weights);
  if (!planar_info.homogeneous) {
    throw HypothesisError("section6_casimir_form", "Ptilde not homogeneous for the planar weights");
  }
  data.planar_degree = *planar_info.degree;
  if (data.planar_degree * data.alpha != casimir_degree) {
    throw HypothesisError("section6_casimir_form", "planar degree inconsistent with w(P)");
  }
  data.planar_singularity = analyze_singularity(data.planar_casimir, data.planar_weights);
  if (!data.planar_singularity.milnor) {
    throw HypothesisError("planar_isolated_singularity",
                          "Ptilde does not have an isolated singularity in K[x,y]");
  }
  return data;
}

}  // namespace

GjpsStructure GjpsStructure::create(Polynomial lambda, Polynomial casimir, WeightSystem weights,
                                    StructureMode mode) {
  return create(std::move(lambda), std::move(casimir), std::move(weights), mode, Options{});
}

GjpsStructure GjpsStructure::create(Polynomial lambda, Polynomial casimir, WeightSystem weights,
                                    StructureMode mode, const Options& options) {
  if (weights.arity() != 3 || lambda.arity() != 3 || casimir.arity() != 3) {
    throw std::invalid_argument("GJPS structures live on K[x,y,z]");
  }
  long wl = require_homogeneous(lambda, weights, "weight_homogeneous_lambda", "lambda");
  long wp = require_homogeneous(casimir, weights, "weight_homogeneous_casimir", "Casimir");
  (void)wl;

  std::shared_ptr<const Section6Data> section6;
  if (mode == StructureMode::Section6) {
    section6 = std::make_shared<const Section6Data>(split_section6(casimir, lambda, weights, wp));
  }

  SingularityRing sing = analyze_singularity(casimir, weights);
  if (!sing.milnor) {
    throw HypothesisError("isolated_singularity", "Casimir does not have an isolated singularity");
  }
  bool regular = regular_sequence_check(lambda, casimir, weights, options.validation_bound);

  return GjpsStructure(std::move(lambda), std::move(casimir), std::move(weights), mode, options,
                       std::move(sing), regular, std::move(section6));
}

GjpsStructure::GjpsStructure(Polynomial lambda, Polynomial casimir, WeightSystem weights,
                             StructureMode mode, Options options, SingularityRing sing,
                             bool regular_ok, std::shared_ptr<const Section6Data> section6)
    : lambda_(std::move(lambda)),
      casimir_(std::move(casimir)),
      weights_(std::move(weights)),
      mode_(mode),
      options_(options),
      grad_lambda_(grad(lambda_)),
      grad_casimir_(grad(casimir_)),
      casimir_singularity_(std::move(sing)),
      regular_sequence_ok_(regular_ok),
      section6_(std::move(section6)) {
  lambda_degree_ = *lambda_.weight_degree(weights_).degree;
  casimir_degree_ = *casimir_.weight_degree(weights_).degree;
}

void GjpsStructure::require_section5(const std::string& operation) const {
  if (!regular_sequence_ok_) {
    throw HypothesisError("regular_sequence",
                          operation + " needs (lambda, P) to be a regular sequence");
  }
}

void GjpsStructure::require_section6(const std::string& operation) const {
  require_section5(operation);
  if (!section6_) {
    throw HypothesisError("section6_mode", operation + " needs the section-6 hypotheses");
  }
}

}  // namespace gjps
