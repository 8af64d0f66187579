#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

#include "gjps/polynomial.hpp"
#include "gjps/singularity.hpp"
#include "gjps/vector_field.hpp"
#include "gjps/weight_system.hpp"

namespace gjps {

/// A mathematical hypothesis failed; `check` names the failing verification
/// so the front end can report it and exit accordingly.
class HypothesisError : public std::runtime_error {
 public:
  HypothesisError(std::string check, const std::string& message)
      : std::runtime_error(message), check_(std::move(check)) {}
  const std::string& check() const { return check_; }

 private:
  std::string check_;
};

enum class StructureMode { Section5, Section6 };

/// Extra data available when the Casimir has the split form
/// P = Ptilde + (1/(r+2)) z^(r+2) with lambda = z.
struct Section6Data {
  Polynomial planar_casimir;    // Ptilde (normalized), 2 variables
  int z_exponent = 0;           // r+2
  int r = 0;
  Rational z_coefficient = 1;   // c as parsed, before normalization
  bool normalized = false;      // true when the Casimir was scaled by 1/c
  WeightSystem planar_weights;  // w' = (w1, w2)/gcd
  int alpha = 1;                // gcd(w1, w2)
  long planar_degree = 0;       // w'(Ptilde)
  SingularityRing planar_singularity;
};

/// The validated pair (lambda, P) with its weight system.
///
/// Construction enforces: both polynomials nonzero and weight homogeneous,
/// and P with an isolated singularity. The regular-sequence property is
/// verified up to a bound and stored as a verdict rather than enforced, so
/// that degenerate controls (a JPS with constant lambda never forms a
/// regular sequence with P) can still be built and probed for their modular
/// class. Operations that need the full hypotheses call require_section5 /
/// require_section6. Immutable after construction.
class GjpsStructure {
 public:
  struct Options {
    long validation_bound = 24;  // regular-sequence slice check bound
  };

  static GjpsStructure create(Polynomial lambda, Polynomial casimir, WeightSystem weights,
                              StructureMode mode);
  static GjpsStructure create(Polynomial lambda, Polynomial casimir, WeightSystem weights,
                              StructureMode mode, const Options& options);

  const Polynomial& lambda() const { return lambda_; }
  const Polynomial& casimir() const { return casimir_; }
  const WeightSystem& weights() const { return weights_; }
  StructureMode mode() const { return mode_; }

  long lambda_degree() const { return lambda_degree_; }
  long casimir_degree() const { return casimir_degree_; }
  // Shift of every boundary/coboundary arrow in the slice grading.
  long shift() const { return lambda_degree_ + casimir_degree_ - weights_.total(); }

  const VectorField& grad_lambda() const { return grad_lambda_; }
  const VectorField& grad_casimir() const { return grad_casimir_; }

  const SingularityRing& casimir_singularity() const { return casimir_singularity_; }
  bool regular_sequence_ok() const { return regular_sequence_ok_; }
  long validation_bound() const { return options_.validation_bound; }

  const Section6Data* section6() const { return section6_ ? section6_.get() : nullptr; }

  void require_section5(const std::string& operation) const;
  void require_section6(const std::string& operation) const;

 private:
  GjpsStructure(Polynomial lambda, Polynomial casimir, WeightSystem weights, StructureMode mode,
                Options options, SingularityRing sing, bool regular_ok,
                std::shared_ptr<const Section6Data> section6);

  Polynomial lambda_;
  Polynomial casimir_;
  WeightSystem weights_;
  StructureMode mode_;
  Options options_;
  long lambda_degree_ = 0;
  long casimir_degree_ = 0;
  VectorField grad_lambda_;
  VectorField grad_casimir_;
  SingularityRing casimir_singularity_;
  bool regular_sequence_ok_ = false;
  std::shared_ptr<const Section6Data> section6_;
};

}  // namespace gjps
