#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gjps/rational_matrix.hpp"
#include "gjps/vector_field.hpp"
#include "gjps/weight_system.hpp"

namespace gjps {

/// Graded carrier spaces. Omega0..3 and X0..3 all use the grading of the
/// displayed A-module isomorphisms:
///
///   Omega3_i = X0_i = A_i
///   Omega2_i = X1_i = A_{i+w1} x A_{i+w2} x A_{i+w3}
///   Omega1_i = X2_i = A_{i+w2+w3} x A_{i+w1+w3} x A_{i+w1+w2}
///   Omega0_i = X3_i = A_{i+|w|}
///
/// The natural form grading on Omega^k (dx_i carrying weight w_i) is this
/// grade plus |w|; conversion helpers below expose that view. The planar
/// kinds are B_i and B_{i+w1'} x B_{i+w2'}.
enum class SpaceKind { Omega0, Omega1, Omega2, Omega3, X0, X1, X2, X3, PlanarB, PlanarB2 };

int component_count(SpaceKind kind);
int kind_arity(SpaceKind kind);  // 3 spatial, 2 planar
const char* kind_name(SpaceKind kind);
std::vector<long> component_degrees(SpaceKind kind, long grade, const WeightSystem& w);

// form grade = slice grade + |w| for the Omega kinds.
long form_to_slice_grade(long form_grade, const WeightSystem& w);
long slice_to_form_grade(long slice_grade, const WeightSystem& w);

/// Ordered concatenation of the monomial bases of the component slices.
struct ProductBasis {
  SpaceKind kind = SpaceKind::X0;
  long grade = 0;
  std::vector<GradedSliceBasis> components;
  std::vector<long> offsets;  // flat index of each component's first element

  long dimension() const;
  std::pair<int, Monomial> element(long flat_index) const;
  std::optional<long> index_of(int component, const Monomial& m) const;
};

ProductBasis slice_basis(SpaceKind kind, long grade, const WeightSystem& w);

/// A slice element: a polynomial for 1-component kinds, a field otherwise.
using SliceValue = std::variant<Polynomial, VectorField>;

SliceValue basis_value(const ProductBasis& basis, long flat_index);
SliceValue zero_value(const ProductBasis& basis);

/// Error raised when an operator image does not decompose in the declared
/// target slice (wrong shift or grading convention).
class InhomogeneousImageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

SparseVec decompose(const ProductBasis& basis, const SliceValue& value);

// Matrix whose column j is f applied to source basis element j, expressed in
// the target basis.
QMatrix matrix_of_map(const ProductBasis& source, const ProductBasis& target,
                      const std::function<SliceValue(const SliceValue&)>& f);

}  // namespace gjps
