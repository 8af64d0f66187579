#include "gjps/slice_basis.hpp"

#include <algorithm>
#include <stdexcept>

namespace gjps {

int component_count(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::Omega0:
    case SpaceKind::Omega3:
    case SpaceKind::X0:
    case SpaceKind::X3:
    case SpaceKind::PlanarB:
      return 1;
    case SpaceKind::PlanarB2:
      return 2;
    default:
      return 3;
  }
}

int kind_arity(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::PlanarB:
    case SpaceKind::PlanarB2:
      return 2;
    default:
      return 3;
  }
}

const char* kind_name(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::Omega0: return "Omega0";
    case SpaceKind::Omega1: return "Omega1";
    case SpaceKind::Omega2: return "Omega2";
    case SpaceKind::Omega3: return "Omega3";
    case SpaceKind::X0: return "X0";
    case SpaceKind::X1: return "X1";
    case SpaceKind::X2: return "X2";
    case SpaceKind::X3: return "X3";
    case SpaceKind::PlanarB: return "PlanarB";
    case SpaceKind::PlanarB2: return "PlanarB2";
  }
  return "?";
}

std::vector<long> component_degrees(SpaceKind kind, long grade, const WeightSystem& w) {
  if (w.arity() != kind_arity(kind)) {
    throw std::invalid_argument("weight system arity does not match space kind");
  }
  const long total = w.total();
  switch (kind) {
    case SpaceKind::Omega3:
    case SpaceKind::X0:
      return {grade};
    case SpaceKind::Omega2:
    case SpaceKind::X1:
      return {grade + w.weight(0), grade + w.weight(1), grade + w.weight(2)};
    case SpaceKind::Omega1:
    case SpaceKind::X2:
      return {grade + total - w.weight(0), grade + total - w.weight(1), grade + total - w.weight(2)};
    case SpaceKind::Omega0:
    case SpaceKind::X3:
      return {grade + total};
    case SpaceKind::PlanarB:
      return {grade};
    case SpaceKind::PlanarB2:
      return {grade + w.weight(0), grade + w.weight(1)};
  }
  throw std::logic_error("unreachable");
}

long form_to_slice_grade(long form_grade, const WeightSystem& w) { return form_grade - w.total(); }
long slice_to_form_grade(long slice_grade, const WeightSystem& w) { return slice_grade + w.total(); }

long ProductBasis::dimension() const {
  long d = 0;
  for (const auto& c : components) d += c.dimension();
  return d;
}

std::pair<int, Monomial> ProductBasis::element(long flat_index) const {
  for (size_t c = 0; c < components.size(); ++c) {
    long local = flat_index - offsets[c];
    if (local >= 0 && local < components[c].dimension()) {
      return {static_cast<int>(c), components[c].monomials[static_cast<size_t>(local)]};
    }
  }
  throw std::out_of_range("basis index");
}

std::optional<long> ProductBasis::index_of(int component, const Monomial& m) const {
  const auto& mons = components[static_cast<size_t>(component)].monomials;
  auto it = std::lower_bound(mons.begin(), mons.end(), m);
  if (it == mons.end() || !(*it == m)) return std::nullopt;
  return offsets[static_cast<size_t>(component)] + (it - mons.begin());
}

ProductBasis slice_basis(SpaceKind kind, long grade, const WeightSystem& w) {
  ProductBasis basis;
  basis.kind = kind;
  basis.grade = grade;
  long offset = 0;
  for (long degree : component_degrees(kind, grade, w)) {
    basis.components.push_back(monomial_basis(degree, w));
    basis.offsets.push_back(offset);
    offset += basis.components.back().dimension();
  }
  return basis;
}

SliceValue zero_value(const ProductBasis& basis) {
  int arity = kind_arity(basis.kind);
  if (component_count(basis.kind) == 1) return Polynomial::zero(arity);
  return VectorField::zero(arity);
}

SliceValue basis_value(const ProductBasis& basis, long flat_index) {
  auto [component, monomial] = basis.element(flat_index);
  int arity = kind_arity(basis.kind);
  Polynomial p = Polynomial::monomial(monomial, 1);
  if (component_count(basis.kind) == 1) return p;
  std::vector<Polynomial> comps(static_cast<size_t>(component_count(basis.kind)),
                                Polynomial::zero(arity));
  comps[static_cast<size_t>(component)] = p;
  return VectorField(std::move(comps));
}

namespace {

void decompose_polynomial(const ProductBasis& basis, int component, const Polynomial& p,
                          SparseVec& out) {
  for (const auto& [m, c] : p.terms()) {
    auto idx = basis.index_of(component, m);
    if (!idx) {
      throw InhomogeneousImageError(std::string("term ") + m.to_string(default_variable_names(m.arity())) +
                                    " outside " + kind_name(basis.kind) + " slice at grade " +
                                    std::to_string(basis.grade));
    }
    out.set(*idx, c);
  }
}

}  // namespace

SparseVec decompose(const ProductBasis& basis, const SliceValue& value) {
  SparseVec out;
  if (std::holds_alternative<Polynomial>(value)) {
    if (component_count(basis.kind) != 1) throw std::invalid_argument("expected a field value");
    decompose_polynomial(basis, 0, std::get<Polynomial>(value), out);
  } else {
    const auto& field = std::get<VectorField>(value);
    if (component_count(basis.kind) != field.dimension()) {
      throw std::invalid_argument("field dimension does not match space kind");
    }
    for (int c = 0; c < field.dimension(); ++c) decompose_polynomial(basis, c, field[c], out);
  }
  return out;
}

QMatrix matrix_of_map(const ProductBasis& source, const ProductBasis& target,
                      const std::function<SliceValue(const SliceValue&)>& f) {
  QMatrix m(target.dimension(), source.dimension());
  for (long j = 0; j < source.dimension(); ++j) {
    m.set_column(j, decompose(target, f(basis_value(source, j))));
  }
  return m;
}

}  // namespace gjps
