#include "gjps/vector_field.hpp"

#include <stdexcept>

namespace gjps {

VectorField::VectorField(std::vector<Polynomial> components) : components_(std::move(components)) {
  if (components_.size() < 2 || components_.size() > 3) {
    throw std::invalid_argument("vector field needs 2 or 3 components");
  }
  int arity = components_[0].arity();
  if (static_cast<int>(components_.size()) != arity) {
    throw std::invalid_argument("component count must equal the variable count");
  }
  for (const auto& c : components_) {
    if (c.arity() != arity) throw std::invalid_argument("components must share arity");
  }
}

VectorField VectorField::zero(int dimension) {
  return VectorField(std::vector<Polynomial>(static_cast<size_t>(dimension), Polynomial::zero(dimension)));
}

VectorField VectorField::spatial(Polynomial a, Polynomial b, Polynomial c) {
  return VectorField({std::move(a), std::move(b), std::move(c)});
}

VectorField VectorField::planar(Polynomial a, Polynomial b) {
  return VectorField({std::move(a), std::move(b)});
}

bool VectorField::is_zero() const {
  for (const auto& c : components_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

VectorField VectorField::operator+(const VectorField& other) const {
  if (other.dimension() != dimension()) throw std::invalid_argument("dimension mismatch");
  std::vector<Polynomial> out;
  out.reserve(components_.size());
  for (size_t i = 0; i < components_.size(); ++i) out.push_back(components_[i] + other.components_[i]);
  return VectorField(std::move(out));
}

VectorField VectorField::operator-(const VectorField& other) const {
  return *this + (-other);
}

VectorField VectorField::operator-() const {
  std::vector<Polynomial> out;
  out.reserve(components_.size());
  for (const auto& c : components_) out.push_back(-c);
  return VectorField(std::move(out));
}

VectorField VectorField::operator*(const Rational& c) const {
  std::vector<Polynomial> out;
  out.reserve(components_.size());
  for (const auto& comp : components_) out.push_back(comp * c);
  return VectorField(std::move(out));
}

std::string VectorField::to_string() const {
  std::string out = "(";
  for (int i = 0; i < dimension(); ++i) {
    if (i) out += ", ";
    out += components_[static_cast<size_t>(i)].to_string();
  }
  return out + ")";
}

VectorField operator*(const Polynomial& f, const VectorField& g) {
  std::vector<Polynomial> out;
  out.reserve(static_cast<size_t>(g.dimension()));
  for (int i = 0; i < g.dimension(); ++i) out.push_back(f * g[i]);
  return VectorField(std::move(out));
}

VectorField operator*(const Rational& c, const VectorField& g) { return g * c; }

}  // namespace gjps
