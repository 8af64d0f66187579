#include "gjps/calculus.hpp"

#include <stdexcept>

namespace gjps {

namespace {
void require_arity(int actual, int expected, const char* what) {
  if (actual != expected) {
    throw std::invalid_argument(std::string(what) + ": expected arity " + std::to_string(expected));
  }
}
}  // namespace

VectorField grad(const Polynomial& f) {
  require_arity(f.arity(), 3, "grad");
  return VectorField::spatial(f.derivative(0), f.derivative(1), f.derivative(2));
}

VectorField curl(const VectorField& g) {
  require_arity(g.dimension(), 3, "curl");
  return VectorField::spatial(g[2].derivative(1) - g[1].derivative(2),
                              g[0].derivative(2) - g[2].derivative(0),
                              g[1].derivative(0) - g[0].derivative(1));
}

Polynomial divergence(const VectorField& g) {
  require_arity(g.dimension(), 3, "divergence");
  return g[0].derivative(0) + g[1].derivative(1) + g[2].derivative(2);
}

VectorField cross(const VectorField& f, const VectorField& g) {
  require_arity(f.dimension(), 3, "cross");
  require_arity(g.dimension(), 3, "cross");
  return VectorField::spatial(f[1] * g[2] - f[2] * g[1],
                              f[2] * g[0] - f[0] * g[2],
                              f[0] * g[1] - f[1] * g[0]);
}

Polynomial dot(const VectorField& f, const VectorField& g) {
  if (f.dimension() != g.dimension()) throw std::invalid_argument("dot: dimension mismatch");
  Polynomial acc = Polynomial::zero(f.arity());
  for (int i = 0; i < f.dimension(); ++i) acc = acc + f[i] * g[i];
  return acc;
}

Polynomial triple(const VectorField& f, const VectorField& g, const VectorField& h) {
  return dot(f, cross(g, h));
}

VectorField euler_field(const WeightSystem& w) {
  std::vector<Polynomial> comps;
  for (int i = 0; i < w.arity(); ++i) {
    comps.push_back(Polynomial::variable(w.arity(), i) * Rational(w.weight(i)));
  }
  return VectorField(std::move(comps));
}

VectorField box(const Polynomial& f) {
  require_arity(f.arity(), 2, "box");
  return VectorField::planar(f.derivative(1), -f.derivative(0));
}

VectorField grad2(const Polynomial& f) {
  require_arity(f.arity(), 2, "grad2");
  return VectorField::planar(f.derivative(0), f.derivative(1));
}

Polynomial div2(const VectorField& k) {
  require_arity(k.dimension(), 2, "div2");
  return k[0].derivative(0) + k[1].derivative(1);
}

Polynomial curl2(const VectorField& f) {
  require_arity(f.dimension(), 2, "curl2");
  return f[1].derivative(0) - f[0].derivative(1);
}

Polynomial embed_planar(const Polynomial& f) {
  require_arity(f.arity(), 2, "embed_planar");
  Polynomial out(3);
  for (const auto& [m, c] : f.terms()) {
    out.add_term(Monomial{m.exponent(0), m.exponent(1), 0}, c);
  }
  return out;
}

Polynomial restrict_planar(const Polynomial& f) {
  require_arity(f.arity(), 3, "restrict_planar");
  Polynomial out(2);
  for (const auto& [m, c] : f.terms()) {
    if (m.exponent(2) != 0) throw std::invalid_argument("restrict_planar: polynomial involves z");
    out.add_term(Monomial{m.exponent(0), m.exponent(1)}, c);
  }
  return out;
}

}  // namespace gjps
