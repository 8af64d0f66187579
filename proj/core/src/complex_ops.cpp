#include "gjps/complex_ops.hpp"

namespace gjps {

Polynomial bracket(const Polynomial& f, const Polynomial& g, const GjpsStructure& s) {
  return s.lambda() * triple(grad(f), grad(g), s.grad_casimir());
}

VectorField hamiltonian_field(const Polynomial& f, const GjpsStructure& s) {
  return -(s.lambda() * cross(grad(f), s.grad_casimir()));
}

ModularField modular_field(const GjpsStructure& s) {
  return ModularField{cross(s.grad_lambda(), s.grad_casimir())};
}

Polynomial boundary1(const VectorField& h, const GjpsStructure& s) {
  return -(s.lambda() * dot(curl(h), s.grad_casimir()));
}

VectorField boundary2(const VectorField& g, const GjpsStructure& s) {
  Polynomial pairing = s.lambda() * dot(g, s.grad_casimir());
  return -grad(pairing) + (s.lambda() * divergence(g)) * s.grad_casimir();
}

VectorField boundary3(const Polynomial& u, const GjpsStructure& s) {
  return -cross(grad(s.lambda() * u), s.grad_casimir());
}

VectorField coboundary0(const Polynomial& f, const GjpsStructure& s) {
  return -(s.lambda() * cross(grad(f), s.grad_casimir()));
}

VectorField coboundary1(const VectorField& f, const GjpsStructure& s) {
  Polynomial pairing = dot(f, s.grad_casimir());
  Polynomial factor = s.lambda() * divergence(f) - dot(f, s.grad_lambda());
  return -(s.lambda() * grad(pairing)) + factor * s.grad_casimir();
}

Polynomial coboundary2(const VectorField& g, const GjpsStructure& s) {
  return -(s.lambda() * dot(s.grad_casimir(), curl(g))) -
         dot(g, cross(s.grad_lambda(), s.grad_casimir()));
}

VectorField koszul0(const Polynomial& f, const Polynomial& casimir) {
  return f * grad(casimir);
}

VectorField koszul1(const VectorField& g, const Polynomial& casimir) {
  return cross(g, grad(casimir));
}

Polynomial koszul2(const VectorField& g, const Polynomial& casimir) {
  return dot(g, grad(casimir));
}

}  // namespace gjps
