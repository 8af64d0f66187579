#pragma once

#include "gjps/calculus.hpp"
#include "gjps/gjps_structure.hpp"

namespace gjps {

// {f,g} = lambda * (df ^ dg ^ dP)/(dx ^ dy ^ dz) = lambda * grad f . (grad g x grad P).
Polynomial bracket(const Polynomial& f, const Polynomial& g, const GjpsStructure& s);

// The derivation g -> {f,g}, concretely -grad f x (lambda grad P); coincides
// with coboundary0(f).
VectorField hamiltonian_field(const Polynomial& f, const GjpsStructure& s);

/// Representative of the modular class for the volume form dx^dy^dz.
struct ModularField {
  VectorField field;
  static constexpr const char* volume_form = "dx^dy^dz";
};

// grad lambda x grad P; div(hamiltonian_field(f)) = modular . grad f for all f.
ModularField modular_field(const GjpsStructure& s);

// Poisson boundary: 0 -> A --d3--> A^3 --d2--> A^3 --d1--> A -> 0.
Polynomial boundary1(const VectorField& h, const GjpsStructure& s);
VectorField boundary2(const VectorField& g, const GjpsStructure& s);
VectorField boundary3(const Polynomial& u, const GjpsStructure& s);

// Poisson coboundary: 0 -> A --delta0--> A^3 --delta1--> A^3 --delta2--> A -> 0.
VectorField coboundary0(const Polynomial& f, const GjpsStructure& s);
VectorField coboundary1(const VectorField& f, const GjpsStructure& s);
Polynomial coboundary2(const VectorField& g, const GjpsStructure& s);

// Koszul complex of P: F -> F grad P, G -> G x grad P, G -> G . grad P.
VectorField koszul0(const Polynomial& f, const Polynomial& casimir);
VectorField koszul1(const VectorField& g, const Polynomial& casimir);
Polynomial koszul2(const VectorField& g, const Polynomial& casimir);

}  // namespace gjps
