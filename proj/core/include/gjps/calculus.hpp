#pragma once

#include "gjps/vector_field.hpp"
#include "gjps/weight_system.hpp"

namespace gjps {

// Spatial operators on A = K[x,y,z] and A^3.

VectorField grad(const Polynomial& f);
VectorField curl(const VectorField& g);
Polynomial divergence(const VectorField& g);

VectorField cross(const VectorField& f, const VectorField& g);
Polynomial dot(const VectorField& f, const VectorField& g);
// triple(F,G,H) = F.(G x H), invariant under cyclic permutation.
Polynomial triple(const VectorField& f, const VectorField& g, const VectorField& h);

// Euler field e_w = (w1*x, w2*y, w3*z), or its planar analogue; Div(e_w) = |w|.
VectorField euler_field(const WeightSystem& w);

// Planar operators on B = K[x,y] and B^2.

// box(F) = (dF/dy, -dF/dx), the second de Rham arrow's source map.
VectorField box(const Polynomial& f);
VectorField grad2(const Polynomial& f);
Polynomial div2(const VectorField& k);
// curl2(F) = dF2/dx - dF1/dy.
Polynomial curl2(const VectorField& f);

// Embeds a planar polynomial into K[x,y,z] (z-exponent zero).
Polynomial embed_planar(const Polynomial& f);
// Drops z; throws if the polynomial actually involves z.
Polynomial restrict_planar(const Polynomial& f);

}  // namespace gjps
