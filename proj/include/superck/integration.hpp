#pragma once

#include "superck/element.hpp"

namespace sck {

// Berezin integral over one block's anticommuting coordinates:
// pi^{-n} d_{2n} ... d_1.
SuperElement berezin(const SuperElement& f, int block);

// Supersphere integral of a polynomial via the Pizzetti expansion
//   sum_j 2 pi^{M/2} / (2^{2j} j! Gamma(j + M/2)) Delta^j[.]|_0.
// A radial weight |.|^a of the integration block is evaluated at 1 first;
// other blocks' variables stay as spectators.
SuperElement sphere_integral(const SuperElement& f, int block);

// Independent evaluation for m >= 1: expand the delta supported on the
// supersphere, Berezin integrate the Grassmann part pairwise, and reduce each
// bosonic monomial with the classical sphere integral and the t-derivative
// pairing <delta^(j)(1-t), h> = h^(j)(1).
SuperElement sphere_integral_oracle(const SuperElement& f, int block);

// Normalized integral for superdimension M = -2k on polynomials of degree
// <= 2k + 1: (1/k!) P_k(-Delta/4)[.]|_0, P_k(z) = sum (k-j)!/j! z^j, scaled
// by the radial weight's value at 1.
SuperElement normalized_integral(const SuperElement& f, int block,
                                 const Scalar& weight_at_1 = Scalar(1));

// Appell polynomial coefficient (k-j)!/j! of P_k.
Rat appell_coefficient(int k, int j);

}  // namespace sck
