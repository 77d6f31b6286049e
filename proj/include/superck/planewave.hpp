#pragma once

#include <functional>

#include "superck/ck.hpp"

namespace sck {

// Exact Taylor data of a holomorphic g along the imaginary axis: the value of
// da^j g_l(0, x0), l = 1 for the real part, l = 2 for the imaginary part.
struct HoloProvider {
    std::function<Scalar(int j, int l)> coef;
    std::string name;
};

// g(z) = z^d for any integer d (negative powers give the kernel integrands).
HoloProvider power_provider(int d);

// Integral over the w supersphere of exp(-<w,x> w d_y)[f0] (param_block >= 0)
// or exp(+<w,x> w d_{x0})[f0] (param_block = -1), materialized termwise.
// normalized picks the normalized integral; max_power caps the expansion when
// the derivative ladder of f0 does not terminate.
SuperElement pw_exp_integral(const SigPtr& sig, int x_block, int w_block, int param_block,
                             const SuperElement& f0, bool normalized, int max_power = -1);

// Purely fermionic variant: cosh - w sinh (parameter block) or cos + w sin
// (x0), against the normalized integral over the fermionic supersphere.
SuperElement pw_coshsinh_integral(const SigPtr& sig, int x_block, int w_block, int param_block,
                                  const SuperElement& f0);

// The plane wave decomposition of the generalized CK extension, in all three
// superdimension regimes and both parameter variants. The result equals
// ck_extend(...).materialize() on admissible data.
SuperElement pw_decompose(const SigPtr& sig, int x_block, int w_block, int param_block,
                          const SuperElement& f0,
                          const std::optional<SuperElement>& f2k1 = std::nullopt);

// Monogenic plane wave g(<x,w> - x0 w) truncated at x-degree N, over the
// radial ring in w (the |w| powers of the two-component form).
SuperElement holo_planewave(const SigPtr& sig, const HoloProvider& g, int x_block, int w_block,
                            int N);

// Termwise supersphere integral of g(<x,w> - x0 w) w^{l-1} dS_w through
// x-degree N: the radial |w| profile evaluates at 1 under the integral.
SuperElement pw_holo_integral(const SigPtr& sig, const HoloProvider& g, int ell, int x_block,
                              int w_block, int N);

struct TwoSidedReport {
    SuperElement lhs, rhs;
    bool pass = false;
};

// Supersphere integral of g(<x,w> - x0 w) w^{l-1}: the direct termwise
// integral against the plane-wave operator acting on g_l(0, x0).
TwoSidedReport pw_sphere_integral_holo(const SigPtr& sig, const HoloProvider& g, int ell,
                                       int x_block, int w_block, int N);

struct ThreeWayReport {
    SuperElement direct;         // normalized integral of the monomial plane wave
    SuperElement via_operator;   // (-1)^s times the plane-wave operator on x0^{2s+l-1}
    SuperElement via_laplacian;  // the closed Delta_w^{s+l-1} form
    bool pass = false;
};

// Monomial plane waves z^{2s+l-1} against the normalized integral, with the
// closed Laplacian reformulation; 2s + l - 1 <= 2k.
ThreeWayReport pw_normalized_monomial(const SigPtr& sig, int s, int ell, int x_block,
                                      int w_block);

}  // namespace sck
