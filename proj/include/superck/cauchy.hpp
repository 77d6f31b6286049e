#pragma once

#include "superck/ck.hpp"
#include "superck/planewave.hpp"

namespace sck {

// The Appell-log family G_l(z) = z^l/l! ln z - a_l z^l with
// a_{l+1} = (a_l + 1/(l+1)!)/(l+1), a_0 = 0.
struct AppellLogFamily {
    int k = 0;
    std::vector<Rat> a;  // a_0 .. a_{2k}
};
AppellLogFamily appell_log(int k);

// Taylor data of G_{2k} along the imaginary axis (principal branch, x0 > 0):
// the log symbol enters the coefficients.
HoloProvider appell_log_provider(int k);

// Fundamental solution of the block's super Laplacian over the radial ring
// (no x0); throws for the logarithmic bosonic dimensions.
SuperElement fundamental_solution_laplace(const SigPtr& sig, int block);

// Cauchy kernel -(1/sigma_{M+1}) (x0 - x) |x0 - x|^{-(M+1)}, M+1 not in -2N0.
SuperElement cauchy_kernel_fraction(const SigPtr& sig, int block);
// The same kernel assembled from the bosonic kernels of Delta_{m+1|0}^{j}.
SuperElement cauchy_kernel_generator_sum(const SigPtr& sig, int block);
// Power series in x with exact coefficients in x0 (the x0 > 0 branch),
// through x-degree N.
CKSeries cauchy_kernel_series(const SigPtr& sig, int block, int N);

struct PwdckReport {
    CKCase tag = CKCase::I;
    bool pass = false;
    bool log_terms_seen = false;  // case ii: the integrand genuinely carries logs
    std::string witness;
};

// Plane wave decomposition of the Cauchy kernel: both sides expanded through
// x-degree N (exact and finite when m = 0) and compared coefficientwise.
PwdckReport verify_pwdck(const SigPtr& sig, int x_block, int w_block, int N);

}  // namespace sck
