#include "superck/integration.hpp"

#include <bit>

#include "superck/operators.hpp"

namespace sck {

namespace {

// Evaluate the radial weight of the integration block at 1; reject radial
// factors that mix in x0 or another block.
SuperElement strip_block_weight(const SuperElement& f, int block) {
    if (!f.has_radial()) return f;
    const RadialBase& rb = *f.radial_base();
    if (rb.block != block) return f;
    if (rb.with_x0) throw domain_error("radial weight involves x0; not a function of |x|");
    return f.radial_weight_stripped();
}

void check_polynomial(const SuperElement& f, int block) {
    if (f.has_radial() && f.radial_base()->block == block)
        throw domain_error("integrand is not polynomial in the integration block");
}

}  // namespace

SuperElement berezin(const SuperElement& f, int block) {
    const SigPtr& sig = f.sig();
    const Block& blk = sig->block(block);
    SuperElement g = f;
    for (int v = 0; v < 2 * blk.n; ++v) g = partial_ferm(g, sig->ferm_offset(block) + v);
    return g.scaled(Scalar::sqrtpi(-2 * blk.n));
}

SuperElement sphere_integral(const SuperElement& f, int block) {
    const SigPtr& sig = f.sig();
    SuperElement g = strip_block_weight(f, block);
    check_polynomial(g, block);
    int M = sig->superdim(block);
    SuperElement result(sig);
    if (g.radial_base()) result.set_radial_base(*g.radial_base());
    for (int j = 0; !g.is_zero(); ++j) {
        Scalar coef = Scalar(Rat(2)) * Scalar::sqrtpi(M) * gamma_recip_exact(2 * j + M) *
                      Scalar(Rat(1, Int(Int(1) << (2 * j)) * factorial(j)));
        if (!coef.is_zero()) result = result + g.eval_zero_block(block).scaled(coef);
        g = laplacian(g, block);
    }
    return result;
}

SuperElement sphere_integral_oracle(const SuperElement& f, int block) {
    const SigPtr& sig = f.sig();
    const Block& blk = sig->block(block);
    if (blk.m == 0) throw domain_error("oracle needs at least one bosonic coordinate");
    SuperElement g = strip_block_weight(f, block);
    check_polynomial(g, block);
    int n = blk.n, m = blk.m;
    int foff = sig->ferm_offset(block), boff = sig->bos_offset(block);
    SuperElement result(sig);
    if (g.radial_base()) result.set_radial_base(*g.radial_base());
    for (const auto& [k, c] : g.terms()) {
        // Grassmann part: pairs untouched by the term come from the delta's
        // xgrave^{2j} expansion; a half-covered pair kills the Berezin integral.
        std::vector<int> free_pairs;
        bool half = false;
        for (int p = 0; p < n && !half; ++p) {
            bool b1 = k.grass & (uint64_t(1) << (foff + 2 * p));
            bool b2 = k.grass & (uint64_t(1) << (foff + 2 * p + 1));
            if (b1 != b2) half = true;
            else if (!b1) free_pairs.push_back(p);
        }
        if (half) continue;
        int j = static_cast<int>(free_pairs.size());
        // permutation sign: (pair factors in ascending pair order) followed by
        // the term's own variables, sorted into the full ascending product
        std::vector<int> seq;
        for (int p : free_pairs) {
            seq.push_back(2 * p);
            seq.push_back(2 * p + 1);
        }
        for (int v = 0; v < 2 * n; ++v)
            if (k.grass & (uint64_t(1) << (foff + v))) seq.push_back(v);
        int inv = 0;
        for (size_t a = 0; a < seq.size(); ++a)
            for (size_t b = a + 1; b < seq.size(); ++b)
                if (seq[a] > seq[b]) ++inv;
        int sign = inv % 2 == 0 ? 1 : -1;

        // bosonic part: odd exponents integrate to zero over the sphere
        int d = 0;
        bool odd = false;
        for (int i = 0; i < m; ++i) {
            int e = k.bos[boff + i];
            if (e % 2 != 0) {
                odd = true;
                break;
            }
            d += e;
        }
        if (odd) continue;
        Scalar sph = Scalar(Rat(2));
        for (int i = 0; i < m; ++i) sph = sph * gamma_exact(k.bos[boff + i] + 1);
        sph = sph * gamma_recip_exact(d + m);
        // (1/2) (d/dt)^j [t^{(d+m)/2-1}] at t = 1, against the leading 2
        Rat tfac = falling(Rat(d + m - 2, 2), j);
        Scalar coef = Scalar(tfac) * sph * Scalar::sqrtpi(-2 * n);
        if (sign < 0) coef = -coef;

        TermKey nk = k;
        for (int i = 0; i < m; ++i) nk.bos[boff + i] = 0;
        for (int v = 0; v < 2 * n; ++v) nk.grass &= ~(uint64_t(1) << (foff + v));
        result.add_term(nk, c * coef);
    }
    return result;
}

Rat appell_coefficient(int k, int j) { return Rat(factorial(k - j)) / Rat(factorial(j)); }

SuperElement normalized_integral(const SuperElement& f, int block, const Scalar& weight_at_1) {
    const SigPtr& sig = f.sig();
    int M = sig->superdim(block);
    if (M > 0 || M % 2 != 0)
        throw domain_error("normalized integral defined for superdimension -2k");
    int k = -M / 2;
    SuperElement g = strip_block_weight(f, block);
    check_polynomial(g, block);
    if (g.block_degree(block) > 2 * k + 1)
        throw domain_error("normalized integral needs degree <= 2k+1");
    SuperElement result(sig);
    if (g.radial_base()) result.set_radial_base(*g.radial_base());
    for (int j = 0; j <= k && !g.is_zero(); ++j) {
        Rat coef = appell_coefficient(k, j) / Rat(factorial(k));
        coef *= Rat(j % 2 == 0 ? 1 : -1) / Rat(Int(1) << (2 * j));
        result = result + g.eval_zero_block(block).scaled(Scalar(coef));
        g = laplacian(g, block);
    }
    return result.scaled(weight_at_1);
}

}  // namespace sck
