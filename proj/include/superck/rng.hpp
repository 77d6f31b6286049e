#pragma once

#include <algorithm>
#include <numeric>

#include "superck/element.hpp"

namespace sck {

// Deterministic splitmix64 generator; identical streams on every platform.
class Rng {
public:
    explicit Rng(uint64_t seed) : s_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    uint64_t next() {
        uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
    }

    Rat rational() {
        long num = range(-6, 6);
        if (num == 0) num = 1;
        return Rat(num, range(1, 4));
    }

private:
    uint64_t s_;
};

// Random homogeneous scalar-valued polynomial of the given block degree;
// returns zero when the block admits no monomial of that degree.
inline SuperElement random_homogeneous(const SigPtr& sig, int block, int deg, Rng& rng,
                                       int nterms = 5) {
    SuperElement r(sig);
    const Block& blk = sig->block(block);
    if (deg == 0) return SuperElement::constant(sig, Scalar(rng.rational()));
    for (int t = 0; t < nterms; ++t) {
        int g = -1;
        for (int tries = 0; tries < 64; ++tries) {
            int cand = static_cast<int>(rng.range(0, std::min(deg, 2 * blk.n)));
            if (blk.m == 0 && cand != deg) continue;
            g = cand;
            break;
        }
        if (g < 0) continue;
        TermKey key;
        key.bos.assign(sig->total_bos(), 0);
        key.weyl.assign(sig->total_pairs(), {0, 0});
        std::vector<int> ferm(2 * blk.n);
        std::iota(ferm.begin(), ferm.end(), 0);
        for (int i = 0; i < g; ++i) {
            int j = static_cast<int>(rng.range(i, static_cast<long>(ferm.size()) - 1));
            std::swap(ferm[i], ferm[j]);
            key.grass |= uint64_t(1) << (sig->ferm_offset(block) + ferm[i]);
        }
        int rest = deg - g;
        for (int i = 0; i < blk.m && rest > 0; ++i) {
            int take = (i == blk.m - 1) ? rest : static_cast<int>(rng.range(0, rest));
            key.bos[sig->bos_offset(block) + i] = static_cast<uint8_t>(take);
            rest -= take;
        }
        if (rest > 0) continue;
        r.add_term(key, Scalar(rng.rational()));
    }
    return r;
}

inline SuperElement random_polynomial(const SigPtr& sig, int block, int maxdeg, Rng& rng,
                                      int nterms = 6) {
    SuperElement r(sig);
    for (int t = 0; t < nterms; ++t) {
        int d = static_cast<int>(rng.range(0, maxdeg));
        r = r + random_homogeneous(sig, block, d, rng, 1);
    }
    return r;
}

// Polynomial in x0 with random rational coefficients.
inline SuperElement random_x0_polynomial(const SigPtr& sig, int maxdeg, Rng& rng) {
    Scalar s;
    for (int d = 0; d <= maxdeg; ++d)
        if (rng.range(0, 2) != 0) s = s + Scalar(rng.rational()) * Scalar::x0pow(d);
    if (s.is_zero()) s = Scalar(Rat(1));
    return SuperElement::constant(sig, s);
}

}  // namespace sck
