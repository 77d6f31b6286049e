#include "superck/harmonics.hpp"

#include <bit>
#include <functional>

#include "superck/integration.hpp"
#include "superck/linalg.hpp"

namespace sck {

std::vector<TermKey> monomial_basis(const SigPtr& sig, int block, int deg) {
    const Block& blk = sig->block(block);
    std::vector<TermKey> out;
    for (uint64_t g = 0; g < (uint64_t(1) << (2 * blk.n)); ++g) {
        int gd = std::popcount(g);
        if (gd > deg) continue;
        int rest = deg - gd;
        if (blk.m == 0 && rest != 0) continue;
        TermKey key;
        key.bos.assign(sig->total_bos(), 0);
        key.weyl.assign(sig->total_pairs(), {0, 0});
        key.grass = g << sig->ferm_offset(block);
        std::function<void(int, int)> rec = [&](int var, int left) {
            if (var == blk.m - 1) {
                key.bos[sig->bos_offset(block) + var] = static_cast<uint8_t>(left);
                out.push_back(key);
                key.bos[sig->bos_offset(block) + var] = 0;
                return;
            }
            for (int e = 0; e <= left; ++e) {
                key.bos[sig->bos_offset(block) + var] = static_cast<uint8_t>(e);
                rec(var + 1, left - e);
                key.bos[sig->bos_offset(block) + var] = 0;
            }
        };
        if (blk.m == 0)
            out.push_back(key);
        else
            rec(0, rest);
    }
    return out;
}

namespace {

QVec to_vector(const SuperElement& f, const std::vector<TermKey>& basis) {
    std::map<TermKey, int> index;
    for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);
    QVec v(basis.size(), Rat(0));
    for (const auto& [k, c] : f.terms()) {
        auto it = index.find(k);
        if (it == index.end()) throw domain_error("element outside the monomial basis");
        v[it->second] = c.as_rational();
    }
    return v;
}

SuperElement from_vector(const SigPtr& sig, const std::vector<TermKey>& basis, const QVec& v) {
    SuperElement f(sig);
    for (size_t i = 0; i < basis.size(); ++i)
        if (v[i] != 0) f.add_term(basis[i], Scalar(v[i]));
    return f;
}

}  // namespace

ProjectionResult harmonic_project(const SuperElement& r, int block) {
    const SigPtr& sig = r.sig();
    ProjectionResult res;
    int deg = r.block_degree(block);
    if (deg < 0) {
        res.reason = "zero input";
        return res;
    }
    for (const auto& [k, c] : r.terms()) {
        if (r.term_block_degree(k, block) != deg) {
            res.reason = "input is not homogeneous";
            return res;
        }
    }
    SuperElement h = r;
    if (deg >= 2) {
        std::vector<TermKey> qbasis = monomial_basis(sig, block, deg - 2);
        std::vector<TermKey> tbasis = qbasis;  // Delta(|x|^2 Q) is again of degree deg-2
        SuperElement nx2 = norm_squared(sig, block);
        QMat a(tbasis.size(), QVec(qbasis.size(), Rat(0)));
        for (size_t c = 0; c < qbasis.size(); ++c) {
            SuperElement q(sig);
            q.add_term(qbasis[c], Scalar(1));
            QVec col = to_vector(laplacian(nx2 * q, block), tbasis);
            for (size_t rix = 0; rix < tbasis.size(); ++rix) a[rix][c] = col[rix];
        }
        QVec rhs = to_vector(laplacian(r, block), tbasis);
        QVec sol;
        if (!solve_linear(std::move(a), std::move(rhs), sol)) {
            res.reason = "singular projection: Delta[R] is not in the image of Delta(|x|^2 .)";
            return res;
        }
        h = r - nx2 * from_vector(sig, qbasis, sol);
    }
    res.witness.element = h;
    res.witness.degree = deg;
    res.witness.block = block;
    res.witness.laplacian_zero = laplacian(h, block).is_zero();
    res.witness.euler_eigen = euler(h, block).equals(h.scaled(Scalar(Rat(deg))));
    res.success = res.witness.ok();
    if (!res.success && res.reason.empty()) res.reason = "certificates failed";
    return res;
}

std::vector<SuperElement> harmonic_basis(const SigPtr& sig, int block, int deg) {
    std::vector<TermKey> pbasis = monomial_basis(sig, block, deg);
    if (pbasis.empty()) return {};
    if (deg < 2) {
        std::vector<SuperElement> out;
        for (const auto& k : pbasis) {
            SuperElement f(sig);
            f.add_term(k, Scalar(1));
            out.push_back(f);
        }
        return out;
    }
    std::vector<TermKey> tbasis = monomial_basis(sig, block, deg - 2);
    QMat a(tbasis.size(), QVec(pbasis.size(), Rat(0)));
    for (size_t c = 0; c < pbasis.size(); ++c) {
        SuperElement mono(sig);
        mono.add_term(pbasis[c], Scalar(1));
        QVec col = to_vector(laplacian(mono, block), tbasis);
        for (size_t rix = 0; rix < tbasis.size(); ++rix) a[rix][c] = col[rix];
    }
    std::vector<SuperElement> out;
    for (const auto& v : null_space(std::move(a))) out.push_back(from_vector(sig, pbasis, v));
    return out;
}

SuperElement random_harmonic(const SigPtr& sig, int block, int deg, Rng& rng) {
    std::vector<SuperElement> basis = harmonic_basis(sig, block, deg);
    SuperElement h(sig);
    if (basis.empty()) return h;
    for (const auto& b : basis)
        if (rng.range(0, 1)) h = h + b.scaled(Scalar(rng.rational()));
    if (h.is_zero()) h = basis[static_cast<size_t>(rng.range(0, static_cast<long>(basis.size()) - 1))];
    return h;
}

Scalar fh_coefficient(int M, int l, int j) {
    if ((j + l) % 2 != 0 || j < l) return Scalar();
    Rat pre = Rat(factorial(j)) / Rat(factorial(j - l)) * Rat(2) / Rat(Int(1) << l);
    return Scalar(pre) * Scalar::sqrtpi(M - 1) * gamma_exact(j - l + 1) *
           gamma_recip_exact(M + j + l);
}

Scalar fh_coefficient_normalized(int k, int l, int j) {
    if (j + l > 2 * k + 1) throw domain_error("normalized Funk-Hecke needs j+l <= 2k+1");
    if ((j + l) % 2 != 0 || j < l) return Scalar();
    Rat pre = Rat(j % 2 == 0 ? 1 : -1) / Rat(Int(1) << l) *
              Rat(factorial(k - (j + l) / 2)) / Rat(factorial(k)) * Rat(factorial(j)) /
              Rat(factorial(j - l));
    return Scalar(pre) * Scalar::sqrtpi(-1) * gamma_exact(j - l + 1);
}

namespace {

FunkHeckeReport fh_verify_impl(const SigPtr& sig, int l, int j, Rng& rng, bool normalized) {
    FunkHeckeReport rep;
    int bx = sig->require_block("x"), bw = sig->require_block("w");
    int M = sig->superdim(bx);
    SuperElement hw = random_harmonic(sig, bw, l, rng);
    if (hw.is_zero()) return rep;  // trivial harmonic space: nothing to check
    // pass the seed through the Fischer projection: harmonics are fixed points
    ProjectionResult proj = harmonic_project(hw, bw);
    if (!proj.success || !proj.witness.element.equals(hw)) {
        rep.applicable = true;
        rep.witness = "projection is not the identity on a harmonic";
        return rep;
    }
    rep.applicable = true;
    SuperElement ip = inner_product(sig, bx, bw);
    SuperElement integrand = ip.pow(j) * hw;
    SuperElement hx = hw.rename_block_vars(bw, bx);
    SuperElement lhs(sig), rhs(sig);
    if (normalized) {
        lhs = normalized_integral(integrand, bw);
        SuperElement xpow = SuperElement::supervector(sig, bx).pow(j - l >= 0 ? j - l : 0);
        int k = -M / 2;
        rhs = (j >= l) ? xpow.scaled(fh_coefficient_normalized(k, l, j)) * hx : SuperElement(sig);
    } else {
        lhs = sphere_integral(integrand, bw);
        SuperElement xnorm(sig);
        if (j >= l && (j - l) % 2 == 0) {
            xnorm = norm_squared(sig, bx).pow((j - l) / 2);
            rhs = xnorm.scaled(fh_coefficient(M, l, j)) * hx;
        }
    }
    rep.pass = lhs.equals(rhs);
    if (!rep.pass) rep.witness = "difference: " + (lhs - rhs).str();
    return rep;
}

}  // namespace

FunkHeckeReport funk_hecke_verify(const SigPtr& sig, int l, int j, Rng& rng) {
    if (sig->block(sig->require_block("w")).m == 0)
        throw domain_error("ordinary Funk-Hecke requires m != 0");
    return fh_verify_impl(sig, l, j, rng, false);
}

FunkHeckeReport funk_hecke_normalized_verify(const SigPtr& sig, int l, int j, Rng& rng) {
    return fh_verify_impl(sig, l, j, rng, true);
}

}  // namespace sck
