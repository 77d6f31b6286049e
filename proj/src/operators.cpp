#include "superck/operators.hpp"

#include <bit>

namespace sck {

SuperElement partial_bos(const SuperElement& f, int var) {
    const SigPtr& sig = f.sig();
    SuperElement r(sig);
    if (f.radial_base()) r.set_radial_base(*f.radial_base());
    bool radial_var = false;
    if (f.radial_base()) {
        const RadialBase& rb = *f.radial_base();
        int off = sig->bos_offset(rb.block);
        radial_var = var >= off && var < off + sig->block(rb.block).m;
    }
    for (const auto& [k, c] : f.terms()) {
        if (k.bos[var] > 0) {
            TermKey nk = k;
            nk.bos[var] -= 1;
            r.add_term(nk, c * Scalar(Rat(int(k.bos[var]))));
        }
        if (k.radial != 0 && radial_var) {
            TermKey nk = k;
            nk.radial -= 2;
            nk.bos[var] += 1;
            r.add_term(nk, c * Scalar(Rat(k.radial)));
        }
    }
    return r.has_radial() ? r.radial_canonicalized() : r;
}

SuperElement partial_ferm(const SuperElement& f, int var) {
    SuperElement r(f.sig());
    if (f.radial_base()) r.set_radial_base(*f.radial_base());
    uint64_t bit = uint64_t(1) << var;
    uint64_t below = bit - 1;
    for (const auto& [k, c] : f.terms()) {
        if (!(k.grass & bit)) continue;
        int sign = std::popcount(k.grass & below) % 2 == 0 ? 1 : -1;
        TermKey nk = k;
        nk.grass &= ~bit;
        r.add_term(nk, sign > 0 ? c : -c);
    }
    return r;
}

SuperElement partial_ferm_right(const SuperElement& f, int var) {
    SuperElement r(f.sig());
    if (f.radial_base()) r.set_radial_base(*f.radial_base());
    uint64_t bit = uint64_t(1) << var;
    for (const auto& [k, c] : f.terms()) {
        if (!(k.grass & bit)) continue;
        int sign = std::popcount(k.grass >> (var + 1)) % 2 == 0 ? 1 : -1;
        TermKey nk = k;
        nk.grass &= ~bit;
        r.add_term(nk, sign > 0 ? c : -c);
    }
    return r;
}

SuperElement partial_x0(const SuperElement& f) {
    const SigPtr& sig = f.sig();
    if (!sig->with_x0()) throw domain_error("signature has no x0");
    SuperElement r(sig);
    if (f.radial_base()) r.set_radial_base(*f.radial_base());
    bool radial_x0 = f.radial_base() && f.radial_base()->with_x0;
    for (const auto& [k, c] : f.terms()) {
        Scalar d = c.derivative_x0();
        if (!d.is_zero()) r.add_term(k, d);
        if (k.radial != 0 && radial_x0) {
            TermKey nk = k;
            nk.radial -= 2;
            r.add_term(nk, c * Scalar(Rat(k.radial)) * Scalar::x0pow(1));
        }
    }
    return r.has_radial() ? r.radial_canonicalized() : r;
}

SuperElement dirac_left(const SuperElement& f, int block) {
    const SigPtr& sig = f.sig();
    const Block& blk = sig->block(block);
    SuperElement r(sig);
    if (f.radial_base()) r.set_radial_base(*f.radial_base());
    for (int p = 0; p < blk.n; ++p) {
        int gp = sig->pair_offset(block) + p;
        SuperElement u = SuperElement::weyl_gen(sig, 2 * gp + 1);
        SuperElement v = SuperElement::weyl_gen(sig, 2 * gp);
        SuperElement d1 = partial_ferm(f, sig->ferm_offset(block) + 2 * p);
        SuperElement d2 = partial_ferm(f, sig->ferm_offset(block) + 2 * p + 1);
        r = r + (u * d1 - v * d2).scaled(Scalar(Rat(2)));
    }
    for (int i = 0; i < blk.m; ++i) {
        SuperElement e = SuperElement::orth_gen(sig, sig->orth_offset(block) + i);
        r = r - e * partial_bos(f, sig->bos_offset(block) + i);
    }
    return r;
}

SuperElement dirac_right(const SuperElement& f, int block) {
    const SigPtr& sig = f.sig();
    const Block& blk = sig->block(block);
    SuperElement r(sig);
    if (f.radial_base()) r.set_radial_base(*f.radial_base());
    for (int p = 0; p < blk.n; ++p) {
        int gp = sig->pair_offset(block) + p;
        SuperElement u = SuperElement::weyl_gen(sig, 2 * gp + 1);
        SuperElement v = SuperElement::weyl_gen(sig, 2 * gp);
        SuperElement d1 = partial_ferm_right(f, sig->ferm_offset(block) + 2 * p);
        SuperElement d2 = partial_ferm_right(f, sig->ferm_offset(block) + 2 * p + 1);
        r = r - (d1 * u - d2 * v).scaled(Scalar(Rat(2)));
    }
    for (int i = 0; i < blk.m; ++i) {
        SuperElement e = SuperElement::orth_gen(sig, sig->orth_offset(block) + i);
        r = r - partial_bos(f, sig->bos_offset(block) + i) * e;
    }
    return r;
}

SuperElement laplacian(const SuperElement& f, int block) {
    const SigPtr& sig = f.sig();
    const Block& blk = sig->block(block);
    SuperElement r(sig);
    if (f.radial_base()) r.set_radial_base(*f.radial_base());
    for (int i = 0; i < blk.m; ++i) {
        int v = sig->bos_offset(block) + i;
        r = r + partial_bos(partial_bos(f, v), v);
    }
    for (int p = 0; p < blk.n; ++p) {
        int v1 = sig->ferm_offset(block) + 2 * p;
        int v2 = sig->ferm_offset(block) + 2 * p + 1;
        r = r - partial_ferm(partial_ferm(f, v2), v1).scaled(Scalar(Rat(4)));
    }
    return r;
}

SuperElement laplacian_via_dirac(const SuperElement& f, int block) {
    return -dirac_left(dirac_left(f, block), block);
}

SuperElement euler(const SuperElement& f, int block) {
    const SigPtr& sig = f.sig();
    SuperElement r(sig);
    if (f.radial_base()) r.set_radial_base(*f.radial_base());
    for (const auto& [k, c] : f.terms()) {
        long d = f.term_block_degree(k, block);
        if (k.radial != 0 && f.radial_base() && f.radial_base()->block == block) {
            if (f.radial_base()->with_x0)
                throw domain_error("euler undefined for a radial base containing x0");
            d += k.radial;
        }
        if (d != 0) r.add_term(k, c * Scalar(Rat(d)));
    }
    return r;
}

// ------------------------------------------------------------ LinearOperator

LinearOperator LinearOperator::identity() { return LinearOperator(); }

LinearOperator LinearOperator::partial(int var_kind, int index) {
    LinearOperator op;
    op.kind_ = var_kind == 0 ? Kind::PartialBos : var_kind == 1 ? Kind::PartialFerm : Kind::PartialX0;
    op.index_ = index;
    return op;
}

LinearOperator LinearOperator::dirac(int block) {
    LinearOperator op;
    op.kind_ = Kind::DiracLeft;
    op.index_ = block;
    return op;
}

LinearOperator LinearOperator::dirac_r(int block) {
    LinearOperator op;
    op.kind_ = Kind::DiracRight;
    op.index_ = block;
    return op;
}

LinearOperator LinearOperator::laplacian_op(int block) {
    LinearOperator op;
    op.kind_ = Kind::Laplacian;
    op.index_ = block;
    return op;
}

LinearOperator LinearOperator::euler_op(int block) {
    LinearOperator op;
    op.kind_ = Kind::Euler;
    op.index_ = block;
    return op;
}

LinearOperator LinearOperator::multiply(SuperElement g) {
    LinearOperator op;
    op.kind_ = Kind::Multiply;
    op.elem_ = std::make_shared<SuperElement>(std::move(g));
    return op;
}

LinearOperator LinearOperator::scale(Scalar c) {
    LinearOperator op;
    op.kind_ = Kind::Scale;
    op.coef_ = std::move(c);
    return op;
}

LinearOperator LinearOperator::operator+(const LinearOperator& o) const {
    LinearOperator op;
    op.kind_ = Kind::Sum;
    op.lhs_ = std::make_shared<LinearOperator>(*this);
    op.rhs_ = std::make_shared<LinearOperator>(o);
    return op;
}

LinearOperator LinearOperator::operator*(const LinearOperator& o) const {
    LinearOperator op;
    op.kind_ = Kind::Compose;
    op.lhs_ = std::make_shared<LinearOperator>(*this);
    op.rhs_ = std::make_shared<LinearOperator>(o);
    return op;
}

LinearOperator LinearOperator::powered(int k) const {
    LinearOperator op = identity();
    for (int i = 0; i < k; ++i) op = op * *this;
    return op;
}

LinearOperator LinearOperator::commutator(const LinearOperator& a, const LinearOperator& b) {
    return a * b + scale(Scalar(Rat(-1))) * (b * a);
}

SuperElement LinearOperator::apply(const SuperElement& f) const {
    switch (kind_) {
        case Kind::Identity: return f;
        case Kind::PartialBos: return partial_bos(f, index_);
        case Kind::PartialFerm: return partial_ferm(f, index_);
        case Kind::PartialX0: return partial_x0(f);
        case Kind::DiracLeft: return dirac_left(f, index_);
        case Kind::DiracRight: return dirac_right(f, index_);
        case Kind::Laplacian: return laplacian(f, index_);
        case Kind::Euler: return euler(f, index_);
        case Kind::Multiply: return *elem_ * f;
        case Kind::Scale: return f.scaled(coef_);
        case Kind::Sum: return lhs_->apply(f) + rhs_->apply(f);
        case Kind::Compose: return lhs_->apply(rhs_->apply(f));
    }
    throw domain_error("bad operator");
}

// ------------------------------------------------------------ sl2 checks

std::vector<CheckResult> check_sl2(const SigPtr& sig, int block,
                                   const std::vector<SuperElement>& samples) {
    std::vector<CheckResult> out;
    int M = sig->superdim(block);
    SuperElement x2 = SuperElement::supervector(sig, block).pow(2);
    Scalar half(Rat(1, 2)), mhalf(Rat(-1, 2));
    auto A = LinearOperator::scale(half) * LinearOperator::laplacian_op(block);
    auto B = LinearOperator::scale(mhalf) * LinearOperator::multiply(x2);
    auto H = LinearOperator::euler_op(block) + LinearOperator::scale(Scalar(Rat(M, 2)));
    auto rel = [&](const char* name, const LinearOperator& lhs, const LinearOperator& rhs) {
        for (size_t i = 0; i < samples.size(); ++i) {
            SuperElement l = lhs.apply(samples[i]);
            SuperElement r = rhs.apply(samples[i]);
            if (!l.equals(r)) {
                out.push_back({name, false,
                               "sample " + std::to_string(i) + ": " + (l - r).str()});
                return;
            }
        }
        out.push_back({name, true, ""});
    };
    rel("sl2_commutator_gives_euler", LinearOperator::commutator(A, B), H);
    rel("sl2_commutator_gives_laplacian", LinearOperator::commutator(A, H),
        LinearOperator::laplacian_op(block));
    rel("sl2_commutator_gives_norm", LinearOperator::commutator(B, H),
        LinearOperator::multiply(x2));
    return out;
}

CheckResult check_laplacian_power_identity(const SigPtr& sig, int block,
                                           const SuperElement& r2j, int j, int l) {
    int M = sig->superdim(block);
    SuperElement x2l = SuperElement::supervector(sig, block).pow(2 * l);
    SuperElement lhs = x2l * r2j;
    for (int i = 0; i < j + l; ++i) lhs = laplacian(lhs, block);
    SuperElement rhs = r2j;
    for (int i = 0; i < j; ++i) rhs = laplacian(rhs, block);
    Rat coef = Rat((l % 2 == 0) ? 1 : -1) * Rat(Int(1) << (2 * l)) *
               Rat(factorial(j + l)) / Rat(factorial(j)) * pochhammer(Rat(2 * j + M, 2), l);
    rhs = rhs.scaled(Scalar(coef));
    bool ok = lhs.equals(rhs);
    return {"laplacian_power_identity(j=" + std::to_string(j) + ",l=" + std::to_string(l) + ")",
            ok, ok ? "" : (lhs - rhs).str()};
}

}  // namespace sck
