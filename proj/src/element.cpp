#include "superck/element.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace sck {

namespace {

int popcount(uint64_t x) { return std::popcount(x); }

// Sign of merging two ascending Grassmann products; 0 if a variable repeats.
int grass_merge(uint64_t a, uint64_t b, uint64_t& out) {
    if (a & b) return 0;
    int inv = 0;
    uint64_t bb = b;
    while (bb) {
        int bit = std::countr_zero(bb);
        bb &= bb - 1;
        inv += popcount(a >> (bit + 1));
    }
    out = a | b;
    return (inv % 2 == 0) ? 1 : -1;
}

// Product of two ascending orthogonal-generator blades with e_i^2 = -1.
int orth_merge(uint64_t a, uint64_t b, uint64_t& out) {
    int sign = 1;
    uint64_t acc = a;
    uint64_t bb = b;
    while (bb) {
        int bit = std::countr_zero(bb);
        bb &= bb - 1;
        int swaps = popcount(acc >> (bit + 1));
        if (swaps % 2 != 0) sign = -sign;
        if (acc & (uint64_t(1) << bit)) {
            sign = -sign;  // e_bit * e_bit = -1
            acc &= ~(uint64_t(1) << bit);
        } else {
            acc |= uint64_t(1) << bit;
        }
    }
    out = acc;
    return sign;
}

int weyl_degree(const TermKey& k) {
    int d = 0;
    for (const auto& [a, b] : k.weyl) d += a + b;
    return d;
}

}  // namespace

SuperElement SuperElement::constant(SigPtr sig, const Scalar& c) {
    SuperElement e(std::move(sig));
    TermKey key;
    key.bos.assign(e.sig_->total_bos(), 0);
    key.weyl.assign(e.sig_->total_pairs(), {0, 0});
    e.add_term(key, c);
    return e;
}

SuperElement SuperElement::bos_var(SigPtr sig, int var) {
    SuperElement e(std::move(sig));
    TermKey key;
    key.bos.assign(e.sig_->total_bos(), 0);
    key.weyl.assign(e.sig_->total_pairs(), {0, 0});
    key.bos[var] = 1;
    e.add_term(key, Scalar(1));
    return e;
}

SuperElement SuperElement::ferm_var(SigPtr sig, int var) {
    SuperElement e(std::move(sig));
    TermKey key;
    key.bos.assign(e.sig_->total_bos(), 0);
    key.weyl.assign(e.sig_->total_pairs(), {0, 0});
    key.grass = uint64_t(1) << var;
    e.add_term(key, Scalar(1));
    return e;
}

SuperElement SuperElement::orth_gen(SigPtr sig, int gen) {
    SuperElement e(std::move(sig));
    TermKey key;
    key.bos.assign(e.sig_->total_bos(), 0);
    key.weyl.assign(e.sig_->total_pairs(), {0, 0});
    key.orth = uint64_t(1) << gen;
    e.add_term(key, Scalar(1));
    return e;
}

SuperElement SuperElement::weyl_gen(SigPtr sig, int gen_index) {
    SuperElement e(std::move(sig));
    TermKey key;
    key.bos.assign(e.sig_->total_bos(), 0);
    key.weyl.assign(e.sig_->total_pairs(), {0, 0});
    int pair = gen_index / 2;
    if (gen_index % 2 == 0)
        key.weyl[pair].second = 1;  // odd 1-based index 2p+1: the beta generator
    else
        key.weyl[pair].first = 1;  // even 1-based index 2p+2: the alpha generator
    e.add_term(key, Scalar(1));
    return e;
}

SuperElement SuperElement::supervector(SigPtr sig, int block) {
    SuperElement e(sig);
    const Block& blk = sig->block(block);
    for (int i = 0; i < blk.m; ++i) {
        TermKey key;
        key.bos.assign(sig->total_bos(), 0);
        key.weyl.assign(sig->total_pairs(), {0, 0});
        key.bos[sig->bos_offset(block) + i] = 1;
        key.orth = uint64_t(1) << (sig->orth_offset(block) + i);
        e.add_term(key, Scalar(1));
    }
    for (int j = 0; j < 2 * blk.n; ++j) {
        TermKey key;
        key.bos.assign(sig->total_bos(), 0);
        key.weyl.assign(sig->total_pairs(), {0, 0});
        key.grass = uint64_t(1) << (sig->ferm_offset(block) + j);
        int pair = sig->pair_offset(block) + j / 2;
        if (j % 2 == 0)
            key.weyl[pair].second = 1;
        else
            key.weyl[pair].first = 1;
        e.add_term(key, Scalar(1));
    }
    return e;
}

SuperElement SuperElement::supervector(SigPtr sig, const std::string& block) {
    int b = sig->require_block(block);
    return supervector(std::move(sig), b);
}

SuperElement SuperElement::radial_power(SigPtr sig, RadialBase base, int alpha) {
    SuperElement e(std::move(sig));
    e.rbase_ = base;
    TermKey key;
    key.bos.assign(e.sig_->total_bos(), 0);
    key.weyl.assign(e.sig_->total_pairs(), {0, 0});
    key.radial = alpha;
    e.add_term(key, Scalar(1));
    return e.radial_canonicalized();
}

bool SuperElement::has_radial() const {
    for (const auto& [k, c] : terms_)
        if (k.radial != 0) return true;
    return false;
}

void SuperElement::add_term(const TermKey& key, const Scalar& c) {
    if (c.is_zero()) return;
    if (key.radial != 0 && !rbase_) throw domain_error("radial term without a radial base");
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        Scalar s = it->second + c;
        if (s.is_zero())
            terms_.erase(it);
        else
            it->second = s;
    }
}

void SuperElement::set_radial_base(const RadialBase& rb) {
    if (rbase_ && !(*rbase_ == rb)) throw domain_error("conflicting radial bases");
    rbase_ = rb;
}

void SuperElement::merge_base(const std::optional<RadialBase>& other) {
    if (!other) return;
    set_radial_base(*other);
}

SuperElement SuperElement::operator+(const SuperElement& o) const {
    if (sig_.get() != o.sig_.get()) throw domain_error("signature mismatch");
    SuperElement r = *this;
    r.merge_base(o.rbase_);
    for (const auto& [k, c] : o.terms_) r.add_term(k, c);
    if (r.has_radial()) return r.radial_canonicalized();
    return r;
}

SuperElement SuperElement::operator-(const SuperElement& o) const { return *this + (-o); }

SuperElement SuperElement::operator-() const {
    SuperElement r(sig_);
    r.rbase_ = rbase_;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

SuperElement SuperElement::scaled(const Scalar& c) const {
    SuperElement r(sig_);
    r.rbase_ = rbase_;
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) {
        Scalar s = v * c;
        if (!s.is_zero()) r.terms_.emplace(k, s);
    }
    return r;
}

SuperElement SuperElement::operator*(const SuperElement& o) const {
    if (sig_.get() != o.sig_.get()) throw domain_error("signature mismatch");
    SuperElement r(sig_);
    r.rbase_ = rbase_;
    r.merge_base(o.rbase_);
    int npairs = sig_->total_pairs();
    for (const auto& [ka, ca] : terms_) {
        for (const auto& [kb, cb] : o.terms_) {
            uint64_t grass;
            int sg = grass_merge(ka.grass, kb.grass, grass);
            if (sg == 0) continue;
            int s_ow = (popcount(kb.orth) * weyl_degree(ka)) % 2 == 0 ? 1 : -1;
            uint64_t orth;
            int so = orth_merge(ka.orth, kb.orth, orth);
            Scalar coeff = ca * cb;
            if (sg * s_ow * so < 0) coeff = -coeff;

            TermKey base;
            base.bos.resize(sig_->total_bos());
            for (int i = 0; i < sig_->total_bos(); ++i) {
                int s = ka.bos[i] + kb.bos[i];
                if (s > 255) throw domain_error("bosonic exponent overflow");
                base.bos[i] = static_cast<uint8_t>(s);
            }
            base.grass = grass;
            base.orth = orth;
            base.radial = ka.radial + kb.radial;
            base.weyl.assign(npairs, {0, 0});

            // Per-pair Weyl reordering: beta^b then alpha^a contracts with
            // binomial multiplicities. Different pairs commute.
            std::vector<std::pair<TermKey, Scalar>> partial{{base, coeff}};
            for (int p = 0; p < npairs; ++p) {
                auto [a1, b1] = ka.weyl[p];
                auto [a2, b2] = kb.weyl[p];
                if (a1 == 0 && b1 == 0 && a2 == 0 && b2 == 0) continue;
                int jmax = std::min<int>(b1, a2);
                std::vector<std::pair<TermKey, Scalar>> next;
                for (int j = 0; j <= jmax; ++j) {
                    Int mult = binomial(b1, j) * binomial(a2, j) * factorial(j);
                    Scalar ms{Rat(mult)};
                    for (const auto& [k0, c0] : partial) {
                        TermKey k = k0;
                        k.weyl[p] = {static_cast<uint16_t>(a1 + a2 - j),
                                     static_cast<uint16_t>(b1 + b2 - j)};
                        next.emplace_back(std::move(k), c0 * ms);
                    }
                }
                partial = std::move(next);
            }
            for (auto& [k, c] : partial) r.add_term(k, c);
        }
    }
    if (r.has_radial()) return r.radial_canonicalized();
    return r;
}

SuperElement SuperElement::pow(int k) const {
    if (k < 0) throw domain_error("negative element power");
    SuperElement r = one(sig_);
    r.rbase_ = rbase_;
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

bool SuperElement::equals(const SuperElement& o) const {
    return (*this - o).radial_canonicalized().is_zero();
}

int SuperElement::term_block_degree(const TermKey& key, int block) const {
    int d = 0;
    const Block& blk = sig_->block(block);
    for (int i = 0; i < blk.m; ++i) d += key.bos[sig_->bos_offset(block) + i];
    for (int j = 0; j < 2 * blk.n; ++j)
        if (key.grass & (uint64_t(1) << (sig_->ferm_offset(block) + j))) ++d;
    return d;
}

int SuperElement::block_degree(int block) const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, term_block_degree(k, block));
    return d;
}

bool SuperElement::depends_on_block(int block) const { return block_degree(block) > 0; }

bool SuperElement::is_even_scalar_valued() const {
    for (const auto& [k, c] : terms_) {
        if (k.orth != 0) return false;
        for (const auto& [a, b] : k.weyl)
            if (a || b) return false;
        if (popcount(k.grass) % 2 != 0) return false;
    }
    return true;
}

Scalar SuperElement::coefficient(const TermKey& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Scalar() : it->second;
}

Scalar SuperElement::body_scalar() const {
    TermKey key;
    key.bos.assign(sig_->total_bos(), 0);
    key.weyl.assign(sig_->total_pairs(), {0, 0});
    return coefficient(key);
}

SuperElement SuperElement::eval_zero_block(int block) const {
    SuperElement r(sig_);
    r.rbase_ = rbase_;
    for (const auto& [k, c] : terms_) {
        if (k.radial != 0 && rbase_ && rbase_->block == block)
            throw domain_error("cannot evaluate a radial factor at the origin");
        if (term_block_degree(k, block) == 0) r.add_term(k, c);
    }
    return r;
}

SuperElement SuperElement::homogeneous_part(int block, int deg) const {
    SuperElement r(sig_);
    r.rbase_ = rbase_;
    for (const auto& [k, c] : terms_)
        if (term_block_degree(k, block) == deg) r.add_term(k, c);
    return r;
}

SuperElement SuperElement::truncate_block_degree(int block, int maxdeg) const {
    SuperElement r(sig_);
    r.rbase_ = rbase_;
    for (const auto& [k, c] : terms_)
        if (term_block_degree(k, block) <= maxdeg) r.add_term(k, c);
    return r;
}

SuperElement SuperElement::rename_block_vars(int from_block, int to_block) const {
    const Block& fb = sig_->block(from_block);
    const Block& tb = sig_->block(to_block);
    if (fb.m != tb.m || fb.n != tb.n) throw domain_error("block dimensions differ");
    SuperElement r(sig_);
    r.rbase_ = rbase_;
    for (const auto& [k, c] : terms_) {
        TermKey nk = k;
        for (int i = 0; i < fb.m; ++i) {
            int from = sig_->bos_offset(from_block) + i;
            int to = sig_->bos_offset(to_block) + i;
            std::swap(nk.bos[from], nk.bos[to]);
        }
        uint64_t g = nk.grass;
        for (int j = 0; j < 2 * fb.n; ++j) {
            int from = sig_->ferm_offset(from_block) + j;
            int to = sig_->ferm_offset(to_block) + j;
            uint64_t bf = (k.grass >> from) & 1, bt = (k.grass >> to) & 1;
            g &= ~((uint64_t(1) << from) | (uint64_t(1) << to));
            g |= (bf << to) | (bt << from);
        }
        nk.grass = g;
        r.add_term(nk, c);
    }
    return r;
}

SuperElement radial_base_poly(const SigPtr& sig, const RadialBase& rb) {
    SuperElement e(sig);
    if (rb.with_x0) e = e + SuperElement::constant(sig, Scalar::x0pow(2));
    const Block& blk = sig->block(rb.block);
    for (int i = 0; i < blk.m; ++i) {
        SuperElement v = SuperElement::bos_var(sig, sig->bos_offset(rb.block) + i);
        e = e + v * v;
    }
    if (e.is_zero()) throw domain_error("empty radial base");
    return e;
}

namespace {

// Exact division of a set of terms (radial exponents already stripped) by the
// base polynomial, ordered by the base block's bosonic exponents from the
// highest variable down. Returns false when not divisible.
bool divide_by_base(const SigPtr& sig, const RadialBase& rb,
                    std::map<TermKey, Scalar> terms, std::map<TermKey, Scalar>& quotient) {
    quotient.clear();
    const Block& blk = sig->block(rb.block);
    if (blk.m == 0) return false;
    int lead_var = sig->bos_offset(rb.block) + blk.m - 1;
    SuperElement base = radial_base_poly(sig, rb);
    auto cmp = [&](const TermKey& a, const TermKey& b) {
        for (int i = blk.m - 1; i >= 0; --i) {
            int v = sig->bos_offset(rb.block) + i;
            if (a.bos[v] != b.bos[v]) return a.bos[v] < b.bos[v];
        }
        return a < b;
    };
    while (!terms.empty()) {
        auto it = std::max_element(terms.begin(), terms.end(),
                                   [&](const auto& x, const auto& y) { return cmp(x.first, y.first); });
        TermKey lead = it->first;
        if (lead.bos[lead_var] < 2) return false;
        Scalar c = it->second;
        TermKey q = lead;
        q.bos[lead_var] -= 2;
        quotient[q] = quotient.count(q) ? quotient[q] + c : c;
        for (const auto& [bk, bc] : base.terms()) {
            TermKey prod = q;
            for (size_t i = 0; i < prod.bos.size(); ++i) prod.bos[i] += bk.bos[i];
            Scalar delta = c * bc;
            auto jt = terms.find(prod);
            if (jt == terms.end()) {
                Scalar nd = -delta;
                if (!nd.is_zero()) terms.emplace(prod, nd);
            } else {
                Scalar s = jt->second - delta;
                if (s.is_zero())
                    terms.erase(jt);
                else
                    jt->second = s;
            }
        }
    }
    return true;
}

}  // namespace

SuperElement SuperElement::radial_canonicalized() const {
    if (!has_radial()) {
        // Nothing to fold; drop stale zero-only radial exponents.
        return *this;
    }
    const RadialBase& rb = *rbase_;
    if (sig_->block(rb.block).m == 0 && rb.with_x0) {
        // degenerate base R^2 = x0^2: under the x0 > 0 convention R is x0
        SuperElement folded(sig_);
        folded.rbase_ = rbase_;
        for (const auto& [k, c] : terms_) {
            TermKey nk = k;
            nk.radial = 0;
            folded.add_term(nk, c * Scalar::x0pow(k.radial));
        }
        return folded;
    }
    SuperElement base = radial_base_poly(sig_, rb);
    // Raw multiplication by the base polynomial: the base carries only bosonic
    // exponents and x0 powers, so keys just add.
    auto mul_base = [&](std::map<TermKey, Scalar>& acc, TermKey k, Scalar c, int steps, int alpha) {
        std::vector<std::pair<TermKey, Scalar>> cur{{std::move(k), std::move(c)}};
        cur[0].first.radial = alpha;
        for (int s = 0; s < steps; ++s) {
            std::vector<std::pair<TermKey, Scalar>> next;
            for (const auto& [tk, tc] : cur) {
                for (const auto& [bk, bc] : base.terms()) {
                    TermKey nk = tk;
                    for (size_t i = 0; i < nk.bos.size(); ++i) nk.bos[i] += bk.bos[i];
                    next.emplace_back(std::move(nk), tc * bc);
                }
            }
            cur = std::move(next);
        }
        for (auto& [tk, tc] : cur) {
            auto it = acc.find(tk);
            if (it == acc.end()) {
                if (!tc.is_zero()) acc.emplace(tk, tc);
            } else {
                Scalar s = it->second + tc;
                if (s.is_zero())
                    acc.erase(it);
                else
                    it->second = s;
            }
        }
    };
    // Collect per-parity minimal exponents (0/1 at most, since non-negative
    // powers of R^2 always fold into the polynomial part).
    int mn[2] = {0, 1};
    for (const auto& [k, c] : terms_) {
        int par = ((k.radial % 2) + 2) % 2;
        mn[par] = std::min(mn[par], k.radial);
    }
    SuperElement folded(sig_);
    folded.rbase_ = rbase_;
    for (const auto& [k, c] : terms_) {
        int par = ((k.radial % 2) + 2) % 2;
        int target = mn[par];
        int steps = (k.radial - target) / 2;
        mul_base(folded.terms_, k, c, steps, target);
    }
    // Pull base factors out of negative-exponent classes while possible, so
    // equal elements reach the same representative.
    for (int par = 0; par < 2; ++par) {
        for (;;) {
            int cur = 0;
            bool found = false;
            for (const auto& [k, c] : folded.terms_) {
                if (((k.radial % 2) + 2) % 2 == par && k.radial < par) {
                    cur = k.radial;
                    found = true;
                    break;
                }
            }
            if (!found) break;
            std::map<TermKey, Scalar> cls;
            for (const auto& [k, c] : folded.terms_) {
                if (k.radial == cur) {
                    TermKey nk = k;
                    nk.radial = 0;
                    cls.emplace(nk, c);
                }
            }
            std::map<TermKey, Scalar> quot;
            if (!divide_by_base(sig_, rb, cls, quot)) break;
            SuperElement next(sig_);
            next.rbase_ = rbase_;
            for (const auto& [k, c] : folded.terms_)
                if (k.radial != cur) next.add_term(k, c);
            for (const auto& [k, c] : quot) {
                TermKey nk = k;
                nk.radial = cur + 2;
                next.add_term(nk, c);
            }
            folded = std::move(next);
        }
    }
    return folded;
}

SuperElement SuperElement::radial_expanded(int degree_cap) const {
    if (!has_radial()) return *this;
    const RadialBase& rb = *rbase_;
    if (!rb.with_x0) throw domain_error("radial expansion requires an x0 base");
    SuperElement bos2(sig_);  // sum of squares of the block's bosonic coordinates
    const Block& blk = sig_->block(rb.block);
    for (int i = 0; i < blk.m; ++i) {
        SuperElement v = bos_var(sig_, sig_->bos_offset(rb.block) + i);
        bos2 = bos2 + v * v;
    }
    SuperElement r(sig_);
    for (const auto& [k, c] : terms_) {
        if (k.radial == 0) {
            if (term_block_degree(k, rb.block) <= degree_cap) r.add_term(k, c);
            continue;
        }
        int alpha = k.radial;
        TermKey nk = k;
        nk.radial = 0;
        SuperElement head(sig_);
        head.add_term(nk, c);
        int base_deg = term_block_degree(k, rb.block);
        SuperElement pow = one(sig_);
        for (int i = 0; base_deg + 2 * i <= degree_cap; ++i) {
            Rat coef = falling(Rat(alpha, 2), i) / Rat(factorial(i));
            Scalar s = Scalar(coef) * Scalar::x0pow(alpha - 2 * i);
            r = r + (head * pow).scaled(s).truncate_block_degree(rb.block, degree_cap);
            pow = pow * bos2;
        }
    }
    return r;
}

SuperElement SuperElement::radial_weight_stripped() const {
    SuperElement r(sig_);
    for (const auto& [k, c] : terms_) {
        TermKey nk = k;
        nk.radial = 0;
        r.add_term(nk, c);
    }
    return r;
}

SuperElement inner_product(const SigPtr& sig, int block_a, int block_b) {
    SuperElement a = SuperElement::supervector(sig, block_a);
    SuperElement b = SuperElement::supervector(sig, block_b);
    return (a * b + b * a).scaled(Scalar(Rat(-1, 2)));
}

SuperElement norm_squared(const SigPtr& sig, int block) {
    SuperElement x = SuperElement::supervector(sig, block);
    return -(x * x);
}

SuperElement gen_power(const SuperElement& a, const Rat& p, std::optional<RadialBase> base_hint) {
    const SigPtr& sig = a.sig();
    if (!a.is_even_scalar_valued()) throw domain_error("gen_power needs an even scalar-valued element");
    SuperElement body(sig);
    SuperElement nil(sig);
    for (const auto& [k, c] : a.terms()) {
        if (k.grass == 0)
            body.add_term(k, c);
        else
            nil.add_term(k, c);
    }
    if (a.radial_base()) {
        body.set_radial_base(*a.radial_base());
        nil.set_radial_base(*a.radial_base());
    }
    if (body.is_zero()) throw domain_error("gen_power: zero body");

    std::optional<RadialBase> rb = base_hint ? base_hint : a.radial_base();
    bool p_integral = (p.get_den() == 1);

    // Recognize body = c * x0^{2t} * base^s.
    Rat c;
    int x0t = 0;
    int s = 0;
    bool matched = false;
    if (body.terms().size() == 1) {
        const auto& [k, coef] = *body.terms().begin();
        bool pure = k.radial == 0;
        for (auto e : k.bos)
            if (e) pure = false;
        if (pure && coef.is_rational()) {
            c = coef.as_rational();
            matched = true;
        } else if (pure) {
            // c * x0^t with t from the rational-function part
            auto parts = coef.split_x0_scale();
            if (parts.size() == 1) {
                Rat cc;
                int t;
                if (parts[0].first.terms().begin()->second.as_laurent_monomial(cc, t)) {
                    int sp = parts[0].first.terms().begin()->first.first;
                    if (sp == 0) {
                        c = cc;
                        x0t = t;
                        matched = true;
                    }
                }
            }
        }
    }
    if (!matched && rb) {
        int deg = body.block_degree(rb->block);
        if (deg >= 0 && deg % 2 == 0) {
            s = deg / 2;
            SuperElement base = radial_base_poly(sig, *rb);
            SuperElement cand = SuperElement::one(sig);
            for (int i = 0; i < s; ++i) cand = cand * base;
            // Probe the coefficient from the pure power of the first variable.
            const Block& blk = sig->block(rb->block);
            if (blk.m > 0) {
                TermKey probe;
                probe.bos.assign(sig->total_bos(), 0);
                probe.weyl.assign(sig->total_pairs(), {0, 0});
                probe.bos[sig->bos_offset(rb->block)] = static_cast<uint8_t>(2 * s);
                Scalar pc = body.coefficient(probe);
                if (!pc.is_zero() && pc.is_rational()) {
                    c = pc.as_rational();
                    if (body.equals(cand.scaled(Scalar(c)))) matched = true;
                }
            }
        }
    }
    if (!matched) throw domain_error("gen_power: body not representable");
    if (!p_integral && c != 1) throw domain_error("gen_power: non-unit body needs an integer power");

    // Nilpotent expansion: sum over j of nil^j / j! * p(p-1)...(p-j+1) * body^{p-j}.
    SuperElement result(sig);
    if (rb) result.set_radial_base(*rb);
    SuperElement nilpow = SuperElement::one(sig);
    if (rb) nilpow.set_radial_base(*rb);
    for (int j = 0;; ++j) {
        if (j > 0) {
            nilpow = nilpow * nil;
            if (nilpow.is_zero()) break;
        }
        Rat q = p - j;
        Scalar bodyq(Rat(1));
        if (c != 1) {
            long e = q.get_num().get_si();
            if (q.get_den() != 1) throw domain_error("gen_power: fractional power of non-unit body");
            Rat cp = 1;
            for (long i = 0; i < std::abs(e); ++i) cp *= c;
            bodyq = Scalar(e >= 0 ? cp : Rat(1) / cp);
        }
        Rat tq = Rat(x0t) * q;
        if (tq.get_den() != 1) throw domain_error("gen_power: fractional x0 power");
        bodyq = bodyq * Scalar::x0pow(static_cast<int>(tq.get_num().get_si()));
        SuperElement bpart(sig);
        if (s != 0) {
            Rat rq = Rat(2 * s) * q;
            if (rq.get_den() != 1) throw domain_error("gen_power: fractional radial power");
            bpart = SuperElement::radial_power(sig, *rb, static_cast<int>(rq.get_num().get_si()));
        } else {
            bpart = SuperElement::one(sig);
            if (rb) bpart.set_radial_base(*rb);
        }
        Scalar coef = Scalar(falling(p, j) / Rat(factorial(j))) * bodyq;
        result = result + (nilpow * bpart).scaled(coef);
        if (nil.is_zero()) break;
    }
    return result.radial_canonicalized();
}

SuperElement compose_scalar(const DerivativeProvider& provider,
                            const std::vector<SuperElement>& args) {
    if (args.empty()) throw domain_error("compose_scalar with no arguments");
    const SigPtr& sig = args.front().sig();
    std::vector<std::vector<SuperElement>> nil_pows(args.size());
    for (size_t i = 0; i < args.size(); ++i) {
        if (!args[i].is_even_scalar_valued())
            throw domain_error("compose_scalar arguments must be even and scalar-valued");
        SuperElement nil(sig);
        for (const auto& [k, c] : args[i].terms())
            if (k.grass != 0) nil.add_term(k, c);
        if (args[i].radial_base()) nil.set_radial_base(*args[i].radial_base());
        nil_pows[i].push_back(SuperElement::one(sig));
        while (!nil_pows[i].back().is_zero()) nil_pows[i].push_back(nil_pows[i].back() * nil);
    }
    SuperElement result(sig);
    std::vector<int> idx(args.size(), 0);
    for (;;) {
        SuperElement prod = SuperElement::one(sig);
        Rat fact = 1;
        bool zero = false;
        for (size_t i = 0; i < args.size(); ++i) {
            if (nil_pows[i][idx[i]].is_zero()) {
                zero = true;
                break;
            }
            prod = prod * nil_pows[i][idx[i]];
            fact *= Rat(factorial(idx[i]));
        }
        if (!zero && !prod.is_zero()) {
            Scalar d = provider(idx);
            result = result + prod.scaled(d * Scalar(Rat(1) / fact));
        }
        // Advance the multi-index; each component is bounded by nilpotency.
        size_t i = 0;
        for (; i < args.size(); ++i) {
            ++idx[i];
            if (idx[i] < static_cast<int>(nil_pows[i].size())) break;
            idx[i] = 0;
        }
        if (i == args.size()) break;
    }
    return result;
}

std::string SuperElement::str() const {
    if (terms_.empty()) return "0";
    SuperElement canon = has_radial() ? radial_canonicalized() : *this;
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : canon.terms_) {
        if (!first) os << " + ";
        first = false;
        std::vector<std::string> factors;
        for (size_t i = 0; i < k.bos.size(); ++i) {
            if (k.bos[i] == 0) continue;
            std::string f = sig_->bos_var_name(static_cast<int>(i));
            if (k.bos[i] > 1) f += "^" + std::to_string(int(k.bos[i]));
            factors.push_back(f);
        }
        for (int j = 0; j < sig_->total_ferm(); ++j)
            if (k.grass & (uint64_t(1) << j)) factors.push_back(sig_->ferm_var_name(j));
        for (int g = 0; g < sig_->total_orth(); ++g)
            if (k.orth & (uint64_t(1) << g)) factors.push_back("e" + std::to_string(g + 1));
        for (size_t p = 0; p < k.weyl.size(); ++p) {
            auto [a, b] = k.weyl[p];
            if (a) {
                std::string f = "eg" + std::to_string(2 * p + 2);
                if (a > 1) f += "^" + std::to_string(int(a));
                factors.push_back(f);
            }
            if (b) {
                std::string f = "eg" + std::to_string(2 * p + 1);
                if (b > 1) f += "^" + std::to_string(int(b));
                factors.push_back(f);
            }
        }
        if (k.radial != 0) {
            std::string f = "R";
            if (k.radial != 1) f += "^" + std::to_string(k.radial);
            factors.push_back(f);
        }
        std::string mono;
        for (size_t i = 0; i < factors.size(); ++i) {
            if (i) mono += "*";
            mono += factors[i];
        }
        bool coef_is_one = c.is_rational() && c.as_rational() == 1;
        // single-key scalars render as a chain of factors; sums need parens
        std::string coef;
        if (c.is_rational()) {
            Rat r = c.as_rational();
            if (r >= 0)
                coef = r.get_str();
            else
                coef = "(" + r.get_str() + ")";
        } else if (c.terms().size() == 1) {
            coef = c.str();
        } else {
            coef = "(" + c.str() + ")";
        }
        if (mono.empty())
            os << coef;
        else if (coef_is_one)
            os << mono;
        else
            os << coef << "*" << mono;
    }
    return os.str();
}

}  // namespace sck
