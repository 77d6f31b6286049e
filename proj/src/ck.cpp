#include "superck/ck.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "superck/harmonics.hpp"
#include "superck/linalg.hpp"
#include "superck/operators.hpp"

namespace sck {

namespace {

SuperElement apply_param_derivative(const SuperElement& f, int param_block) {
    return param_block >= 0 ? dirac_left(f, param_block) : partial_x0(f);
}

void check_initial_datum(const SuperElement& f, int x_block, int param_block) {
    if (f.depends_on_block(x_block)) throw domain_error("initial datum depends on the series block");
    if (param_block < 0) {
        for (const auto& [k, c] : f.terms()) {
            bool clean = k.orth == 0 && k.grass == 0;
            for (const auto& [a, b] : k.weyl)
                if (a || b) clean = false;
            for (auto e : k.bos)
                if (e) clean = false;
            if (!clean) throw domain_error("x0 initial datum must be a scalar function of x0");
            if (c.max_log_degree() > 0) throw domain_error("x0 initial datum must be log-free");
        }
    }
}

}  // namespace

CKCase classify_ck_case(const SigPtr& sig, int x_block) {
    const Block& blk = sig->block(x_block);
    int M = sig->superdim(x_block);
    if (blk.m == 0) return CKCase::III;
    if (M > 0 || M % 2 != 0) return CKCase::I;
    return CKCase::II;
}

SuperElement CKSeries::materialize() const {
    SuperElement x = SuperElement::supervector(sig, x_block);
    SuperElement f(sig);
    for (const auto& [j, fj] : terms) f = f + x.pow(j) * fj;
    return f;
}

SuperElement CKSeries::coefficient(int j) const {
    for (const auto& [i, fi] : terms)
        if (i == j) return fi;
    return SuperElement(sig);
}

std::string CKSeries::to_json() const {
    nlohmann::json out;
    out["case"] = case_tag == CKCase::I ? "i" : case_tag == CKCase::II ? "ii" : "iii";
    out["block"] = sig->block(x_block).name;
    out["terms"] = nlohmann::json::array();
    for (const auto& [j, fj] : terms) out["terms"].push_back({{"j", j}, {"element", fj.str()}});
    return out.dump();
}

CKSeries ck_extend(const SigPtr& sig, int x_block, int param_block, const SuperElement& f0,
                   const std::optional<SuperElement>& f2k1) {
    check_initial_datum(f0, x_block, param_block);
    CKSeries s;
    s.sig = sig;
    s.x_block = x_block;
    s.param_block = param_block;
    s.case_tag = classify_ck_case(sig, x_block);
    int M = sig->superdim(x_block);
    int k = (s.case_tag == CKCase::I) ? -1 : -M / 2;
    if (s.case_tag != CKCase::II && f2k1 && !f2k1->is_zero())
        throw domain_error("a second initial datum is only admissible when M = -2k, m != 0");
    if (f2k1) check_initial_datum(*f2k1, x_block, param_block);
    bool y_variant = param_block >= 0;

    SuperElement cur = f0;
    int j = 0;
    int last_nonzero = -1;
    for (;;) {
        if (!cur.is_zero()) {
            s.terms.emplace_back(j, cur);
            last_nonzero = j;
        }
        long c = c_factor(M, j + 1);
        SuperElement d = apply_param_derivative(cur, param_block);
        if (c == 0) {
            // the pivot: x^{j+1} is monogenic, the recurrence demands dF_j = 0
            if (!d.is_zero())
                throw domain_error("initial datum violates d^" + std::to_string(j + 1) +
                                   "[F0] = 0 required when M = -2k");
            if (s.case_tag == CKCase::III) break;  // x^{2k+1} vanishes identically
            cur = f2k1 ? *f2k1 : SuperElement(sig);
            if (cur.is_zero()) break;
        } else {
            Rat factor = Rat(1, c);
            if (y_variant && j % 2 == 0) factor = -factor;  // (-1)^{j+1}
            cur = d.scaled(Scalar(factor));
        }
        ++j;
        if (cur.is_zero() && (k < 0 || j > 2 * k)) break;
        if (s.case_tag == CKCase::III && j > 2 * k) break;
    }
    s.truncation = last_nonzero + 1;
    return s;
}

CKSeries ck_closed_form(const SigPtr& sig, int x_block, int param_block, const SuperElement& f0,
                        const std::optional<SuperElement>& f2k1) {
    check_initial_datum(f0, x_block, param_block);
    CKSeries s;
    s.sig = sig;
    s.x_block = x_block;
    s.param_block = param_block;
    s.case_tag = classify_ck_case(sig, x_block);
    int M = sig->superdim(x_block);
    bool y_variant = param_block >= 0;

    // derivative ladder d^i[f0]
    std::vector<SuperElement> df{f0};
    while (!df.back().is_zero()) df.push_back(apply_param_derivative(df.back(), param_block));

    auto push = [&](int j, const SuperElement& fj) {
        if (!fj.is_zero()) s.terms.emplace_back(j, fj);
    };

    if (s.case_tag == CKCase::I) {
        for (int i = 0; i + 1 < static_cast<int>(df.size()); ++i) {
            int j = i / 2;
            Rat coef;
            if (i % 2 == 0) {
                coef = Rat(1) / (Rat(Int(1) << (2 * j)) * Rat(factorial(j)) * pochhammer(Rat(M, 2), j));
                if (y_variant && j % 2 != 0) coef = -coef;
            } else {
                coef = Rat(1) /
                       (Rat(Int(1) << (2 * j + 1)) * Rat(factorial(j)) * pochhammer(Rat(M, 2), j + 1));
                if (y_variant && j % 2 == 0) coef = -coef;
            }
            push(i, df[i].scaled(Scalar(coef)));
        }
    } else {
        int k = -M / 2;
        if (s.case_tag != CKCase::II && f2k1 && !f2k1->is_zero())
            throw domain_error("a second initial datum is only admissible when M = -2k, m != 0");
        if (2 * k + 1 < static_cast<int>(df.size()) && !df[2 * k + 1].is_zero())
            throw domain_error("initial datum violates d^" + std::to_string(2 * k + 1) +
                               "[F0] = 0 required when M = -2k");
        // polynomial part P_k / P_{k-1}
        for (int j = 0; j <= k; ++j) {
            if (2 * j >= static_cast<int>(df.size())) break;
            Rat coef = Rat(factorial(k - j)) /
                       (Rat(Int(1) << (2 * j)) * Rat(factorial(j)) * Rat(factorial(k)));
            if (!y_variant && j % 2 != 0) coef = -coef;
            push(2 * j, df[2 * j].scaled(Scalar(coef)));
        }
        for (int j = 0; j <= k - 1; ++j) {
            if (2 * j + 1 >= static_cast<int>(df.size())) break;
            Rat coef = Rat(factorial(k - j - 1)) /
                       (Rat(Int(1) << (2 * j + 1)) * Rat(factorial(j)) * Rat(factorial(k)));
            if (!y_variant && j % 2 == 0) coef = -coef;  // x0 variant: -(x d0/2) P_{k-1}
            push(2 * j + 1, df[2 * j + 1].scaled(Scalar(coef)));
        }
        // Bessel-type tail driven by F_{2k+1}
        if (s.case_tag == CKCase::II && f2k1 && !f2k1->is_zero()) {
            check_initial_datum(*f2k1, x_block, param_block);
            std::vector<SuperElement> dg{*f2k1};
            while (!dg.back().is_zero()) dg.push_back(apply_param_derivative(dg.back(), param_block));
            for (int i = 0; i + 1 < static_cast<int>(dg.size()); ++i) {
                int j = i / 2;
                Rat coef;
                if (i % 2 == 0) {
                    coef = Rat(factorial(k)) /
                           (Rat(Int(1) << (2 * j)) * Rat(factorial(j)) * Rat(factorial(k + j)));
                } else {
                    coef = Rat(factorial(k)) /
                           (Rat(Int(1) << (2 * j + 1)) * Rat(factorial(j)) * Rat(factorial(k + j + 1)));
                }
                if (y_variant && j % 2 != 0) coef = -coef;  // (-1)^j in both tail rows
                push(2 * k + 1 + i, dg[i].scaled(Scalar(coef)));
            }
        }
    }
    std::sort(s.terms.begin(), s.terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    int last = -1;
    for (const auto& [j, fj] : s.terms) last = std::max(last, j);
    s.truncation = last + 1;
    return s;
}

MonogenicReport verify_monogenic(const CKSeries& series) {
    return verify_monogenic_element(series.materialize(), series.x_block, series.param_block);
}

MonogenicReport verify_monogenic_element(const SuperElement& f, int x_block, int param_block,
                                         int max_degree) {
    MonogenicReport rep;
    SuperElement g = dirac_left(f, x_block);
    if (param_block >= 0)
        g = g + dirac_left(f, param_block);
    else
        g = g - partial_x0(f);
    if (max_degree >= 0) g = g.truncate_block_degree(x_block, max_degree);
    if (g.is_zero()) {
        rep.pass = true;
        return rep;
    }
    int lowest = -1;
    for (const auto& [k, c] : g.terms()) {
        int d = g.term_block_degree(k, x_block);
        if (lowest < 0 || d < lowest) lowest = d;
    }
    rep.first_failing_degree = lowest;
    rep.witness = g.homogeneous_part(x_block, lowest).str();
    return rep;
}

SuperElement x0_antiderivative(const SuperElement& f, int order) {
    SuperElement g = f;
    for (int i = 0; i < order; ++i) {
        SuperElement next(g.sig());
        for (const auto& [k, c] : g.terms()) {
            Scalar integrated;
            for (const auto& [key, rf] : c.terms()) {
                if (key.second != 0) throw domain_error("cannot integrate a log term");
                if (!rf.den().is_zero() && rf.den().degree() == 0) {
                    // polynomial: integrate term by term
                    Scalar acc;
                    for (int d = 0; d <= rf.num().degree(); ++d) {
                        Rat cd = Rat(rf.num()[d]) / Rat(rf.den()[0]);
                        if (cd != 0) acc = acc + Scalar(cd / Rat(d + 1)) * Scalar::x0pow(d + 1);
                    }
                    integrated = integrated + acc * Scalar::sqrtpi(key.first);
                } else {
                    throw domain_error("cannot integrate a non-polynomial coefficient");
                }
            }
            next.add_term(k, integrated);
        }
        g = next;
    }
    return g;
}

namespace {

using CliffordPart = std::pair<uint64_t, std::vector<std::pair<uint16_t, uint16_t>>>;

CliffordPart clifford_of(const TermKey& k) { return {k.orth, k.weyl}; }

}  // namespace

std::optional<SuperElement> dirac_antiderivative(const SuperElement& f, int block, int order) {
    const SigPtr& sig = f.sig();
    SuperElement target = f;
    for (int step = 0; step < order; ++step) {
        if (target.is_zero()) continue;
        // candidate Clifford parts: close the target's parts under one left
        // multiplication by each block generator, twice
        std::set<CliffordPart> parts;
        for (const auto& [k, c] : target.terms()) parts.insert(clifford_of(k));
        std::vector<SuperElement> gens;
        const Block& blk = sig->block(block);
        for (int i = 0; i < blk.m; ++i)
            gens.push_back(SuperElement::orth_gen(sig, sig->orth_offset(block) + i));
        for (int p = 0; p < 2 * blk.n; ++p)
            gens.push_back(SuperElement::weyl_gen(sig, 2 * sig->pair_offset(block) + p));
        for (int round = 0; round < 2; ++round) {
            std::set<CliffordPart> grown = parts;
            for (const auto& part : parts) {
                TermKey key;
                key.bos.assign(sig->total_bos(), 0);
                key.weyl = part.second;
                key.orth = part.first;
                SuperElement unit(sig);
                unit.add_term(key, Scalar(1));
                for (const auto& g : gens) {
                    SuperElement prod = g * unit;
                    for (const auto& [kk, cc] : prod.terms()) grown.insert(clifford_of(kk));
                }
            }
            parts = std::move(grown);
        }
        // unknowns: monomials of degree d+1 for every degree d present
        std::set<int> degrees;
        for (const auto& [k, c] : target.terms()) degrees.insert(target.term_block_degree(k, block));
        std::vector<SuperElement> unknowns;
        for (int d : degrees) {
            for (const auto& mono : monomial_basis(sig, block, d + 1)) {
                for (const auto& part : parts) {
                    TermKey key = mono;
                    key.orth = part.first;
                    key.weyl = part.second;
                    SuperElement u(sig);
                    u.add_term(key, Scalar(1));
                    unknowns.push_back(u);
                }
            }
        }
        // target index space
        std::map<TermKey, int> index;
        auto index_of = [&](const TermKey& k) {
            auto it = index.find(k);
            if (it == index.end()) it = index.emplace(k, static_cast<int>(index.size())).first;
            return it->second;
        };
        std::vector<std::map<int, Rat>> cols;
        for (const auto& u : unknowns) {
            std::map<int, Rat> col;
            SuperElement du = dirac_left(u, block);
            for (const auto& [k, c] : du.terms()) col[index_of(k)] = c.as_rational();
            cols.push_back(std::move(col));
        }
        std::map<int, Rat> rhsmap;
        for (const auto& [k, c] : target.terms()) rhsmap[index_of(k)] = c.as_rational();
        int rows = static_cast<int>(index.size());
        QMat a(rows, QVec(unknowns.size(), Rat(0)));
        for (size_t cix = 0; cix < cols.size(); ++cix)
            for (const auto& [rix, val] : cols[cix]) a[rix][cix] = val;
        QVec b(rows, Rat(0));
        for (const auto& [rix, val] : rhsmap) b[rix] = val;
        QVec x;
        if (!solve_linear(std::move(a), std::move(b), x)) return std::nullopt;
        SuperElement g(sig);
        for (size_t i = 0; i < unknowns.size(); ++i)
            if (x[i] != 0) g = g + unknowns[i].scaled(Scalar(x[i]));
        target = g;
    }
    return target;
}

}  // namespace sck
