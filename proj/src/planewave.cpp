#include "superck/planewave.hpp"

#include "superck/integration.hpp"
#include "superck/operators.hpp"

namespace sck {

namespace {

// real/imaginary split of i^t (A + iB) for integer t
std::pair<Scalar, Scalar> rotate(const Scalar& a, const Scalar& b, int t) {
    switch (((t % 4) + 4) % 4) {
        case 0: return {a, b};
        case 1: return {-b, a};
        case 2: return {-a, -b};
        default: return {b, -a};
    }
}

}  // namespace

HoloProvider power_provider(int d) {
    HoloProvider p;
    p.name = "z^" + std::to_string(d);
    p.coef = [d](int j, int l) -> Scalar {
        // g^{(j)}(i x0) = d (d-1) ... (d-j+1) (i x0)^{d-j}
        if (d >= 0 && j > d) return Scalar();
        Rat c = falling(Rat(d), j);
        if (c == 0) return Scalar();
        auto [re, im] = rotate(Scalar(c) * Scalar::x0pow(d - j), Scalar(), d - j);
        return l == 1 ? re : im;
    };
    return p;
}

SuperElement pw_exp_integral(const SigPtr& sig, int x_block, int w_block, int param_block,
                             const SuperElement& f0, bool normalized, int max_power) {
    bool y_variant = param_block >= 0;
    SuperElement ip = inner_product(sig, x_block, w_block);
    SuperElement w = SuperElement::supervector(sig, w_block);
    SuperElement result(sig);
    if (!normalized || sig->block(w_block).m == 0) {
        // materialize (w d)^i [f0] term by term and integrate; with m = 0 the
        // series is nilpotent-finite and stays inside the normalized
        // integral's degree bound on its own
        SuperElement cur = f0;
        SuperElement ippow = SuperElement::one(sig);
        for (int i = 0; !cur.is_zero(); ++i) {
            if (max_power >= 0 && i > max_power) break;
            Rat coef = Rat(1) / Rat(factorial(i));
            if (y_variant && i % 2 != 0) coef = -coef;
            SuperElement integrand = (ippow * cur).scaled(Scalar(coef));
            result = result + (normalized ? normalized_integral(integrand, w_block)
                                          : sphere_integral(integrand, w_block));
            cur = w * (y_variant ? dirac_left(cur, param_block) : partial_x0(cur));
            ippow = ippow * ip;
        }
        return result;
    }
    // normalized integral: |w|^{2j} weights drop at 1, leaving polynomial
    // integrands <w,x>^{2j} D^{2j}[f0] and <w,x>^{2j+1} w D^{2j+1}[f0]
    int M = sig->superdim(w_block);
    int k = -M / 2;
    auto even_derivative = [&](const SuperElement& f) {
        return y_variant ? laplacian(f, param_block) : partial_x0(partial_x0(f));
    };
    SuperElement even = f0;  // D^{2j}[f0] up to the (-1)^j of (w d)^{2j}
    for (int j = 0; j <= k && !even.is_zero(); ++j) {
        Rat ce = Rat(j % 2 == 0 ? 1 : -1) / Rat(factorial(2 * j));
        result = result + normalized_integral(ip.pow(2 * j) * even.scaled(Scalar(ce)), w_block);
        if (j <= k - 1) {
            SuperElement odd = y_variant ? dirac_left(even, param_block) : partial_x0(even);
            if (!odd.is_zero()) {
                Rat co = Rat(j % 2 == 0 ? 1 : -1) / Rat(factorial(2 * j + 1));
                if (y_variant) co = -co;
                result = result +
                         normalized_integral(ip.pow(2 * j + 1) * (w * odd).scaled(Scalar(co)), w_block);
            }
        }
        even = even_derivative(even);
    }
    return result;
}

SuperElement pw_coshsinh_integral(const SigPtr& sig, int x_block, int w_block, int param_block,
                                  const SuperElement& f0) {
    if (sig->block(x_block).m != 0)
        throw domain_error("cosh/sinh plane wave needs a purely fermionic block");
    bool y_variant = param_block >= 0;
    int n = sig->block(x_block).n;
    SuperElement ip = inner_product(sig, x_block, w_block);
    SuperElement w = SuperElement::supervector(sig, w_block);
    SuperElement result(sig);
    SuperElement cur = f0;  // d^{i}[f0]
    for (int i = 0; i <= 2 * n && !cur.is_zero(); ++i) {
        Rat coef = Rat(1) / Rat(factorial(i));
        SuperElement integrand(sig);
        if (i % 2 == 0) {
            if (!y_variant && (i / 2) % 2 != 0) coef = -coef;  // cos expansion
            integrand = ip.pow(i).scaled(Scalar(coef)) * cur;
        } else {
            if (y_variant)
                coef = -coef;  // - w sinh
            else if ((i / 2) % 2 != 0)
                coef = -coef;  // + w sin
            integrand = ip.pow(i).scaled(Scalar(coef)) * (w * cur);
        }
        result = result + normalized_integral(integrand, w_block);
        cur = y_variant ? dirac_left(cur, param_block) : partial_x0(cur);
    }
    return result;
}

SuperElement pw_decompose(const SigPtr& sig, int x_block, int w_block, int param_block,
                          const SuperElement& f0, const std::optional<SuperElement>& f2k1) {
    CKCase tag = classify_ck_case(sig, x_block);
    int M = sig->superdim(x_block);
    if (tag == CKCase::I) {
        SuperElement i_m = pw_exp_integral(sig, x_block, w_block, param_block, f0, false);
        return i_m.scaled(sigma(M).inverse());
    }
    if (tag == CKCase::III) {
        if (f2k1 && !f2k1->is_zero())
            throw domain_error("no second datum in the purely fermionic case");
        return pw_coshsinh_integral(sig, x_block, w_block, param_block, f0);
    }
    int k = -M / 2;
    SuperElement ni = pw_exp_integral(sig, x_block, w_block, param_block, f0, true);
    if (!f2k1 || f2k1->is_zero()) return ni;
    SuperElement anti(sig);
    if (param_block >= 0) {
        auto a = dirac_antiderivative(*f2k1, param_block, 2 * k + 1);
        if (!a) throw domain_error("no polynomial antiderivative for the second datum");
        anti = *a;
    } else {
        anti = x0_antiderivative(*f2k1, 2 * k + 1);
    }
    SuperElement tail = pw_exp_integral(sig, x_block, w_block, param_block, anti, false);
    Rat coef = Rat(factorial(k)) * Rat(Int(1) << (2 * k));
    if (param_block >= 0 && k % 2 == 0) coef = -coef;  // (-1)^{k+1} in the parameter variant
    return ni + tail.scaled(Scalar(coef) * Scalar::sqrtpi(2 * k));
}

SuperElement holo_planewave(const SigPtr& sig, const HoloProvider& g, int x_block, int w_block,
                            int N) {
    if (sig->block(w_block).m == 0)
        throw domain_error("the two-component plane wave needs |w| and hence m >= 1");
    RadialBase rbw{w_block, false};
    SuperElement ip = inner_product(sig, x_block, w_block);
    SuperElement w = SuperElement::supervector(sig, w_block);
    SuperElement w_norm2 = norm_squared(sig, w_block);
    std::map<int, SuperElement> norm_pow;  // |w|^t
    auto norm_power = [&](int t) {
        auto it = norm_pow.find(t);
        if (it == norm_pow.end())
            it = norm_pow.emplace(t, gen_power(w_norm2, Rat(t, 2), rbw)).first;
        return it->second;
    };
    SuperElement dir = w * norm_power(-1);  // w / |w|
    SuperElement result(sig);
    result.set_radial_base(rbw);
    SuperElement ippow = SuperElement::one(sig);
    for (int j = 0; j <= N; ++j) {
        for (int l = 1; l <= 2; ++l) {
            Scalar val = g.coef(j, l);
            if (val.is_zero()) continue;
            for (const auto& [mono, t] : val.split_x0_scale()) {
                SuperElement piece = ippow.scaled(mono * Scalar(Rat(1) / Rat(factorial(j)))) *
                                     norm_power(t);
                result = result + (l == 1 ? piece : -(dir * piece));
            }
        }
        ippow = ippow * ip;
    }
    return result;
}

SuperElement pw_holo_integral(const SigPtr& sig, const HoloProvider& g, int ell, int x_block,
                              int w_block, int N) {
    SuperElement out(sig);
    SuperElement ip = inner_product(sig, x_block, w_block);
    SuperElement w = SuperElement::supervector(sig, w_block);
    SuperElement wl1 = w.pow(ell - 1), wl = w.pow(ell);
    SuperElement ippow = SuperElement::one(sig);
    for (int j = 0; j <= N; ++j) {
        Rat inv = Rat(1) / Rat(factorial(j));
        Scalar g1 = g.coef(j, 1), g2 = g.coef(j, 2);
        if (!g1.is_zero())
            out = out + sphere_integral(ippow * wl1, w_block).scaled(g1 * Scalar(inv));
        if (!g2.is_zero())
            out = out - sphere_integral(ippow * wl, w_block).scaled(g2 * Scalar(inv));
        ippow = ippow * ip;
    }
    return out;
}

TwoSidedReport pw_sphere_integral_holo(const SigPtr& sig, const HoloProvider& g, int ell,
                                       int x_block, int w_block, int N) {
    TwoSidedReport rep{SuperElement(sig), SuperElement(sig), false};
    rep.lhs = pw_holo_integral(sig, g, ell, x_block, w_block, N);
    SuperElement f0 = SuperElement::constant(sig, g.coef(0, ell));
    rep.rhs = pw_exp_integral(sig, x_block, w_block, -1, f0, false, N);
    rep.pass = rep.lhs.equals(rep.rhs);
    return rep;
}

ThreeWayReport pw_normalized_monomial(const SigPtr& sig, int s, int ell, int x_block,
                                      int w_block) {
    int M = sig->superdim(x_block);
    if (M > 0 || M % 2 != 0) throw domain_error("monomial plane waves need M = -2k");
    int k = -M / 2;
    int d = 2 * s + ell - 1;
    if (d > 2 * k) throw domain_error("degree bound 2s + l - 1 <= 2k violated");
    ThreeWayReport rep{SuperElement(sig), SuperElement(sig), SuperElement(sig), false};
    SuperElement ip = inner_product(sig, x_block, w_block);
    SuperElement w = SuperElement::supervector(sig, w_block);
    SuperElement plane = (ip - w.scaled(Scalar::x0pow(1))).pow(d) * w.pow(ell - 1);
    rep.direct = normalized_integral(plane, w_block);

    SuperElement x0d = SuperElement::constant(sig, Scalar::x0pow(d));
    bool fermionic = sig->block(x_block).m == 0;
    SuperElement op_value = fermionic
                                ? pw_coshsinh_integral(sig, x_block, w_block, -1, x0d)
                                : pw_exp_integral(sig, x_block, w_block, -1, x0d, true);
    rep.via_operator = s % 2 == 0 ? op_value : -op_value;

    SuperElement lap = plane;
    for (int i = 0; i < s + ell - 1; ++i) lap = laplacian(lap, w_block);
    Rat coef = Rat(factorial(k - s - ell + 1)) /
               (Rat(Int(1) << (2 * (s + ell - 1))) * Rat(factorial(k)) * Rat(factorial(s + ell - 1)));
    if (ell == 2) coef = -coef;  // (-1)^{l-1}
    rep.via_laplacian = lap.scaled(Scalar(coef));

    rep.pass = rep.direct.equals(rep.via_operator) && op_value.equals(rep.via_laplacian);
    return rep;
}

}  // namespace sck
