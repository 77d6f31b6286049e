#include "superck/cauchy.hpp"

#include "superck/integration.hpp"
#include "superck/operators.hpp"

namespace sck {

AppellLogFamily appell_log(int k) {
    if (k < 0) throw domain_error("negative Appell-log index");
    AppellLogFamily fam;
    fam.k = k;
    fam.a.assign(2 * k + 1, Rat(0));
    for (int l = 0; l < 2 * k; ++l)
        fam.a[l + 1] = (fam.a[l] + Rat(1) / Rat(factorial(l + 1))) / Rat(l + 1);
    return fam;
}

namespace {

std::pair<Scalar, Scalar> rotate_i(const Scalar& a, const Scalar& b, int t) {
    switch (((t % 4) + 4) % 4) {
        case 0: return {a, b};
        case 1: return {-b, a};
        case 2: return {-a, -b};
        default: return {b, -a};
    }
}

}  // namespace

HoloProvider appell_log_provider(int k) {
    AppellLogFamily fam = appell_log(k);
    HoloProvider p;
    p.name = "G_" + std::to_string(2 * k);
    p.coef = [fam, k](int j, int l) -> Scalar {
        if (j <= 2 * k) {
            // G_{2k}^{(j)} = G_{2k-j}; at i x0 the principal branch gives
            // ln(i x0) = ln x0 + i pi/2
            int deg = 2 * k - j;
            Scalar body = Scalar::x0pow(deg) *
                          (Scalar::logx0() * Scalar(Rat(1) / Rat(factorial(deg))) - Scalar(fam.a[deg]));
            Scalar imag = Scalar::sqrtpi(2) * Scalar(Rat(1, 2) / Rat(factorial(deg))) *
                          Scalar::x0pow(deg);
            auto [re, im] = rotate_i(body, imag, deg);
            return l == 1 ? re : im;
        }
        // beyond the log block: derivatives of z^{-1}
        int t = j - 2 * k;  // G^{(j)}(z) = (-1)^{t-1} (t-1)! z^{-t}
        Rat c = Rat((t - 1) % 2 == 0 ? 1 : -1) * Rat(factorial(t - 1));
        auto [re, im] = rotate_i(Scalar(c) * Scalar::x0pow(-t), Scalar(), -t);
        return l == 1 ? re : im;
    };
    return p;
}

SuperElement fundamental_solution_laplace(const SigPtr& sig, int block) {
    const Block& blk = sig->block(block);
    int m = blk.m, n = blk.n;
    if (m == 0) throw domain_error("fundamental solution needs m >= 1");
    // the bosonic kernels of Delta_{m|0}^{j+1} exist only off the log case
    for (int j = 0; j <= n; ++j)
        if (m % 2 == 0 && m - 2 * (j + 1) <= 0)
            throw domain_error("logarithmic bosonic kernel: dimension rejected");
    RadialBase rb{block, false};
    SuperElement xf(sig);
    for (int v = 0; v < 2 * n; ++v)
        xf = xf + SuperElement::ferm_var(sig, sig->ferm_offset(block) + v) *
                      SuperElement::weyl_gen(sig, 2 * sig->pair_offset(block) + v);
    SuperElement result(sig);
    result.set_radial_base(rb);
    for (int j = 0; j <= n; ++j) {
        int J = j + 1;
        // nu_{2J}^{m|0} = (-1)^J Gamma(m/2 - J) / (2^{2J} pi^{m/2} Gamma(J)) R^{2J - m}
        Scalar nu = Scalar(Rat(J % 2 == 0 ? 1 : -1)) * gamma_exact(m - 2 * J) *
                    Scalar(Rat(1, Int(Int(1) << (2 * J)) * factorial(J - 1))) * Scalar::sqrtpi(-m);
        Scalar outer = Scalar(Rat(j % 2 == 0 ? 1 : -1) * Rat(Int(1) << (2 * j)) * Rat(factorial(j)) /
                              Rat(factorial(n - j)));
        SuperElement piece = SuperElement::radial_power(sig, rb, 2 * J - m) * xf.pow(2 * n - 2 * j);
        result = result + piece.scaled(Scalar::sqrtpi(2 * n) * outer * nu);
    }
    return result;
}

namespace {

void require_kernel_dims(int M) {
    if (M % 2 != 0 && M + 1 <= 0)
        throw domain_error("M+1 in -2N0: no fraction-form kernel in this superdimension");
}

}  // namespace

SuperElement cauchy_kernel_fraction(const SigPtr& sig, int block) {
    if (!sig->with_x0()) throw domain_error("kernel needs the scalar variable x0");
    int M = sig->superdim(block);
    require_kernel_dims(M);
    RadialBase rb{block, true};
    SuperElement a = SuperElement::constant(sig, Scalar::x0pow(2)) + norm_squared(sig, block);
    SuperElement powr = gen_power(a, Rat(-(M + 1), 2), rb);
    SuperElement x0_minus_x =
        SuperElement::constant(sig, Scalar::x0pow(1)) - SuperElement::supervector(sig, block);
    return (x0_minus_x * powr).scaled(-sigma(M + 1).inverse());
}

SuperElement cauchy_kernel_generator_sum(const SigPtr& sig, int block) {
    if (!sig->with_x0()) throw domain_error("kernel needs the scalar variable x0");
    const Block& blk = sig->block(block);
    int m = blk.m, n = blk.n;
    int M = sig->superdim(block);
    require_kernel_dims(M);
    RadialBase rb{block, true};
    SuperElement xbar(sig);
    for (int i = 0; i < m; ++i)
        xbar = xbar + SuperElement::bos_var(sig, sig->bos_offset(block) + i) *
                          SuperElement::orth_gen(sig, sig->orth_offset(block) + i);
    SuperElement xf(sig);
    for (int v = 0; v < 2 * n; ++v)
        xf = xf + SuperElement::ferm_var(sig, sig->ferm_offset(block) + v) *
                      SuperElement::weyl_gen(sig, 2 * sig->pair_offset(block) + v);
    SuperElement x0_minus_xbar = SuperElement::constant(sig, Scalar::x0pow(1)) - xbar;
    SuperElement result(sig);
    result.set_radial_base(rb);
    Scalar pi_n = Scalar::sqrtpi(2 * n);
    for (int j = 0; j <= n; ++j) {
        // phi_{2j+1}^{m+1|0} = (-1)^{j+1} Gamma((m+1)/2 - j) /
        //                      (2^{2j+1} pi^{(m+1)/2} j!) (x0 - xbar) R^{2j-m-1}
        Scalar phi = Scalar(Rat(j % 2 == 0 ? -1 : 1)) * gamma_exact(m + 1 - 2 * j) *
                     Scalar(Rat(1, Int(Int(1) << (2 * j + 1)) * factorial(j))) *
                     Scalar::sqrtpi(-(m + 1));
        Scalar outer = Scalar(Rat(j % 2 == 0 ? 1 : -1) * Rat(Int(1) << (2 * j)) *
                              Rat(factorial(j)) / Rat(factorial(n - j)));
        SuperElement piece = x0_minus_xbar * SuperElement::radial_power(sig, rb, 2 * j - m - 1) *
                             xf.pow(2 * n - 2 * j);
        result = result + piece.scaled(pi_n * outer * phi);
    }
    for (int j = 0; j <= n - 1; ++j) {
        // nu_{2j+2}^{m+1|0} = (-1)^{j+1} Gamma((m+1)/2 - j - 1) /
        //                     (2^{2j+2} pi^{(m+1)/2} j!) R^{2j+1-m}
        Scalar nu = Scalar(Rat(j % 2 == 0 ? -1 : 1)) * gamma_exact(m - 1 - 2 * j) *
                    Scalar(Rat(1, Int(Int(1) << (2 * j + 2)) * factorial(j))) *
                    Scalar::sqrtpi(-(m + 1));
        Scalar outer = Scalar(Rat(j % 2 == 0 ? -1 : 1) * Rat(Int(1) << (2 * j + 1)) *
                              Rat(factorial(j)) / Rat(factorial(n - j - 1)));
        SuperElement piece =
            SuperElement::radial_power(sig, rb, 2 * j + 1 - m) * xf.pow(2 * n - 2 * j - 1);
        result = result + piece.scaled(pi_n * outer * nu);
    }
    return result;
}

CKSeries cauchy_kernel_series(const SigPtr& sig, int block, int N) {
    int M = sig->superdim(block);
    require_kernel_dims(M);
    CKSeries s;
    s.sig = sig;
    s.x_block = block;
    s.param_block = -1;
    s.case_tag = classify_ck_case(sig, block);
    Scalar lead = -sigma(M + 1).inverse();
    for (int j = 0; 2 * j <= N; ++j) {
        Scalar ratio = Scalar(pochhammer(Rat(M + 1, 2), j) / Rat(factorial(j)));
        SuperElement even =
            SuperElement::constant(sig, lead * ratio * Scalar::x0pow(-M - 2 * j));
        if (!even.is_zero()) s.terms.emplace_back(2 * j, even);
        if (2 * j + 1 <= N) {
            SuperElement odd =
                SuperElement::constant(sig, -lead * ratio * Scalar::x0pow(-M - 2 * j - 1));
            if (!odd.is_zero()) s.terms.emplace_back(2 * j + 1, odd);
        }
    }
    s.truncation = N + 1;
    return s;
}

PwdckReport verify_pwdck(const SigPtr& sig, int x_block, int w_block, int N) {
    PwdckReport rep;
    int M = sig->superdim(x_block);
    require_kernel_dims(M);
    rep.tag = classify_ck_case(sig, x_block);
    SuperElement ip = inner_product(sig, x_block, w_block);
    SuperElement w = SuperElement::supervector(sig, w_block);
    SuperElement plane1 = ip - w.scaled(Scalar::x0pow(1));  // <x,w> - x0 w
    SuperElement lhs(sig), rhs(sig);
    if (rep.tag == CKCase::III) {
        int n = sig->block(x_block).n;
        lhs = cauchy_kernel_fraction(sig, x_block);
        SuperElement lap = plane1.pow(2 * n);
        for (int i = 0; i < n; ++i) lap = laplacian(lap, w_block);
        Scalar coef = Scalar(Rat(-1, Int(Int(1) << (2 * n)) * factorial(n) * factorial(n))) *
                      sigma(-2 * n + 1).inverse();
        rhs = lap.scaled(coef);
        rep.pass = lhs.equals(rhs);
    } else if (rep.tag == CKCase::I) {
        lhs = cauchy_kernel_series(sig, x_block, N).materialize();
        int ell = (M % 2 == 0) ? 1 : 2;
        SuperElement integral = pw_holo_integral(sig, power_provider(-M), ell, x_block, w_block, N);
        int half = (M % 2 == 0) ? M / 2 : (M + 1) / 2;
        Rat sgn = Rat(half % 2 == 0 ? -1 : 1);  // the leading -(-1)^{...}
        Scalar coef = Scalar(sgn * Rat(factorial(M - 1)) / Rat(Int(1) << (M + 1))) *
                      Scalar::sqrtpi(-2 * M);
        rhs = integral.scaled(coef);
        rep.pass = (lhs - rhs).truncate_block_degree(x_block, N).is_zero();
    } else {
        int k = -M / 2;
        lhs = cauchy_kernel_series(sig, x_block, N).materialize();
        SuperElement lap = plane1.pow(2 * k);
        for (int i = 0; i < k; ++i) lap = laplacian(lap, w_block);
        SuperElement term1 = lap.scaled(
            Scalar(Rat(-1, Int(Int(1) << (2 * k)) * factorial(k) * factorial(k))) *
            sigma(-2 * k + 1).inverse());
        HoloProvider g2k = appell_log_provider(k);
        for (int j = 0; j <= N; ++j)
            for (int l = 1; l <= 2; ++l)
                if (g2k.coef(j, l).max_log_degree() > 0) rep.log_terms_seen = true;
        SuperElement integral = pw_holo_integral(sig, g2k, 1, x_block, w_block, N);
        Scalar coef = Scalar(Rat(k % 2 == 0 ? 1 : -1) * Rat(Int(1) << (2 * k), 2)) *
                      Scalar::sqrtpi(4 * k);
        SuperElement term2 = integral.scaled(coef);
        rhs = term1 + term2;
        rep.pass = (lhs - rhs).truncate_block_degree(x_block, N).is_zero();
    }
    if (!rep.pass) rep.witness = (lhs - rhs).str();
    return rep;
}

}  // namespace sck
