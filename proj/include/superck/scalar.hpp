#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sck {

using Int = mpz_class;
using Rat = mpq_class;

struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

Int factorial(long n);
Int binomial(long n, long k);
Rat harmonic_number(long n);  // 1 + 1/2 + ... + 1/n

// Product q(q+1)...(q+len-1); empty product for len == 0.
Rat pochhammer(const Rat& q, long len);
// Product q(q-1)...(q-len+1).
Rat falling(const Rat& q, long len);

// Integer-coefficient polynomial in the scalar variable x0, dense, trimmed.
class ZPoly {
public:
    ZPoly() = default;
    ZPoly(const Int& c) { if (c != 0) coeffs_.push_back(c); }
    ZPoly(long c) : ZPoly(Int(c)) {}
    static ZPoly monomial(const Int& c, int deg);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Int& operator[](int i) const;
    const Int& leading() const { return coeffs_.back(); }

    ZPoly operator+(const ZPoly& o) const;
    ZPoly operator-(const ZPoly& o) const;
    ZPoly operator*(const ZPoly& o) const;
    ZPoly operator-() const;
    bool operator==(const ZPoly& o) const { return coeffs_ == o.coeffs_; }

    ZPoly derivative() const;
    Int content() const;  // gcd of coefficients, sign of leading coeff
    ZPoly divide_by_content(const Int& c) const;
    // Exact division; throws if the division leaves a remainder.
    ZPoly divide_exact(const ZPoly& d) const;
    static ZPoly gcd(const ZPoly& a, const ZPoly& b);  // primitive, positive leading coeff

    std::string str() const;

private:
    void trim();
    std::vector<Int> coeffs_;  // coeffs_[i] multiplies x0^i
};

// Reduced quotient of integer polynomials in x0. Denominator has positive
// leading coefficient and shares no factor (polynomial or integer) with the
// numerator.
class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(const Rat& c);
    RatFunc(long c) : RatFunc(Rat(c)) {}
    RatFunc(ZPoly num, ZPoly den);
    static RatFunc x0pow(int k);  // x0^k, k may be negative

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
    Rat as_rational() const;  // requires is_constant()
    const ZPoly& num() const { return num_; }
    const ZPoly& den() const { return den_; }

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc operator-() const;
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

    RatFunc derivative() const;
    // Decompose as c*x0^t when the reduced form is a Laurent monomial.
    bool as_laurent_monomial(Rat& c, int& t) const;

    std::string str() const;

private:
    void reduce();
    ZPoly num_, den_;
};

// Exact coefficient: finite sum of terms  f(x0) * sqrtpi^s * logx0^p  with
// f in lowest terms, s an integer, p a bounded non-negative integer.
class Scalar {
public:
    Scalar() = default;
    Scalar(const Rat& c) { insert(0, 0, RatFunc(c)); }
    Scalar(long c) : Scalar(Rat(c)) {}
    static Scalar rational(const Rat& c) { return Scalar(c); }
    static Scalar ratfunc(const RatFunc& f);
    static Scalar x0pow(int k) { return ratfunc(RatFunc::x0pow(k)); }
    static Scalar sqrtpi(int power);
    static Scalar logx0(int power = 1);

    static int max_log_power();
    static void set_max_log_power(int p);

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    Rat as_rational() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }
    bool operator==(const Scalar& o) const { return terms_ == o.terms_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Multiplicative inverse; defined only for single-term, log-free scalars.
    Scalar inverse() const;
    Scalar pow(int k) const;  // negative k uses inverse()

    Scalar derivative_x0() const;
    // Substitute x0 -> x0 * t, where t is tracked as an extra integer power
    // returned per term (the radial symbol exponent). Requires every term's
    // rational function to be a Laurent monomial and no log terms.
    std::vector<std::pair<Scalar, int>> split_x0_scale() const;

    int max_log_degree() const;

    const std::map<std::pair<int, int>, RatFunc>& terms() const { return terms_; }

    std::string str() const;

private:
    void insert(int sp, int lp, const RatFunc& f);
    std::map<std::pair<int, int>, RatFunc> terms_;  // (sqrtpi power, log power) -> f(x0)
};

// Gamma(q) for half-integer q = q2/2, as rational * sqrtpi^(0 or 1).
// Throws domain_error at the poles (q a non-positive integer).
Scalar gamma_exact(int q2);
// 1/Gamma(q); returns 0 at the poles.
Scalar gamma_recip_exact(int q2);
// Surface area sigma_M = 2 pi^{M/2} / Gamma(M/2); zero for M in -2N0.
Scalar sigma(int M);

}  // namespace sck
