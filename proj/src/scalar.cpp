#include "superck/scalar.hpp"

#include <algorithm>
#include <sstream>

namespace sck {

Int factorial(long n) {
    if (n < 0) throw domain_error("factorial of negative integer");
    Int r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (long i = 0; i < k; ++i) { r *= (n - i); r /= (i + 1); }
    return r;
}

Rat harmonic_number(long n) {
    Rat h = 0;
    for (long i = 1; i <= n; ++i) h += Rat(1, i);
    return h;
}

Rat pochhammer(const Rat& q, long len) {
    Rat r = 1;
    for (long i = 0; i < len; ++i) r *= q + i;
    return r;
}

Rat falling(const Rat& q, long len) {
    Rat r = 1;
    for (long i = 0; i < len; ++i) r *= q - i;
    return r;
}

// ---------------------------------------------------------------- ZPoly

ZPoly ZPoly::monomial(const Int& c, int deg) {
    ZPoly p;
    if (c != 0) {
        p.coeffs_.assign(deg + 1, Int(0));
        p.coeffs_[deg] = c;
    }
    return p;
}

const Int& ZPoly::operator[](int i) const {
    static const Int zero = 0;
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[i];
}

void ZPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

ZPoly ZPoly::operator+(const ZPoly& o) const {
    ZPoly r;
    r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
    r.trim();
    return r;
}

ZPoly ZPoly::operator-(const ZPoly& o) const { return *this + (-o); }

ZPoly ZPoly::operator-() const {
    ZPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

ZPoly ZPoly::operator*(const ZPoly& o) const {
    ZPoly r;
    if (is_zero() || o.is_zero()) return r;
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    r.trim();
    return r;
}

ZPoly ZPoly::derivative() const {
    ZPoly r;
    if (degree() < 1) return r;
    r.coeffs_.resize(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) r.coeffs_[i - 1] = coeffs_[i] * static_cast<long>(i);
    r.trim();
    return r;
}

Int ZPoly::content() const {
    if (is_zero()) return 0;
    Int g = 0;
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    if (leading() < 0) g = -g;
    return g;
}

ZPoly ZPoly::divide_by_content(const Int& c) const {
    ZPoly r = *this;
    for (auto& x : r.coeffs_) {
        Int q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
        if (rem != 0) throw domain_error("content division not exact");
        x = q;
    }
    return r;
}

ZPoly ZPoly::divide_exact(const ZPoly& d) const {
    if (d.is_zero()) throw domain_error("division by zero polynomial");
    // Long division over Q; the callers guarantee exactness up to content.
    std::vector<Rat> rem(coeffs_.begin(), coeffs_.end());
    int dd = d.degree();
    int qd = degree() - dd;
    if (qd < 0) {
        if (is_zero()) return ZPoly();
        throw domain_error("polynomial division not exact");
    }
    std::vector<Rat> quot(qd + 1, Rat(0));
    Rat lead(d.leading());
    for (int i = qd; i >= 0; --i) {
        Rat q = rem[i + dd] / lead;
        quot[i] = q;
        for (int j = 0; j <= dd; ++j) rem[i + j] -= q * Rat(d[j]);
    }
    for (const auto& r : rem)
        if (r != 0) throw domain_error("polynomial division not exact");
    // Clear denominators; exact use sites always produce integral quotients.
    Int lcm = 1;
    for (auto& q : quot) {
        q.canonicalize();
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
    }
    if (lcm != 1) throw domain_error("polynomial division not integral");
    ZPoly out;
    out.coeffs_.resize(quot.size());
    for (size_t i = 0; i < quot.size(); ++i) out.coeffs_[i] = quot[i].get_num();
    out.trim();
    return out;
}

ZPoly ZPoly::gcd(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero()) return b.is_zero() ? ZPoly() : b.divide_by_content(b.content());
    if (b.is_zero()) return a.divide_by_content(a.content());
    // Euclid over Q on small degrees, then primitivize.
    std::vector<Rat> u(a.coeffs_.begin(), a.coeffs_.end());
    std::vector<Rat> v(b.coeffs_.begin(), b.coeffs_.end());
    auto deg = [](const std::vector<Rat>& p) { return static_cast<int>(p.size()) - 1; };
    auto trimv = [](std::vector<Rat>& p) { while (!p.empty() && p.back() == 0) p.pop_back(); };
    while (!v.empty()) {
        // u := u mod v
        while (deg(u) >= deg(v) && !u.empty()) {
            Rat q = u.back() / v.back();
            int shift = deg(u) - deg(v);
            for (int j = 0; j < static_cast<int>(v.size()); ++j) u[j + shift] -= q * v[j];
            trimv(u);
        }
        std::swap(u, v);
    }
    // u is the gcd over Q; scale to a primitive integer polynomial.
    Int l = 1;
    for (auto& c : u) {
        c.canonicalize();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    }
    ZPoly g;
    g.coeffs_.resize(u.size());
    for (size_t i = 0; i < u.size(); ++i) g.coeffs_[i] = Int(u[i] * Rat(l));
    g.trim();
    if (g.is_zero()) return g;
    return g.divide_by_content(g.content());
}

std::string ZPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Int& c = coeffs_[i];
        if (c == 0) continue;
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (i == 0) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str() << "*";
            os << "x0";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------- RatFunc

RatFunc::RatFunc(const Rat& c) : den_(1) {
    Rat cc = c;
    cc.canonicalize();
    num_ = ZPoly(Int(cc.get_num()));
    den_ = ZPoly(Int(cc.get_den()));
}

RatFunc::RatFunc(ZPoly num, ZPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw domain_error("rational function with zero denominator");
    reduce();
}

RatFunc RatFunc::x0pow(int k) {
    if (k >= 0) return RatFunc(ZPoly::monomial(1, k), ZPoly(1));
    return RatFunc(ZPoly(1), ZPoly::monomial(1, -k));
}

void RatFunc::reduce() {
    if (num_.is_zero()) { den_ = ZPoly(1); return; }
    ZPoly g = ZPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divide_exact(g);
        den_ = den_.divide_exact(g);
    }
    Int cn = num_.content(), cd = den_.content();
    if (cn < 0) cn = -cn;
    if (cd < 0) cd = -cd;
    Int g2;
    mpz_gcd(g2.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (g2 > 1) {
        num_ = num_.divide_by_content(g2);
        den_ = den_.divide_by_content(g2);
    }
    if (den_.leading() < 0) { num_ = -num_; den_ = -den_; }
}

Rat RatFunc::as_rational() const {
    if (!is_constant()) throw domain_error("rational function is not constant");
    if (num_.is_zero()) return Rat(0);
    return Rat(num_[0]) / Rat(den_[0]);
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}
RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}
RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw domain_error("division by zero rational function");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}
RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::derivative() const {
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

bool RatFunc::as_laurent_monomial(Rat& c, int& t) const {
    if (is_zero()) { c = 0; t = 0; return true; }
    int nz = -1;
    for (int i = 0; i <= num_.degree(); ++i) {
        if (num_[i] != 0) {
            if (nz >= 0) return false;
            nz = i;
        }
    }
    int dz = -1;
    for (int i = 0; i <= den_.degree(); ++i) {
        if (den_[i] != 0) {
            if (dz >= 0) return false;
            dz = i;
        }
    }
    c = Rat(num_[nz]) / Rat(den_[dz]);
    t = nz - dz;
    return true;
}

std::string RatFunc::str() const {
    if (den_.degree() == 0 && den_[0] == 1) {
        if (num_.degree() <= 0) return num_.str();
        return "(" + num_.str() + ")";
    }
    if (num_.degree() <= 0 && den_.degree() == 0) return num_.str() + "/" + den_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

// ---------------------------------------------------------------- Scalar

namespace {
int g_max_log_power = 2;
}

int Scalar::max_log_power() { return g_max_log_power; }
void Scalar::set_max_log_power(int p) {
    if (p < 0) throw domain_error("negative log power bound");
    g_max_log_power = p;
}

void Scalar::insert(int sp, int lp, const RatFunc& f) {
    if (f.is_zero()) return;
    if (lp < 0) throw domain_error("negative log power");
    if (lp > g_max_log_power) throw domain_error("log power exceeds configured bound");
    auto key = std::make_pair(sp, lp);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, f);
    } else {
        RatFunc s = it->second + f;
        if (s.is_zero())
            terms_.erase(it);
        else
            it->second = s;
    }
}

Scalar Scalar::ratfunc(const RatFunc& f) {
    Scalar s;
    s.insert(0, 0, f);
    return s;
}

Scalar Scalar::sqrtpi(int power) {
    Scalar s;
    s.insert(power, 0, RatFunc(Rat(1)));
    return s;
}

Scalar Scalar::logx0(int power) {
    Scalar s;
    s.insert(0, power, RatFunc(Rat(1)));
    return s;
}

bool Scalar::is_rational() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const auto& [key, f] = *terms_.begin();
    return key.first == 0 && key.second == 0 && f.is_constant();
}

Rat Scalar::as_rational() const {
    if (terms_.empty()) return Rat(0);
    if (!is_rational()) throw domain_error("scalar is not a plain rational");
    return terms_.begin()->second.as_rational();
}

Scalar Scalar::operator+(const Scalar& o) const {
    Scalar r = *this;
    for (const auto& [key, f] : o.terms_) r.insert(key.first, key.second, f);
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
    Scalar r;
    for (const auto& [key, f] : terms_) r.terms_.emplace(key, -f);
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
    Scalar r;
    for (const auto& [ka, fa] : terms_)
        for (const auto& [kb, fb] : o.terms_)
            r.insert(ka.first + kb.first, ka.second + kb.second, fa * fb);
    return r;
}

Scalar Scalar::inverse() const {
    if (terms_.size() != 1) throw domain_error("scalar not invertible (not a single term)");
    const auto& [key, f] = *terms_.begin();
    if (key.second != 0) throw domain_error("scalar not invertible (log term)");
    Scalar r;
    r.insert(-key.first, 0, RatFunc(Rat(1)) / f);
    return r;
}

Scalar Scalar::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    Scalar r(Rat(1));
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

Scalar Scalar::derivative_x0() const {
    Scalar r;
    RatFunc inv_x0 = RatFunc::x0pow(-1);
    for (const auto& [key, f] : terms_) {
        r.insert(key.first, key.second, f.derivative());
        if (key.second > 0) r.insert(key.first, key.second - 1, f * inv_x0 * RatFunc(Rat(key.second)));
    }
    return r;
}

std::vector<std::pair<Scalar, int>> Scalar::split_x0_scale() const {
    std::vector<std::pair<Scalar, int>> out;
    for (const auto& [key, f] : terms_) {
        if (key.second != 0) throw domain_error("cannot scale x0 inside a log term");
        // need a pure power denominator so every term is a Laurent monomial
        int dz = -1;
        for (int i = 0; i <= f.den().degree(); ++i) {
            if (f.den()[i] != 0) {
                if (dz >= 0) throw domain_error("cannot scale x0: denominator is not a monomial");
                dz = i;
            }
        }
        Rat dcoef(f.den()[dz]);
        for (int i = 0; i <= f.num().degree(); ++i) {
            if (f.num()[i] == 0) continue;
            int t = i - dz;
            Scalar s;
            s.insert(key.first, 0, RatFunc(Rat(f.num()[i]) / dcoef) * RatFunc::x0pow(t));
            out.emplace_back(s, t);
        }
    }
    return out;
}

int Scalar::max_log_degree() const {
    int d = 0;
    for (const auto& [key, f] : terms_) d = std::max(d, key.second);
    return d;
}

std::string Scalar::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, f] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << f.str();
        if (key.first != 0) os << "*sqrtpi^" << key.first;
        if (key.second == 1) os << "*logx0";
        else if (key.second > 1) os << "*logx0^" << key.second;
    }
    return os.str();
}

// ---------------------------------------------------------------- gamma

Scalar gamma_exact(int q2) {
    if (q2 % 2 == 0) {
        int q = q2 / 2;
        if (q <= 0) throw domain_error("gamma pole at non-positive integer");
        return Scalar(Rat(factorial(q - 1)));
    }
    // Gamma(1/2) = sqrtpi; walk up or down with Gamma(q+1) = q Gamma(q).
    Rat c = 1;
    int h = q2;  // current argument times 2, odd
    while (h > 1) { h -= 2; c *= Rat(h, 2); }
    while (h < 1) { c /= Rat(h, 2); h += 2; }
    return Scalar(c) * Scalar::sqrtpi(1);
}

Scalar gamma_recip_exact(int q2) {
    if (q2 % 2 == 0 && q2 <= 0) return Scalar();
    return gamma_exact(q2).inverse();
}

Scalar sigma(int M) {
    return Scalar(Rat(2)) * Scalar::sqrtpi(M) * gamma_recip_exact(M);
}

}  // namespace sck
