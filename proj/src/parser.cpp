#include "superck/parser.hpp"

#include <algorithm>
#include <cctype>

namespace sck {

namespace {

struct Parser {
    const std::string& text;
    const SigPtr& sig;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& expected) {
        throw parse_error("expected " + expected, pos);
    }

    std::string ident() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        if (pos == start) fail("identifier");
        return text.substr(start, pos - start);
    }

    Int digits() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("number");
        return Int(text.substr(start, pos - start), 10);
    }

    int int_lit() {
        skip_ws();
        bool neg = eat('-');
        Int d = digits();
        long v = d.get_si();
        return neg ? -static_cast<int>(v) : static_cast<int>(v);
    }

    SuperElement scalar_inverse(const SuperElement& e) {
        if (e.has_radial()) throw parse_error("cannot invert a radial element", pos);
        Scalar total;
        for (const auto& [k, c] : e.terms()) {
            if (k.orth != 0) throw parse_error("divisor is not a scalar", pos);
            for (const auto& [a, b] : k.weyl)
                if (a || b) throw parse_error("divisor is not a scalar", pos);
            if (k.grass != 0) throw parse_error("divisor is not a scalar", pos);
            bool trivial = true;
            for (auto x : k.bos)
                if (x) trivial = false;
            if (!trivial) throw parse_error("divisor depends on block variables", pos);
            total = total + c;
        }
        // Fold polynomial x0 content across sqrtpi keys into one rational function.
        RatFunc acc;
        int sp = 0;
        bool have = false;
        for (const auto& [key, f] : total.terms()) {
            if (key.second != 0) throw parse_error("cannot invert a log term", pos);
            if (!have) {
                sp = key.first;
                acc = f;
                have = true;
            } else if (key.first == sp) {
                acc = acc + f;
            } else {
                throw parse_error("cannot invert a mixed sqrtpi sum", pos);
            }
        }
        if (!have || acc.is_zero()) throw parse_error("division by zero", pos);
        Scalar inv = Scalar::ratfunc(RatFunc(Rat(1)) / acc) * Scalar::sqrtpi(-sp);
        return SuperElement::constant(sig, inv);
    }

    SuperElement atom() {
        skip_ws();
        if (pos >= text.size()) fail("expression");
        char c = text[pos];
        if (eat('(')) {
            SuperElement e = expr();
            if (!eat(')')) fail("')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num = digits();
            // "p/q" with q numeric is a rational literal; "p / expr" is division.
            size_t save = pos;
            if (eat('/')) {
                skip_ws();
                if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                    Int den = digits();
                    if (den == 0) throw parse_error("zero denominator", pos);
                    return SuperElement::constant(sig, Scalar(Rat(num) / Rat(den)));
                }
                pos = save;
            }
            return SuperElement::constant(sig, Scalar(Rat(num)));
        }
        std::string name = ident();
        if (name == "sqrtpi") return SuperElement::constant(sig, Scalar::sqrtpi(1));
        if (name == "logx0") return SuperElement::constant(sig, Scalar::logx0());
        if (name == "X") {
            if (!eat('(')) fail("'('");
            std::string block = ident();
            if (!eat(')')) fail("')'");
            return SuperElement::supervector(sig, block);
        }
        if (name == "IP") {
            if (!eat('(')) fail("'('");
            std::string a = ident();
            if (!eat(',')) fail("','");
            std::string b = ident();
            if (!eat(')')) fail("')'");
            return inner_product(sig, sig->require_block(a), sig->require_block(b));
        }
        if (name == "NORM2") {
            if (!eat('(')) fail("'('");
            std::string block = ident();
            if (!eat(')')) fail("')'");
            return norm_squared(sig, sig->require_block(block));
        }
        if (name == "x0") {
            if (!sig->with_x0()) throw parse_error("x0 not declared in this signature", pos);
            return SuperElement::constant(sig, Scalar::x0pow(1));
        }
        if (name[0] == 'e') {
            // e<i> or eg<i>: global generator indices
            std::string rest = name.substr(1);
            bool ferm = !rest.empty() && rest[0] == 'g';
            if (ferm) rest = rest.substr(1);
            if (!rest.empty() && rest.size() <= 6 &&
                std::all_of(rest.begin(), rest.end(), ::isdigit)) {
                int i = std::stoi(rest);
                if (ferm) {
                    if (i < 1 || i > 2 * sig->total_pairs())
                        throw parse_error("unknown generator " + name, pos);
                    return SuperElement::weyl_gen(sig, i - 1);
                }
                if (i < 1 || i > sig->total_orth())
                    throw parse_error("unknown generator " + name, pos);
                return SuperElement::orth_gen(sig, i - 1);
            }
        }
        int kind, index;
        if (sig->lookup_var(name, kind, index)) {
            if (kind == 0) return SuperElement::bos_var(sig, index);
            if (kind == 1) return SuperElement::ferm_var(sig, index);
            return SuperElement::constant(sig, Scalar::x0pow(1));
        }
        throw parse_error("unknown variable " + name, pos);
    }

    SuperElement factor() {
        SuperElement e = atom();
        skip_ws();
        if (eat('^')) {
            int k = int_lit();
            if (k > 999 || k < -999) throw parse_error("exponent out of range", pos);
            if (k >= 0) return e.pow(k);
            return scalar_inverse(e).pow(-k);
        }
        return e;
    }

    SuperElement term() {
        SuperElement e = factor();
        for (;;) {
            if (eat('*')) {
                e = e * factor();
            } else if (peek() == '/') {
                ++pos;
                e = e * scalar_inverse(factor());
            } else {
                break;
            }
        }
        return e;
    }

    SuperElement uterm() {
        if (eat('-')) return -uterm();
        return term();
    }

    SuperElement expr() {
        SuperElement e = uterm();
        for (;;) {
            if (eat('+'))
                e = e + uterm();
            else if (peek() == '-') {
                ++pos;
                e = e - uterm();
            } else {
                break;
            }
        }
        return e;
    }
};

}  // namespace

SuperElement parse_expression(const std::string& text, const SigPtr& sig) {
    Parser p{text, sig};
    SuperElement e = p.expr();
    p.skip_ws();
    if (p.pos != text.size()) throw parse_error("unexpected trailing input", p.pos);
    return e;
}

}  // namespace sck
