#include "superck/superck.h"

#include <cstring>
#include <string>

#include "superck/cauchy.hpp"
#include "superck/integration.hpp"
#include "superck/operators.hpp"
#include "superck/parser.hpp"
#include "superck/suites.hpp"

using namespace sck;

struct sck_signature {
    SigPtr sig;
};

struct sck_element {
    SuperElement elem;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
sck_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const parse_error& e) {
        g_last_error = e.what();
        return SCK_ERROR_PARSE;
    } catch (const domain_error& e) {
        g_last_error = e.what();
        return SCK_ERROR_DOMAIN;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return SCK_ERROR_INTERNAL;
    }
}

sck_status invalid(const char* what) {
    g_last_error = what;
    return SCK_ERROR_INVALID_ARGUMENT;
}

int param_block_of(const SigPtr& sig, const char* param) {
    if (std::string(param) == "x0") return -1;
    return sig->require_block(param);
}

}  // namespace

extern "C" {

const char* sck_last_error(void) { return g_last_error.c_str(); }

void sck_string_free(char* s) { std::free(s); }

sck_status sck_signature_create(int m, int n, int p, int q, sck_signature** out) {
    if (!out) return invalid("null output");
    return guarded([&] {
        *out = new sck_signature{Signature::standard(m, n, p, q)};
        return SCK_OK;
    });
}

void sck_signature_free(sck_signature* sig) { delete sig; }

sck_status sck_parse(const sck_signature* sig, const char* text, sck_element** out) {
    if (!sig || !text || !out) return invalid("null argument");
    return guarded([&] {
        *out = new sck_element{parse_expression(text, sig->sig)};
        return SCK_OK;
    });
}

sck_status sck_render(const sck_element* e, char** out) {
    if (!e || !out) return invalid("null argument");
    return guarded([&] {
        *out = dup_string(e->elem.str());
        return SCK_OK;
    });
}

void sck_element_free(sck_element* e) { delete e; }

sck_status sck_add(const sck_element* a, const sck_element* b, sck_element** out) {
    if (!a || !b || !out) return invalid("null argument");
    return guarded([&] {
        *out = new sck_element{a->elem + b->elem};
        return SCK_OK;
    });
}

sck_status sck_mul(const sck_element* a, const sck_element* b, sck_element** out) {
    if (!a || !b || !out) return invalid("null argument");
    return guarded([&] {
        *out = new sck_element{a->elem * b->elem};
        return SCK_OK;
    });
}

int sck_equal(const sck_element* a, const sck_element* b) {
    if (!a || !b) return -1;
    try {
        return a->elem.equals(b->elem) ? 1 : 0;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return -1;
    }
}

sck_status sck_derive(const sck_element* e, const char* var, sck_element** out) {
    if (!e || !var || !out) return invalid("null argument");
    return guarded([&] {
        int kind, index;
        if (!e->elem.sig()->lookup_var(var, kind, index)) {
            g_last_error = std::string("unknown variable ") + var;
            return SCK_ERROR_DOMAIN;
        }
        SuperElement d = kind == 0   ? partial_bos(e->elem, index)
                         : kind == 1 ? partial_ferm(e->elem, index)
                                     : partial_x0(e->elem);
        *out = new sck_element{std::move(d)};
        return SCK_OK;
    });
}

sck_status sck_dirac(const sck_element* e, const char* block, sck_element** out) {
    if (!e || !block || !out) return invalid("null argument");
    return guarded([&] {
        *out = new sck_element{dirac_left(e->elem, e->elem.sig()->require_block(block))};
        return SCK_OK;
    });
}

sck_status sck_laplacian(const sck_element* e, const char* block, sck_element** out) {
    if (!e || !block || !out) return invalid("null argument");
    return guarded([&] {
        *out = new sck_element{laplacian(e->elem, e->elem.sig()->require_block(block))};
        return SCK_OK;
    });
}

sck_status sck_euler(const sck_element* e, const char* block, sck_element** out) {
    if (!e || !block || !out) return invalid("null argument");
    return guarded([&] {
        *out = new sck_element{euler(e->elem, e->elem.sig()->require_block(block))};
        return SCK_OK;
    });
}

sck_status sck_integrate(const sck_element* e, const char* block, const char* mode,
                         sck_element** out) {
    if (!e || !block || !mode || !out) return invalid("null argument");
    return guarded([&] {
        int b = e->elem.sig()->require_block(block);
        std::string m(mode);
        SuperElement r(e->elem.sig());
        if (m == "pizzetti")
            r = sphere_integral(e->elem, b);
        else if (m == "oracle")
            r = sphere_integral_oracle(e->elem, b);
        else if (m == "normalized")
            r = normalized_integral(e->elem, b);
        else if (m == "berezin")
            r = berezin(e->elem, b);
        else {
            g_last_error = "unknown mode " + m;
            return SCK_ERROR_INVALID_ARGUMENT;
        }
        *out = new sck_element{std::move(r)};
        return SCK_OK;
    });
}

sck_status sck_ck_extend(const sck_signature* sig, const char* block, const char* param,
                         const sck_element* f0, const sck_element* f2k1, char** json_out) {
    if (!sig || !block || !param || !f0 || !json_out) return invalid("null argument");
    return guarded([&] {
        int b = sig->sig->require_block(block);
        int pb = param_block_of(sig->sig, param);
        std::optional<SuperElement> second;
        if (f2k1) second = f2k1->elem;
        CKSeries s = ck_extend(sig->sig, b, pb, f0->elem, second);
        *json_out = dup_string(s.to_json());
        return SCK_OK;
    });
}

sck_status sck_pw_decompose(const sck_signature* sig, const char* block, const char* wblock,
                            const char* param, const sck_element* f0, const sck_element* f2k1,
                            sck_element** out) {
    if (!sig || !block || !wblock || !param || !f0 || !out) return invalid("null argument");
    return guarded([&] {
        int b = sig->sig->require_block(block);
        int wb = sig->sig->require_block(wblock);
        int pb = param_block_of(sig->sig, param);
        std::optional<SuperElement> second;
        if (f2k1) second = f2k1->elem;
        *out = new sck_element{pw_decompose(sig->sig, b, wb, pb, f0->elem, second)};
        return SCK_OK;
    });
}

sck_status sck_cauchy_kernel(const sck_signature* sig, const char* block, const char* form,
                             int n_trunc, sck_element** out) {
    if (!sig || !block || !form || !out) return invalid("null argument");
    return guarded([&] {
        int b = sig->sig->require_block(block);
        std::string f(form);
        if (f == "fraction") {
            *out = new sck_element{cauchy_kernel_fraction(sig->sig, b)};
        } else if (f == "series") {
            *out = new sck_element{cauchy_kernel_series(sig->sig, b, n_trunc).materialize()};
        } else {
            g_last_error = "unknown kernel form " + f;
            return SCK_ERROR_INVALID_ARGUMENT;
        }
        return SCK_OK;
    });
}

sck_status sck_run_suite(const char* suite, int m, int n, int p, int q, int full_grid,
                         uint64_t seed, int degree, int json_format, char** report,
                         int* all_pass) {
    if (!suite || !report) return invalid("null argument");
    return guarded([&] {
        GridSpec grid = full_grid ? GridSpec{} : GridSpec::single(m, n, p, q);
        SuiteReport r = run_suite(suite, grid, seed, degree);
        *report = dup_string(json_format ? r.to_json() : r.to_text());
        if (all_pass) *all_pass = r.all_pass() ? 1 : 0;
        return SCK_OK;
    });
}

const char* const* sck_suite_names(void) {
    static std::vector<std::string> names = suite_names();
    static std::vector<const char*> ptrs = [] {
        std::vector<const char*> v;
        for (const auto& n : names) v.push_back(n.c_str());
        v.push_back(nullptr);
        return v;
    }();
    return ptrs.data();
}

sck_status sck_validate_report(const char* json, char** error_out) {
    if (!json) return invalid("null argument");
    return guarded([&] {
        std::string err;
        if (validate_report_json(json, &err)) return SCK_OK;
        g_last_error = err;
        if (error_out) *error_out = dup_string(err);
        return SCK_ERROR_DOMAIN;
    });
}

}  // extern "C"
