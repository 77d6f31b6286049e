// superck: exact Clifford analysis in superspace from the command line.
// Talks to the engine exclusively through the C API.
#include <CLI11.hpp>
#include <cstdio>
#include <memory>
#include <string>

#include "superck/superck.h"

namespace {

struct SigHandle {
    sck_signature* sig = nullptr;
    ~SigHandle() { sck_signature_free(sig); }
};

struct ElemHandle {
    sck_element* e = nullptr;
    ~ElemHandle() { sck_element_free(e); }
};

struct StrHandle {
    char* s = nullptr;
    ~StrHandle() { sck_string_free(s); }
};

int die(const char* phase) {
    std::fprintf(stderr, "superck: %s: %s\n", phase, sck_last_error());
    return 1;
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

void emit_element(const std::string& verb, const std::string& text, bool json) {
    if (json)
        std::printf("{\"command\":\"%s\",\"element\":\"%s\"}\n", verb.c_str(),
                    json_escape(text).c_str());
    else
        std::printf("%s\n", text.c_str());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Clifford analysis in superspace"};
    app.require_subcommand(1);

    int m = 2, n = 1, p = 2, q = 1;
    bool m_set = false;
    std::string expr, expr2, var, block = "x", wblock = "w", param = "x0";
    std::string suite = "all", mode = "pizzetti", form = "fraction", format = "text";
    int degree = 4;
    uint64_t seed = 42;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--m", m, "bosonic dimension of block x")->each([&](std::string) { m_set = true; });
        cmd->add_option("--n", n, "fermionic pair count of block x")->each([&](std::string) { m_set = true; });
        cmd->add_option("--p", p, "bosonic dimension of block y")->each([&](std::string) { m_set = true; });
        cmd->add_option("--q", q, "fermionic pair count of block y")->each([&](std::string) { m_set = true; });
        cmd->add_option("--format", format, "output format: text|json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    auto* c_eval = app.add_subcommand("eval", "parse an expression and print its normal form");
    add_common(c_eval);
    c_eval->add_option("--expr", expr, "expression")->required();

    auto* c_diff = app.add_subcommand("diff", "differentiate: one coordinate, or a block Dirac");
    add_common(c_diff);
    c_diff->add_option("--expr", expr, "expression")->required();
    c_diff->add_option("--var", var, "coordinate name (x1, xg2, x0)");
    c_diff->add_option("--dirac", block, "block name for the Dirac operator");

    auto* c_int = app.add_subcommand("integrate", "supersphere/Berezin integrals");
    add_common(c_int);
    c_int->add_option("--expr", expr, "expression")->required();
    c_int->add_option("--block", block, "integration block");
    c_int->add_option("--mode", mode, "pizzetti|oracle|normalized|berezin")
        ->check(CLI::IsMember({"pizzetti", "oracle", "normalized", "berezin"}));

    auto* c_ck = app.add_subcommand("ck-extend", "monogenic extension of initial data");
    add_common(c_ck);
    c_ck->add_option("--f0", expr, "initial datum")->required();
    c_ck->add_option("--f2k1", expr2, "second datum (M = -2k only)");
    c_ck->add_option("--param", param, "parameter: x0 or a block name");

    auto* c_pw = app.add_subcommand("planewave", "plane-wave decomposition of the extension");
    add_common(c_pw);
    c_pw->add_option("--f0", expr, "initial datum")->required();
    c_pw->add_option("--f2k1", expr2, "second datum (M = -2k only)");
    c_pw->add_option("--param", param, "parameter: x0 or a block name");

    auto* c_cauchy = app.add_subcommand("cauchy", "Cauchy kernel forms");
    add_common(c_cauchy);
    c_cauchy->add_option("--form", form, "fraction|series")
        ->check(CLI::IsMember({"fraction", "series"}));
    c_cauchy->add_option("--degree", degree, "series truncation degree");

    auto* c_verify = app.add_subcommand("verify", "run a named verification suite");
    add_common(c_verify);
    c_verify->add_option("--suite", suite, "suite name (see --list)");
    c_verify->add_option("--degree", degree, "random data degree cap");
    c_verify->add_option("--seed", seed, "generator seed");
    bool list = false;
    c_verify->add_flag("--list", list, "list suite names");

    CLI11_PARSE(app, argc, argv);

    bool json = format == "json";
    SigHandle sig;
    if (sck_signature_create(m, n, p, q, &sig.sig) != SCK_OK) return die("signature");

    if (c_eval->parsed()) {
        ElemHandle e;
        if (sck_parse(sig.sig, expr.c_str(), &e.e) != SCK_OK) return die("parse");
        StrHandle s;
        if (sck_render(e.e, &s.s) != SCK_OK) return die("render");
        emit_element("eval", s.s, json);
        return 0;
    }
    if (c_diff->parsed()) {
        ElemHandle e, d;
        if (sck_parse(sig.sig, expr.c_str(), &e.e) != SCK_OK) return die("parse");
        sck_status st = var.empty() ? sck_dirac(e.e, block.c_str(), &d.e)
                                    : sck_derive(e.e, var.c_str(), &d.e);
        if (st != SCK_OK) return die("diff");
        StrHandle s;
        if (sck_render(d.e, &s.s) != SCK_OK) return die("render");
        emit_element("diff", s.s, json);
        return 0;
    }
    if (c_int->parsed()) {
        ElemHandle e, r;
        if (sck_parse(sig.sig, expr.c_str(), &e.e) != SCK_OK) return die("parse");
        if (sck_integrate(e.e, block.c_str(), mode.c_str(), &r.e) != SCK_OK) return die("integrate");
        StrHandle s;
        if (sck_render(r.e, &s.s) != SCK_OK) return die("render");
        emit_element("integrate", s.s, json);
        return 0;
    }
    if (c_ck->parsed()) {
        ElemHandle f0, f1;
        if (sck_parse(sig.sig, expr.c_str(), &f0.e) != SCK_OK) return die("parse f0");
        if (!expr2.empty() && sck_parse(sig.sig, expr2.c_str(), &f1.e) != SCK_OK)
            return die("parse f2k1");
        StrHandle s;
        if (sck_ck_extend(sig.sig, "x", param.c_str(), f0.e, f1.e, &s.s) != SCK_OK)
            return die("ck-extend");
        std::printf("%s\n", s.s);
        return 0;
    }
    if (c_pw->parsed()) {
        ElemHandle f0, f1, r;
        if (sck_parse(sig.sig, expr.c_str(), &f0.e) != SCK_OK) return die("parse f0");
        if (!expr2.empty() && sck_parse(sig.sig, expr2.c_str(), &f1.e) != SCK_OK)
            return die("parse f2k1");
        if (sck_pw_decompose(sig.sig, "x", wblock.c_str(), param.c_str(), f0.e, f1.e, &r.e) !=
            SCK_OK)
            return die("planewave");
        StrHandle s;
        if (sck_render(r.e, &s.s) != SCK_OK) return die("render");
        emit_element("planewave", s.s, json);
        return 0;
    }
    if (c_cauchy->parsed()) {
        ElemHandle r;
        if (sck_cauchy_kernel(sig.sig, "x", form.c_str(), degree, &r.e) != SCK_OK)
            return die("cauchy");
        StrHandle s;
        if (sck_render(r.e, &s.s) != SCK_OK) return die("render");
        emit_element("cauchy", s.s, json);
        return 0;
    }
    if (c_verify->parsed()) {
        if (list) {
            for (const char* const* names = sck_suite_names(); *names; ++names)
                std::printf("%s\n", *names);
            return 0;
        }
        StrHandle rep;
        int all_pass = 0;
        if (sck_run_suite(suite.c_str(), m, n, p, q, m_set ? 0 : 1, seed, degree, json ? 1 : 0,
                          &rep.s, &all_pass) != SCK_OK)
            return die("verify");
        std::printf("%s\n", rep.s);
        if (json) {
            StrHandle err;
            if (sck_validate_report(rep.s, &err.s) != SCK_OK) {
                std::fprintf(stderr, "superck: report failed schema validation: %s\n",
                             err.s ? err.s : sck_last_error());
                return 2;
            }
        }
        return all_pass ? 0 : 1;
    }
    return 1;
}
