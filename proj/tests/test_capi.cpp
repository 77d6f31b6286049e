#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "superck/superck.h"

namespace {

struct Sig {
    sck_signature* s = nullptr;
    Sig(int m, int n, int p, int q) { REQUIRE(sck_signature_create(m, n, p, q, &s) == SCK_OK); }
    ~Sig() { sck_signature_free(s); }
};

struct Elem {
    sck_element* e = nullptr;
    ~Elem() { sck_element_free(e); }
};

std::string render(const sck_element* e) {
    char* s = nullptr;
    REQUIRE(sck_render(e, &s) == SCK_OK);
    std::string out = s;
    sck_string_free(s);
    return out;
}

}  // namespace

TEST_CASE("parse, arithmetic, render through the C surface") {
    Sig sig(2, 1, 1, 0);
    Elem a, b, sum, prod;
    REQUIRE(sck_parse(sig.s, "x1 + xg1*xg2", &a.e) == SCK_OK);
    REQUIRE(sck_parse(sig.s, "x1 - xg1*xg2", &b.e) == SCK_OK);
    REQUIRE(sck_add(a.e, b.e, &sum.e) == SCK_OK);
    CHECK(render(sum.e) == "2*x1");
    REQUIRE(sck_mul(a.e, b.e, &prod.e) == SCK_OK);
    Elem expect;
    REQUIRE(sck_parse(sig.s, "x1^2 - x1*xg1*xg2 + x1*xg1*xg2", &expect.e) == SCK_OK);
    CHECK(sck_equal(prod.e, expect.e) == 1);
}

TEST_CASE("error reporting") {
    Sig sig(1, 0, 1, 0);
    sck_element* e = nullptr;
    CHECK(sck_parse(sig.s, "x1 +", &e) == SCK_ERROR_PARSE);
    CHECK(std::strlen(sck_last_error()) > 0);
    CHECK(sck_parse(nullptr, "x1", &e) == SCK_ERROR_INVALID_ARGUMENT);
    Elem ok;
    REQUIRE(sck_parse(sig.s, "1", &ok.e) == SCK_OK);
    sck_element* out = nullptr;
    CHECK(sck_integrate(ok.e, "x", "nonsense", &out) == SCK_ERROR_INVALID_ARGUMENT);
    CHECK(sck_dirac(ok.e, "zz", &out) == SCK_ERROR_DOMAIN);
}

TEST_CASE("derivatives and integrals") {
    Sig sig(3, 0, 1, 0);
    Elem f, d, i;
    REQUIRE(sck_parse(sig.s, "x1^2", &f.e) == SCK_OK);
    REQUIRE(sck_derive(f.e, "x1", &d.e) == SCK_OK);
    CHECK(render(d.e) == "2*x1");
    REQUIRE(sck_integrate(f.e, "x", "pizzetti", &i.e) == SCK_OK);
    Elem oracle;
    REQUIRE(sck_integrate(f.e, "x", "oracle", &oracle.e) == SCK_OK);
    CHECK(sck_equal(i.e, oracle.e) == 1);
    CHECK(render(i.e) == "4/3*sqrtpi^2");  // sigma_3 / 3
}

TEST_CASE("ck extension and plane waves through the C surface") {
    Sig sig(2, 0, 1, 0);
    Elem f0;
    REQUIRE(sck_parse(sig.s, "y1^2", &f0.e) == SCK_OK);
    char* json = nullptr;
    REQUIRE(sck_ck_extend(sig.s, "x", "y", f0.e, nullptr, &json) == SCK_OK);
    std::string s = json;
    sck_string_free(json);
    CHECK(s.find("\"case\":\"i\"") != std::string::npos);
    CHECK(s.find("\"terms\"") != std::string::npos);
    Elem pw;
    REQUIRE(sck_pw_decompose(sig.s, "x", "w", "y", f0.e, nullptr, &pw.e) == SCK_OK);
    CHECK(!render(pw.e).empty());
}

TEST_CASE("cauchy kernel forms") {
    Sig sig(3, 0, 0, 0);
    Elem frac, series;
    REQUIRE(sck_cauchy_kernel(sig.s, "x", "fraction", 0, &frac.e) == SCK_OK);
    CHECK(render(frac.e).find("R^-4") != std::string::npos);
    REQUIRE(sck_cauchy_kernel(sig.s, "x", "series", 4, &series.e) == SCK_OK);
    CHECK(!render(series.e).empty());
    sck_element* out = nullptr;
    Sig bad(1, 1, 0, 0);  // M = -1: no fraction form
    CHECK(sck_cauchy_kernel(bad.s, "x", "fraction", 0, &out) == SCK_ERROR_DOMAIN);
}

TEST_CASE("suite runner and schema validation") {
    char* rep = nullptr;
    int all_pass = -1;
    REQUIRE(sck_run_suite("parser", 2, 1, 1, 0, 0, 42, 3, 1, &rep, &all_pass) == SCK_OK);
    CHECK(all_pass == 1);
    CHECK(sck_validate_report(rep, nullptr) == SCK_OK);
    sck_string_free(rep);
    char* err = nullptr;
    CHECK(sck_validate_report("{}", &err) == SCK_ERROR_DOMAIN);
    sck_string_free(err);
    bool found = false;
    for (const char* const* names = sck_suite_names(); *names; ++names)
        if (std::string(*names) == "all") found = true;
    CHECK(found);
}
