#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "superck/element.hpp"

namespace sck {

// Parameter grid for the verification suites: the series block runs over
// (m, n), the parameter block over (p, q).
struct GridSpec {
    std::vector<int> ms{0, 1, 2, 3};
    std::vector<int> ns{0, 1, 2};
    std::vector<int> ps{1, 2};
    std::vector<int> qs{0, 1};
    static GridSpec single(int m, int n, int p, int q);
};

struct SuiteCheck {
    std::string name;
    std::string anchor;   // stable identifier of the identity family
    std::string status;   // "pass" | "fail" | "skip"
    std::string witness;  // counterexample rendering for failures
    std::string reason;   // set for skips
};

struct SuiteReport {
    std::string suite;
    GridSpec grid;
    uint64_t seed = 0;
    int degree = 4;
    std::vector<SuiteCheck> checks;
    long wall_ms = 0;

    int count(const std::string& status) const;
    bool all_pass() const { return count("fail") == 0; }
    std::string to_json() const;
    std::string to_text() const;
};

std::vector<std::string> suite_names();
// Runs one named suite (or "all"); checks execute concurrently up to
// SUPERCK_THREADS, report order stays deterministic.
SuiteReport run_suite(const std::string& name, const GridSpec& grid, uint64_t seed, int degree);

// Structural validation against the shipped report schema.
bool validate_report_json(const std::string& json_text, std::string* error = nullptr);

}  // namespace sck
