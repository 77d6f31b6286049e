#pragma once

#include <optional>

#include "superck/element.hpp"

namespace sck {

// The three superdimension regimes of the monogenic extension: M not in -2N0,
// M = -2k with m != 0, and the purely fermionic m = 0.
enum class CKCase { I, II, III };

struct CKSeries {
    SigPtr sig;
    int x_block = 0;
    int param_block = -1;  // -1: the scalar variable x0
    CKCase case_tag = CKCase::I;
    std::vector<std::pair<int, SuperElement>> terms;  // nonzero (j, F_j)
    int truncation = 0;                               // F_j = 0 for all j >= truncation

    SuperElement materialize() const;  // sum_j x^j F_j
    SuperElement coefficient(int j) const;
    std::string to_json() const;
};

// Monogenic series sum x^j F_j with F(0) = f0, built by the first-order
// recurrence; in the M = -2k regime a second initial datum f2k1 drives the
// series past the monogenic power x^{2k+1}.
CKSeries ck_extend(const SigPtr& sig, int x_block, int param_block, const SuperElement& f0,
                   const std::optional<SuperElement>& f2k1 = std::nullopt);

// The same series assembled from the closed-form coefficient formulas
// (truncating Bessel-type and Appell-type operator series on polynomial data).
CKSeries ck_closed_form(const SigPtr& sig, int x_block, int param_block, const SuperElement& f0,
                        const std::optional<SuperElement>& f2k1 = std::nullopt);

struct MonogenicReport {
    bool pass = false;
    int first_failing_degree = -1;
    std::string witness;
};

MonogenicReport verify_monogenic(const CKSeries& series);
// Same check on a raw element, optionally only through a truncation degree.
MonogenicReport verify_monogenic_element(const SuperElement& f, int x_block, int param_block,
                                         int max_degree = -1);

// Polynomial antiderivatives with zero integration constants.
SuperElement x0_antiderivative(const SuperElement& f, int order);
// Right inverse of the block Dirac operator on polynomials, by exact linear
// solve; empty when no polynomial preimage exists in the candidate space.
std::optional<SuperElement> dirac_antiderivative(const SuperElement& f, int block, int order);

CKCase classify_ck_case(const SigPtr& sig, int x_block);

}  // namespace sck
