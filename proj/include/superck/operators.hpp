#pragma once

#include <memory>
#include <vector>

#include "superck/element.hpp"

namespace sck {

// Coordinate partials. Fermionic partials act from the left: they pick up a
// sign for every Grassmann variable written before the matching one, contract
// it, and pass bosonic variables and all Clifford generators freely.
SuperElement partial_bos(const SuperElement& f, int var);
SuperElement partial_ferm(const SuperElement& f, int var);
SuperElement partial_ferm_right(const SuperElement& f, int var);
SuperElement partial_x0(const SuperElement& f);

// Left/right super Dirac operator of one block, the super Laplacian (both as
// the displayed second-order sum and as -dirac^2), and the block Euler
// operator.
SuperElement dirac_left(const SuperElement& f, int block);
SuperElement dirac_right(const SuperElement& f, int block);
SuperElement laplacian(const SuperElement& f, int block);
SuperElement laplacian_via_dirac(const SuperElement& f, int block);
SuperElement euler(const SuperElement& f, int block);

// dirac[x^j] = c(M, j) x^{j-1}.
inline long c_factor(int M, long j) { return j % 2 == 0 ? j : M + j - 1; }

// Composable left-acting operator tree.
class LinearOperator {
public:
    enum class Kind {
        Identity,
        PartialBos,
        PartialFerm,
        PartialX0,
        DiracLeft,
        DiracRight,
        Laplacian,
        Euler,
        Multiply,
        Scale,
        Sum,
        Compose,
    };

    static LinearOperator identity();
    static LinearOperator partial(int var_kind, int index);  // 0 bos, 1 ferm, 2 x0
    static LinearOperator dirac(int block);
    static LinearOperator dirac_r(int block);
    static LinearOperator laplacian_op(int block);
    static LinearOperator euler_op(int block);
    static LinearOperator multiply(SuperElement g);
    static LinearOperator scale(Scalar c);

    LinearOperator operator+(const LinearOperator& o) const;
    // Composition: (a * b)[f] = a[b[f]].
    LinearOperator operator*(const LinearOperator& o) const;
    LinearOperator powered(int k) const;
    static LinearOperator commutator(const LinearOperator& a, const LinearOperator& b);

    SuperElement apply(const SuperElement& f) const;
    Kind kind() const { return kind_; }

private:
    LinearOperator() = default;
    Kind kind_ = Kind::Identity;
    int index_ = 0;
    std::shared_ptr<SuperElement> elem_;
    Scalar coef_;
    std::shared_ptr<LinearOperator> lhs_, rhs_;
};

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string witness;
};

// The three displayed sl2 commutation relations, applied to each sample.
std::vector<CheckResult> check_sl2(const SigPtr& sig, int block,
                                   const std::vector<SuperElement>& samples);

// Iterated-Laplacian identity on x^{2l} R_{2j} with R_{2j} homogeneous of
// degree 2j: both sides computed independently.
CheckResult check_laplacian_power_identity(const SigPtr& sig, int block,
                                           const SuperElement& r2j, int j, int l);

}  // namespace sck
