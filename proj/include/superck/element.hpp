#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "superck/signature.hpp"

namespace sck {

// The formal radial symbol R with R^2 = (x0^2 +) sum of the squares of one
// block's bosonic coordinates. Integer powers of R model |.|^alpha away from
// the origin.
struct RadialBase {
    int block = -1;
    bool with_x0 = false;
    bool operator==(const RadialBase&) const = default;
};

// One normally ordered monomial:
//   bos^e * (grassmann vars ascending) * (orth generators ascending)
//   * per pair p: ueg_{2p+2}^alpha  eg_{2p+1}^beta  * R^radial
struct TermKey {
    std::vector<uint8_t> bos;                           // exponent per bosonic coordinate
    uint64_t grass = 0;                                 // fermionic coordinate bitset
    uint64_t orth = 0;                                  // orthogonal generator bitset
    std::vector<std::pair<uint16_t, uint16_t>> weyl;    // per symplectic pair (alpha, beta)
    int radial = 0;

    auto operator<=>(const TermKey&) const = default;
};

class SuperElement {
public:
    SuperElement() = default;
    explicit SuperElement(SigPtr sig) : sig_(std::move(sig)) {}

    static SuperElement constant(SigPtr sig, const Scalar& c);
    static SuperElement one(SigPtr sig) { return constant(std::move(sig), Scalar(1)); }
    static SuperElement bos_var(SigPtr sig, int var);
    static SuperElement ferm_var(SigPtr sig, int var);
    static SuperElement orth_gen(SigPtr sig, int gen);
    static SuperElement weyl_gen(SigPtr sig, int gen_index);  // 0-based global e`-index
    static SuperElement supervector(SigPtr sig, int block);
    static SuperElement supervector(SigPtr sig, const std::string& block);
    static SuperElement radial_power(SigPtr sig, RadialBase base, int alpha);

    const SigPtr& sig() const { return sig_; }
    const std::optional<RadialBase>& radial_base() const { return rbase_; }
    const std::map<TermKey, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool has_radial() const;

    void add_term(const TermKey& key, const Scalar& c);
    void set_radial_base(const RadialBase& rb);

    SuperElement operator+(const SuperElement& o) const;
    SuperElement operator-(const SuperElement& o) const;
    SuperElement operator-() const;
    SuperElement operator*(const SuperElement& o) const;
    SuperElement scaled(const Scalar& c) const;
    SuperElement pow(int k) const;

    // Exact equality after common-exponent radial reduction.
    bool equals(const SuperElement& o) const;

    int term_block_degree(const TermKey& key, int block) const;
    int block_degree(int block) const;     // max over terms, -1 for zero element
    bool depends_on_block(int block) const;
    // Grassmann-even, Clifford-scalar element (a member of C^inf x G^ev).
    bool is_even_scalar_valued() const;

    Scalar coefficient(const TermKey& key) const;
    Scalar body_scalar() const;  // coefficient of the empty monomial

    SuperElement eval_zero_block(int block) const;
    SuperElement homogeneous_part(int block, int deg) const;
    SuperElement truncate_block_degree(int block, int maxdeg) const;
    SuperElement rename_block_vars(int from_block, int to_block) const;

    // Rewrite all radial exponents within a parity class to the minimal one
    // present, then pull base factors back out while the class component is
    // divisible; non-negative exponents fold into the polynomial part.
    SuperElement radial_canonicalized() const;
    // Replace R^a by x0^a (1 + |bos|^2/x0^2)^{a/2}, truncated at the given
    // bosonic degree of the base block. Requires a base containing x0.
    SuperElement radial_expanded(int degree_cap) const;
    // Drop radial exponents entirely (evaluate the radial weight at 1).
    SuperElement radial_weight_stripped() const;

    std::string str() const;

private:
    void merge_base(const std::optional<RadialBase>& other);
    SigPtr sig_;
    std::optional<RadialBase> rbase_;
    std::map<TermKey, Scalar> terms_;
};

// <a,b> = -1/2 (ab + ba) for the block supervectors.
SuperElement inner_product(const SigPtr& sig, int block_a, int block_b);
// |x|^2 = -x^2 for the block supervector.
SuperElement norm_squared(const SigPtr& sig, int block);
// The base polynomial (x0^2 +) sum of squares as an element.
SuperElement radial_base_poly(const SigPtr& sig, const RadialBase& rb);

// Arbitrary half-integer powers of an even element with a recognizable body,
// computed by the finite nilpotent expansion. The body must match
// c * x0^{2t} * base^s (base optional); non-integer powers require c == 1.
SuperElement gen_power(const SuperElement& a, const Rat& p,
                       std::optional<RadialBase> base_hint = std::nullopt);

// Taylor composition F(a_1, ..., a_l) of a scalar function with even
// scalar-valued superfunctions; the provider returns the exact mixed
// derivative of F at the tuple of bodies for a given multi-index.
using DerivativeProvider = std::function<Scalar(const std::vector<int>&)>;
SuperElement compose_scalar(const DerivativeProvider& provider,
                            const std::vector<SuperElement>& args);

}  // namespace sck
