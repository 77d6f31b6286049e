#pragma once

#include <memory>
#include <string>
#include <vector>

#include "superck/scalar.hpp"

namespace sck {

// One supervector block: m commuting coordinates and n symplectic pairs of
// anticommuting coordinates. A block may alias another block's Clifford
// generators (same graded space, independent coordinates); otherwise its
// generators are orthogonal to every other block's.
struct Block {
    std::string name;
    int m = 0;
    int n = 0;
    int alias_of = -1;  // index of the generator-owning block, -1 if self-owned
};

class Signature {
public:
    Signature(std::vector<Block> blocks, bool with_x0);

    static std::shared_ptr<const Signature> make(std::vector<Block> blocks, bool with_x0 = true);
    // The standard layout used by the CLI and the verification suites:
    // block x(m,n), block y(p,q) orthogonal to x, block w(m,n) sharing x's
    // generators, plus the scalar variable x0.
    static std::shared_ptr<const Signature> standard(int m, int n, int p = 0, int q = 0);

    int block_count() const { return static_cast<int>(blocks_.size()); }
    const Block& block(int b) const { return blocks_[b]; }
    int block_index(const std::string& name) const;  // -1 if absent
    int require_block(const std::string& name) const;
    bool with_x0() const { return with_x0_; }

    int superdim(int b) const { return blocks_[b].m - 2 * blocks_[b].n; }

    // Coordinate index spaces (global, disjoint across blocks).
    int total_bos() const { return total_bos_; }
    int total_ferm() const { return total_ferm_; }
    int bos_offset(int b) const { return bos_off_[b]; }
    int ferm_offset(int b) const { return ferm_off_[b]; }
    int bos_block(int var) const;   // owning block of a bosonic variable
    int ferm_block(int var) const;  // owning block of a fermionic variable

    // Generator index spaces (shared between aliased blocks).
    int total_orth() const { return total_orth_; }
    int total_pairs() const { return total_pairs_; }
    int orth_offset(int b) const { return orth_off_[generator_owner(b)]; }
    int pair_offset(int b) const { return pair_off_[generator_owner(b)]; }
    int generator_owner(int b) const { return blocks_[b].alias_of < 0 ? b : blocks_[b].alias_of; }

    std::string bos_var_name(int var) const;
    std::string ferm_var_name(int var) const;
    // Parse a coordinate name; returns false if unknown. kind: 0 bosonic,
    // 1 fermionic, 2 the scalar x0.
    bool lookup_var(const std::string& name, int& kind, int& index) const;

private:
    std::vector<Block> blocks_;
    bool with_x0_;
    int total_bos_ = 0, total_ferm_ = 0, total_orth_ = 0, total_pairs_ = 0;
    std::vector<int> bos_off_, ferm_off_, orth_off_, pair_off_;
};

using SigPtr = std::shared_ptr<const Signature>;

}  // namespace sck
