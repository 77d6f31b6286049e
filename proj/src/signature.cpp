#include "superck/signature.hpp"

#include <algorithm>

namespace sck {

Signature::Signature(std::vector<Block> blocks, bool with_x0)
    : blocks_(std::move(blocks)), with_x0_(with_x0) {
    int nb = static_cast<int>(blocks_.size());
    bos_off_.resize(nb);
    ferm_off_.resize(nb);
    orth_off_.assign(nb, -1);
    pair_off_.assign(nb, -1);
    for (int b = 0; b < nb; ++b) {
        const Block& blk = blocks_[b];
        if (blk.m < 0 || blk.n < 0) throw domain_error("negative block dimension");
        for (int c = 0; c < b; ++c)
            if (blocks_[c].name == blk.name) throw domain_error("duplicate block name " + blk.name);
        bos_off_[b] = total_bos_;
        ferm_off_[b] = total_ferm_;
        total_bos_ += blk.m;
        total_ferm_ += 2 * blk.n;
        if (blk.alias_of < 0) {
            orth_off_[b] = total_orth_;
            pair_off_[b] = total_pairs_;
            total_orth_ += blk.m;
            total_pairs_ += blk.n;
        } else {
            if (blk.alias_of >= b) throw domain_error("alias must refer to an earlier block");
            const Block& owner = blocks_[blk.alias_of];
            if (owner.alias_of >= 0) throw domain_error("alias of an alias");
            if (owner.m != blk.m || owner.n != blk.n)
                throw domain_error("aliased blocks must have identical dimensions");
        }
    }
    if (total_ferm_ > 62 || total_orth_ > 62) throw domain_error("too many generators");
}

SigPtr Signature::make(std::vector<Block> blocks, bool with_x0) {
    return std::make_shared<const Signature>(std::move(blocks), with_x0);
}

SigPtr Signature::standard(int m, int n, int p, int q) {
    std::vector<Block> blocks;
    blocks.push_back({"x", m, n, -1});
    blocks.push_back({"y", p, q, -1});
    blocks.push_back({"w", m, n, 0});
    return make(std::move(blocks), true);
}

int Signature::block_index(const std::string& name) const {
    for (int b = 0; b < block_count(); ++b)
        if (blocks_[b].name == name) return b;
    return -1;
}

int Signature::require_block(const std::string& name) const {
    int b = block_index(name);
    if (b < 0) throw domain_error("unknown block " + name);
    return b;
}

int Signature::bos_block(int var) const {
    for (int b = block_count() - 1; b >= 0; --b)
        if (var >= bos_off_[b]) return b;
    throw domain_error("bad bosonic variable index");
}

int Signature::ferm_block(int var) const {
    for (int b = block_count() - 1; b >= 0; --b)
        if (var >= ferm_off_[b]) return b;
    throw domain_error("bad fermionic variable index");
}

std::string Signature::bos_var_name(int var) const {
    int b = bos_block(var);
    return blocks_[b].name + std::to_string(var - bos_off_[b] + 1);
}

std::string Signature::ferm_var_name(int var) const {
    int b = ferm_block(var);
    return blocks_[b].name + "g" + std::to_string(var - ferm_off_[b] + 1);
}

bool Signature::lookup_var(const std::string& name, int& kind, int& index) const {
    if (name == "x0") {
        if (!with_x0_) return false;
        kind = 2;
        index = 0;
        return true;
    }
    for (int b = 0; b < block_count(); ++b) {
        const std::string& bn = blocks_[b].name;
        if (name.size() <= bn.size() || name.compare(0, bn.size(), bn) != 0) continue;
        std::string rest = name.substr(bn.size());
        bool ferm = false;
        if (!rest.empty() && rest[0] == 'g') {
            ferm = true;
            rest = rest.substr(1);
        }
        if (rest.empty() || rest.size() > 6 ||
            !std::all_of(rest.begin(), rest.end(), ::isdigit))
            continue;
        int i = std::stoi(rest);
        if (ferm) {
            if (i < 1 || i > 2 * blocks_[b].n) continue;
            kind = 1;
            index = ferm_off_[b] + i - 1;
        } else {
            if (i < 1 || i > blocks_[b].m) continue;
            kind = 0;
            index = bos_off_[b] + i - 1;
        }
        return true;
    }
    return false;
}

}  // namespace sck
