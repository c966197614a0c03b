#pragma once

#include <string>
#include <vector>

#include "duorep/fp.hpp"
#include "duorep/monoid.hpp"

namespace duorep {

// Ordered set partition of {0..n-1}; blocks are sorted internally, so every
// partition has one canonical encoding (the block-index assignment vector).
struct OrderedSetPartition {
    int n = 0;
    std::vector<std::vector<int>> blocks;

    static OrderedSetPartition from_blocks(int n, std::vector<std::vector<int>> blocks);
    static OrderedSetPartition from_assignment(const std::vector<int>& assign);

    std::vector<int> assignment() const;             // element -> block index
    std::vector<std::vector<int>> underlying() const;  // blocks sorted by min element
    std::string to_string() const;                   // ({1},{2,3}) style, 1-based

    bool operator==(const OrderedSetPartition& o) const { return n == o.n && blocks == o.blocks; }
};

// (P_1,…,P_r)(Q_1,…,Q_s) = nonempty P_i ∩ Q_j ordered lexicographically by (i, j).
OrderedSetPartition tits_product(const OrderedSetPartition& a, const OrderedSetPartition& b);

// All ordered set partitions of an n-set in canonical (assignment-lex) order;
// index 0 is the one-block identity.
std::vector<OrderedSetPartition> enumerate_ordered_set_partitions(int n);

struct FiniteAbelianGroup {
    std::vector<long> factors;  // invariant factors m_1 | m_2 | …, empty = trivial group

    static FiniteAbelianGroup from_factors(std::vector<long> raw);  // canonicalizes any factor list
    static FiniteAbelianGroup parse(const std::string& text);       // "1", "2", "2x2", …

    long order() const;
    long exponent() const;
    std::vector<long> tuple(long index) const;
    long index(const std::vector<long>& t) const;
    long add(long a, long b) const;
    long neg(long a) const;
    std::string to_string() const;
};

// Smallest prime p >= min with p ≡ 1 (mod exponent) and p ∤ |G|.
long splitting_prime(const FiniteAbelianGroup& g, long min_value);

bool is_prime(long v);
u32 smallest_primitive_root(u64 p);

// Character of an abstract abelian group, as exponents against fixed
// primitive roots of unity in F_p (one per invariant factor).
struct Character {
    std::vector<long> exps;
    bool operator==(const Character& o) const { return exps == o.exps; }
};

struct DualGroup {
    FiniteAbelianGroup group;
    u64 p = 2;
    u32 root = 1;  // primitive exponent(G)-th root of unity in F_p
    std::vector<Character> chars;

    u32 value(long char_idx, long elem_idx) const;
    long product(long c1, long c2) const;  // pointwise product of characters
    long trivial() const { return 0; }
};

DualGroup dual_group(const FiniteAbelianGroup& g, u64 p);

// The monoid of ordered G-partitions: pairs (π, g) in Σ_n × G^n with the
// label constant on blocks. Element order is lexicographic on
// (partition encoding, label tuple).
struct HsiaoInstance {
    int n = 0;
    FiniteAbelianGroup group;
    std::vector<OrderedSetPartition> partitions;  // Σ_n in canonical order
    std::vector<long> offset;                     // partition index -> first element index
    FiniteMonoid monoid;

    int partition_of(int element) const;
    std::vector<long> labels_of(int element) const;  // one group index per block
    int encode(int p_idx, const std::vector<long>& labels) const;
    int sigma_element(int p_idx) const { return encode(p_idx, std::vector<long>(partitions[size_t(p_idx)].blocks.size(), 0)); }
};

FiniteMonoid build_sigma_n(int n);                                  // 1 <= n <= 6
HsiaoInstance build_hsiao(int n, const FiniteAbelianGroup& group);  // table-size guarded

FiniteMonoid build_cyclic_group(long modulus);  // Z/m as a monoid

}  // namespace duorep
