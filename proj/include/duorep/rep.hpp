#pragma once

#include <vector>

#include "duorep/fp.hpp"
#include "duorep/monoid.hpp"
#include "duorep/poset.hpp"

namespace duorep {

// Sparse element of the monoid algebra, terms sorted by element index.
struct AlgebraElement {
    std::vector<std::pair<int, u32>> terms;

    bool is_zero() const { return terms.empty(); }
    u32 coeff(int element) const;
    bool operator==(const AlgebraElement& o) const { return terms == o.terms; }
};

AlgebraElement alg_unit(int element, u32 coeff = 1);
AlgebraElement alg_add(u64 p, const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement alg_sub(u64 p, const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement alg_scale(u64 p, u32 c, const AlgebraElement& a);
AlgebraElement alg_mul(const FiniteMonoid& m, u64 p, const AlgebraElement& a,
                       const AlgebraElement& b);
FpVec alg_dense(const AlgebraElement& a, int n);

// Character of a maximal subgroup with values in F_p^*, tabulated per member.
struct GroupCharacter {
    std::vector<u32> values;  // indexed by member position
    bool operator==(const GroupCharacter& o) const = default;
};

// All |G| homomorphisms G -> F_p^* (requires abelian G and a splitting prime).
std::vector<GroupCharacter> subgroup_characters(const FiniteMonoid& m, const MaximalSubgroup& g,
                                                u64 p);

// θ = |G|^{-1} Σ_g χ(g)^{-1} g, the primitive idempotent of KG for χ.
AlgebraElement character_idempotent(const MaximalSubgroup& g, const GroupCharacter& chi, u64 p);

// η_X = e_X − Σ_{Y<X} e_X η_Y, indexed by lattice node.
std::vector<AlgebraElement> eta_idempotents(const FiniteMonoid& m, const SupportLattice& lat,
                                            u64 p);

struct SimpleLabel {
    int apex = 0;       // lattice node
    int character = 0;  // index into the node's dual list
    bool operator==(const SimpleLabel& o) const = default;
};

struct LabelPoset {
    std::vector<SimpleLabel> labels;       // ordered by (apex, character)
    std::vector<std::vector<char>> leq;
    std::vector<int> rank;                 // global rank (graded for CW instances)

    int size() const { return int(labels.size()); }
    bool le(int a, int b) const { return leq[size_t(a)][size_t(b)] != 0; }
    int index_of(const SimpleLabel& l) const;
    std::vector<std::pair<int, int>> covers() const;
};

// Everything the character-level layer needs, built once per (monoid, prime).
// Owns its copy of the monoid, so the context is freely movable.
struct RepContext {
    FiniteMonoid monoid;
    u64 p = 2;
    AxiomReport axioms;
    SupportLattice lattice;
    std::vector<int> band;                          // idempotents, ascending
    std::vector<int> band_position;                 // element -> band index or -1
    std::vector<int> daggers;                       // element -> m†
    std::vector<MaximalSubgroup> subgroup;          // per lattice node (at e_X)
    std::vector<std::vector<GroupCharacter>> dual;  // per lattice node
    std::vector<AlgebraElement> eta;                // per lattice node
    LabelPoset labels;
    std::vector<AlgebraElement> gamma;              // per label
    std::vector<FpVec> lambda;                      // per label: λ_L(m) for every element

    const FiniteMonoid& M() const { return monoid; }
    int label_count() const { return labels.size(); }
    u32 lambda_of(int label, const AlgebraElement& a) const;
};

// Smallest splitting prime >= min for every maximal subgroup of M.
u64 auto_prime(const FiniteMonoid& m, const SupportLattice& lat, u64 min_value = 2);

// Requires a regular left duo monoid with abelian maximal subgroups and a
// splitting prime (p = 1 mod every fiber exponent, p dividing no fiber order).
RepContext build_rep_context(const FiniteMonoid& m, u64 p);

// λ_L(m) = χ(e_X m) when σ(m) >= X, else 0; multiplicative.
FpVec simple_rep_values(const FiniteMonoid& m, const SupportLattice& lat,
                        const MaximalSubgroup& g, const GroupCharacter& chi, int node, u64 p);

}  // namespace duorep
