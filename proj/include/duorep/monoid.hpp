#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "duorep/error.hpp"

namespace duorep {

// Finite monoid given by a dense multiplication table (row acts on the left).
// Immutable after construction; ω-powers and idempotents are cached eagerly.
class FiniteMonoid {
  public:
    static constexpr int kExhaustiveLimit = 512;

    // Validates identity laws always; associativity exhaustively for
    // size <= kExhaustiveLimit, otherwise `trusted` is required and a fixed
    // sample of triples is checked instead.
    static FiniteMonoid from_table(int n, int identity, std::vector<std::uint16_t> table,
                                   bool trusted = false);

    int size() const { return n_; }
    int identity() const { return id_; }
    int mul(int a, int b) const { return tab_[size_t(a) * size_t(n_) + size_t(b)]; }
    int omega(int m) const { return omega_[size_t(m)]; }
    bool is_idempotent(int m) const { return mul(m, m) == m; }
    const std::vector<int>& idempotents() const { return idem_; }

  private:
    int n_ = 0;
    int id_ = 0;
    std::vector<std::uint16_t> tab_;
    std::vector<int> omega_;
    std::vector<int> idem_;
};

// Table file format: first line "n identity", then n rows of n 0-based indices.
FiniteMonoid read_table(std::istream& in);
void write_table(std::ostream& out, const FiniteMonoid& m);

struct AxiomReport {
    bool right_semicentral = false;
    bool left_duo = false;
    bool regular = false;
    bool lrb_of_groups = false;
};

// Exhaustive quantifier checks over the defining identities.
AxiomReport check_axioms(const FiniteMonoid& m);

int omega_power(const FiniteMonoid& m, int a);

// Inverse of m in the maximal subgroup at m^ω. Requires regular left duo.
int dagger(const FiniteMonoid& m, int a);
std::vector<int> dagger_table(const FiniteMonoid& m);  // single axiom check for all elements

struct GreenStructure {
    std::vector<int> r_class, l_class, j_class;   // element -> class id
    int num_r = 0, num_l = 0, num_j = 0;
    std::vector<char> regular_j;                  // j-class id -> contains an idempotent
    std::vector<std::vector<char>> j_leq;         // ideal containment on j-class ids
};

GreenStructure green_structure(const FiniteMonoid& m);

// Lattice of idempotent-generated principal left ideals; σ(m) = M·m^ω.
struct SupportLattice {
    int size = 0;
    std::vector<int> representative;        // node -> lowest idempotent e with Me = node
    std::vector<int> sigma;                 // element -> node
    std::vector<std::vector<int>> meet;
    std::vector<std::vector<char>> leq;
    std::vector<int> height;                // longest chain from the bottom node
    int bottom = -1, top = -1;

    bool le(int x, int y) const { return leq[size_t(x)][size_t(y)] != 0; }
    int lattice_rank() const { return height[size_t(top)]; }
    std::vector<int> nodes_by_height() const;  // linear extension: (height, node id)
};

SupportLattice support_lattice(const FiniteMonoid& m);

struct Contraction {
    FiniteMonoid monoid;
    std::vector<int> to_parent;  // contraction element -> parent element
};

// Full sub-table on {m : σ(m) >= node}.
Contraction contraction(const FiniteMonoid& m, const SupportLattice& lat, int node);

struct MaximalSubgroup {
    int idempotent = 0;
    std::vector<int> members;   // ascending element indices (the H-class of e)
    std::vector<int> inverse;   // member position -> member position
    int identity_pos = 0;       // position of e in members

    int pos(int element) const;  // -1 when not a member
};

MaximalSubgroup maximal_subgroup(const FiniteMonoid& m, int e);

// m·e·m† (requires regular left duo, e idempotent); result is idempotent.
int conjugate_idempotent(const FiniteMonoid& m, int a, int e);

}  // namespace duorep
