#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "duorep/fp.hpp"
#include "duorep/monoid.hpp"

namespace duorep {

struct FinitePoset {
    int n = 0;
    std::vector<char> rel;  // n*n, rel[a*n+b] = (a <= b)

    bool le(int a, int b) const { return rel[size_t(a) * size_t(n) + size_t(b)] != 0; }
    bool lt(int a, int b) const { return a != b && le(a, b); }

    static FinitePoset from_leq(int n, std::vector<char> leq);  // validates the poset axioms
    static FinitePoset from_covers(int n, const std::vector<std::pair<int, int>>& covers);

    std::vector<std::pair<int, int>> covers() const;  // (lower, upper), transitive reduction
    std::vector<int> below(int p) const;              // {q : q < p}

    // Global rank: minimal elements at 0, every cover raising rank by one.
    std::optional<std::vector<int>> grading() const;

    FinitePoset induced(const std::vector<int>& nodes) const;
};

struct SimplicialComplex {
    int vertices = 0;
    std::vector<std::vector<std::vector<int>>> faces;  // faces[d]: sorted (d+1)-element lists

    int dim() const { return int(faces.size()) - 1; }
    bool empty() const { return faces.empty() || faces[0].empty(); }
    long face_count(int d) const {
        return (d >= 0 && d <= dim()) ? long(faces[size_t(d)].size()) : 0;
    }

    static SimplicialComplex from_facets(int vertices, std::vector<std::vector<int>> facets);
};

// Simplices = chains of the poset; vertex set = all of P.
SimplicialComplex order_complex(const FinitePoset& p);

// ∂_d with position-parity signs on id-sorted faces; rows = (d-1)-faces.
FpMat simplicial_boundary(const SimplicialComplex& c, int d, u64 p);

struct BettiNumbers {
    long minus_one = 0;        // reduced homology of the empty complex lives here
    std::vector<long> b;       // b[q] = β̃_q for q >= 0

    long at(int q) const {
        if (q == -1) return minus_one;
        if (q < -1 || size_t(q) >= b.size()) return 0;
        return b[size_t(q)];
    }
    bool operator==(const BettiNumbers& o) const = default;
};

BettiNumbers reduced_betti(const SimplicialComplex& c, u64 p);

// β̃_q = δ_{q,d} for a d-sphere; d = -1 means the empty complex.
bool is_sphere_pattern(const BettiNumbers& bt, int d);

struct BoundarySubposet {
    FinitePoset poset;
    std::vector<int> carrier;  // poset node -> monoid element (an idempotent)
};

// The idempotents e in fB with σ(e) >= node and e != f, ordered by e <= e' iff e'e = e.
BoundarySubposet boundary_subposet(const FiniteMonoid& m, const SupportLattice& lat, int f,
                                   int node);

// Necessary-condition battery for being the face poset of a regular CW
// complex: graded, and every strictly-below complex has the Betti numbers and
// Euler characteristic of a sphere of the right dimension. Rejections are
// definitive; acceptance is not a homeomorphism proof.
bool is_cw_poset(const FinitePoset& p);

struct IncidenceNumbers {
    std::vector<std::pair<int, int>> covers;   // (lower, upper)
    std::map<std::pair<int, int>, int> sign;   // (upper, lower) -> ±1
};

// Signs ε on covers with ε(q,z1)ε(z1,p) + ε(q,z2)ε(z2,p) = 0 on every rank-2
// diamond, plus opposite signs on the two endpoints of every rank-1 element
// (so the augmented complex also composes to zero).
IncidenceNumbers incidence_numbers(const FinitePoset& p);

struct ChainComplex {
    u64 p = 2;
    std::vector<long> dims;
    std::vector<FpMat> boundary;  // boundary[d]: dims[d-1] x dims[d] for d >= 1

    static ChainComplex create(u64 p, std::vector<long> dims, std::vector<FpMat> boundary);
    std::vector<long> homology() const;  // non-reduced
};

struct CellStructure {
    std::vector<int> rank;                        // poset node -> rank
    std::vector<std::vector<int>> cells_by_rank;  // rank -> node ids, ascending
    std::vector<std::vector<int>> cell_pos;       // [rank] node -> position (or -1)
    IncidenceNumbers inc;
    ChainComplex complex;
};

CellStructure cellular_chain_complex(const FinitePoset& p, u64 prime);

}  // namespace duorep
