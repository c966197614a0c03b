#pragma once

#include <map>
#include <vector>

#include "duorep/hsiao.hpp"
#include "duorep/poset.hpp"
#include "duorep/rep.hpp"

namespace duorep {

struct ExtTable {
    int max_degree = 0;
    std::vector<std::vector<std::vector<long>>> dim;  // [q][source][target]

    long at(int q, int v, int w) const {
        if (q < 0 || q > max_degree) return 0;
        return dim[size_t(q)][size_t(v)][size_t(w)];
    }
    bool operator==(const ExtTable& o) const = default;
};

// dim Ext^q between simple modules from the boundary-complex homology:
// zero unless X <= Y; Kronecker in degree 0 on a common apex; otherwise
// (character-restriction match) * β̃_{q-1}(Δ(∂e_Y B_{>=X})).
class TopologicalExt {
  public:
    explicit TopologicalExt(const RepContext& ctx);
    long dim(int source, int target, int q) const;
    ExtTable table() const;  // degrees 0..lattice rank

  private:
    const RepContext* ctx_;
    std::map<std::pair<int, int>, BettiNumbers> betti_;  // per (X, Y) lattice pair, X < Y
    std::vector<std::vector<char>> char_match_;          // label pair -> restriction match
};

// Closed-form entry for ordered G-partition monoids: 1 iff X refines Y,
// q = |X| - |Y|, and the target labels are the blockwise products of the
// source labels. No homology involved.
long ext_dim_hsiao(const HsiaoInstance& inst, const RepContext& ctx, int source, int target,
                   int q);
ExtTable ext_table_hsiao(const HsiaoInstance& inst, const RepContext& ctx);

// Hsiao label view of a simple label: underlying set partition plus one dual
// character of G per block (extracted by evaluating the fiber character).
struct BlockCharacterLabel {
    std::vector<std::vector<int>> blocks;  // set partition, blocks sorted by min
    std::vector<std::vector<u32>> chars;   // per block: values on the elements of G
};
BlockCharacterLabel block_character_label(const HsiaoInstance& inst, const RepContext& ctx,
                                          int label);

struct Relation {
    int source = 0, target = 0;     // label indices at rank distance 2
    std::vector<int> mids;          // one length-2 path through each mid
};

struct Quiver {
    std::vector<std::pair<int, int>> arrows;  // (source, target), multiplicity by repetition
    std::vector<Relation> relations;
};

// Arrows by the Ext^1 rule; on CW instances this must coincide with the
// Hasse covers of the label poset (asserted).
Quiver build_quiver(const RepContext& ctx, const TopologicalExt& ext);

std::vector<Relation> quiver_relations(const RepContext& ctx);  // NotGraded when rank degenerates

int component_count(int vertex_count, const std::vector<std::pair<int, int>>& arrows);

struct KoszulReport {
    bool concentrated = false;   // Ext^q != 0 iff comparable labels at rank distance q
    long ext_algebra_dim = 0;
    long interval_count = 0;
    bool dims_equal = false;
};

KoszulReport koszul_diagnostics(const RepContext& ctx, const TopologicalExt& ext);

// True when every band contraction B_{>=X} passes the CW battery.
bool is_cw_instance(const RepContext& ctx);

}  // namespace duorep
