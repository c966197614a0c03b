#pragma once

#include <vector>

#include "duorep/ext.hpp"
#include "duorep/poset.hpp"
#include "duorep/rep.hpp"

namespace duorep {

// Left KM-module with a chosen basis; one action matrix per monoid element,
// acting on coordinate columns.
struct ModuleKM {
    long dim = 0;
    std::vector<FpMat> action;

    FpMat act(u64 p, const AlgebraElement& a) const;  // linear extension of the action
};

ModuleKM simple_module(const RepContext& ctx, int label);
ModuleKM direct_sum(u64 p, const std::vector<const ModuleKM*>& parts);

// action ∘ f = f ∘ action for every monoid element
bool equivariant(const RepContext& ctx, const ModuleKM& src, const ModuleKM& dst, const FpMat& f);

struct RadicalInfo {
    std::vector<FpVec> basis;         // dense coordinates in KM
    std::vector<FpVec> square_basis;  // basis of rad²
    int nilpotency_index = 0;         // least k with rad^k = 0 (when verified)
};

// Joint kernel of the simple functionals; verified to be a multiplicatively
// closed two-sided ideal of the expected codimension, and nilpotent within
// the lattice rank bound when requested.
RadicalInfo radical(const RepContext& ctx, bool verify_nilpotency = true);

long ext1_oracle(const RepContext& ctx, const RadicalInfo& rad, int source, int target);

struct ProjectiveModule {
    int label = 0;
    std::vector<int> band_basis;   // idempotents e; basis vectors are e·γ
    std::vector<FpVec> vectors;    // the basis vectors inside KM
    ModuleKM mod;
};

struct OracleContext {
    const RepContext* rep = nullptr;
    RadicalInfo rad;
    std::vector<ProjectiveModule> projectives;  // per label

    const RepContext& ctx() const { return *rep; }
};

OracleContext build_oracle_context(const RepContext& ctx, bool verify_nilpotency = true);

struct Resolution {
    int target_label = 0;
    std::vector<std::vector<int>> summands;  // per degree: projective labels (minimal kinds)
    std::vector<long> dims;
    std::vector<ModuleKM> modules;
    std::vector<FpMat> maps;        // maps[q]: P_q -> P_{q-1}, q >= 1; maps[0] unused
    FpMat augmentation;             // 1 x dims[0]
    std::vector<std::vector<long>> top_multiplicities;  // per degree per label

    int length() const { return int(dims.size()) - 1; }
};

// Iterated projective covers; stops at a zero syzygy, throws LengthExceeded
// past max_len. Ext^q(V, S_L) is read off top_multiplicities[q][L].
Resolution minimal_resolution(const OracleContext& oc, int label, int max_len);

// Simplicial chains of Δ(B_{>=X}) tensored with the apex character; the
// monoid acts through conjugation on idempotents. Exact and degreewise
// projective, not minimal in general.
Resolution order_complex_resolution(const OracleContext& oc, int label);

// Cellular chains of the ball B_{>=X}; the action is inflated through
// ψ(m) = m^ω with signs transported so the boundary squares commute.
// Verified minimal via the zero-coboundary criterion.
Resolution minimal_cellular_resolution(const OracleContext& oc, int label);

// dim Hom(P_q, S_L) per degree per label, from the action equations.
std::vector<std::vector<long>> hom_dims_to_simples(const RepContext& ctx, const Resolution& res);

// Ext dimensions computed as cohomology of Hom(P_•, S_L).
std::vector<std::vector<long>> ext_dims_from_resolution(const RepContext& ctx,
                                                        const Resolution& res);

// Exhibits the module as isomorphic to a direct sum of the KMγ's (projective
// cover with matching dimension); true = projective.
bool verify_projective(const OracleContext& oc, const ModuleKM& mod);

struct PresentationReport {
    long monoid_order = 0;
    long path_algebra_dim = 0;
    std::vector<long> degree_dims;           // dim of each graded piece of KQ/I
    bool dims_equal = false;                 // path_algebra_dim == |M|
    bool cartan_equal = false;               // dim ε_w(KQ/I)ε_v == dim γ_w KM γ_v entrywise
};

PresentationReport presentation_dimension_check(const OracleContext& oc);

}  // namespace duorep
