#include "duorep/ext.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace duorep {

TopologicalExt::TopologicalExt(const RepContext& ctx) : ctx_(&ctx) {
    const SupportLattice& lat = ctx.lattice;
    for (int x = 0; x < lat.size; ++x)
        for (int y = 0; y < lat.size; ++y) {
            if (x == y || !lat.le(x, y)) continue;
            BoundarySubposet bp =
                boundary_subposet(ctx.M(), lat, lat.representative[size_t(y)], x);
            betti_[{x, y}] = reduced_betti(order_complex(bp.poset), ctx.p);
        }
}

long TopologicalExt::dim(int source, int target, int q) const {
    const RepContext& ctx = *ctx_;
    const SimpleLabel& a = ctx.labels.labels[size_t(source)];
    const SimpleLabel& b = ctx.labels.labels[size_t(target)];
    if (a.apex == b.apex) return (source == target && q == 0) ? 1 : 0;
    if (!ctx.lattice.le(a.apex, b.apex)) return 0;
    if (!ctx.labels.le(source, target)) return 0;  // character restriction mismatch
    return betti_.at({a.apex, b.apex}).at(q - 1);
}

ExtTable TopologicalExt::table() const {
    const RepContext& ctx = *ctx_;
    ExtTable t;
    t.max_degree = ctx.lattice.lattice_rank();
    int nl = ctx.label_count();
    t.dim.assign(size_t(t.max_degree) + 1,
                 std::vector<std::vector<long>>(size_t(nl), std::vector<long>(size_t(nl), 0)));
    for (int q = 0; q <= t.max_degree; ++q)
        for (int v = 0; v < nl; ++v)
            for (int w = 0; w < nl; ++w) t.dim[size_t(q)][size_t(v)][size_t(w)] = dim(v, w, q);
    return t;
}

BlockCharacterLabel block_character_label(const HsiaoInstance& inst, const RepContext& ctx,
                                          int label) {
    const SimpleLabel& lab = ctx.labels.labels[size_t(label)];
    int e = ctx.lattice.representative[size_t(lab.apex)];
    int p_idx = inst.partition_of(e);
    const OrderedSetPartition& osp = inst.partitions[size_t(p_idx)];
    const MaximalSubgroup& g = ctx.subgroup[size_t(lab.apex)];
    const GroupCharacter& chi = ctx.dual[size_t(lab.apex)][size_t(lab.character)];

    BlockCharacterLabel out;
    out.blocks = osp.underlying();
    long go = inst.group.order();
    for (const auto& block : out.blocks) {
        // locate the block inside the ordered partition
        size_t bi = 0;
        while (bi < osp.blocks.size() && osp.blocks[bi] != block) ++bi;
        std::vector<u32> values(static_cast<size_t>(go));
        for (long gv = 0; gv < go; ++gv) {
            std::vector<long> labels(osp.blocks.size(), 0);
            labels[bi] = gv;
            int el = inst.encode(p_idx, labels);
            int pos = g.pos(el);
            if (pos < 0) fail(ErrorCode::InvalidTable, "fiber element missing from subgroup");
            values[size_t(gv)] = chi.values[size_t(pos)];
        }
        out.chars.push_back(std::move(values));
    }
    return out;
}

namespace {

bool refines(const std::vector<std::vector<int>>& fine, const std::vector<std::vector<int>>& coarse) {
    for (const auto& q : fine) {
        bool inside_some = false;
        for (const auto& p : coarse)
            if (std::includes(p.begin(), p.end(), q.begin(), q.end())) {
                inside_some = true;
                break;
            }
        if (inside_some) continue;
        return false;
    }
    return true;
}

}  // namespace

long ext_dim_hsiao(const HsiaoInstance& inst, const RepContext& ctx, int source, int target,
                   int q) {
    BlockCharacterLabel a = block_character_label(inst, ctx, source);
    BlockCharacterLabel b = block_character_label(inst, ctx, target);
    if (!refines(a.blocks, b.blocks)) return 0;
    if (q != long(a.blocks.size()) - long(b.blocks.size())) return 0;
    long go = inst.group.order();
    for (size_t pb = 0; pb < b.blocks.size(); ++pb) {
        for (long gv = 0; gv < go; ++gv) {
            u32 prod = 1;
            for (size_t qb = 0; qb < a.blocks.size(); ++qb)
                if (std::includes(b.blocks[pb].begin(), b.blocks[pb].end(), a.blocks[qb].begin(),
                                  a.blocks[qb].end()))
                    prod = fp_mul(ctx.p, prod, a.chars[qb][size_t(gv)]);
            if (prod != b.chars[pb][size_t(gv)]) return 0;
        }
    }
    return 1;
}

ExtTable ext_table_hsiao(const HsiaoInstance& inst, const RepContext& ctx) {
    ExtTable t;
    t.max_degree = ctx.lattice.lattice_rank();
    int nl = ctx.label_count();
    t.dim.assign(size_t(t.max_degree) + 1,
                 std::vector<std::vector<long>>(size_t(nl), std::vector<long>(size_t(nl), 0)));
    for (int q = 0; q <= t.max_degree; ++q)
        for (int v = 0; v < nl; ++v)
            for (int w = 0; w < nl; ++w)
                t.dim[size_t(q)][size_t(v)][size_t(w)] = ext_dim_hsiao(inst, ctx, v, w, q);
    return t;
}

bool is_cw_instance(const RepContext& ctx) {
    const SupportLattice& lat = ctx.lattice;
    for (int x = 0; x < lat.size; ++x) {
        std::vector<int> carrier;
        for (int e : ctx.band)
            if (lat.le(x, lat.sigma[size_t(e)])) carrier.push_back(e);
        int k = int(carrier.size());
        std::vector<char> leq(size_t(k) * size_t(k), 0);
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b)
                leq[size_t(a) * size_t(k) + size_t(b)] =
                    (ctx.M().mul(carrier[size_t(b)], carrier[size_t(a)]) == carrier[size_t(a)]) ? 1 : 0;
        if (!is_cw_poset(FinitePoset::from_leq(k, std::move(leq)))) return false;
    }
    return true;
}

Quiver build_quiver(const RepContext& ctx, const TopologicalExt& ext) {
    Quiver quiver;
    int nl = ctx.label_count();
    for (int v = 0; v < nl; ++v)
        for (int w = 0; w < nl; ++w) {
            long mult = ext.dim(v, w, 1);
            for (long i = 0; i < mult; ++i) quiver.arrows.emplace_back(v, w);
        }
    if (is_cw_instance(ctx)) {
        auto covers = ctx.labels.covers();
        std::sort(covers.begin(), covers.end());
        if (covers != quiver.arrows)
            fail(ErrorCode::CrossCheckFailed, "quiver arrows disagree with label-poset covers");
    }
    quiver.relations = quiver_relations(ctx);
    return quiver;
}

std::vector<Relation> quiver_relations(const RepContext& ctx) {
    const LabelPoset& lp = ctx.labels;
    int nl = lp.size();
    for (auto [lo, hi] : lp.covers())
        if (lp.rank[size_t(hi)] != lp.rank[size_t(lo)] + 1)
            fail(ErrorCode::NotGraded, "label poset is not graded");
    std::vector<Relation> rels;
    for (int a = 0; a < nl; ++a)
        for (int b = 0; b < nl; ++b) {
            if (a == b || !lp.le(a, b)) continue;
            if (lp.rank[size_t(b)] - lp.rank[size_t(a)] != 2) continue;
            Relation r;
            r.source = a;
            r.target = b;
            for (int z = 0; z < nl; ++z)
                if (z != a && z != b && lp.le(a, z) && lp.le(z, b)) r.mids.push_back(z);
            rels.push_back(std::move(r));
        }
    return rels;
}

int component_count(int vertex_count, const std::vector<std::pair<int, int>>& arrows) {
    std::vector<int> parent(static_cast<size_t>(vertex_count));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[size_t(x)] != x) {
            parent[size_t(x)] = parent[size_t(parent[size_t(x)])];
            x = parent[size_t(x)];
        }
        return x;
    };
    for (auto [a, b] : arrows) {
        int ra = find(a), rb = find(b);
        if (ra != rb) parent[size_t(ra)] = rb;
    }
    int count = 0;
    for (int x = 0; x < vertex_count; ++x)
        if (find(x) == x) ++count;
    return count;
}

KoszulReport koszul_diagnostics(const RepContext& ctx, const TopologicalExt& ext) {
    KoszulReport rep;
    int nl = ctx.label_count();
    int maxdeg = ctx.lattice.lattice_rank();
    rep.concentrated = true;
    rep.ext_algebra_dim = 0;
    rep.interval_count = 0;
    for (int v = 0; v < nl; ++v)
        for (int w = 0; w < nl; ++w) {
            bool comparable = ctx.labels.le(v, w);
            if (comparable) ++rep.interval_count;
            int dist = ctx.labels.rank[size_t(w)] - ctx.labels.rank[size_t(v)];
            for (int q = 0; q <= maxdeg; ++q) {
                long d = ext.dim(v, w, q);
                rep.ext_algebra_dim += d;
                bool expected = comparable && q == dist;
                if ((d != 0) != expected) rep.concentrated = false;
            }
        }
    rep.dims_equal = rep.ext_algebra_dim == rep.interval_count;
    return rep;
}

}  // namespace duorep
