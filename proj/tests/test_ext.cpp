#include <set>

#include "doctest.h"
#include "duorep/ext.hpp"
#include "helpers.hpp"

using namespace duorep;
using namespace duorep::testing;

namespace {

struct Instance {
    HsiaoInstance hsiao;
    RepContext ctx;
};

Instance make(int n, const char* group, u64 prime = 0) {
    HsiaoInstance inst = build_hsiao(n, FiniteAbelianGroup::parse(group));
    SupportLattice lat = support_lattice(inst.monoid);
    u64 p = prime ? prime : auto_prime(inst.monoid, lat);
    RepContext ctx = build_rep_context(inst.monoid, p);
    return Instance{std::move(inst), std::move(ctx)};
}

}  // namespace

TEST_CASE("topological Ext on the 10-element instance") {
    Instance ins = make(2, "2");
    const RepContext& ctx = ins.ctx;
    TopologicalExt topo(ctx);
    int nl = ctx.label_count();
    REQUIRE(nl == 6);

    SUBCASE("degree zero is the identity matrix") {
        for (int v = 0; v < nl; ++v)
            for (int w = 0; w < nl; ++w) CHECK(topo.dim(v, w, 0) == (v == w ? 1 : 0));
    }
    SUBCASE("each bottom label reaches its product character in degree one") {
        long nonzero = 0;
        for (int v = 0; v < nl; ++v)
            for (int w = 0; w < nl; ++w) {
                long d = topo.dim(v, w, 1);
                CHECK((d == 0 || d == 1));
                if (d == 1) {
                    ++nonzero;
                    CHECK(ctx.labels.labels[size_t(v)].apex == ctx.lattice.bottom);
                    CHECK(ctx.labels.labels[size_t(w)].apex == ctx.lattice.top);
                    CHECK(ctx.labels.le(v, w));
                }
            }
        CHECK(nonzero == 4);
    }
    SUBCASE("table shape") {
        ExtTable t = topo.table();
        CHECK(t.max_degree == 1);
        long total = 0;
        for (int q = 0; q <= 1; ++q)
            for (int v = 0; v < nl; ++v)
                for (int w = 0; w < nl; ++w) total += t.at(q, v, w);
        CHECK(total == 6 + 4);
    }
}

TEST_CASE("degree-two Ext through the circle") {
    Instance ins = make(3, "2");
    const RepContext& ctx = ins.ctx;
    TopologicalExt topo(ctx);
    // bottom label with f = (triv,triv,triv) pairs with the trivial top label in degree 2
    int bottom_triv = -1, top_triv = -1;
    for (int l = 0; l < ctx.label_count(); ++l) {
        const SimpleLabel& lab = ctx.labels.labels[size_t(l)];
        bool trivial = true;
        const GroupCharacter& ch = ctx.dual[size_t(lab.apex)][size_t(lab.character)];
        for (u32 v : ch.values)
            if (v != 1) trivial = false;
        if (!trivial) continue;
        if (lab.apex == ctx.lattice.bottom) bottom_triv = l;
        if (lab.apex == ctx.lattice.top) top_triv = l;
    }
    REQUIRE(bottom_triv >= 0);
    REQUIRE(top_triv >= 0);
    CHECK(topo.dim(bottom_triv, top_triv, 2) == 1);
    CHECK(topo.dim(bottom_triv, top_triv, 1) == 0);
    CHECK(topo.dim(top_triv, bottom_triv, 2) == 0);
}

TEST_CASE("closed form agrees with the topological computation") {
    for (auto [n, group] : std::vector<std::pair<int, const char*>>{{2, "2"}, {2, "3"}, {3, "1"}}) {
        Instance ins = make(n, group);
        TopologicalExt topo(ins.ctx);
        ExtTable t_topo = topo.table();
        ExtTable t_closed = ext_table_hsiao(ins.hsiao, ins.ctx);
        CHECK(t_topo == t_closed);
    }
}

TEST_CASE("closed-form conditions") {
    Instance ins = make(3, "2");
    const RepContext& ctx = ins.ctx;
    int nl = ctx.label_count();
    for (int v = 0; v < nl; ++v)
        for (int w = 0; w < nl; ++w) {
            BlockCharacterLabel a = block_character_label(ins.hsiao, ctx, v);
            BlockCharacterLabel b = block_character_label(ins.hsiao, ctx, w);
            int expected_q = int(a.blocks.size()) - int(b.blocks.size());
            for (int q = 0; q <= 2; ++q) {
                long d = ext_dim_hsiao(ins.hsiao, ctx, v, w, q);
                if (d != 0) CHECK(q == expected_q);
                if (q != expected_q) CHECK(d == 0);
            }
        }
}

TEST_CASE("quivers") {
    SUBCASE("trivial fibers give the Hasse diagram of the support lattice") {
        Instance ins = make(2, "1");
        TopologicalExt topo(ins.ctx);
        Quiver quiver = build_quiver(ins.ctx, topo);
        CHECK(quiver.arrows.size() == 1);
        CHECK(quiver.relations.empty());
    }
    SUBCASE("four arrows on the 10-element instance") {
        Instance ins = make(2, "2");
        TopologicalExt topo(ins.ctx);
        Quiver quiver = build_quiver(ins.ctx, topo);
        CHECK(quiver.arrows.size() == 4);
        CHECK(quiver.relations.empty());
        auto covers = ins.ctx.labels.covers();
        std::sort(covers.begin(), covers.end());
        CHECK(covers == quiver.arrows);
    }
    SUBCASE("arrow and relation counts on the 74-element instance") {
        Instance ins = make(3, "2");
        TopologicalExt topo(ins.ctx);
        Quiver quiver = build_quiver(ins.ctx, topo);
        CHECK(quiver.arrows.size() == 36);  // 8 bottoms with 3 covers + 12 middles with 1
        CHECK(quiver.relations.size() == 8);
        for (const Relation& r : quiver.relations) CHECK(r.mids.size() == 3);
    }
    SUBCASE("two middle labels give a two-term relation") {
        // product of two segments: the support lattice is a square
        FiniteMonoid m = direct_product(build_sigma_n(2), build_sigma_n(2));
        RepContext ctx = build_rep_context(m, 2);
        auto rels = quiver_relations(ctx);
        REQUIRE(rels.size() == 1);
        CHECK(rels[0].mids.size() == 2);
    }
}

TEST_CASE("component counts follow the dual group") {
    auto count = [](int n, const char* group) {
        Instance ins = make(n, group);
        TopologicalExt topo(ins.ctx);
        Quiver quiver = build_quiver(ins.ctx, topo);
        return component_count(ins.ctx.label_count(), quiver.arrows);
    };
    CHECK(count(2, "2") == 2);
    CHECK(count(3, "2") == 2);
    CHECK(count(2, "3") == 3);
    CHECK(count(2, "1") == 1);
    CHECK(count(3, "1") == 1);
}

TEST_CASE("the component witness is constant along arrows and surjective") {
    Instance ins = make(2, "3");
    const RepContext& ctx = ins.ctx;
    TopologicalExt topo(ctx);
    Quiver quiver = build_quiver(ctx, topo);
    long go = ins.hsiao.group.order();
    // ψ(X,f) = product of the block characters, as a value vector on G
    auto witness = [&](int l) {
        BlockCharacterLabel b = block_character_label(ins.hsiao, ctx, l);
        std::vector<u32> prod(size_t(go), 1);
        for (const auto& ch : b.chars)
            for (long g = 0; g < go; ++g) prod[size_t(g)] = fp_mul(ctx.p, prod[size_t(g)], ch[size_t(g)]);
        return prod;
    };
    for (auto [v, w] : quiver.arrows) CHECK(witness(v) == witness(w));
    std::set<std::vector<u32>> values;
    for (int l = 0; l < ctx.label_count(); ++l) values.insert(witness(l));
    CHECK(long(values.size()) == go);
}

TEST_CASE("koszul diagnostics") {
    SUBCASE("10-element instance: 10 = 10") {
        Instance ins = make(2, "2");
        TopologicalExt topo(ins.ctx);
        KoszulReport rep = koszul_diagnostics(ins.ctx, topo);
        CHECK(rep.concentrated);
        CHECK(rep.ext_algebra_dim == 10);
        CHECK(rep.interval_count == 10);
        CHECK(rep.dims_equal);
    }
    SUBCASE("2-chain: 3 = 3") {
        Instance ins = make(2, "1");
        TopologicalExt topo(ins.ctx);
        KoszulReport rep = koszul_diagnostics(ins.ctx, topo);
        CHECK(rep.concentrated);
        CHECK(rep.ext_algebra_dim == 3);
        CHECK(rep.interval_count == 3);
    }
    SUBCASE("74-element instance: 66 = 66") {
        Instance ins = make(3, "2");
        TopologicalExt topo(ins.ctx);
        KoszulReport rep = koszul_diagnostics(ins.ctx, topo);
        CHECK(rep.concentrated);
        CHECK(rep.ext_algebra_dim == 66);
        CHECK(rep.interval_count == 66);
    }
}

TEST_CASE("CW recognition of shipped instances") {
    CHECK(is_cw_instance(make(2, "2").ctx));
    CHECK(is_cw_instance(make(3, "1").ctx));
}
