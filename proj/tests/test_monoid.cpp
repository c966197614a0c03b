#include <map>
#include <set>
#include <sstream>

#include "doctest.h"
#include "duorep/hsiao.hpp"
#include "duorep/monoid.hpp"
#include "helpers.hpp"

using namespace duorep;
using namespace duorep::testing;

namespace {

// definitional right ideal: close {a} under right multiplication
std::set<int> right_ideal_bfs(const FiniteMonoid& m, int a) {
    std::set<int> ideal{a};
    std::vector<int> queue{a};
    for (size_t i = 0; i < queue.size(); ++i)
        for (int x = 0; x < m.size(); ++x) {
            int nxt = m.mul(queue[i], x);
            if (ideal.insert(nxt).second) queue.push_back(nxt);
        }
    return ideal;
}

}  // namespace

TEST_CASE("axiom reports") {
    SUBCASE("sigma_2 satisfies everything") {
        FiniteMonoid m = build_sigma_n(2);
        AxiomReport rep = check_axioms(m);
        CHECK(rep.right_semicentral);
        CHECK(rep.left_duo);
        CHECK(rep.regular);
        CHECK(rep.lrb_of_groups);
    }
    SUBCASE("a group satisfies everything") {
        AxiomReport rep = check_axioms(build_cyclic_group(2));
        CHECK(rep.right_semicentral);
        CHECK(rep.left_duo);
        CHECK(rep.regular);
        CHECK(rep.lrb_of_groups);
    }
    SUBCASE("right-zero adjoined is not left duo") {
        AxiomReport rep = check_axioms(right_zero_adjoined());
        CHECK(!rep.left_duo);
        CHECK(rep.regular);
        CHECK(!rep.lrb_of_groups);
    }
}

TEST_CASE("omega powers") {
    FiniteMonoid z6 = build_cyclic_group(6);
    for (int g = 0; g < 6; ++g) CHECK(omega_power(z6, g) == z6.identity());
    FiniteMonoid s2 = build_sigma_n(2);
    for (int e = 0; e < s2.size(); ++e) CHECK(omega_power(s2, e) == e);  // a band

    // componentwise squaring in an ordered G-partition monoid
    HsiaoInstance inst = build_hsiao(2, FiniteAbelianGroup::parse("2"));
    int pi = osp_index(inst, {{0}, {1}});
    int m = inst.encode(pi, {1, 1});
    CHECK(omega_power(inst.monoid, m) == inst.encode(pi, {0, 0}));
}

TEST_CASE("dagger inverts inside the fiber group") {
    FiniteMonoid z3 = build_cyclic_group(3);
    CHECK(dagger(z3, 1) == 2);
    CHECK(dagger(z3, 0) == 0);

    HsiaoInstance inst = build_hsiao(2, FiniteAbelianGroup::parse("3"));
    int pi = osp_index(inst, {{0}, {1}});
    int m = inst.encode(pi, {1, 2});
    CHECK(dagger(inst.monoid, m) == inst.encode(pi, {2, 1}));
    int e = inst.encode(pi, {0, 0});
    CHECK(dagger(inst.monoid, e) == e);

    CHECK_THROWS_AS((void)dagger(right_zero_adjoined(), 1), Error);
}

TEST_CASE("green structure agrees with definitional recomputation") {
    for (const FiniteMonoid& m :
         {build_sigma_n(3), build_hsiao(2, FiniteAbelianGroup::parse("2")).monoid}) {
        GreenStructure g = green_structure(m);
        std::map<std::set<int>, int> seen;
        for (int a = 0; a < m.size(); ++a) {
            auto ideal = right_ideal_bfs(m, a);
            auto it = seen.find(ideal);
            if (it == seen.end()) {
                seen.emplace(ideal, g.r_class[size_t(a)]);
            } else {
                CHECK(it->second == g.r_class[size_t(a)]);
            }
        }
        CHECK(int(seen.size()) == g.num_r);

        // every L- and R-class of a regular J-class contains an idempotent
        for (int j = 0; j < g.num_j; ++j) {
            if (!g.regular_j[size_t(j)]) continue;
            std::set<int> l_classes, r_classes, l_with_idem, r_with_idem;
            for (int a = 0; a < m.size(); ++a) {
                if (g.j_class[size_t(a)] != j) continue;
                l_classes.insert(g.l_class[size_t(a)]);
                r_classes.insert(g.r_class[size_t(a)]);
                if (m.is_idempotent(a)) {
                    l_with_idem.insert(g.l_class[size_t(a)]);
                    r_with_idem.insert(g.r_class[size_t(a)]);
                }
            }
            CHECK(l_classes == l_with_idem);
            CHECK(r_classes == r_with_idem);
        }
    }
}

TEST_CASE("support lattice of sigma_2 is the 2-chain") {
    FiniteMonoid m = build_sigma_n(2);
    SupportLattice lat = support_lattice(m);
    CHECK(lat.size == 2);
    CHECK(lat.representative[size_t(lat.bottom)] == 1);  // ({1},{2}), the lowest rank-2 element
    CHECK(lat.sigma[1] == lat.bottom);
    CHECK(lat.sigma[2] == lat.bottom);
    CHECK(lat.sigma[size_t(m.identity())] == lat.top);
    CHECK(lat.lattice_rank() == 1);
}

TEST_CASE("support lattice of a group is a point") {
    SupportLattice lat = support_lattice(build_cyclic_group(4));
    CHECK(lat.size == 1);
    CHECK(lat.bottom == lat.top);
}

TEST_CASE("support lattice of sigma_3 is the partition lattice") {
    HsiaoInstance inst = build_hsiao(3, FiniteAbelianGroup{});
    const FiniteMonoid& m = inst.monoid;
    SupportLattice lat = support_lattice(m);
    CHECK(lat.size == 5);  // Bell(3)

    // explicit order isomorphism: node -> underlying partition of its representative,
    // with coarser partitions larger
    auto underlying = [&](int node) {
        return inst.partitions[size_t(inst.partition_of(lat.representative[size_t(node)]))]
            .underlying();
    };
    auto coarsens = [](const std::vector<std::vector<int>>& fine,
                       const std::vector<std::vector<int>>& coarse) {
        for (const auto& q : fine) {
            bool inside = false;
            for (const auto& p : coarse)
                if (std::includes(p.begin(), p.end(), q.begin(), q.end())) inside = true;
            if (!inside) return false;
        }
        return true;
    };
    for (int x = 0; x < lat.size; ++x)
        for (int y = 0; y < lat.size; ++y)
            CHECK(lat.le(x, y) == coarsens(underlying(x), underlying(y)));

    // σ is a homomorphism to the meet semilattice
    for (int a = 0; a < m.size(); ++a)
        for (int b = 0; b < m.size(); ++b)
            CHECK(lat.sigma[size_t(m.mul(a, b))] ==
                  lat.meet[size_t(lat.sigma[size_t(a)])][size_t(lat.sigma[size_t(b)])]);
}

TEST_CASE("right semicentral identities on idempotents") {
    FiniteMonoid m = build_hsiao(2, FiniteAbelianGroup::parse("2")).monoid;
    for (int e : m.idempotents())
        for (int f : m.idempotents()) {
            CHECK(m.mul(m.mul(e, f), e) == m.mul(e, f));  // efe = ef
            // Me ∩ Mf = Mef as sets
            std::set<int> me, mf, mef, inter;
            for (int x = 0; x < m.size(); ++x) {
                me.insert(m.mul(x, e));
                mf.insert(m.mul(x, f));
                mef.insert(m.mul(x, m.mul(e, f)));
            }
            std::set_intersection(me.begin(), me.end(), mf.begin(), mf.end(),
                                  std::inserter(inter, inter.begin()));
            CHECK(inter == mef);
            // eM = fM forces e = f
            std::set<int> em, fm;
            for (int x = 0; x < m.size(); ++x) {
                em.insert(m.mul(e, x));
                fm.insert(m.mul(f, x));
            }
            if (em == fm) CHECK(e == f);
        }
}

TEST_CASE("contraction") {
    HsiaoInstance inst = build_hsiao(3, FiniteAbelianGroup{});
    const FiniteMonoid& m = inst.monoid;
    SupportLattice lat = support_lattice(m);

    SUBCASE("bottom recovers the whole monoid") {
        Contraction c = contraction(m, lat, lat.bottom);
        CHECK(c.monoid.size() == m.size());
    }
    SUBCASE("top is the group of units") {
        Contraction c = contraction(m, lat, lat.top);
        CHECK(c.monoid.size() == 1);  // sigma_n has trivial units
    }
    SUBCASE("a middle partition gives the 3-element contraction") {
        int pi = osp_index(inst, {{0, 1}, {2}});
        int node = lat.sigma[size_t(inst.sigma_element(pi))];
        Contraction c = contraction(m, lat, node);
        CHECK(c.monoid.size() == 3);
        AxiomReport rep = check_axioms(c.monoid);
        CHECK(rep.right_semicentral);
        // the injection covers exactly the up-set of the node
        for (int x : c.to_parent) CHECK(lat.le(node, lat.sigma[size_t(x)]));
    }
}

TEST_CASE("maximal subgroups") {
    SUBCASE("identity of a group gives the whole group") {
        FiniteMonoid z6 = build_cyclic_group(6);
        MaximalSubgroup g = maximal_subgroup(z6, 0);
        CHECK(g.members.size() == 6);
    }
    SUBCASE("fiber over a band idempotent") {
        HsiaoInstance inst = build_hsiao(2, FiniteAbelianGroup::parse("2"));
        int pi = osp_index(inst, {{0}, {1}});
        int e = inst.encode(pi, {0, 0});
        MaximalSubgroup g = maximal_subgroup(inst.monoid, e);
        CHECK(g.members.size() == 4);  // Z/2 x Z/2
        for (size_t i = 0; i < g.members.size(); ++i) {
            int x = g.members[i];
            int y = g.members[size_t(g.inverse[i])];
            CHECK(inst.monoid.mul(x, y) == e);
            CHECK(inst.monoid.mul(y, x) == e);
        }
    }
    SUBCASE("top idempotent of sigma_n has trivial fiber") {
        FiniteMonoid m = build_sigma_n(3);
        MaximalSubgroup g = maximal_subgroup(m, m.identity());
        CHECK(g.members.size() == 1);
    }
    SUBCASE("non-idempotent is rejected") {
        FiniteMonoid z3 = build_cyclic_group(3);
        CHECK_THROWS_AS((void)maximal_subgroup(z3, 1), Error);
    }
}

TEST_CASE("conjugation action on idempotents") {
    HsiaoInstance inst = build_hsiao(2, FiniteAbelianGroup::parse("2"));
    const FiniteMonoid& m = inst.monoid;
    for (int e : m.idempotents()) CHECK(conjugate_idempotent(m, m.identity(), e) == e);

    // in a left regular band of groups the action factors through ω
    for (int a = 0; a < m.size(); ++a)
        for (int e : m.idempotents())
            CHECK(conjugate_idempotent(m, a, e) == m.mul(m.omega(a), e));

    // unit labelled (g,g) on the one-block partition fixes every idempotent
    int top_unit = inst.encode(osp_index(inst, {{0, 1}}), {1});
    int e = inst.encode(osp_index(inst, {{0}, {1}}), {0, 0});
    CHECK(conjugate_idempotent(m, top_unit, e) == e);

    // the action is a monoid action and matches m(aM) = maM through e -> eM
    for (int a = 0; a < m.size(); ++a)
        for (int b = 0; b < m.size(); ++b)
            for (int e2 : m.idempotents())
                CHECK(conjugate_idempotent(m, m.mul(a, b), e2) ==
                      conjugate_idempotent(m, a, conjugate_idempotent(m, b, e2)));
}

TEST_CASE("e -> eM is an equivariant order isomorphism onto the R-classes") {
    HsiaoInstance inst = build_hsiao(2, FiniteAbelianGroup::parse("2"));
    const FiniteMonoid& m = inst.monoid;
    auto right_set = [&](int a) {
        std::set<int> s;
        for (int x = 0; x < m.size(); ++x) s.insert(m.mul(a, x));
        return s;
    };
    for (int e : m.idempotents())
        for (int f : m.idempotents()) {
            bool band_le = m.mul(f, e) == e;
            std::set<int> em = right_set(e), fm = right_set(f);
            CHECK(band_le == std::includes(fm.begin(), fm.end(), em.begin(), em.end()));
        }
    // equivariance: (m e m†)M = (m e)M
    for (int a = 0; a < m.size(); ++a)
        for (int e : m.idempotents())
            CHECK(right_set(conjugate_idempotent(m, a, e)) == right_set(m.mul(a, e)));
}

TEST_CASE("support lattice rejects non right semicentral input") {
    CHECK_THROWS_AS((void)support_lattice(right_zero_adjoined()), Error);
}

TEST_CASE("omega is a band retraction for LRBs of groups") {
    FiniteMonoid m = build_hsiao(2, FiniteAbelianGroup::parse("3")).monoid;
    for (int a = 0; a < m.size(); ++a)
        for (int b = 0; b < m.size(); ++b)
            CHECK(m.omega(m.mul(a, b)) == m.mul(m.omega(a), m.omega(b)));
}

TEST_CASE("table file round trip") {
    FiniteMonoid m = build_sigma_n(3);
    std::stringstream buf;
    write_table(buf, m);
    FiniteMonoid back = read_table(buf);
    CHECK(back.size() == m.size());
    CHECK(back.identity() == m.identity());
    for (int a = 0; a < m.size(); ++a)
        for (int b = 0; b < m.size(); ++b) CHECK(back.mul(a, b) == m.mul(a, b));
}

TEST_CASE("malformed tables are rejected") {
    // wrong table size
    CHECK_THROWS_AS((void)FiniteMonoid::from_table(2, 0, {0, 1, 1}), Error);
    // non-associative magma with identity: (aa)b = a but a(ab) = b
    CHECK_THROWS_AS((void)FiniteMonoid::from_table(3, 0, {0, 1, 2, 1, 2, 1, 2, 1, 1}), Error);
    // broken identity law
    CHECK_THROWS_AS((void)FiniteMonoid::from_table(2, 0, {0, 0, 1, 1}), Error);
    // truncated stream
    std::stringstream buf("3 0\n0 1 2\n1 2");
    CHECK_THROWS_AS((void)read_table(buf), Error);
}

TEST_CASE("large tables require the trusted flag") {
    const int n = 600;  // cyclic group, associative by construction
    std::vector<std::uint16_t> tab(size_t(n) * size_t(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) tab[size_t(a) * size_t(n) + size_t(b)] = std::uint16_t((a + b) % n);
    CHECK_THROWS_AS((void)FiniteMonoid::from_table(n, 0, tab, false), Error);
    FiniteMonoid m = FiniteMonoid::from_table(n, 0, tab, true);
    CHECK(m.size() == n);
}
