#include <random>

#include "doctest.h"
#include "duorep/hsiao.hpp"
#include "duorep/poset.hpp"
#include "helpers.hpp"

using namespace duorep;
using namespace duorep::testing;

namespace {

FinitePoset chain(int n) {
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
    return FinitePoset::from_covers(n, covers);
}

FinitePoset interval_ball() {  // 2 vertices under 1 edge
    return FinitePoset::from_covers(3, {{0, 2}, {1, 2}});
}

FinitePoset hexagon_boundary() {  // 6 vertices, 6 edges in a cycle
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i < 6; ++i) {
        covers.emplace_back(i, 6 + i);
        covers.emplace_back((i + 1) % 6, 6 + i);
    }
    return FinitePoset::from_covers(12, covers);
}

}  // namespace

TEST_CASE("poset validation") {
    CHECK_THROWS_AS((void)FinitePoset::from_leq(2, {1, 1, 1, 1}), Error);  // antisymmetry
    std::vector<char> not_reflexive{0, 0, 0, 1};
    CHECK_THROWS_AS((void)FinitePoset::from_leq(2, not_reflexive), Error);
    FinitePoset c = chain(3);
    CHECK(c.covers() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK(c.below(2) == std::vector<int>{0, 1});
}

TEST_CASE("grading") {
    CHECK(chain(4).grading().has_value());
    CHECK((*chain(4).grading())[3] == 3);
    // two maximal chains of different lengths under one top
    FinitePoset bad = FinitePoset::from_covers(4, {{0, 1}, {2, 3}, {3, 1}});
    CHECK(!bad.grading().has_value());
}

TEST_CASE("order complexes") {
    SUBCASE("antichain of two points") {
        SimplicialComplex c = order_complex(FinitePoset::from_covers(2, {}));
        CHECK(c.face_count(0) == 2);
        CHECK(c.face_count(1) == 0);
    }
    SUBCASE("2-chain gives one edge") {
        SimplicialComplex c = order_complex(chain(2));
        CHECK(c.face_count(0) == 2);
        CHECK(c.face_count(1) == 1);
    }
    SUBCASE("boundary band of sigma_3 triangulates a circle") {
        FiniteMonoid m = build_sigma_n(3);
        SupportLattice lat = support_lattice(m);
        BoundarySubposet bp = boundary_subposet(m, lat, m.identity(), lat.bottom);
        CHECK(bp.poset.n == 12);
        SimplicialComplex c = order_complex(bp.poset);
        CHECK(c.face_count(0) == 12);
        CHECK(c.face_count(1) == 12);
        CHECK(c.face_count(2) == 0);
        CHECK(euler_characteristic(c) == 0);
        BettiNumbers bt = reduced_betti(c, 3);
        CHECK(bt.at(0) == 0);
        CHECK(bt.at(1) == 1);
        CHECK(is_sphere_pattern(bt, 1));
    }
}

TEST_CASE("reduced Betti numbers") {
    SUBCASE("two points have one reduced component") {
        BettiNumbers bt = reduced_betti(order_complex(FinitePoset::from_covers(2, {})), 5);
        CHECK(bt.at(-1) == 0);
        CHECK(bt.at(0) == 1);
        CHECK(is_sphere_pattern(bt, 0));
    }
    SUBCASE("solid triangle is contractible") {
        SimplicialComplex c = SimplicialComplex::from_facets(3, {{0, 1, 2}});
        BettiNumbers bt = reduced_betti(c, 2);
        CHECK(bt.at(-1) == 0);
        for (int q = 0; q <= 2; ++q) CHECK(bt.at(q) == 0);
    }
    SUBCASE("empty complex") {
        BettiNumbers bt = reduced_betti(SimplicialComplex{}, 3);
        CHECK(bt.at(-1) == 1);
        CHECK(is_sphere_pattern(bt, -1));
    }
    SUBCASE("independent of vertex labelling") {
        std::mt19937 rng(7);
        std::vector<std::vector<int>> facets{{0, 1, 2}, {2, 3}, {3, 4}, {4, 0}, {5}};
        SimplicialComplex base = SimplicialComplex::from_facets(6, facets);
        BettiNumbers expected = reduced_betti(base, 7);
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<int> perm{0, 1, 2, 3, 4, 5};
            std::shuffle(perm.begin(), perm.end(), rng);
            std::vector<std::vector<int>> moved;
            for (auto f : facets) {
                for (int& v : f) v = perm[size_t(v)];
                moved.push_back(f);
            }
            CHECK(reduced_betti(SimplicialComplex::from_facets(6, moved), 7) == expected);
        }
    }
}

TEST_CASE("CW poset recognition") {
    SUBCASE("a 2-chain is not a CW poset") { CHECK(!is_cw_poset(chain(2))); }
    SUBCASE("the face poset of a segment is") { CHECK(is_cw_poset(interval_ball())); }
    SUBCASE("a bottom element breaks the sphere condition") {
        // bottom < {x, y} < top: the strictly-below complex of top is a cone
        FinitePoset diamond = FinitePoset::from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
        CHECK(!is_cw_poset(diamond));
    }
    SUBCASE("hexagon boundary and full hexagon") {
        CHECK(is_cw_poset(hexagon_boundary()));
        FiniteMonoid m = build_sigma_n(3);
        SupportLattice lat = support_lattice(m);
        // band order poset of the whole monoid: face poset of the 2-permutohedron
        std::vector<char> leq(size_t(m.size()) * size_t(m.size()), 0);
        for (int a = 0; a < m.size(); ++a)
            for (int b = 0; b < m.size(); ++b)
                leq[size_t(a) * size_t(m.size()) + size_t(b)] = (m.mul(b, a) == a) ? 1 : 0;
        CHECK(is_cw_poset(FinitePoset::from_leq(m.size(), std::move(leq))));
        (void)lat;
    }
}

TEST_CASE("incidence numbers") {
    SUBCASE("segment gets opposite endpoint signs") {
        IncidenceNumbers inc = incidence_numbers(interval_ball());
        CHECK(inc.sign.at({2, 0}) * inc.sign.at({2, 1}) == -1);
    }
    SUBCASE("hexagon boundary solves all diamonds and has circle homology") {
        CellStructure cs = cellular_chain_complex(hexagon_boundary(), 5);
        CHECK(cs.complex.dims == std::vector<long>{6, 6});
        CHECK(cs.complex.homology() == std::vector<long>{1, 1});
    }
    SUBCASE("full permutohedron face poset is contractible") {
        FiniteMonoid m = build_sigma_n(3);
        std::vector<char> leq(size_t(m.size()) * size_t(m.size()), 0);
        for (int a = 0; a < m.size(); ++a)
            for (int b = 0; b < m.size(); ++b)
                leq[size_t(a) * size_t(m.size()) + size_t(b)] = (m.mul(b, a) == a) ? 1 : 0;
        CellStructure cs = cellular_chain_complex(FinitePoset::from_leq(m.size(), std::move(leq)), 3);
        CHECK(cs.complex.dims == std::vector<long>{6, 6, 1});
        CHECK(cs.complex.homology() == std::vector<long>{1, 0, 0});
    }
    SUBCASE("segment cellular complex") {
        CellStructure cs = cellular_chain_complex(interval_ball(), 7);
        CHECK(cs.complex.dims == std::vector<long>{2, 1});
        CHECK(cs.complex.homology() == std::vector<long>{1, 0});
    }
    SUBCASE("non-CW input is rejected") {
        CHECK_THROWS_AS((void)incidence_numbers(chain(2)), Error);
    }
}

TEST_CASE("chain complex validation") {
    FpMat d1(1, 2, 5);
    d1.at(0, 0) = 1;
    d1.at(0, 1) = 1;
    FpMat d2(2, 1, 5);
    d2.at(0, 0) = 1;
    d2.at(1, 0) = 1;  // composite (1 1)·(1 1)^T = 2 != 0
    std::vector<FpMat> boundary{FpMat(), d1, d2};
    CHECK_THROWS_AS((void)ChainComplex::create(5, {1, 2, 1}, boundary), Error);
    d2.at(1, 0) = 4;  // now composes to zero
    boundary = {FpMat(), d1, d2};
    ChainComplex ok = ChainComplex::create(5, {1, 2, 1}, boundary);
    CHECK(ok.homology() == std::vector<long>{0, 0, 0});
}

TEST_CASE("boundary subposets") {
    FiniteMonoid m = build_sigma_n(2);
    SupportLattice lat = support_lattice(m);
    SUBCASE("whole band minus the top is a two-point antichain") {
        BoundarySubposet bp = boundary_subposet(m, lat, m.identity(), lat.bottom);
        CHECK(bp.poset.n == 2);
        CHECK(!bp.poset.le(0, 1));
        CHECK(!bp.poset.le(1, 0));
    }
    SUBCASE("apex must sit below the idempotent support") {
        CHECK_THROWS_AS((void)boundary_subposet(m, lat, 1, lat.top), Error);
    }
    SUBCASE("middle contraction of sigma_3") {
        HsiaoInstance inst = build_hsiao(3, FiniteAbelianGroup{});
        SupportLattice lat3 = support_lattice(inst.monoid);
        int pi = osp_index(inst, {{0, 1}, {2}});
        int node = lat3.sigma[size_t(inst.sigma_element(pi))];
        BoundarySubposet bp = boundary_subposet(inst.monoid, lat3, inst.monoid.identity(), node);
        CHECK(bp.poset.n == 2);  // the two orderings of the 2-block partition
        CHECK(!bp.poset.le(0, 1));
        CHECK(!bp.poset.le(1, 0));
    }
}
