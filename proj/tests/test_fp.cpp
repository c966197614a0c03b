#include <random>

#include "doctest.h"
#include "duorep/fp.hpp"

using namespace duorep;

TEST_CASE("modular arithmetic basics") {
    CHECK(fp_add(7, 5, 4) == 2);
    CHECK(fp_sub(7, 2, 5) == 4);
    CHECK(fp_mul(7, 3, 5) == 1);
    CHECK(fp_neg(7, 0) == 0);
    CHECK(fp_neg(7, 3) == 4);
    CHECK(fp_pow(7, 3, 6) == 1);
    for (u32 a = 1; a < 7; ++a) CHECK(fp_mul(7, a, fp_inv(7, a)) == 1);
}

TEST_CASE("rank and kernel of a known matrix") {
    // rows (1,2,3), (2,4,6), (1,0,1) over F_5: rank 2
    FpMat m(3, 3, 5);
    u32 vals[3][3] = {{1, 2, 3}, {2, 4, 1}, {1, 0, 1}};
    vals[1][2] = 6 % 5;
    for (long i = 0; i < 3; ++i)
        for (long j = 0; j < 3; ++j) m.at(i, j) = vals[i][j];
    CHECK(m.rank() == 2);
    FpMat k = m.kernel_basis();
    CHECK(k.rows == 1);
    // every kernel row maps to zero
    for (long i = 0; i < k.rows; ++i) {
        FpVec v = k.row(i);
        FpVec image = m.apply(v);
        CHECK(vec_is_zero(image));
    }
}

TEST_CASE("rank equals transpose rank on random matrices") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 25; ++trial) {
        long r = 1 + long(rng() % 8), c = 1 + long(rng() % 8);
        FpMat m(r, c, 11);
        for (auto& x : m.a) x = u32(rng() % 11);
        CHECK(m.rank() == m.transpose().rank());
        CHECK(m.kernel_basis().rows == c - m.rank());
    }
}

TEST_CASE("basis solver expresses vectors exactly") {
    std::mt19937 rng(99);
    u64 p = 13;
    std::vector<FpVec> basis;
    for (int i = 0; i < 4; ++i) {
        FpVec v(6, 0);
        v[size_t(i)] = 1;
        v[5] = u32(rng() % p);
        basis.push_back(v);
    }
    BasisSolver solver(p, basis);
    FpVec target(6, 0);
    std::vector<u32> coeff{3, 0, 7, 12};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 6; ++j)
            target[size_t(j)] = fp_add(p, target[size_t(j)], fp_mul(p, coeff[size_t(i)], basis[size_t(i)][size_t(j)]));
    auto got = solver.solve(target);
    REQUIRE(got.has_value());
    CHECK(*got == FpVec(coeff.begin(), coeff.end()));
    FpVec outside(6, 0);
    outside[4] = 1;
    CHECK(!solver.solve(outside).has_value());
}

TEST_CASE("echelon membership and rank growth") {
    Echelon e(3, 4);
    CHECK(e.insert({1, 2, 0, 0}));
    CHECK(e.insert({0, 1, 1, 0}));
    CHECK(!e.insert({1, 0, 1, 0}));  // = row1 + row2 over F_3
    CHECK(e.rank() == 2);
    CHECK(e.contains({1, 1, 2, 0}));  // row1 + 2*row2
    CHECK(!e.contains({0, 0, 0, 1}));
}
