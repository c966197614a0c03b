#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <vector>

#include "duorep/hsiao.hpp"
#include "duorep/monoid.hpp"
#include "duorep/poset.hpp"

namespace duorep::testing {

// Fubini (ordered Bell) numbers by the binomial recurrence — independent of
// the partition enumerator.
inline long fubini(int n) {
    std::vector<long> a(size_t(n) + 1, 0);
    a[0] = 1;
    std::vector<std::vector<long>> choose(size_t(n) + 1, std::vector<long>(size_t(n) + 1, 0));
    for (int i = 0; i <= n; ++i) {
        choose[size_t(i)][0] = 1;
        for (int j = 1; j <= i; ++j)
            choose[size_t(i)][size_t(j)] =
                choose[size_t(i) - 1][size_t(j) - 1] + choose[size_t(i) - 1][size_t(j)];
    }
    for (int m = 1; m <= n; ++m) {
        long total = 0;
        for (int k = 1; k <= m; ++k) total += choose[size_t(m)][size_t(k)] * a[size_t(m) - size_t(k)];
        a[size_t(m)] = total;
    }
    return a[size_t(n)];
}

inline long euler_characteristic(const SimplicialComplex& c) {
    long chi = 0;
    for (int d = 0; d <= c.dim(); ++d) chi += (d % 2 == 0 ? 1 : -1) * c.face_count(d);
    return chi;
}

// index of an ordered set partition inside a built instance
inline int osp_index(const HsiaoInstance& inst, std::vector<std::vector<int>> blocks) {
    OrderedSetPartition target = OrderedSetPartition::from_blocks(inst.n, std::move(blocks));
    for (size_t i = 0; i < inst.partitions.size(); ++i)
        if (inst.partitions[i] == target) return int(i);
    return -1;
}

// direct product monoid (componentwise table)
inline FiniteMonoid direct_product(const FiniteMonoid& a, const FiniteMonoid& b) {
    int na = a.size(), nb = b.size(), n = na * nb;
    std::vector<std::uint16_t> tab(size_t(n) * size_t(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int xa = x / nb, xb = x % nb, ya = y / nb, yb = y % nb;
            tab[size_t(x) * size_t(n) + size_t(y)] =
                std::uint16_t(a.mul(xa, ya) * nb + b.mul(xb, yb));
        }
    return FiniteMonoid::from_table(n, a.identity() * nb + b.identity(), std::move(tab),
                                    n > FiniteMonoid::kExhaustiveLimit);
}

// the symmetric group on three letters, from permutation composition
inline FiniteMonoid symmetric_group_3() {
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> base{0, 1, 2};
    std::sort(base.begin(), base.end());
    do {
        perms.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    int n = int(perms.size());
    auto compose = [&](const std::array<int, 3>& f, const std::array<int, 3>& g) {
        std::array<int, 3> h{};
        for (int i = 0; i < 3; ++i) h[size_t(i)] = f[size_t(g[size_t(i)])];
        return h;
    };
    auto index_of = [&](const std::array<int, 3>& f) {
        for (int i = 0; i < n; ++i)
            if (perms[size_t(i)] == f) return i;
        return -1;
    };
    std::vector<std::uint16_t> tab(size_t(n) * size_t(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            tab[size_t(x) * size_t(n) + size_t(y)] =
                std::uint16_t(index_of(compose(perms[size_t(x)], perms[size_t(y)])));
    return FiniteMonoid::from_table(n, index_of({0, 1, 2}), std::move(tab));
}

// {1, a, b} with xy = y on {a, b}: left ideals are not two-sided
inline FiniteMonoid right_zero_adjoined() {
    // element 0 = identity, 1 = a, 2 = b
    std::vector<std::uint16_t> tab{0, 1, 2, 1, 1, 2, 2, 1, 2};
    return FiniteMonoid::from_table(3, 0, std::move(tab));
}

}  // namespace duorep::testing
