#include "duorep/monoid.hpp"

#include <algorithm>

#include "duorep/fp.hpp"
#include <istream>
#include <map>
#include <ostream>
#include <random>

namespace duorep {

FiniteMonoid FiniteMonoid::from_table(int n, int identity, std::vector<std::uint16_t> table,
                                      bool trusted) {
    if (n <= 0 || n > 65535) fail(ErrorCode::InvalidTable, "element count out of range");
    if (table.size() != size_t(n) * size_t(n)) fail(ErrorCode::InvalidTable, "table size mismatch");
    if (identity < 0 || identity >= n) fail(ErrorCode::InvalidTable, "identity index out of range");
    for (auto v : table)
        if (v >= n) fail(ErrorCode::InvalidTable, "entry out of range");

    FiniteMonoid m;
    m.n_ = n;
    m.id_ = identity;
    m.tab_ = std::move(table);

    for (int x = 0; x < n; ++x)
        if (m.mul(identity, x) != x || m.mul(x, identity) != x)
            fail(ErrorCode::InvalidTable, "identity law fails");

    if (n <= kExhaustiveLimit) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                int ab = m.mul(a, b);
                for (int c = 0; c < n; ++c)
                    if (m.mul(ab, c) != m.mul(a, m.mul(b, c)))
                        fail(ErrorCode::InvalidTable, "associativity fails");
            }
    } else {
        if (!trusted)
            fail(ErrorCode::InvalidTable,
                 "tables larger than 512 elements require the trusted flag");
        std::mt19937 rng(0x5eed);
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int i = 0; i < 1 << 18; ++i) {
            int a = pick(rng), b = pick(rng), c = pick(rng);
            if (m.mul(m.mul(a, b), c) != m.mul(a, m.mul(b, c)))
                fail(ErrorCode::InvalidTable, "associativity fails (sampled)");
        }
    }

    // ω-powers: walk m, m², m³, …; the idempotent power occurs within n+1 steps.
    m.omega_.assign(size_t(n), -1);
    for (int x = 0; x < n; ++x) {
        int cur = x;
        for (int step = 0; step <= n + 1; ++step) {
            if (m.mul(cur, cur) == cur) {
                m.omega_[size_t(x)] = cur;
                break;
            }
            cur = m.mul(cur, x);
        }
        if (m.omega_[size_t(x)] < 0) fail(ErrorCode::InvalidTable, "no idempotent power found");
    }
    for (int x = 0; x < n; ++x)
        if (m.is_idempotent(x)) m.idem_.push_back(x);
    return m;
}

FiniteMonoid read_table(std::istream& in) {
    long n = 0, id = 0;
    if (!(in >> n >> id)) fail(ErrorCode::InvalidTable, "cannot read header line");
    if (n <= 0 || n > 65535) fail(ErrorCode::InvalidTable, "bad element count");
    std::vector<std::uint16_t> tab(size_t(n) * size_t(n));
    for (auto& v : tab) {
        long x;
        if (!(in >> x)) fail(ErrorCode::InvalidTable, "truncated table");
        if (x < 0 || x >= n) fail(ErrorCode::InvalidTable, "entry out of range");
        v = std::uint16_t(x);
    }
    return FiniteMonoid::from_table(int(n), int(id), std::move(tab), /*trusted=*/false);
}

void write_table(std::ostream& out, const FiniteMonoid& m) {
    out << m.size() << ' ' << m.identity() << '\n';
    for (int a = 0; a < m.size(); ++a) {
        for (int b = 0; b < m.size(); ++b) {
            if (b) out << ' ';
            out << m.mul(a, b);
        }
        out << '\n';
    }
}

AxiomReport check_axioms(const FiniteMonoid& m) {
    const int n = m.size();
    AxiomReport rep;

    rep.right_semicentral = true;
    for (int e : m.idempotents()) {
        for (int x = 0; x < n && rep.right_semicentral; ++x) {
            int ex = m.mul(e, x);
            if (m.mul(ex, e) != ex) rep.right_semicentral = false;
        }
        if (!rep.right_semicentral) break;
    }

    rep.left_duo = true;
    {
        std::vector<char> in_col(static_cast<size_t>(n));
        for (int a = 0; a < n && rep.left_duo; ++a) {
            std::fill(in_col.begin(), in_col.end(), 0);
            for (int x = 0; x < n; ++x) in_col[size_t(m.mul(x, a))] = 1;
            for (int x = 0; x < n; ++x)
                if (!in_col[size_t(m.mul(a, x))]) {
                    rep.left_duo = false;
                    break;
                }
        }
    }

    rep.regular = true;
    for (int a = 0; a < n && rep.regular; ++a) {
        bool found = false;
        for (int x = 0; x < n; ++x)
            if (m.mul(m.mul(a, x), a) == a) {
                found = true;
                break;
            }
        if (!found) rep.regular = false;
    }

    rep.lrb_of_groups = rep.regular && rep.left_duo;
    if (rep.lrb_of_groups) {
        for (int a = 0; a < n && rep.lrb_of_groups; ++a)
            for (int b = 0; b < n; ++b)
                if (m.omega(m.mul(a, b)) != m.mul(m.omega(a), m.omega(b))) {
                    rep.lrb_of_groups = false;
                    break;
                }
    }
    return rep;
}

int omega_power(const FiniteMonoid& m, int a) { return m.omega(a); }

static int dagger_unchecked(const FiniteMonoid& m, int a) {
    int e = m.omega(a);
    for (int x = 0; x < m.size(); ++x)
        if (m.mul(a, x) == e && m.mul(x, a) == e && m.mul(e, x) == x && m.mul(x, e) == x) return x;
    fail(ErrorCode::NotRegularLeftDuo, "no group inverse at the idempotent power");
}

int dagger(const FiniteMonoid& m, int a) {
    AxiomReport rep = check_axioms(m);
    if (!rep.regular || !rep.left_duo)
        fail(ErrorCode::NotRegularLeftDuo, "dagger requires a regular left duo monoid");
    return dagger_unchecked(m, a);
}

std::vector<int> dagger_table(const FiniteMonoid& m) {
    AxiomReport rep = check_axioms(m);
    if (!rep.regular || !rep.left_duo)
        fail(ErrorCode::NotRegularLeftDuo, "dagger requires a regular left duo monoid");
    std::vector<int> d(size_t(m.size()));
    for (int a = 0; a < m.size(); ++a) d[size_t(a)] = dagger_unchecked(m, a);
    return d;
}

namespace {

using Bits = std::vector<u64>;

Bits make_bits(int n) { return Bits(size_t((n + 63) / 64), 0); }
void set_bit(Bits& b, int i) { b[size_t(i) / 64] |= u64(1) << (i % 64); }

bool subset(const Bits& a, const Bits& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

// class ids in first-seen order over ascending element index
std::vector<int> classify(const std::vector<Bits>& sets, int& count,
                          std::vector<Bits>* class_sets = nullptr) {
    std::map<Bits, int> seen;
    std::vector<int> cls(sets.size());
    count = 0;
    for (size_t i = 0; i < sets.size(); ++i) {
        auto it = seen.find(sets[i]);
        if (it == seen.end()) {
            it = seen.emplace(sets[i], count++).first;
            if (class_sets) class_sets->push_back(sets[i]);
        }
        cls[i] = it->second;
    }
    return cls;
}

}  // namespace

GreenStructure green_structure(const FiniteMonoid& m) {
    const int n = m.size();
    std::vector<Bits> right(static_cast<size_t>(n));
    std::vector<Bits> left(static_cast<size_t>(n));
    std::vector<Bits> two(static_cast<size_t>(n));
    for (int a = 0; a < n; ++a) {
        right[size_t(a)] = make_bits(n);
        left[size_t(a)] = make_bits(n);
        for (int x = 0; x < n; ++x) {
            set_bit(right[size_t(a)], m.mul(a, x));
            set_bit(left[size_t(a)], m.mul(x, a));
        }
    }
    for (int a = 0; a < n; ++a) {
        Bits t = make_bits(n);
        for (int x = 0; x < n; ++x) {
            int xa = m.mul(x, a);
            for (size_t w = 0; w < t.size(); ++w) t[w] |= right[size_t(xa)][w];
        }
        two[size_t(a)] = std::move(t);
    }

    GreenStructure g;
    std::vector<Bits> j_sets;
    g.r_class = classify(right, g.num_r);
    g.l_class = classify(left, g.num_l);
    g.j_class = classify(two, g.num_j, &j_sets);

    g.regular_j.assign(size_t(g.num_j), 0);
    for (int e : m.idempotents()) g.regular_j[size_t(g.j_class[size_t(e)])] = 1;

    g.j_leq.assign(size_t(g.num_j), std::vector<char>(size_t(g.num_j), 0));
    for (int a = 0; a < g.num_j; ++a)
        for (int b = 0; b < g.num_j; ++b)
            g.j_leq[size_t(a)][size_t(b)] = subset(j_sets[size_t(a)], j_sets[size_t(b)]) ? 1 : 0;
    return g;
}

std::vector<int> SupportLattice::nodes_by_height() const {
    std::vector<int> order(static_cast<size_t>(size));
    for (int i = 0; i < size; ++i) order[size_t(i)] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (height[size_t(a)] != height[size_t(b)]) return height[size_t(a)] < height[size_t(b)];
        return a < b;
    });
    return order;
}

SupportLattice support_lattice(const FiniteMonoid& m) {
    AxiomReport rep = check_axioms(m);
    if (!rep.right_semicentral)
        fail(ErrorCode::NotRightSemicentral, "support lattice needs a right semicentral monoid");

    const int n = m.size();
    SupportLattice lat;
    std::map<Bits, int> node_of_ideal;
    std::vector<int> node_of_idem(size_t(n), -1);
    for (int e : m.idempotents()) {
        Bits ideal = make_bits(n);
        for (int x = 0; x < n; ++x) set_bit(ideal, m.mul(x, e));
        auto it = node_of_ideal.find(ideal);
        if (it == node_of_ideal.end()) {
            it = node_of_ideal.emplace(std::move(ideal), lat.size).first;
            lat.representative.push_back(e);
            ++lat.size;
        }
        node_of_idem[size_t(e)] = it->second;
    }

    lat.sigma.resize(size_t(n));
    for (int x = 0; x < n; ++x) lat.sigma[size_t(x)] = node_of_idem[size_t(m.omega(x))];

    const int k = lat.size;
    lat.meet.assign(size_t(k), std::vector<int>(size_t(k)));
    for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y)
            lat.meet[size_t(x)][size_t(y)] =
                lat.sigma[size_t(m.mul(lat.representative[size_t(x)], lat.representative[size_t(y)]))];

    lat.leq.assign(size_t(k), std::vector<char>(size_t(k), 0));
    for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y)
            lat.leq[size_t(x)][size_t(y)] = (lat.meet[size_t(x)][size_t(y)] == x) ? 1 : 0;

    // structural sanity: meet laws, σ homomorphism, representative supports
    for (int x = 0; x < k; ++x) {
        if (lat.meet[size_t(x)][size_t(x)] != x)
            fail(ErrorCode::InvalidTable, "meet not idempotent");
        if (lat.sigma[size_t(lat.representative[size_t(x)])] != x)
            fail(ErrorCode::InvalidTable, "representative support mismatch");
        for (int y = 0; y < k; ++y) {
            if (lat.meet[size_t(x)][size_t(y)] != lat.meet[size_t(y)][size_t(x)])
                fail(ErrorCode::InvalidTable, "meet not commutative");
            for (int z = 0; z < k; ++z)
                if (lat.meet[size_t(lat.meet[size_t(x)][size_t(y)])][size_t(z)] !=
                    lat.meet[size_t(x)][size_t(lat.meet[size_t(y)][size_t(z)])])
                    fail(ErrorCode::InvalidTable, "meet not associative");
        }
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (lat.sigma[size_t(m.mul(a, b))] !=
                lat.meet[size_t(lat.sigma[size_t(a)])][size_t(lat.sigma[size_t(b)])])
                fail(ErrorCode::InvalidTable, "sigma is not a homomorphism onto the meet semilattice");

    lat.top = lat.sigma[size_t(m.identity())];
    lat.bottom = 0;
    for (int x = 1; x < k; ++x) lat.bottom = lat.meet[size_t(lat.bottom)][size_t(x)];

    // heights by longest chain from the bottom
    lat.height.assign(size_t(k), 0);
    std::vector<int> order(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) order[size_t(i)] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        int ca = 0, cb = 0;
        for (int z = 0; z < k; ++z) {
            ca += lat.leq[size_t(z)][size_t(a)];
            cb += lat.leq[size_t(z)][size_t(b)];
        }
        return ca < cb;  // down-set size is a linear extension proxy
    });
    for (int x : order)
        for (int y = 0; y < k; ++y)
            if (y != x && lat.le(y, x))
                lat.height[size_t(x)] = std::max(lat.height[size_t(x)], lat.height[size_t(y)] + 1);
    return lat;
}

Contraction contraction(const FiniteMonoid& m, const SupportLattice& lat, int node) {
    if (node < 0 || node >= lat.size) fail(ErrorCode::InvalidArgument, "bad lattice node");
    std::vector<int> keep;
    for (int x = 0; x < m.size(); ++x)
        if (lat.le(node, lat.sigma[size_t(x)])) keep.push_back(x);
    std::vector<int> back(size_t(m.size()), -1);
    for (size_t i = 0; i < keep.size(); ++i) back[size_t(keep[i])] = int(i);
    const int k = int(keep.size());
    std::vector<std::uint16_t> tab(size_t(k) * size_t(k));
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            int prod = m.mul(keep[size_t(a)], keep[size_t(b)]);
            int idx = back[size_t(prod)];
            if (idx < 0) fail(ErrorCode::InvalidTable, "contraction not closed");
            tab[size_t(a) * size_t(k) + size_t(b)] = std::uint16_t(idx);
        }
    Contraction c{FiniteMonoid::from_table(k, back[size_t(m.identity())], std::move(tab),
                                           /*trusted=*/k > FiniteMonoid::kExhaustiveLimit),
                  std::move(keep)};
    return c;
}

int MaximalSubgroup::pos(int element) const {
    auto it = std::lower_bound(members.begin(), members.end(), element);
    if (it == members.end() || *it != element) return -1;
    return int(it - members.begin());
}

MaximalSubgroup maximal_subgroup(const FiniteMonoid& m, int e) {
    if (e < 0 || e >= m.size() || !m.is_idempotent(e))
        fail(ErrorCode::NotIdempotent, "maximal subgroup needs an idempotent");
    const int n = m.size();
    Bits row_e = make_bits(n), col_e = make_bits(n);
    for (int x = 0; x < n; ++x) {
        set_bit(row_e, m.mul(e, x));
        set_bit(col_e, m.mul(x, e));
    }
    MaximalSubgroup g;
    g.idempotent = e;
    for (int x = 0; x < n; ++x) {
        Bits row_x = make_bits(n), col_x = make_bits(n);
        for (int y = 0; y < n; ++y) {
            set_bit(row_x, m.mul(x, y));
            set_bit(col_x, m.mul(y, x));
        }
        if (row_x == row_e && col_x == col_e) g.members.push_back(x);
    }
    g.identity_pos = g.pos(e);
    if (g.identity_pos < 0) fail(ErrorCode::InvalidTable, "idempotent missing from its H-class");
    // group laws: closed, e neutral, inverses two-sided
    g.inverse.assign(g.members.size(), -1);
    for (size_t i = 0; i < g.members.size(); ++i) {
        int x = g.members[i];
        if (m.mul(e, x) != x || m.mul(x, e) != x)
            fail(ErrorCode::InvalidTable, "H-class element not fixed by e");
        for (size_t j = 0; j < g.members.size(); ++j) {
            int y = g.members[j];
            if (g.pos(m.mul(x, y)) < 0) fail(ErrorCode::InvalidTable, "H-class not closed");
            if (m.mul(x, y) == e && m.mul(y, x) == e) g.inverse[i] = int(j);
        }
        if (g.inverse[i] < 0) fail(ErrorCode::InvalidTable, "H-class member without inverse");
    }
    return g;
}

int conjugate_idempotent(const FiniteMonoid& m, int a, int e) {
    if (!m.is_idempotent(e)) fail(ErrorCode::NotIdempotent, "conjugation target must be idempotent");
    AxiomReport rep = check_axioms(m);
    if (!rep.regular || !rep.left_duo)
        fail(ErrorCode::NotRegularLeftDuo, "conjugation requires a regular left duo monoid");
    int result = m.mul(m.mul(a, e), dagger_unchecked(m, a));
    if (!m.is_idempotent(result)) fail(ErrorCode::InvalidTable, "conjugate is not idempotent");
    return result;
}

}  // namespace duorep
