#include "duorep/hsiao.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace duorep {

OrderedSetPartition OrderedSetPartition::from_blocks(int n, std::vector<std::vector<int>> blocks) {
    OrderedSetPartition p;
    p.n = n;
    p.blocks = std::move(blocks);
    std::vector<char> seen(size_t(n), 0);
    int total = 0;
    for (auto& b : p.blocks) {
        if (b.empty()) fail(ErrorCode::InvalidArgument, "empty block");
        std::sort(b.begin(), b.end());
        for (int x : b) {
            if (x < 0 || x >= n || seen[size_t(x)])
                fail(ErrorCode::InvalidArgument, "blocks must partition the ground set");
            seen[size_t(x)] = 1;
            ++total;
        }
    }
    if (total != n) fail(ErrorCode::InvalidArgument, "blocks must cover the ground set");
    return p;
}

OrderedSetPartition OrderedSetPartition::from_assignment(const std::vector<int>& assign) {
    int n = int(assign.size());
    int k = 0;
    for (int a : assign) k = std::max(k, a + 1);
    std::vector<std::vector<int>> blocks(static_cast<size_t>(k));
    for (int i = 0; i < n; ++i) blocks[size_t(assign[size_t(i)])].push_back(i);
    return from_blocks(n, std::move(blocks));
}

std::vector<int> OrderedSetPartition::assignment() const {
    std::vector<int> a(size_t(n), -1);
    for (size_t b = 0; b < blocks.size(); ++b)
        for (int x : blocks[b]) a[size_t(x)] = int(b);
    return a;
}

std::vector<std::vector<int>> OrderedSetPartition::underlying() const {
    std::vector<std::vector<int>> u = blocks;
    std::sort(u.begin(), u.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });
    return u;
}

std::string OrderedSetPartition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (size_t b = 0; b < blocks.size(); ++b) {
        if (b) os << ',';
        os << '{';
        for (size_t i = 0; i < blocks[b].size(); ++i) {
            if (i) os << ',';
            os << blocks[b][i] + 1;
        }
        os << '}';
    }
    os << ')';
    return os.str();
}

OrderedSetPartition tits_product(const OrderedSetPartition& a, const OrderedSetPartition& b) {
    if (a.n != b.n) fail(ErrorCode::GroundSetMismatch, "products need a common ground set");
    std::vector<std::vector<int>> out;
    std::vector<int> scratch;
    for (const auto& P : a.blocks)
        for (const auto& Q : b.blocks) {
            scratch.clear();
            std::set_intersection(P.begin(), P.end(), Q.begin(), Q.end(),
                                  std::back_inserter(scratch));
            if (!scratch.empty()) out.push_back(scratch);
        }
    return OrderedSetPartition::from_blocks(a.n, std::move(out));
}

std::vector<OrderedSetPartition> enumerate_ordered_set_partitions(int n) {
    // assignment vectors in lex order; keep surjections onto {0..max}
    std::vector<OrderedSetPartition> all;
    std::vector<int> assign(size_t(n), 0);
    while (true) {
        int mx = 0;
        for (int a : assign) mx = std::max(mx, a);
        std::vector<char> hit(size_t(mx + 1), 0);
        for (int a : assign) hit[size_t(a)] = 1;
        if (std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; }))
            all.push_back(OrderedSetPartition::from_assignment(assign));
        int i = n - 1;
        while (i >= 0 && assign[size_t(i)] == n - 1) assign[size_t(i--)] = 0;
        if (i < 0) break;
        ++assign[size_t(i)];
    }
    return all;
}

FiniteAbelianGroup FiniteAbelianGroup::from_factors(std::vector<long> raw) {
    // split into prime powers, then rebuild the invariant-factor chain
    std::map<long, std::vector<long>> powers;  // prime -> prime-power parts, one per factor
    for (long f : raw) {
        if (f < 1) fail(ErrorCode::InvalidArgument, "group factors must be positive");
        long v = f;
        for (long q = 2; q * q <= v; ++q)
            if (v % q == 0) {
                long pw = 1;
                while (v % q == 0) {
                    v /= q;
                    pw *= q;
                }
                powers[q].push_back(pw);
            }
        if (v > 1) powers[v].push_back(v);
    }
    size_t depth = 0;
    for (auto& [q, list] : powers) {
        std::sort(list.begin(), list.end(), std::greater<long>());
        depth = std::max(depth, list.size());
    }
    std::vector<long> inv(depth, 1);
    for (auto& [q, list] : powers)
        for (size_t i = 0; i < list.size(); ++i) inv[i] *= list[i];
    std::sort(inv.begin(), inv.end());  // ascending: m_1 | m_2 | …
    FiniteAbelianGroup g;
    g.factors = std::move(inv);
    return g;
}

FiniteAbelianGroup FiniteAbelianGroup::parse(const std::string& text) {
    std::vector<long> raw;
    std::string cur;
    for (char c : text + "x") {
        if (c == 'x' || c == 'X' || c == '*') {
            if (cur.empty()) fail(ErrorCode::InvalidArgument, "bad group spec: " + text);
            raw.push_back(std::stol(cur));
            cur.clear();
        } else if (c >= '0' && c <= '9') {
            cur.push_back(c);
        } else {
            fail(ErrorCode::InvalidArgument, "bad group spec: " + text);
        }
    }
    std::vector<long> nontrivial;
    for (long f : raw)
        if (f > 1) nontrivial.push_back(f);
    return from_factors(std::move(nontrivial));
}

long FiniteAbelianGroup::order() const {
    long o = 1;
    for (long f : factors) o *= f;
    return o;
}

long FiniteAbelianGroup::exponent() const { return factors.empty() ? 1 : factors.back(); }

std::vector<long> FiniteAbelianGroup::tuple(long index) const {
    std::vector<long> t(factors.size());
    for (size_t i = factors.size(); i-- > 0;) {
        t[i] = index % factors[i];
        index /= factors[i];
    }
    return t;
}

long FiniteAbelianGroup::index(const std::vector<long>& t) const {
    long idx = 0;
    for (size_t i = 0; i < factors.size(); ++i) idx = idx * factors[i] + t[i];
    return idx;
}

long FiniteAbelianGroup::add(long a, long b) const {
    std::vector<long> ta = tuple(a), tb = tuple(b);
    for (size_t i = 0; i < factors.size(); ++i) ta[i] = (ta[i] + tb[i]) % factors[i];
    return index(ta);
}

long FiniteAbelianGroup::neg(long a) const {
    std::vector<long> t = tuple(a);
    for (size_t i = 0; i < factors.size(); ++i) t[i] = (factors[i] - t[i]) % factors[i];
    return index(t);
}

std::string FiniteAbelianGroup::to_string() const {
    if (factors.empty()) return "1";
    std::ostringstream os;
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i) os << 'x';
        os << factors[i];
    }
    return os.str();
}

bool is_prime(long v) {
    if (v < 2) return false;
    for (long q = 2; q * q <= v; ++q)
        if (v % q == 0) return false;
    return true;
}

long splitting_prime(const FiniteAbelianGroup& g, long min_value) {
    if (min_value < 2) fail(ErrorCode::InvalidArgument, "minimum must be at least 2");
    long e = g.exponent();
    long o = g.order();
    constexpr long kCap = 100000000;
    for (long p = min_value; p < kCap; ++p) {
        if (!is_prime(p)) continue;
        if (p % e != 1 % e) continue;
        if (o % p == 0) continue;
        return p;
    }
    fail(ErrorCode::SearchExhausted, "no splitting prime below the scan cap");
}

u32 smallest_primitive_root(u64 p) {
    if (p == 2) return 1;
    std::vector<u64> primes;
    u64 v = p - 1;
    for (u64 q = 2; q * q <= v; ++q)
        if (v % q == 0) {
            primes.push_back(q);
            while (v % q == 0) v /= q;
        }
    if (v > 1) primes.push_back(v);
    for (u32 r = 2; r < p; ++r) {
        bool ok = true;
        for (u64 q : primes)
            if (fp_pow(p, r, (p - 1) / q) == 1) {
                ok = false;
                break;
            }
        if (ok) return r;
    }
    fail(ErrorCode::BadPrime, "no primitive root found (p not prime?)");
}

u32 DualGroup::value(long char_idx, long elem_idx) const {
    const auto& ch = chars[size_t(char_idx)];
    std::vector<long> g = group.tuple(elem_idx);
    long e = group.exponent();
    long acc = 0;
    for (size_t i = 0; i < group.factors.size(); ++i) {
        long step = e / group.factors[i];
        acc = (acc + ch.exps[i] * g[i] % e * step) % e;
    }
    return fp_pow(p, root, u64(acc));
}

long DualGroup::product(long c1, long c2) const {
    std::vector<long> e(group.factors.size());
    for (size_t i = 0; i < group.factors.size(); ++i)
        e[i] = (chars[size_t(c1)].exps[i] + chars[size_t(c2)].exps[i]) % group.factors[i];
    return group.index(e);
}

DualGroup dual_group(const FiniteAbelianGroup& g, u64 p) {
    if (!is_prime(long(p))) fail(ErrorCode::BadPrime, "characteristic must be prime");
    long e = g.exponent();
    if ((p - 1) % u64(e) != 0)
        fail(ErrorCode::BadPrime, "p must be 1 mod the exponent of the group");
    if (g.order() % long(p) == 0) fail(ErrorCode::BadPrime, "p divides the group order");
    DualGroup d;
    d.group = g;
    d.p = p;
    u32 r = smallest_primitive_root(p);
    d.root = fp_pow(p, r, (p - 1) / u64(e));
    long n = g.order();
    d.chars.resize(size_t(n));
    for (long c = 0; c < n; ++c) d.chars[size_t(c)].exps = g.tuple(c);
    return d;
}

int HsiaoInstance::partition_of(int element) const {
    auto it = std::upper_bound(offset.begin(), offset.end(), long(element));
    return int(it - offset.begin()) - 1;
}

std::vector<long> HsiaoInstance::labels_of(int element) const {
    int pi = partition_of(element);
    long rest = element - offset[size_t(pi)];
    size_t nb = partitions[size_t(pi)].blocks.size();
    std::vector<long> labels(nb, 0);
    long go = group.order();
    for (size_t b = nb; b-- > 0;) {
        labels[b] = rest % go;
        rest /= go;
    }
    return labels;
}

int HsiaoInstance::encode(int p_idx, const std::vector<long>& labels) const {
    long idx = offset[size_t(p_idx)];
    long rank = 0;
    for (long l : labels) rank = rank * group.order() + l;
    return int(idx + rank);
}

HsiaoInstance build_hsiao(int n, const FiniteAbelianGroup& group) {
    if (n < 1 || n > 6) fail(ErrorCode::SizeLimit, "ground set size must be between 1 and 6");
    HsiaoInstance inst;
    inst.n = n;
    inst.group = group;
    inst.partitions = enumerate_ordered_set_partitions(n);

    const long go = group.order();
    long total = 0;
    inst.offset.reserve(inst.partitions.size());
    for (const auto& p : inst.partitions) {
        inst.offset.push_back(total);
        long fiber = 1;
        for (size_t b = 0; b < p.blocks.size(); ++b) fiber *= go;
        total += fiber;
        if (total > 20000) fail(ErrorCode::SizeLimit, "ordered G-partition monoid too large");
    }
    const int N = int(total);

    // per-partition data: assignments and index lookup
    std::map<std::vector<int>, int> part_index;
    std::vector<std::vector<int>> assign(inst.partitions.size());
    for (size_t i = 0; i < inst.partitions.size(); ++i) {
        assign[i] = inst.partitions[i].assignment();
        part_index[assign[i]] = int(i);
    }

    // per-element: partition index + per-position group label
    std::vector<int> part_of(static_cast<size_t>(N));
    std::vector<std::vector<long>> pos_label(static_cast<size_t>(N), std::vector<long>(static_cast<size_t>(n), 0));
    for (size_t pi = 0; pi < inst.partitions.size(); ++pi) {
        size_t nb = inst.partitions[pi].blocks.size();
        long fiber = 1;
        for (size_t b = 0; b < nb; ++b) fiber *= go;
        for (long r = 0; r < fiber; ++r) {
            int el = int(inst.offset[pi] + r);
            part_of[size_t(el)] = int(pi);
            long rest = r;
            std::vector<long> labels(nb, 0);
            for (size_t b = nb; b-- > 0;) {
                labels[b] = rest % go;
                rest /= go;
            }
            for (int pos = 0; pos < n; ++pos)
                pos_label[size_t(el)][size_t(pos)] = labels[size_t(assign[pi][size_t(pos)])];
        }
    }

    std::vector<std::uint16_t> tab(size_t(N) * size_t(N));
    std::vector<std::pair<int, int>> pairs(static_cast<size_t>(n));
    std::vector<int> passign(static_cast<size_t>(n));
    for (int a = 0; a < N; ++a) {
        const auto& aa = assign[size_t(part_of[size_t(a)])];
        for (int b = 0; b < N; ++b) {
            const auto& ba = assign[size_t(part_of[size_t(b)])];
            // product partition: blocks are the nonempty (i, j) intersections in lex order
            for (int pos = 0; pos < n; ++pos)
                pairs[size_t(pos)] = {aa[size_t(pos)], ba[size_t(pos)]};
            std::vector<std::pair<int, int>> distinct = pairs;
            std::sort(distinct.begin(), distinct.end());
            distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
            for (int pos = 0; pos < n; ++pos)
                passign[size_t(pos)] = int(std::lower_bound(distinct.begin(), distinct.end(),
                                                            pairs[size_t(pos)]) -
                                           distinct.begin());
            int p_idx = part_index.at(passign);
            // labels multiply pointwise; constant on the refined blocks
            size_t nb = inst.partitions[size_t(p_idx)].blocks.size();
            std::vector<long> labels(nb, 0);
            for (size_t blk = 0; blk < nb; ++blk) {
                int member = inst.partitions[size_t(p_idx)].blocks[blk][0];
                labels[blk] = group.add(pos_label[size_t(a)][size_t(member)],
                                        pos_label[size_t(b)][size_t(member)]);
            }
            tab[size_t(a) * size_t(N) + size_t(b)] = std::uint16_t(inst.encode(p_idx, labels));
        }
    }
    inst.monoid = FiniteMonoid::from_table(N, /*identity=*/0, std::move(tab),
                                           /*trusted=*/N > FiniteMonoid::kExhaustiveLimit);
    return inst;
}

FiniteMonoid build_sigma_n(int n) {
    if (n < 1 || n > 6) fail(ErrorCode::SizeLimit, "ground set size must be between 1 and 6");
    return build_hsiao(n, FiniteAbelianGroup{}).monoid;
}

FiniteMonoid build_cyclic_group(long modulus) {
    if (modulus < 1 || modulus > 20000) fail(ErrorCode::SizeLimit, "bad cyclic group order");
    int N = int(modulus);
    std::vector<std::uint16_t> tab(size_t(N) * size_t(N));
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) tab[size_t(a) * size_t(N) + size_t(b)] = std::uint16_t((a + b) % N);
    return FiniteMonoid::from_table(N, 0, std::move(tab), /*trusted=*/N > FiniteMonoid::kExhaustiveLimit);
}

}  // namespace duorep
