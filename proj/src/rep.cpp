#include "duorep/rep.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "duorep/hsiao.hpp"

namespace duorep {

u32 AlgebraElement::coeff(int element) const {
    auto it = std::lower_bound(terms.begin(), terms.end(), element,
                               [](const std::pair<int, u32>& t, int e) { return t.first < e; });
    if (it == terms.end() || it->first != element) return 0;
    return it->second;
}

AlgebraElement alg_unit(int element, u32 coeff) {
    AlgebraElement a;
    if (coeff) a.terms.emplace_back(element, coeff);
    return a;
}

static AlgebraElement merge(u64 p, const AlgebraElement& a, const AlgebraElement& b, bool subtract) {
    AlgebraElement out;
    size_t i = 0, j = 0;
    while (i < a.terms.size() || j < b.terms.size()) {
        if (j == b.terms.size() || (i < a.terms.size() && a.terms[i].first < b.terms[j].first)) {
            out.terms.push_back(a.terms[i++]);
        } else if (i == a.terms.size() || b.terms[j].first < a.terms[i].first) {
            u32 c = subtract ? fp_neg(p, b.terms[j].second) : b.terms[j].second;
            if (c) out.terms.emplace_back(b.terms[j].first, c);
            ++j;
        } else {
            u32 c = subtract ? fp_sub(p, a.terms[i].second, b.terms[j].second)
                             : fp_add(p, a.terms[i].second, b.terms[j].second);
            if (c) out.terms.emplace_back(a.terms[i].first, c);
            ++i;
            ++j;
        }
    }
    return out;
}

AlgebraElement alg_add(u64 p, const AlgebraElement& a, const AlgebraElement& b) {
    return merge(p, a, b, false);
}

AlgebraElement alg_sub(u64 p, const AlgebraElement& a, const AlgebraElement& b) {
    return merge(p, a, b, true);
}

AlgebraElement alg_scale(u64 p, u32 c, const AlgebraElement& a) {
    AlgebraElement out;
    if (!c) return out;
    for (auto [e, x] : a.terms) {
        u32 v = fp_mul(p, c, x);
        if (v) out.terms.emplace_back(e, v);
    }
    return out;
}

AlgebraElement alg_mul(const FiniteMonoid& m, u64 p, const AlgebraElement& a,
                       const AlgebraElement& b) {
    std::map<int, u32> acc;
    for (auto [ea, ca] : a.terms)
        for (auto [eb, cb] : b.terms) {
            int e = m.mul(ea, eb);
            u32& slot = acc[e];
            slot = fp_add(p, slot, fp_mul(p, ca, cb));
        }
    AlgebraElement out;
    for (auto [e, c] : acc)
        if (c) out.terms.emplace_back(e, c);
    return out;
}

FpVec alg_dense(const AlgebraElement& a, int n) {
    FpVec v(size_t(n), 0);
    for (auto [e, c] : a.terms) v[size_t(e)] = c;
    return v;
}

std::vector<GroupCharacter> subgroup_characters(const FiniteMonoid& m, const MaximalSubgroup& g,
                                                u64 p) {
    const long n = long(g.members.size());
    if (n % long(p) == 0) fail(ErrorCode::BadCharacteristic, "p divides a fiber order");
    // element order within the subgroup
    std::vector<int> posmul(size_t(n) * size_t(n));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            int prod = m.mul(g.members[size_t(i)], g.members[size_t(j)]);
            int pp = g.pos(prod);
            if (pp < 0) fail(ErrorCode::InvalidTable, "subgroup not closed");
            posmul[size_t(i) * size_t(n) + size_t(j)] = pp;
        }
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            if (posmul[size_t(i) * size_t(n) + size_t(j)] != posmul[size_t(j) * size_t(n) + size_t(i)])
                fail(ErrorCode::NonAbelianFiber, "maximal subgroup is not abelian");

    auto order_of = [&](long x) {
        long o = 1;
        long cur = x;
        while (cur != g.identity_pos) {
            cur = posmul[size_t(cur) * size_t(n) + size_t(x)];
            ++o;
        }
        return o;
    };

    // greedy generating set by ascending member position
    std::vector<long> gens;
    std::vector<char> generated(size_t(n), 0);
    generated[size_t(g.identity_pos)] = 1;
    for (long x = 0; x < n; ++x) {
        if (generated[size_t(x)]) continue;
        gens.push_back(x);
        std::vector<char> extended(size_t(n), 0);
        for (long y = 0; y < n; ++y) {
            if (!generated[size_t(y)]) continue;
            long cur = y;
            do {
                extended[size_t(cur)] = 1;
                cur = posmul[size_t(cur) * size_t(n) + size_t(x)];
            } while (cur != y);
        }
        generated = std::move(extended);
    }

    std::vector<long> gen_order(gens.size());
    for (size_t i = 0; i < gens.size(); ++i) {
        gen_order[i] = order_of(gens[i]);
        if ((p - 1) % u64(gen_order[i]) != 0)
            fail(ErrorCode::BadCharacteristic, "p is not a splitting prime for a fiber");
    }
    u32 root = smallest_primitive_root(p);

    // candidate root-of-unity values on generators, propagated over the
    // Cayley graph; kept when globally multiplicative
    std::vector<GroupCharacter> chars;
    std::vector<long> digits(gens.size(), 0);
    while (true) {
        std::vector<u32> gen_val(gens.size());
        for (size_t gi = 0; gi < gens.size(); ++gi)
            gen_val[gi] = fp_pow(p, root, (p - 1) / u64(gen_order[gi]) * u64(digits[gi]));
        std::vector<u32> val(size_t(n), 0);
        val[size_t(g.identity_pos)] = 1;
        std::vector<long> queue{g.identity_pos};
        bool ok = true;
        for (size_t qi = 0; qi < queue.size() && ok; ++qi) {
            long cur = queue[qi];
            for (size_t gi = 0; gi < gens.size(); ++gi) {
                long nxt = posmul[size_t(cur) * size_t(n) + size_t(gens[gi])];
                u32 expected = fp_mul(p, val[size_t(cur)], gen_val[gi]);
                if (val[size_t(nxt)] == 0) {
                    val[size_t(nxt)] = expected;
                    queue.push_back(nxt);
                } else if (val[size_t(nxt)] != expected) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok && long(queue.size()) == n) {
            bool hom = true;
            for (long i = 0; i < n && hom; ++i)
                for (long j = 0; j < n; ++j)
                    if (val[size_t(posmul[size_t(i) * size_t(n) + size_t(j)])] !=
                        fp_mul(p, val[size_t(i)], val[size_t(j)])) {
                        hom = false;
                        break;
                    }
            if (hom) chars.push_back(GroupCharacter{std::move(val)});
        }
        // next digit tuple
        size_t k = gens.size();
        while (k > 0 && digits[k - 1] == gen_order[k - 1] - 1) digits[--k] = 0;
        if (k == 0) break;
        ++digits[k - 1];
    }

    std::sort(chars.begin(), chars.end(),
              [](const GroupCharacter& a, const GroupCharacter& b) { return a.values < b.values; });
    chars.erase(std::unique(chars.begin(), chars.end()), chars.end());
    if (long(chars.size()) != n)
        fail(ErrorCode::NonAbelianFiber, "character count does not match the fiber order");
    return chars;
}

AlgebraElement character_idempotent(const MaximalSubgroup& g, const GroupCharacter& chi, u64 p) {
    const long n = long(g.members.size());
    if (n % long(p) == 0) fail(ErrorCode::BadCharacteristic, "p divides the group order");
    u32 inv_n = fp_inv(p, u32(u64(n) % p));
    AlgebraElement theta;
    for (long i = 0; i < n; ++i) {
        u32 c = fp_mul(p, inv_n, fp_inv(p, chi.values[size_t(i)]));
        theta.terms.emplace_back(g.members[size_t(i)], c);
    }
    return theta;  // members ascending, already sorted
}

std::vector<AlgebraElement> eta_idempotents(const FiniteMonoid& m, const SupportLattice& lat,
                                            u64 p) {
    std::vector<AlgebraElement> eta(size_t(lat.size));
    for (int x : lat.nodes_by_height()) {
        AlgebraElement ex = alg_unit(lat.representative[size_t(x)]);
        AlgebraElement acc = ex;
        for (int y = 0; y < lat.size; ++y) {
            if (y == x || !lat.le(y, x)) continue;
            acc = alg_sub(p, acc, alg_mul(m, p, ex, eta[size_t(y)]));
        }
        eta[size_t(x)] = std::move(acc);
    }
    // cheap structural guarantees: idempotent, unit coefficient, completeness
    AlgebraElement total;
    for (int x = 0; x < lat.size; ++x) {
        if (!(alg_mul(m, p, eta[size_t(x)], eta[size_t(x)]) == eta[size_t(x)]))
            fail(ErrorCode::InvalidTable, "eta is not idempotent");
        if (eta[size_t(x)].coeff(lat.representative[size_t(x)]) != 1 % p)
            fail(ErrorCode::InvalidTable, "eta has wrong unit coefficient");
        total = alg_add(p, total, eta[size_t(x)]);
    }
    if (!(total == alg_unit(m.identity())))
        fail(ErrorCode::InvalidTable, "eta family does not sum to 1");
    return eta;
}

int LabelPoset::index_of(const SimpleLabel& l) const {
    for (size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == l) return int(i);
    return -1;
}

std::vector<std::pair<int, int>> LabelPoset::covers() const {
    std::vector<std::pair<int, int>> out;
    int n = size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b || !le(a, b)) continue;
            bool direct = true;
            for (int z = 0; z < n && direct; ++z)
                if (z != a && z != b && le(a, z) && le(z, b)) direct = false;
            if (direct) out.emplace_back(a, b);
        }
    return out;
}

u32 RepContext::lambda_of(int label, const AlgebraElement& a) const {
    u64 acc = 0;
    const FpVec& lam = lambda[size_t(label)];
    for (auto [e, c] : a.terms) acc = (acc + u64(lam[size_t(e)]) * c) % p;
    return u32(acc);
}

u64 auto_prime(const FiniteMonoid& m, const SupportLattice& lat, u64 min_value) {
    long lcm = 1;
    long order_product = 1;
    for (int x = 0; x < lat.size; ++x) {
        MaximalSubgroup g = maximal_subgroup(m, lat.representative[size_t(x)]);
        long n = long(g.members.size());
        // exponent = lcm of member orders
        for (long i = 0; i < n; ++i) {
            long o = 1;
            int cur = g.members[size_t(i)];
            while (cur != g.idempotent) {
                cur = m.mul(cur, g.members[size_t(i)]);
                ++o;
            }
            lcm = std::lcm(lcm, o);
        }
        order_product *= n;
    }
    for (long cand = std::max<long>(2, long(min_value));; ++cand) {
        if (!is_prime(cand)) continue;
        if (cand % lcm != 1 % lcm) continue;
        if (order_product % cand == 0) continue;
        return u64(cand);
    }
}

FpVec simple_rep_values(const FiniteMonoid& m, const SupportLattice& lat,
                        const MaximalSubgroup& g, const GroupCharacter& chi, int node, u64 p) {
    FpVec lam(size_t(m.size()), 0);
    for (int x = 0; x < m.size(); ++x) {
        if (!lat.le(node, lat.sigma[size_t(x)])) continue;
        int ex = m.mul(g.idempotent, x);
        int pos = g.pos(ex);
        if (pos < 0) fail(ErrorCode::InvalidTable, "retraction left the maximal subgroup");
        lam[size_t(x)] = chi.values[size_t(pos)];
    }
    (void)p;
    return lam;
}

RepContext build_rep_context(const FiniteMonoid& m, u64 p) {
    RepContext ctx;
    ctx.monoid = m;
    ctx.p = p;
    ctx.axioms = check_axioms(m);
    if (!ctx.axioms.regular || !ctx.axioms.left_duo)
        fail(ErrorCode::NotApplicable, "character layer requires a regular left duo monoid");
    ctx.lattice = support_lattice(m);

    ctx.band = m.idempotents();
    ctx.band_position.assign(size_t(m.size()), -1);
    for (size_t i = 0; i < ctx.band.size(); ++i) ctx.band_position[size_t(ctx.band[i])] = int(i);

    ctx.daggers.resize(size_t(m.size()));
    for (int x = 0; x < m.size(); ++x) {
        int e = m.omega(x);
        int found = -1;
        for (int y = 0; y < m.size(); ++y)
            if (m.mul(x, y) == e && m.mul(y, x) == e && m.mul(e, y) == y && m.mul(y, e) == y) {
                found = y;
                break;
            }
        if (found < 0) fail(ErrorCode::NotRegularLeftDuo, "element has no fiber inverse");
        ctx.daggers[size_t(x)] = found;
    }

    const int k = ctx.lattice.size;
    ctx.subgroup.reserve(size_t(k));
    ctx.dual.resize(size_t(k));
    for (int x = 0; x < k; ++x) {
        ctx.subgroup.push_back(maximal_subgroup(m, ctx.lattice.representative[size_t(x)]));
        ctx.dual[size_t(x)] = subgroup_characters(m, ctx.subgroup[size_t(x)], p);
    }

    ctx.eta = eta_idempotents(m, ctx.lattice, p);

    // labels ordered by (apex node, character index)
    for (int x = 0; x < k; ++x)
        for (size_t c = 0; c < ctx.dual[size_t(x)].size(); ++c)
            ctx.labels.labels.push_back(SimpleLabel{x, int(c)});
    const int nl = ctx.labels.size();

    ctx.lambda.resize(size_t(nl));
    for (int l = 0; l < nl; ++l) {
        const SimpleLabel& lab = ctx.labels.labels[size_t(l)];
        ctx.lambda[size_t(l)] =
            simple_rep_values(m, ctx.lattice, ctx.subgroup[size_t(lab.apex)],
                              ctx.dual[size_t(lab.apex)][size_t(lab.character)], lab.apex, p);
    }

    // label order: (X,χ) <= (Y,θ) iff X <= Y and θ = χ∘ρ_X on G_Y
    ctx.labels.leq.assign(size_t(nl), std::vector<char>(size_t(nl), 0));
    for (int a = 0; a < nl; ++a)
        for (int b = 0; b < nl; ++b) {
            const SimpleLabel& la = ctx.labels.labels[size_t(a)];
            const SimpleLabel& lb = ctx.labels.labels[size_t(b)];
            if (!ctx.lattice.le(la.apex, lb.apex)) continue;
            const MaximalSubgroup& gb = ctx.subgroup[size_t(lb.apex)];
            const GroupCharacter& chi_a = ctx.dual[size_t(la.apex)][size_t(la.character)];
            const GroupCharacter& theta_b = ctx.dual[size_t(lb.apex)][size_t(lb.character)];
            const MaximalSubgroup& ga = ctx.subgroup[size_t(la.apex)];
            bool match = true;
            for (size_t gi = 0; gi < gb.members.size() && match; ++gi) {
                int g_el = gb.members[gi];
                int pos = ga.pos(m.mul(ga.idempotent, g_el));
                if (pos < 0 || theta_b.values[gi] != chi_a.values[size_t(pos)]) match = false;
            }
            if (match) ctx.labels.leq[size_t(a)][size_t(b)] = 1;
        }

    // global rank via longest chains (minimal labels at 0)
    ctx.labels.rank.assign(size_t(nl), 0);
    {
        std::vector<int> order(static_cast<size_t>(nl));
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return ctx.lattice.height[size_t(ctx.labels.labels[size_t(a)].apex)] <
                   ctx.lattice.height[size_t(ctx.labels.labels[size_t(b)].apex)];
        });
        for (int x : order)
            for (int y = 0; y < nl; ++y)
                if (y != x && ctx.labels.le(y, x))
                    ctx.labels.rank[size_t(x)] =
                        std::max(ctx.labels.rank[size_t(x)], ctx.labels.rank[size_t(y)] + 1);
    }

    // γ_{X,χ} = η_X θ_{X,χ} η_X; the band simplification η_X θ must agree
    ctx.gamma.resize(size_t(nl));
    AlgebraElement total;
    for (int l = 0; l < nl; ++l) {
        const SimpleLabel& lab = ctx.labels.labels[size_t(l)];
        AlgebraElement theta = character_idempotent(
            ctx.subgroup[size_t(lab.apex)], ctx.dual[size_t(lab.apex)][size_t(lab.character)], p);
        AlgebraElement full = alg_mul(
            m, p, alg_mul(m, p, ctx.eta[size_t(lab.apex)], theta), ctx.eta[size_t(lab.apex)]);
        if (ctx.axioms.lrb_of_groups) {
            AlgebraElement simplified = alg_mul(m, p, ctx.eta[size_t(lab.apex)], theta);
            if (!(simplified == full))
                fail(ErrorCode::InvalidTable, "gamma simplification mismatch");
        }
        ctx.gamma[size_t(l)] = std::move(full);
        total = alg_add(p, total, ctx.gamma[size_t(l)]);
    }
    if (!(total == alg_unit(m.identity())))
        fail(ErrorCode::InvalidTable, "gamma family does not sum to 1");
    for (int l = 0; l < nl; ++l)
        for (int l2 = 0; l2 < nl; ++l2)
            if (ctx.lambda_of(l2, ctx.gamma[size_t(l)]) != (l == l2 ? 1 % p : 0))
                fail(ErrorCode::InvalidTable, "lambda/gamma duality fails");
    return ctx;
}

}  // namespace duorep
