#include "duorep/poset.hpp"

#include <algorithm>
#include <numeric>

namespace duorep {

FinitePoset FinitePoset::from_leq(int n, std::vector<char> leq) {
    if (long(leq.size()) != long(n) * long(n)) fail(ErrorCode::InvalidArgument, "leq size");
    FinitePoset p;
    p.n = n;
    p.rel = std::move(leq);
    for (int a = 0; a < n; ++a) {
        if (!p.le(a, a)) fail(ErrorCode::InvalidArgument, "leq not reflexive");
        for (int b = 0; b < n; ++b) {
            if (a != b && p.le(a, b) && p.le(b, a))
                fail(ErrorCode::InvalidArgument, "leq not antisymmetric");
            if (!p.le(a, b)) continue;
            for (int c = 0; c < n; ++c)
                if (p.le(b, c) && !p.le(a, c)) fail(ErrorCode::InvalidArgument, "leq not transitive");
        }
    }
    return p;
}

FinitePoset FinitePoset::from_covers(int n, const std::vector<std::pair<int, int>>& covers) {
    std::vector<char> leq(size_t(n) * size_t(n), 0);
    for (int a = 0; a < n; ++a) leq[size_t(a) * size_t(n) + size_t(a)] = 1;
    for (auto [lo, hi] : covers) {
        if (lo < 0 || hi < 0 || lo >= n || hi >= n || lo == hi)
            fail(ErrorCode::InvalidArgument, "bad cover pair");
        leq[size_t(lo) * size_t(n) + size_t(hi)] = 1;
    }
    // Floyd-Warshall style closure
    for (int k = 0; k < n; ++k)
        for (int a = 0; a < n; ++a)
            if (leq[size_t(a) * size_t(n) + size_t(k)])
                for (int b = 0; b < n; ++b)
                    if (leq[size_t(k) * size_t(n) + size_t(b)]) leq[size_t(a) * size_t(n) + size_t(b)] = 1;
    return from_leq(n, std::move(leq));
}

std::vector<std::pair<int, int>> FinitePoset::covers() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!lt(a, b)) continue;
            bool direct = true;
            for (int z = 0; z < n; ++z)
                if (lt(a, z) && lt(z, b)) {
                    direct = false;
                    break;
                }
            if (direct) out.emplace_back(a, b);
        }
    return out;
}

std::vector<int> FinitePoset::below(int p) const {
    std::vector<int> out;
    for (int q = 0; q < n; ++q)
        if (lt(q, p)) out.push_back(q);
    return out;
}

std::optional<std::vector<int>> FinitePoset::grading() const {
    std::vector<int> rank(size_t(n), 0);
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        int da = 0, db = 0;
        for (int z = 0; z < n; ++z) {
            da += lt(z, a);
            db += lt(z, b);
        }
        return da < db;
    });
    auto cov = covers();
    for (int x : order)
        for (auto [lo, hi] : cov)
            if (hi == x) rank[size_t(x)] = std::max(rank[size_t(x)], rank[size_t(lo)] + 1);
    for (auto [lo, hi] : cov)
        if (rank[size_t(hi)] != rank[size_t(lo)] + 1) return std::nullopt;
    return rank;
}

FinitePoset FinitePoset::induced(const std::vector<int>& nodes) const {
    int k = int(nodes.size());
    std::vector<char> leq(size_t(k) * size_t(k), 0);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            leq[size_t(a) * size_t(k) + size_t(b)] = le(nodes[size_t(a)], nodes[size_t(b)]) ? 1 : 0;
    return from_leq(k, std::move(leq));
}

SimplicialComplex SimplicialComplex::from_facets(int vertices,
                                                 std::vector<std::vector<int>> facets) {
    SimplicialComplex c;
    c.vertices = vertices;
    std::vector<std::vector<std::vector<int>>> byd;
    for (auto& f : facets) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        for (int v : f)
            if (v < 0 || v >= vertices) fail(ErrorCode::InvalidArgument, "facet vertex out of range");
        if (f.empty()) continue;
        // enumerate all nonempty subsets
        int k = int(f.size());
        for (unsigned mask = 1; mask < (1u << k); ++mask) {
            std::vector<int> face;
            for (int i = 0; i < k; ++i)
                if (mask & (1u << i)) face.push_back(f[size_t(i)]);
            size_t d = face.size() - 1;
            if (byd.size() <= d) byd.resize(d + 1);
            byd[d].push_back(std::move(face));
        }
    }
    for (auto& level : byd) {
        std::sort(level.begin(), level.end());
        level.erase(std::unique(level.begin(), level.end()), level.end());
    }
    c.faces = std::move(byd);
    return c;
}

SimplicialComplex order_complex(const FinitePoset& p) {
    SimplicialComplex c;
    c.vertices = p.n;
    if (p.n == 0) return c;
    c.faces.resize(1);
    for (int v = 0; v < p.n; ++v) c.faces[0].push_back({v});
    // extend chains by poset-larger elements; store faces sorted by node id
    std::vector<std::vector<int>> frontier = c.faces[0];  // chains as poset-increasing lists
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& chain : frontier) {
            int last = chain.back();
            for (int z = 0; z < p.n; ++z)
                if (p.lt(last, z)) {
                    auto longer = chain;
                    longer.push_back(z);
                    next.push_back(std::move(longer));
                }
        }
        if (next.empty()) break;
        std::vector<std::vector<int>> sorted_faces;
        sorted_faces.reserve(next.size());
        for (auto chain : next) {
            std::sort(chain.begin(), chain.end());
            sorted_faces.push_back(std::move(chain));
        }
        std::sort(sorted_faces.begin(), sorted_faces.end());
        c.faces.push_back(std::move(sorted_faces));
        frontier = std::move(next);
    }
    return c;
}

FpMat simplicial_boundary(const SimplicialComplex& c, int d, u64 p) {
    // rows: (d-1)-faces, cols: d-faces
    const auto& lower = c.faces[size_t(d - 1)];
    const auto& upper = c.faces[size_t(d)];
    std::map<std::vector<int>, long> row_of;
    for (size_t i = 0; i < lower.size(); ++i) row_of[lower[i]] = long(i);
    FpMat m(long(lower.size()), long(upper.size()), p);
    for (size_t j = 0; j < upper.size(); ++j) {
        const auto& face = upper[j];
        for (size_t k = 0; k < face.size(); ++k) {
            std::vector<int> sub;
            sub.reserve(face.size() - 1);
            for (size_t t = 0; t < face.size(); ++t)
                if (t != k) sub.push_back(face[t]);
            long r = row_of.at(sub);
            u32 sign = (k % 2 == 0) ? 1 : fp_neg(p, 1);
            m.at(r, long(j)) = fp_add(p, m.at(r, long(j)), sign);
        }
    }
    return m;
}

BettiNumbers reduced_betti(const SimplicialComplex& c, u64 p) {
    BettiNumbers bt;
    if (c.empty()) {
        bt.minus_one = 1;
        return bt;
    }
    int top = c.dim();
    std::vector<long> rank_d(size_t(top) + 2, 0);  // rank_d[q] = rank ∂_q, with ∂_0 = augmentation
    rank_d[0] = 1;                                 // augmentation onto F_p (nonempty complex)
    for (int d = 1; d <= top; ++d) rank_d[size_t(d)] = simplicial_boundary(c, d, p).rank();
    bt.minus_one = 1 - rank_d[0];
    bt.b.assign(size_t(top) + 1, 0);
    for (int q = 0; q <= top; ++q) {
        long dim_q = c.face_count(q);
        long next = (q + 1 <= top) ? rank_d[size_t(q) + 1] : 0;
        bt.b[size_t(q)] = dim_q - rank_d[size_t(q)] - next;
    }
    return bt;
}

bool is_sphere_pattern(const BettiNumbers& bt, int d) {
    if (bt.at(d) != 1) return false;
    if (d != -1 && bt.minus_one != 0) return false;
    for (size_t q = 0; q < bt.b.size(); ++q)
        if (int(q) != d && bt.b[q] != 0) return false;
    return true;
}

BoundarySubposet boundary_subposet(const FiniteMonoid& m, const SupportLattice& lat, int f,
                                   int node) {
    if (!m.is_idempotent(f)) fail(ErrorCode::NotIdempotent, "boundary subposet needs an idempotent");
    if (!lat.le(node, lat.sigma[size_t(f)]))
        fail(ErrorCode::ApexMismatch, "support of f does not dominate the node");
    BoundarySubposet out;
    for (int e : m.idempotents()) {
        if (e == f) continue;
        if (m.mul(f, e) != e) continue;  // e in fB, i.e. e <= f in the band
        if (!lat.le(node, lat.sigma[size_t(e)])) continue;
        out.carrier.push_back(e);
    }
    int k = int(out.carrier.size());
    std::vector<char> leq(size_t(k) * size_t(k), 0);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            leq[size_t(a) * size_t(k) + size_t(b)] =
                (m.mul(out.carrier[size_t(b)], out.carrier[size_t(a)]) == out.carrier[size_t(a)]) ? 1
                                                                                                  : 0;
    out.poset = FinitePoset::from_leq(k, std::move(leq));
    return out;
}

bool is_cw_poset(const FinitePoset& p) {
    auto grading = p.grading();
    if (!grading) return false;
    const auto& rank = *grading;
    for (int x = 0; x < p.n; ++x) {
        int r = rank[size_t(x)];
        if (r < 1) continue;
        auto strictly_below = p.below(x);
        SimplicialComplex below_complex = order_complex(p.induced(strictly_below));
        BettiNumbers bt = reduced_betti(below_complex, 2);
        if (!is_sphere_pattern(bt, r - 1)) return false;
        // Euler characteristic cross-check from raw face counts
        long euler = 0;
        for (int d = 0; d <= below_complex.dim(); ++d)
            euler += (d % 2 == 0 ? 1 : -1) * below_complex.face_count(d);
        long expected = 1 + ((r - 1) % 2 == 0 ? 1 : -1);
        if (euler != expected) return false;
    }
    return true;
}

IncidenceNumbers incidence_numbers(const FinitePoset& p) {
    if (!is_cw_poset(p)) fail(ErrorCode::NotCW, "incidence numbers need a CW poset");
    auto grading = p.grading();
    const auto& rank = *grading;

    IncidenceNumbers out;
    out.covers = p.covers();
    std::map<std::pair<int, int>, int> var;  // (upper, lower) -> variable id
    for (size_t i = 0; i < out.covers.size(); ++i)
        var[{out.covers[i].second, out.covers[i].first}] = int(i);
    const int nvar = int(out.covers.size());

    // GF(2) constraints: rows of variable bitmasks with parity 1.
    std::vector<std::vector<char>> constraint_rows;
    auto add_constraint = [&](const std::vector<int>& vars) {
        std::vector<char> row(size_t(nvar) + 1, 0);
        for (int v : vars) row[size_t(v)] ^= 1;
        row[size_t(nvar)] = 1;
        constraint_rows.push_back(std::move(row));
    };

    for (int q = 0; q < p.n; ++q) {
        if (rank[size_t(q)] == 1) {
            // virtual-bottom diamond: the two endpoints of a rank-1 cell
            auto ends = p.below(q);
            if (ends.size() != 2)
                fail(ErrorCode::DiamondViolation, "rank-1 cell without exactly two endpoints");
            add_constraint({var.at({q, ends[0]}), var.at({q, ends[1]})});
        }
        for (int lo = 0; lo < p.n; ++lo) {
            if (!p.lt(lo, q) || rank[size_t(q)] - rank[size_t(lo)] != 2) continue;
            std::vector<int> mids;
            for (int z = 0; z < p.n; ++z)
                if (p.lt(lo, z) && p.lt(z, q)) mids.push_back(z);
            if (mids.size() != 2)
                fail(ErrorCode::DiamondViolation, "rank-2 interval without exactly two intermediates");
            add_constraint({var.at({q, mids[0]}), var.at({mids[0], lo}), var.at({q, mids[1]}),
                            var.at({mids[1], lo})});
        }
    }

    // GF(2) elimination, free variables set to 0 (sign +1)
    std::vector<int> pivot_row(size_t(nvar), -1);
    size_t used = 0;
    for (auto& row : constraint_rows) {
        for (int v = 0; v < nvar; ++v) {
            if (!row[size_t(v)]) continue;
            if (pivot_row[size_t(v)] >= 0) {
                const auto& other = constraint_rows[size_t(pivot_row[size_t(v)])];
                for (size_t j = 0; j <= size_t(nvar); ++j) row[j] ^= other[j];
            }
        }
        bool zero = true;
        int lead = -1;
        for (int v = 0; v < nvar; ++v)
            if (row[size_t(v)]) {
                zero = false;
                lead = v;
                break;
            }
        if (zero) {
            if (row[size_t(nvar)])
                fail(ErrorCode::NoConsistentSigns, "diamond parity system is infeasible");
            continue;
        }
        pivot_row[size_t(lead)] = int(&row - constraint_rows.data());
        ++used;
    }
    (void)used;
    std::vector<char> value(size_t(nvar), 0);
    // back substitution in reverse variable order
    for (int v = nvar - 1; v >= 0; --v) {
        int r = pivot_row[size_t(v)];
        if (r < 0) continue;  // free -> 0
        const auto& row = constraint_rows[size_t(r)];
        char acc = row[size_t(nvar)];
        for (int w = v + 1; w < nvar; ++w)
            if (row[size_t(w)]) acc ^= value[size_t(w)];
        value[size_t(v)] = acc;
    }
    for (size_t i = 0; i < out.covers.size(); ++i)
        out.sign[{out.covers[i].second, out.covers[i].first}] = value[i] ? -1 : 1;

    // verify every constraint before handing the signs out
    for (int q = 0; q < p.n; ++q) {
        if (rank[size_t(q)] == 1) {
            auto ends = p.below(q);
            if (out.sign.at({q, ends[0]}) * out.sign.at({q, ends[1]}) != -1)
                fail(ErrorCode::NoConsistentSigns, "endpoint signs do not cancel");
        }
        for (int lo = 0; lo < p.n; ++lo) {
            if (!p.lt(lo, q) || rank[size_t(q)] - rank[size_t(lo)] != 2) continue;
            std::vector<int> mids;
            for (int z = 0; z < p.n; ++z)
                if (p.lt(lo, z) && p.lt(z, q)) mids.push_back(z);
            int total = out.sign.at({q, mids[0]}) * out.sign.at({mids[0], lo}) +
                        out.sign.at({q, mids[1]}) * out.sign.at({mids[1], lo});
            if (total != 0) fail(ErrorCode::NoConsistentSigns, "diamond signs do not cancel");
        }
    }
    return out;
}

ChainComplex ChainComplex::create(u64 p, std::vector<long> dims, std::vector<FpMat> boundary) {
    ChainComplex c;
    c.p = p;
    c.dims = std::move(dims);
    c.boundary = std::move(boundary);
    if (c.boundary.size() != c.dims.size())
        fail(ErrorCode::InvalidArgument, "chain complex shape mismatch");
    for (size_t d = 1; d < c.dims.size(); ++d) {
        if (c.boundary[d].rows != c.dims[d - 1] || c.boundary[d].cols != c.dims[d])
            fail(ErrorCode::InvalidArgument, "boundary matrix shape mismatch");
        if (d + 1 < c.dims.size() && !c.boundary[d].mul(c.boundary[d + 1]).is_zero())
            fail(ErrorCode::InvalidArgument, "boundary squared is nonzero");
    }
    return c;
}

std::vector<long> ChainComplex::homology() const {
    std::vector<long> h(dims.size(), 0);
    std::vector<long> ranks(dims.size() + 1, 0);
    for (size_t d = 1; d < dims.size(); ++d) ranks[d] = boundary[d].rank();
    for (size_t d = 0; d < dims.size(); ++d) {
        long incoming = (d + 1 < dims.size()) ? ranks[d + 1] : 0;
        h[d] = dims[d] - ranks[d] - incoming;
    }
    return h;
}

CellStructure cellular_chain_complex(const FinitePoset& p, u64 prime) {
    CellStructure cs;
    cs.inc = incidence_numbers(p);
    auto grading = p.grading();
    cs.rank = *grading;
    int top = 0;
    for (int x = 0; x < p.n; ++x) top = std::max(top, cs.rank[size_t(x)]);
    cs.cells_by_rank.assign(size_t(top) + 1, {});
    for (int x = 0; x < p.n; ++x) cs.cells_by_rank[size_t(cs.rank[size_t(x)])].push_back(x);
    cs.cell_pos.assign(size_t(top) + 1, std::vector<int>(size_t(p.n), -1));
    std::vector<long> dims(size_t(top) + 1);
    for (int d = 0; d <= top; ++d) {
        dims[size_t(d)] = long(cs.cells_by_rank[size_t(d)].size());
        for (size_t i = 0; i < cs.cells_by_rank[size_t(d)].size(); ++i)
            cs.cell_pos[size_t(d)][size_t(cs.cells_by_rank[size_t(d)][i])] = int(i);
    }
    std::vector<FpMat> boundary(size_t(top) + 1);
    for (int d = 1; d <= top; ++d) {
        FpMat m(dims[size_t(d) - 1], dims[size_t(d)], prime);
        for (auto [lo, hi] : cs.inc.covers) {
            if (cs.rank[size_t(hi)] != d) continue;
            int sgn = cs.inc.sign.at({hi, lo});
            m.at(cs.cell_pos[size_t(d) - 1][size_t(lo)], cs.cell_pos[size_t(d)][size_t(hi)]) =
                sgn > 0 ? 1 : fp_neg(prime, 1);
        }
        boundary[size_t(d)] = std::move(m);
    }
    cs.complex = ChainComplex::create(prime, std::move(dims), std::move(boundary));
    return cs;
}

}  // namespace duorep
