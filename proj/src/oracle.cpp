#include "duorep/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace duorep {

namespace {

FpVec left_mul_vec(const FiniteMonoid& m, u64 p, int a, const FpVec& v) {
    FpVec out(v.size(), 0);
    for (size_t k = 0; k < v.size(); ++k)
        if (v[k]) {
            size_t t = size_t(m.mul(a, int(k)));
            out[t] = fp_add(p, out[t], v[k]);
        }
    return out;
}

FpVec dense_mul(const FiniteMonoid& m, u64 p, const FpVec& u, const FpVec& v) {
    FpVec out(u.size(), 0);
    for (size_t a = 0; a < u.size(); ++a) {
        if (!u[a]) continue;
        for (size_t b = 0; b < v.size(); ++b) {
            if (!v[b]) continue;
            size_t t = size_t(m.mul(int(a), int(b)));
            out[t] = fp_add(p, out[t], fp_mul(p, u[a], v[b]));
        }
    }
    return out;
}

}  // namespace

FpMat ModuleKM::act(u64 p, const AlgebraElement& a) const {
    FpMat out(dim, dim, p);
    for (auto [e, c] : a.terms) {
        const FpMat& am = action[size_t(e)];
        for (long i = 0; i < dim; ++i)
            for (long j = 0; j < dim; ++j)
                if (am.at(i, j)) out.at(i, j) = fp_add(p, out.at(i, j), fp_mul(p, c, am.at(i, j)));
    }
    return out;
}

ModuleKM simple_module(const RepContext& ctx, int label) {
    ModuleKM mod;
    mod.dim = 1;
    mod.action.reserve(size_t(ctx.M().size()));
    for (int m = 0; m < ctx.M().size(); ++m) {
        FpMat a(1, 1, ctx.p);
        a.at(0, 0) = ctx.lambda[size_t(label)][size_t(m)];
        mod.action.push_back(std::move(a));
    }
    return mod;
}

ModuleKM direct_sum(u64 p, const std::vector<const ModuleKM*>& parts) {
    ModuleKM out;
    for (const ModuleKM* part : parts) out.dim += part->dim;
    size_t nm = parts.empty() ? 0 : parts[0]->action.size();
    out.action.reserve(nm);
    for (size_t m = 0; m < nm; ++m) {
        FpMat a(out.dim, out.dim, p);
        long off = 0;
        for (const ModuleKM* part : parts) {
            const FpMat& pm = part->action[m];
            for (long i = 0; i < part->dim; ++i)
                for (long j = 0; j < part->dim; ++j) a.at(off + i, off + j) = pm.at(i, j);
            off += part->dim;
        }
        out.action.push_back(std::move(a));
    }
    return out;
}

bool equivariant(const RepContext& ctx, const ModuleKM& src, const ModuleKM& dst, const FpMat& f) {
    for (int m = 0; m < ctx.M().size(); ++m)
        if (!(dst.action[size_t(m)].mul(f) == f.mul(src.action[size_t(m)]))) return false;
    return true;
}

RadicalInfo radical(const RepContext& ctx, bool verify_nilpotency) {
    const int n = ctx.M().size();
    const int nl = ctx.label_count();
    const u64 p = ctx.p;

    // functionals must be multiplicative; this makes the joint kernel an ideal
    for (int l = 0; l < nl; ++l) {
        const FpVec& lam = ctx.lambda[size_t(l)];
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (lam[size_t(ctx.M().mul(a, b))] != fp_mul(p, lam[size_t(a)], lam[size_t(b)]))
                    fail(ErrorCode::CrossCheckFailed, "simple functional is not multiplicative");
    }

    FpMat lambda_mat(nl, n, p);
    for (int l = 0; l < nl; ++l) lambda_mat.set_row(l, ctx.lambda[size_t(l)]);
    if (lambda_mat.rank() != nl)
        fail(ErrorCode::CrossCheckFailed, "simple functionals are linearly dependent");

    RadicalInfo info;
    FpMat kernel = lambda_mat.kernel_basis();
    if (kernel.rows != n - nl)
        fail(ErrorCode::CrossCheckFailed, "radical dimension mismatch");
    for (long i = 0; i < kernel.rows; ++i) info.basis.push_back(kernel.row(i));

    {
        Echelon sq(p, n);
        for (const FpVec& u : info.basis)
            for (const FpVec& r : info.basis) sq.insert(dense_mul(ctx.M(), p, u, r));
        info.square_basis = sq.rows;
    }

    if (verify_nilpotency) {
        int bound = ctx.lattice.lattice_rank() + 1;  // rad^{rank+1} = 0
        std::vector<FpVec> cur = info.basis;
        int k = 1;
        while (!cur.empty()) {
            if (k >= bound)
                fail(ErrorCode::CrossCheckFailed, "radical power does not vanish within the rank bound");
            if (k == 1) {
                cur = info.square_basis;
            } else {
                Echelon next(p, n);
                for (const FpVec& u : cur)
                    for (const FpVec& r : info.basis) next.insert(dense_mul(ctx.M(), p, u, r));
                cur = next.rows;
            }
            ++k;
        }
        info.nilpotency_index = k;
    }
    return info;
}

long ext1_oracle(const RepContext& ctx, const RadicalInfo& rad, int source, int target) {
    const u64 p = ctx.p;
    const int n = ctx.M().size();
    FpVec gv = alg_dense(ctx.gamma[size_t(source)], n);
    FpVec gw = alg_dense(ctx.gamma[size_t(target)], n);
    Echelon top(p, n), square(p, n);
    for (const FpVec& r : rad.basis)
        top.insert(dense_mul(ctx.M(), p, dense_mul(ctx.M(), p, gw, r), gv));
    for (const FpVec& u : rad.square_basis)
        square.insert(dense_mul(ctx.M(), p, dense_mul(ctx.M(), p, gw, u), gv));
    return top.rank() - square.rank();
}

namespace {

ProjectiveModule build_projective(const RepContext& ctx, int label) {
    const u64 p = ctx.p;
    const int n = ctx.M().size();
    const SimpleLabel& lab = ctx.labels.labels[size_t(label)];
    ProjectiveModule proj;
    proj.label = label;
    FpVec gamma = alg_dense(ctx.gamma[size_t(label)], n);
    for (int e : ctx.band)
        if (ctx.lattice.sigma[size_t(e)] == lab.apex) {
            proj.band_basis.push_back(e);
            proj.vectors.push_back(left_mul_vec(ctx.M(), p, e, gamma));
        }
    BasisSolver solver(p, proj.vectors);
    proj.mod.dim = long(proj.vectors.size());
    proj.mod.action.reserve(size_t(n));
    for (int m = 0; m < n; ++m) {
        FpMat a(proj.mod.dim, proj.mod.dim, p);
        for (long j = 0; j < proj.mod.dim; ++j) {
            FpVec img = left_mul_vec(ctx.M(), p, m, proj.vectors[size_t(j)]);
            auto coeffs = solver.solve(std::move(img));
            if (!coeffs)
                fail(ErrorCode::CrossCheckFailed, "projective module basis is not invariant");
            for (long i = 0; i < proj.mod.dim; ++i) a.at(i, j) = (*coeffs)[size_t(i)];
        }
        proj.mod.action.push_back(std::move(a));
    }
    return proj;
}

}  // namespace

OracleContext build_oracle_context(const RepContext& ctx, bool verify_nilpotency) {
    OracleContext oc;
    oc.rep = &ctx;
    oc.rad = radical(ctx, verify_nilpotency);
    oc.projectives.reserve(size_t(ctx.label_count()));
    for (int l = 0; l < ctx.label_count(); ++l) oc.projectives.push_back(build_projective(ctx, l));
    return oc;
}

namespace {

// Action matrices of the radical basis on a module, as column generators of rad·P.
std::vector<FpVec> radical_columns(const OracleContext& oc, const ModuleKM& mod) {
    const RepContext& ctx = oc.ctx();
    std::vector<FpVec> cols;
    for (const FpVec& r : oc.rad.basis) {
        // act(r) columns, assembled from the per-element action
        FpMat acc(mod.dim, mod.dim, ctx.p);
        for (size_t e = 0; e < r.size(); ++e) {
            if (!r[e]) continue;
            const FpMat& am = mod.action[e];
            for (long i = 0; i < mod.dim; ++i)
                for (long j = 0; j < mod.dim; ++j)
                    if (am.at(i, j))
                        acc.at(i, j) = fp_add(ctx.p, acc.at(i, j), fp_mul(ctx.p, r[e], am.at(i, j)));
        }
        for (long j = 0; j < mod.dim; ++j) {
            FpVec col(size_t(mod.dim));
            for (long i = 0; i < mod.dim; ++i) col[size_t(i)] = acc.at(i, j);
            cols.push_back(std::move(col));
        }
    }
    return cols;
}

struct CoverStep {
    std::vector<int> labels;        // summand labels, grouped by label ascending
    std::vector<FpVec> generators;  // lift vectors inside the covered module
    std::vector<long> multiplicities;
};

// Projective cover data of the submodule spanned by K inside mod.
CoverStep top_cover(const OracleContext& oc, const ModuleKM& mod, const std::vector<FpVec>& K) {
    const RepContext& ctx = oc.ctx();
    const u64 p = ctx.p;
    const int n = ctx.M().size();
    CoverStep step;
    step.multiplicities.assign(size_t(ctx.label_count()), 0);
    if (K.empty()) return step;

    // act_on_k[m][j] = action(m) * k_j
    std::vector<std::vector<FpVec>> act_on_k(static_cast<size_t>(n));
    for (int m = 0; m < n; ++m) {
        act_on_k[size_t(m)].reserve(K.size());
        for (const FpVec& k : K) act_on_k[size_t(m)].push_back(mod.action[size_t(m)].apply(k));
    }
    auto act_alg = [&](const AlgebraElement& a, size_t j) {
        FpVec out(size_t(mod.dim), 0);
        for (auto [e, c] : a.terms) {
            const FpVec& w = act_on_k[size_t(e)][j];
            for (long i = 0; i < mod.dim; ++i)
                out[size_t(i)] = fp_add(p, out[size_t(i)], fp_mul(p, c, w[size_t(i)]));
        }
        return out;
    };

    Echelon rad_k(p, mod.dim);
    for (const FpVec& r : oc.rad.basis)
        for (size_t j = 0; j < K.size(); ++j) {
            FpVec out(size_t(mod.dim), 0);
            for (size_t e = 0; e < r.size(); ++e) {
                if (!r[e]) continue;
                const FpVec& w = act_on_k[e][j];
                for (long i = 0; i < mod.dim; ++i)
                    out[size_t(i)] = fp_add(p, out[size_t(i)], fp_mul(p, r[e], w[size_t(i)]));
            }
            rad_k.insert(std::move(out));
        }
    long rad_rank = rad_k.rank();

    Echelon k_span(p, mod.dim);
    for (const FpVec& k : K) k_span.insert(k);
    long top_dim = k_span.rank() - rad_rank;

    for (int l = 0; l < ctx.label_count(); ++l) {
        Echelon ech = rad_k;  // seed with rad·K
        for (size_t j = 0; j < K.size(); ++j) {
            FpVec u = act_alg(ctx.gamma[size_t(l)], j);
            if (ech.insert(u)) {
                step.labels.push_back(l);
                step.generators.push_back(std::move(u));
                ++step.multiplicities[size_t(l)];
            }
        }
    }
    long total = 0;
    for (long m : step.multiplicities) total += m;
    if (total != top_dim)
        fail(ErrorCode::CrossCheckFailed, "top multiplicities do not decompose the top");
    return step;
}

}  // namespace

Resolution minimal_resolution(const OracleContext& oc, int label, int max_len) {
    const RepContext& ctx = oc.ctx();
    const u64 p = ctx.p;
    Resolution res;
    res.target_label = label;

    res.summands.push_back({label});
    res.modules.push_back(oc.projectives[size_t(label)].mod);
    res.dims.push_back(res.modules[0].dim);
    res.maps.emplace_back();
    {
        std::vector<long> t0(size_t(ctx.label_count()), 0);
        t0[size_t(label)] = 1;
        res.top_multiplicities.push_back(std::move(t0));
    }
    res.augmentation = FpMat(1, res.dims[0], p);
    for (long j = 0; j < res.dims[0]; ++j)
        res.augmentation.at(0, j) =
            ctx.lambda[size_t(label)][size_t(oc.projectives[size_t(label)].band_basis[size_t(j)])];

    FpMat kernel = res.augmentation.kernel_basis();
    std::vector<FpVec> K;
    for (long i = 0; i < kernel.rows; ++i) K.push_back(kernel.row(i));

    int q = 0;
    while (!K.empty()) {
        ++q;
        if (q > max_len) fail(ErrorCode::LengthExceeded, "no zero syzygy within the length bound");
        const ModuleKM& prev = res.modules.back();
        CoverStep step = top_cover(oc, prev, K);
        if (step.labels.empty())
            fail(ErrorCode::CrossCheckFailed, "nonzero syzygy with zero top");

        std::vector<const ModuleKM*> parts;
        for (int l : step.labels) parts.push_back(&oc.projectives[size_t(l)].mod);
        ModuleKM pq = direct_sum(p, parts);

        FpMat d(prev.dim, pq.dim, p);
        long col = 0;
        for (size_t t = 0; t < step.labels.size(); ++t) {
            const ProjectiveModule& proj = oc.projectives[size_t(step.labels[t])];
            for (size_t j = 0; j < proj.band_basis.size(); ++j) {
                FpVec img = prev.action[size_t(proj.band_basis[j])].apply(step.generators[t]);
                for (long i = 0; i < prev.dim; ++i) d.at(i, col) = img[size_t(i)];
                ++col;
            }
        }

        // exactness: the new map covers the syzygy exactly
        Echelon k_span(p, prev.dim);
        for (const FpVec& k : K) k_span.insert(k);
        if (d.rank() != k_span.rank())
            fail(ErrorCode::CrossCheckFailed, "cover map does not span the syzygy");
        if (!equivariant(ctx, pq, prev, d))
            fail(ErrorCode::CrossCheckFailed, "cover map is not equivariant");
        // minimality: image lies inside rad·P_{q-1}
        Echelon rad_p(p, prev.dim);
        for (FpVec& c : radical_columns(oc, prev)) rad_p.insert(std::move(c));
        for (long j = 0; j < pq.dim; ++j) {
            FpVec colv(size_t(prev.dim));
            for (long i = 0; i < prev.dim; ++i) colv[size_t(i)] = d.at(i, j);
            if (!rad_p.contains(colv))
                fail(ErrorCode::MinimalityViolation, "cover image escapes the radical");
        }

        res.summands.push_back(step.labels);
        res.top_multiplicities.push_back(step.multiplicities);
        res.dims.push_back(pq.dim);
        res.modules.push_back(std::move(pq));
        res.maps.push_back(d);

        FpMat next_kernel = d.kernel_basis();
        K.clear();
        for (long i = 0; i < next_kernel.rows; ++i) K.push_back(next_kernel.row(i));
    }
    return res;
}

namespace {

void verify_exactness(const Resolution& res) {
    int top = res.length();
    for (int qd = 0; qd <= top; ++qd) {
        long rank_here = (qd == 0) ? res.augmentation.rank() : res.maps[size_t(qd)].rank();
        long rank_next = (qd + 1 <= top) ? res.maps[size_t(qd) + 1].rank() : 0;
        if (res.dims[size_t(qd)] != rank_here + rank_next)
            fail(ErrorCode::CrossCheckFailed, "resolution is not exact");
    }
    if (res.augmentation.rank() != 1)
        fail(ErrorCode::CrossCheckFailed, "augmentation is not surjective");
}

// Hom(P, S_label) as row vectors.
std::vector<FpVec> hom_basis(const RepContext& ctx, const ModuleKM& mod, int label) {
    const u64 p = ctx.p;
    const int n = ctx.M().size();
    if (mod.dim == 0) return {};
    FpMat stacked(long(n) * mod.dim, mod.dim, p);
    for (int m = 0; m < n; ++m) {
        u32 lam = ctx.lambda[size_t(label)][size_t(m)];
        const FpMat& a = mod.action[size_t(m)];
        for (long i = 0; i < mod.dim; ++i)
            for (long j = 0; j < mod.dim; ++j) {
                u32 v = a.at(j, i);  // transpose
                if (i == j) v = fp_sub(p, v, lam);
                stacked.at(long(m) * mod.dim + i, j) = v;
            }
    }
    FpMat kernel = stacked.kernel_basis();
    std::vector<FpVec> rows;
    for (long i = 0; i < kernel.rows; ++i) rows.push_back(kernel.row(i));
    return rows;
}

FpVec row_times(const FpMat& m, const FpVec& row, u64 p) {
    FpVec out(size_t(m.cols), 0);
    for (long i = 0; i < m.rows; ++i) {
        if (!row[size_t(i)]) continue;
        for (long j = 0; j < m.cols; ++j)
            if (m.at(i, j))
                out[size_t(j)] = fp_add(p, out[size_t(j)], fp_mul(p, row[size_t(i)], m.at(i, j)));
    }
    return out;
}

}  // namespace

std::vector<std::vector<long>> hom_dims_to_simples(const RepContext& ctx, const Resolution& res) {
    std::vector<std::vector<long>> out;
    for (const ModuleKM& mod : res.modules) {
        std::vector<long> row;
        for (int l = 0; l < ctx.label_count(); ++l) row.push_back(long(hom_basis(ctx, mod, l).size()));
        out.push_back(std::move(row));
    }
    return out;
}

std::vector<std::vector<long>> ext_dims_from_resolution(const RepContext& ctx,
                                                        const Resolution& res) {
    const u64 p = ctx.p;
    int top = res.length();
    std::vector<std::vector<long>> out(size_t(top) + 1,
                                       std::vector<long>(size_t(ctx.label_count()), 0));
    for (int l = 0; l < ctx.label_count(); ++l) {
        std::vector<std::vector<FpVec>> hom(size_t(top) + 1);
        for (int qd = 0; qd <= top; ++qd) hom[size_t(qd)] = hom_basis(ctx, res.modules[size_t(qd)], l);
        std::vector<long> cob_rank(size_t(top) + 1, 0);  // rank of δ: Hom(P_q) -> Hom(P_{q+1})
        for (int qd = 0; qd < top; ++qd) {
            Echelon ech(p, res.dims[size_t(qd) + 1]);
            for (const FpVec& phi : hom[size_t(qd)])
                ech.insert(row_times(res.maps[size_t(qd) + 1], phi, p));
            cob_rank[size_t(qd)] = ech.rank();
        }
        for (int qd = 0; qd <= top; ++qd) {
            long kernel = long(hom[size_t(qd)].size()) - cob_rank[size_t(qd)];
            long image = qd > 0 ? cob_rank[size_t(qd) - 1] : 0;
            out[size_t(qd)][size_t(l)] = kernel - image;
        }
    }
    return out;
}

bool verify_projective(const OracleContext& oc, const ModuleKM& mod) {
    const RepContext& ctx = oc.ctx();
    const u64 p = ctx.p;
    if (mod.dim == 0) return true;
    std::vector<FpVec> full;
    for (long i = 0; i < mod.dim; ++i) {
        FpVec e(size_t(mod.dim), 0);
        e[size_t(i)] = 1;
        full.push_back(std::move(e));
    }
    CoverStep step = top_cover(oc, mod, full);
    long cover_dim = 0;
    for (size_t t = 0; t < step.labels.size(); ++t)
        cover_dim += oc.projectives[size_t(step.labels[t])].mod.dim;
    if (cover_dim != mod.dim) return false;
    FpMat d(mod.dim, cover_dim, p);
    long col = 0;
    for (size_t t = 0; t < step.labels.size(); ++t) {
        const ProjectiveModule& proj = oc.projectives[size_t(step.labels[t])];
        for (size_t j = 0; j < proj.band_basis.size(); ++j) {
            FpVec img = mod.action[size_t(proj.band_basis[j])].apply(step.generators[t]);
            for (long i = 0; i < mod.dim; ++i) d.at(i, col) = img[size_t(i)];
            ++col;
        }
    }
    return d.rank() == mod.dim;
}

Resolution order_complex_resolution(const OracleContext& oc, int label) {
    const RepContext& ctx = oc.ctx();
    const FiniteMonoid& mon = ctx.M();
    const u64 p = ctx.p;
    const int n = mon.size();
    const int apex = ctx.labels.labels[size_t(label)].apex;

    std::vector<int> carrier;
    for (int e : ctx.band)
        if (ctx.lattice.le(apex, ctx.lattice.sigma[size_t(e)])) carrier.push_back(e);
    const int nc = int(carrier.size());
    std::vector<int> carrier_pos(size_t(n), -1);
    for (int i = 0; i < nc; ++i) carrier_pos[size_t(carrier[size_t(i)])] = i;

    std::vector<char> leq(size_t(nc) * size_t(nc), 0);
    for (int a = 0; a < nc; ++a)
        for (int b = 0; b < nc; ++b)
            leq[size_t(a) * size_t(nc) + size_t(b)] =
                (mon.mul(carrier[size_t(b)], carrier[size_t(a)]) == carrier[size_t(a)]) ? 1 : 0;
    FinitePoset poset = FinitePoset::from_leq(nc, std::move(leq));
    SimplicialComplex complex = order_complex(poset);

    int top = complex.dim();
    std::vector<std::map<std::vector<int>, long>> face_index(size_t(top) + 1);
    for (int d = 0; d <= top; ++d)
        for (size_t i = 0; i < complex.faces[size_t(d)].size(); ++i)
            face_index[size_t(d)][complex.faces[size_t(d)][i]] = long(i);

    Resolution res;
    res.target_label = label;
    for (int d = 0; d <= top; ++d) {
        ModuleKM mod;
        mod.dim = complex.face_count(d);
        mod.action.reserve(size_t(n));
        for (int m = 0; m < n; ++m) {
            FpMat a(mod.dim, mod.dim, p);
            if (ctx.lattice.le(apex, ctx.lattice.sigma[size_t(m)])) {
                u32 scalar = ctx.lambda[size_t(label)][size_t(m)];
                int md = ctx.daggers[size_t(m)];
                std::vector<int> vmap(static_cast<size_t>(nc));
                for (int i = 0; i < nc; ++i) {
                    int conj = mon.mul(mon.mul(m, carrier[size_t(i)]), md);
                    int pos = carrier_pos[size_t(conj)];
                    if (pos < 0)
                        fail(ErrorCode::CrossCheckFailed, "conjugation left the contraction band");
                    vmap[size_t(i)] = pos;
                }
                for (size_t j = 0; j < complex.faces[size_t(d)].size(); ++j) {
                    const auto& face = complex.faces[size_t(d)][j];
                    std::vector<int> image;
                    image.reserve(face.size());
                    for (int v : face) image.push_back(vmap[size_t(v)]);
                    // sign = parity of the id-sort; degenerate images die
                    long inversions = 0;
                    bool degenerate = false;
                    for (size_t x = 0; x < image.size() && !degenerate; ++x)
                        for (size_t y = x + 1; y < image.size(); ++y) {
                            if (image[x] == image[y]) {
                                degenerate = true;
                                break;
                            }
                            if (image[x] > image[y]) ++inversions;
                        }
                    if (degenerate) continue;
                    std::vector<int> sorted = image;
                    std::sort(sorted.begin(), sorted.end());
                    long target = face_index[size_t(d)].at(sorted);
                    u32 val = (inversions % 2 == 0) ? scalar : fp_neg(p, scalar);
                    a.at(target, long(j)) = val;
                }
            }
            mod.action.push_back(std::move(a));
        }
        res.modules.push_back(std::move(mod));
        res.dims.push_back(complex.face_count(d));
    }

    res.maps.emplace_back();
    for (int d = 1; d <= top; ++d) res.maps.push_back(simplicial_boundary(complex, d, p));
    res.augmentation = FpMat(1, res.dims[0], p);
    for (long j = 0; j < res.dims[0]; ++j) res.augmentation.at(0, j) = 1;

    // equivariance of every map, including the augmentation
    ModuleKM target = simple_module(ctx, label);
    if (!equivariant(ctx, res.modules[0], target, res.augmentation))
        fail(ErrorCode::CrossCheckFailed, "augmentation is not equivariant");
    for (int d = 1; d <= top; ++d)
        if (!equivariant(ctx, res.modules[size_t(d)], res.modules[size_t(d) - 1],
                         res.maps[size_t(d)]))
            fail(ErrorCode::CrossCheckFailed, "order-complex boundary is not equivariant");
    verify_exactness(res);
    return res;
}

Resolution minimal_cellular_resolution(const OracleContext& oc, int label) {
    const RepContext& ctx = oc.ctx();
    const FiniteMonoid& mon = ctx.M();
    const u64 p = ctx.p;
    const int n = mon.size();
    const int apex = ctx.labels.labels[size_t(label)].apex;

    std::vector<int> carrier;
    for (int e : ctx.band)
        if (ctx.lattice.le(apex, ctx.lattice.sigma[size_t(e)])) carrier.push_back(e);
    const int nc = int(carrier.size());
    std::vector<int> carrier_pos(size_t(n), -1);
    for (int i = 0; i < nc; ++i) carrier_pos[size_t(carrier[size_t(i)])] = i;

    std::vector<char> leq(size_t(nc) * size_t(nc), 0);
    for (int a = 0; a < nc; ++a)
        for (int b = 0; b < nc; ++b)
            leq[size_t(a) * size_t(nc) + size_t(b)] =
                (mon.mul(carrier[size_t(b)], carrier[size_t(a)]) == carrier[size_t(a)]) ? 1 : 0;
    FinitePoset poset = FinitePoset::from_leq(nc, std::move(leq));
    CellStructure cells = cellular_chain_complex(poset, p);
    const int top = int(cells.cells_by_rank.size()) - 1;

    // signed chain maps of the band action, degree by degree
    std::map<int, std::vector<FpMat>> band_action;  // band element -> per-degree matrix
    for (int b = 0; b < nc; ++b) {
        int belt = carrier[size_t(b)];
        std::vector<int> nodemap(static_cast<size_t>(nc));
        for (int i = 0; i < nc; ++i)
            nodemap[size_t(i)] = carrier_pos[size_t(mon.mul(belt, carrier[size_t(i)]))];
        std::vector<FpMat> mats;
        for (int d = 0; d <= top; ++d) {
            long dim_d = long(cells.cells_by_rank[size_t(d)].size());
            FpMat a(dim_d, dim_d, p);
            for (long j = 0; j < dim_d; ++j) {
                int cell = cells.cells_by_rank[size_t(d)][size_t(j)];
                int image = nodemap[size_t(cell)];
                if (cells.rank[size_t(image)] < d) continue;  // cell collapses
                long jj = cells.cell_pos[size_t(d)][size_t(image)];
                if (d == 0) {
                    a.at(jj, j) = 1;
                    continue;
                }
                // transported sign: make the boundary square commute
                FpVec bd_col(size_t(cells.complex.dims[size_t(d) - 1]));
                FpVec bd_img(size_t(cells.complex.dims[size_t(d) - 1]));
                for (long i = 0; i < cells.complex.dims[size_t(d) - 1]; ++i) {
                    bd_col[size_t(i)] = cells.complex.boundary[size_t(d)].at(i, j);
                    bd_img[size_t(i)] = cells.complex.boundary[size_t(d)].at(i, jj);
                }
                FpVec lhs = mats[size_t(d) - 1].apply(bd_col);
                long pivot = -1;
                for (long i = 0; i < long(bd_img.size()); ++i)
                    if (bd_img[size_t(i)]) {
                        pivot = i;
                        break;
                    }
                if (pivot < 0)
                    fail(ErrorCode::NoConsistentSigns, "image cell has empty boundary");
                u32 s = fp_mul(p, lhs[size_t(pivot)], fp_inv(p, bd_img[size_t(pivot)]));
                if (s != 1 % p && s != p - 1)
                    fail(ErrorCode::NoConsistentSigns, "cellular action sign is not a unit sign");
                for (long i = 0; i < long(bd_img.size()); ++i)
                    if (fp_mul(p, s, bd_img[size_t(i)]) != lhs[size_t(i)])
                        fail(ErrorCode::NoConsistentSigns, "boundary square does not commute");
                a.at(jj, j) = s;
            }
            mats.push_back(std::move(a));
        }
        band_action[belt] = std::move(mats);
    }
    // the chain maps must compose like the band does
    for (int a = 0; a < nc; ++a)
        for (int b = 0; b < nc; ++b) {
            int ab = mon.mul(carrier[size_t(a)], carrier[size_t(b)]);
            for (int d = 0; d <= top; ++d)
                if (!(band_action.at(carrier[size_t(a)])[size_t(d)]
                          .mul(band_action.at(carrier[size_t(b)])[size_t(d)]) ==
                      band_action.at(ab)[size_t(d)]))
                    fail(ErrorCode::NoConsistentSigns, "cellular action is not multiplicative");
        }

    Resolution res;
    res.target_label = label;
    for (int d = 0; d <= top; ++d) {
        ModuleKM mod;
        mod.dim = cells.complex.dims[size_t(d)];
        mod.action.reserve(size_t(n));
        for (int m = 0; m < n; ++m) {
            if (!ctx.lattice.le(apex, ctx.lattice.sigma[size_t(m)])) {
                mod.action.emplace_back(mod.dim, mod.dim, p);
                continue;
            }
            u32 scalar = ctx.lambda[size_t(label)][size_t(m)];
            FpMat a = band_action.at(mon.omega(m))[size_t(d)];
            for (auto& x : a.a) x = fp_mul(p, x, scalar);
            mod.action.push_back(std::move(a));
        }
        res.modules.push_back(std::move(mod));
        res.dims.push_back(cells.complex.dims[size_t(d)]);
    }
    res.maps.emplace_back();
    for (int d = 1; d <= top; ++d) res.maps.push_back(cells.complex.boundary[size_t(d)]);
    res.augmentation = FpMat(1, res.dims[0], p);
    for (long j = 0; j < res.dims[0]; ++j) res.augmentation.at(0, j) = 1;

    ModuleKM target = simple_module(ctx, label);
    if (!equivariant(ctx, res.modules[0], target, res.augmentation))
        fail(ErrorCode::CrossCheckFailed, "cellular augmentation is not equivariant");
    for (int d = 1; d <= top; ++d)
        if (!equivariant(ctx, res.modules[size_t(d)], res.modules[size_t(d) - 1],
                         res.maps[size_t(d)]))
            fail(ErrorCode::CrossCheckFailed, "cellular boundary is not equivariant");
    verify_exactness(res);

    // zero-coboundary minimality for every simple target
    for (int l = 0; l < ctx.label_count(); ++l)
        for (int d = 0; d < res.length(); ++d)
            for (const FpVec& phi : hom_basis(ctx, res.modules[size_t(d)], l)) {
                FpVec image = row_times(res.maps[size_t(d) + 1], phi, p);
                if (!vec_is_zero(image))
                    fail(ErrorCode::MinimalityViolation, "coboundary is nonzero on a simple");
            }

    res.top_multiplicities = hom_dims_to_simples(ctx, res);
    return res;
}

PresentationReport presentation_dimension_check(const OracleContext& oc) {
    const RepContext& ctx = oc.ctx();
    const u64 p = ctx.p;
    const int nl = ctx.label_count();
    PresentationReport rep;
    rep.monoid_order = ctx.M().size();

    auto covers = ctx.labels.covers();
    std::vector<Relation> relations = quiver_relations(ctx);
    std::vector<std::vector<int>> ups(static_cast<size_t>(nl));
    for (auto [lo, hi] : covers) ups[size_t(lo)].push_back(hi);
    for (auto& u : ups) std::sort(u.begin(), u.end());

    // all directed Hasse paths, by length
    std::vector<std::vector<std::vector<int>>> paths;
    paths.push_back({});
    for (int v = 0; v < nl; ++v) paths[0].push_back({v});
    while (true) {
        std::vector<std::vector<int>> next;
        for (const auto& path : paths.back())
            for (int w : ups[size_t(path.back())]) {
                auto longer = path;
                longer.push_back(w);
                next.push_back(std::move(longer));
            }
        if (next.empty()) break;
        paths.push_back(std::move(next));
    }
    int maxlen = int(paths.size()) - 1;
    std::vector<std::map<std::vector<int>, long>> path_index(size_t(maxlen) + 1);
    for (int d = 0; d <= maxlen; ++d)
        for (size_t i = 0; i < paths[size_t(d)].size(); ++i)
            path_index[size_t(d)][paths[size_t(d)][i]] = long(i);

    rep.degree_dims.assign(size_t(maxlen) + 1, 0);
    rep.degree_dims[0] = nl;
    if (maxlen >= 1) rep.degree_dims[1] = long(paths[1].size());

    // graded relation ideal: span of prefix · relation · suffix
    std::vector<std::vector<long>> cartan_path(size_t(nl), std::vector<long>(size_t(nl), 0));
    for (int v = 0; v < nl; ++v) cartan_path[size_t(v)][size_t(v)] += 1;
    for (const auto& path : (maxlen >= 1 ? paths[1] : std::vector<std::vector<int>>{}))
        cartan_path[size_t(path.front())][size_t(path.back())] += 1;

    for (int d = 2; d <= maxlen; ++d) {
        Echelon span(p, long(paths[size_t(d)].size()));
        for (const Relation& r : relations) {
            for (const auto& pre : paths) {
                // prefix ends at the relation source
                for (const auto& beta : pre) {
                    if (beta.back() != r.source) continue;
                    int i = int(beta.size()) - 1;
                    int j = d - 2 - i;
                    if (j < 0 || j > maxlen) continue;
                    for (const auto& alpha : paths[size_t(j)]) {
                        if (alpha.front() != r.target) continue;
                        FpVec row(paths[size_t(d)].size(), 0);
                        for (int z : r.mids) {
                            std::vector<int> seq = beta;
                            seq.push_back(z);
                            seq.insert(seq.end(), alpha.begin(), alpha.end());
                            row[size_t(path_index[size_t(d)].at(seq))] =
                                fp_add(p, row[size_t(path_index[size_t(d)].at(seq))], 1);
                        }
                        span.insert(std::move(row));
                    }
                }
            }
        }
        rep.degree_dims[size_t(d)] = long(paths[size_t(d)].size()) - span.rank();

        // per-endpoint block ranks for the Cartan comparison
        for (int v = 0; v < nl; ++v)
            for (int w = 0; w < nl; ++w) {
                std::vector<long> block;
                for (size_t i = 0; i < paths[size_t(d)].size(); ++i)
                    if (paths[size_t(d)][i].front() == v && paths[size_t(d)][i].back() == w)
                        block.push_back(long(i));
                if (block.empty()) continue;
                Echelon bspan(p, long(block.size()));
                for (const FpVec& row : span.rows) {
                    FpVec sub(block.size(), 0);
                    bool outside = false;
                    for (size_t bi = 0; bi < block.size(); ++bi) sub[bi] = row[size_t(block[bi])];
                    // rows are endpoint-homogeneous; skip rows living elsewhere
                    if (vec_is_zero(sub)) {
                        for (size_t ri = 0; ri < row.size(); ++ri)
                            if (row[ri]) {
                                outside = true;
                                break;
                            }
                        if (outside) continue;
                    }
                    bspan.insert(std::move(sub));
                }
                cartan_path[size_t(v)][size_t(w)] += long(block.size()) - bspan.rank();
            }
    }
    rep.path_algebra_dim = 0;
    for (long dd : rep.degree_dims) rep.path_algebra_dim += dd;
    rep.dims_equal = rep.path_algebra_dim == rep.monoid_order;

    // Cartan matrix straight from the algebra: dim γ_w KM γ_v
    rep.cartan_equal = true;
    const int n = ctx.M().size();
    for (int v = 0; v < nl && rep.cartan_equal; ++v) {
        FpVec gv = alg_dense(ctx.gamma[size_t(v)], n);
        for (int w = 0; w < nl; ++w) {
            FpVec gw = alg_dense(ctx.gamma[size_t(w)], n);
            Echelon ech(p, n);
            for (int m = 0; m < n; ++m) {
                FpVec mv = left_mul_vec(ctx.M(), p, m, gv);
                ech.insert(dense_mul(ctx.M(), p, gw, mv));
            }
            if (ech.rank() != cartan_path[size_t(v)][size_t(w)]) {
                rep.cartan_equal = false;
                break;
            }
        }
    }
    return rep;
}

}  // namespace duorep
