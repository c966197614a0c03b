#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "duorep/ext.hpp"
#include "duorep/hsiao.hpp"
#include "duorep/monoid.hpp"
#include "duorep/oracle.hpp"
#include "duorep/parallel.hpp"
#include "duorep/poset.hpp"
#include "duorep/rep.hpp"

using json = nlohmann::json;
using namespace duorep;

namespace {

struct MonoidSpec {
    std::string kind;   // sigma | hsiao | group_zmod | table path
    int n = 0;
    std::string group = "1";
};

struct LoadedMonoid {
    FiniteMonoid monoid;
    std::optional<HsiaoInstance> hsiao;  // set for the sigma/hsiao builtins
    std::string description;
};

LoadedMonoid load_monoid(const MonoidSpec& spec) {
    LoadedMonoid out{FiniteMonoid::from_table(1, 0, {0}), std::nullopt, ""};
    if (spec.kind == "sigma" || spec.kind == "sigma_n") {
        HsiaoInstance inst = build_hsiao(spec.n, FiniteAbelianGroup{});
        out.monoid = inst.monoid;
        out.hsiao = std::move(inst);
        out.description = "sigma_" + std::to_string(spec.n);
    } else if (spec.kind == "hsiao") {
        FiniteAbelianGroup g = FiniteAbelianGroup::parse(spec.group);
        HsiaoInstance inst = build_hsiao(spec.n, g);
        out.monoid = inst.monoid;
        out.hsiao = std::move(inst);
        out.description = "hsiao_" + std::to_string(spec.n) + "_" + g.to_string();
    } else if (spec.kind == "group_zmod" || spec.kind == "zmod") {
        out.monoid = build_cyclic_group(spec.n);
        out.description = "zmod_" + std::to_string(spec.n);
    } else {
        std::ifstream in(spec.kind);
        if (!in) fail(ErrorCode::InvalidArgument, "unknown builtin or unreadable table file: " + spec.kind);
        out.monoid = read_table(in);
        out.description = spec.kind;
    }
    return out;
}

u64 resolve_prime(const std::string& text, const FiniteMonoid& m, const SupportLattice& lat) {
    if (text == "auto") return auto_prime(m, lat);
    long v = std::stol(text);
    if (!is_prime(v)) fail(ErrorCode::BadPrime, "prime flag must name a prime or 'auto'");
    return u64(v);
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << '\n';
    } else {
        std::ofstream out(out_path);
        if (!out) fail(ErrorCode::InvalidArgument, "cannot open output file: " + out_path);
        out << j.dump(2) << '\n';
    }
}

json label_json(const RepContext& ctx, int l) {
    const SimpleLabel& lab = ctx.labels.labels[size_t(l)];
    return json{{"apex", lab.apex}, {"character", lab.character}, {"rank", ctx.labels.rank[size_t(l)]}};
}

json algebra_element_json(const AlgebraElement& a) {
    json support = json::array(), coeffs = json::array();
    for (auto [e, c] : a.terms) {
        support.push_back(e);
        coeffs.push_back(c);
    }
    return json{{"support", support}, {"coeffs", coeffs}};
}

int parse_label(const RepContext& ctx, const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) fail(ErrorCode::InvalidArgument, "label must look like APEX:CHAR");
    SimpleLabel lab{std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
    int idx = ctx.labels.index_of(lab);
    if (idx < 0) fail(ErrorCode::InvalidArgument, "no such simple label: " + text);
    return idx;
}

json ext_entries_json(const RepContext& ctx, const ExtTable& t) {
    json entries = json::array();
    for (int q = 0; q <= t.max_degree; ++q)
        for (int v = 0; v < ctx.label_count(); ++v)
            for (int w = 0; w < ctx.label_count(); ++w)
                if (t.at(q, v, w) != 0)
                    entries.push_back(
                        json{{"from", v}, {"to", w}, {"q", q}, {"dim", t.at(q, v, w)}});
    return entries;
}

std::string dot_vertex(const RepContext& ctx, int l) {
    const SimpleLabel& lab = ctx.labels.labels[size_t(l)];
    return "X" + std::to_string(lab.apex) + "|chi" + std::to_string(lab.character);
}

struct CrosscheckResult {
    json report;
    bool ok = true;
};

CrosscheckResult run_crosscheck(const LoadedMonoid& lm, u64 p, const std::string& level) {
    const FiniteMonoid& m = lm.monoid;
    CrosscheckResult res;
    json checks = json::array();
    json mismatches = json::array();
    auto record = [&](const std::string& name, bool pass) {
        checks.push_back(json{{"name", name}, {"pass", pass}});
        if (!pass) res.ok = false;
    };

    AxiomReport ax = check_axioms(m);
    record("axioms_lrb_of_groups", ax.lrb_of_groups);

    RepContext ctx = build_rep_context(m, p);
    int nl = ctx.label_count();

    std::vector<char> row_ok(size_t(nl), 0);
    parallel_for(nl, [&](long a) {
        bool ok = true;
        for (int b = 0; b < nl; ++b) {
            AlgebraElement prod = alg_mul(m, p, ctx.gamma[size_t(a)], ctx.gamma[size_t(b)]);
            AlgebraElement expected = (a == b) ? ctx.gamma[size_t(a)] : AlgebraElement{};
            if (!(prod == expected)) ok = false;
        }
        row_ok[size_t(a)] = ok ? 1 : 0;
    });
    bool orth = std::all_of(row_ok.begin(), row_ok.end(), [](char c) { return c != 0; });
    record("gamma_orthogonality", orth);

    TopologicalExt topo(ctx);
    ExtTable t_topo = topo.table();

    bool ext_agree = true;
    if (lm.hsiao) {
        ExtTable t_hsiao = ext_table_hsiao(*lm.hsiao, ctx);
        for (int q = 0; q <= t_topo.max_degree; ++q)
            for (int v = 0; v < nl; ++v)
                for (int w = 0; w < nl; ++w)
                    if (t_topo.at(q, v, w) != t_hsiao.at(q, v, w)) {
                        ext_agree = false;
                        mismatches.push_back(json{{"source", v},
                                                  {"target", w},
                                                  {"q", q},
                                                  {"topological", t_topo.at(q, v, w)},
                                                  {"closed_form", t_hsiao.at(q, v, w)}});
                    }
    }

    bool quiver_ok = true;
    try {
        Quiver quiver = build_quiver(ctx, topo);
        if (lm.hsiao) {
            long expected = lm.hsiao->group.order();
            quiver_ok = component_count(nl, quiver.arrows) == expected;
        }
    } catch (const Error&) {
        quiver_ok = false;
    }
    record("quiver_matches_label_poset", quiver_ok);

    KoszulReport koszul = koszul_diagnostics(ctx, topo);
    record("koszul_concentrated", koszul.concentrated);
    record("ext_algebra_dim_equals_interval_count", koszul.dims_equal);

    bool presentation_ok = true;
    bool oracle_ok = true;
    if (level == "full") {
        OracleContext oc = build_oracle_context(ctx);
        PresentationReport pres = presentation_dimension_check(oc);
        presentation_ok = pres.dims_equal && pres.cartan_equal;
        record("presentation_dimensions", presentation_ok);

        int maxdeg = ctx.lattice.lattice_rank();
        std::vector<char> label_ok(size_t(nl), 1);
        std::vector<std::vector<json>> label_mismatches(static_cast<size_t>(nl));
        parallel_for(nl, [&](long v) {
            Resolution minres = minimal_resolution(oc, int(v), maxdeg + 1);
            for (int q = 0; q <= maxdeg; ++q)
                for (int w = 0; w < nl; ++w) {
                    long got = q <= minres.length() ? minres.top_multiplicities[size_t(q)][size_t(w)]
                                                    : 0;
                    if (got != t_topo.at(q, int(v), w)) {
                        label_ok[size_t(v)] = 0;
                        label_mismatches[size_t(v)].push_back(
                            json{{"source", v},
                                 {"target", w},
                                 {"q", q},
                                 {"topological", t_topo.at(q, int(v), w)},
                                 {"oracle", got}});
                    }
                }
            Resolution ores = order_complex_resolution(oc, int(v));
            for (const ModuleKM& mod : ores.modules)
                if (!verify_projective(oc, mod)) label_ok[size_t(v)] = 0;
            auto odims = ext_dims_from_resolution(ctx, ores);
            for (int q = 0; q <= maxdeg; ++q)
                for (int w = 0; w < nl; ++w) {
                    long got = q <= ores.length() ? odims[size_t(q)][size_t(w)] : 0;
                    if (got != t_topo.at(q, int(v), w)) label_ok[size_t(v)] = 0;
                }
            Resolution cres = minimal_cellular_resolution(oc, int(v));
            for (int q = 0; q <= maxdeg; ++q)
                for (int w = 0; w < nl; ++w) {
                    long got =
                        q <= cres.length() ? cres.top_multiplicities[size_t(q)][size_t(w)] : 0;
                    if (got != t_topo.at(q, int(v), w)) label_ok[size_t(v)] = 0;
                }
        });
        for (int v = 0; v < nl; ++v) {
            if (!label_ok[size_t(v)]) oracle_ok = false;
            for (auto& mm : label_mismatches[size_t(v)]) {
                ext_agree = false;
                mismatches.push_back(std::move(mm));
            }
        }
        record("oracle_resolutions", oracle_ok);
    }
    record("ext_agree", ext_agree);

    res.report = json{{"schema", 1},
                      {"prime", p},
                      {"level", level},
                      {"ext_agree", ext_agree},
                      {"koszul_concentrated", koszul.concentrated},
                      {"presentation_dims_equal", presentation_ok},
                      {"checks", checks},
                      {"mismatches", mismatches}};
    res.ok = res.ok && ext_agree && oracle_ok;
    return res;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"representation theory of finite regular left duo monoids"};
    app.require_subcommand(1);

    MonoidSpec spec;
    std::string prime_text = "auto";
    std::string out_path;
    std::string level = "full";

    auto add_monoid_flags = [&](CLI::App* cmd) {
        cmd->add_option("--monoid", spec.kind, "builtin (sigma, hsiao, group_zmod) or table file");
        cmd->add_option("--n", spec.n, "ground set size / modulus");
        cmd->add_option("--group", spec.group, "abelian group spec, e.g. 2 or 2x2");
    };

    // gen
    auto* gen = app.add_subcommand("gen", "emit a multiplication table file");
    std::string gen_builtin;
    gen->add_option("builtin", gen_builtin, "sigma | hsiao | group_zmod")->required();
    gen->add_option("--n", spec.n, "ground set size / modulus");
    gen->add_option("--group", spec.group, "abelian group spec");
    gen->add_option("--out", out_path, "output path (default stdout)");
    gen->callback([&]() {
        spec.kind = gen_builtin;
        LoadedMonoid lm = load_monoid(spec);
        if (out_path.empty()) {
            write_table(std::cout, lm.monoid);
        } else {
            std::ofstream out(out_path);
            if (!out) fail(ErrorCode::InvalidArgument, "cannot open output file");
            write_table(out, lm.monoid);
        }
    });

    // axioms
    auto* axioms = app.add_subcommand("axioms", "exhaustive axiom report");
    add_monoid_flags(axioms);
    axioms->add_option("--out", out_path, "output path");
    axioms->callback([&]() {
        LoadedMonoid lm = load_monoid(spec);
        AxiomReport rep = check_axioms(lm.monoid);
        emit(json{{"schema", 1},
                  {"monoid", lm.description},
                  {"size", lm.monoid.size()},
                  {"axioms",
                   json{{"right_semicentral", rep.right_semicentral},
                        {"left_duo", rep.left_duo},
                        {"regular", rep.regular},
                        {"lrb_of_groups", rep.lrb_of_groups}}}},
             out_path);
    });

    // lattice
    auto* lattice_cmd = app.add_subcommand("lattice", "support lattice dump");
    add_monoid_flags(lattice_cmd);
    lattice_cmd->add_option("--out", out_path, "output path");
    lattice_cmd->callback([&]() {
        LoadedMonoid lm = load_monoid(spec);
        SupportLattice lat = support_lattice(lm.monoid);
        json nodes = json::array();
        for (int x = 0; x < lat.size; ++x) {
            json node{{"id", x},
                      {"representative", lat.representative[size_t(x)]},
                      {"height", lat.height[size_t(x)]}};
            if (lm.hsiao) {
                const auto& inst = *lm.hsiao;
                const auto blocks =
                    inst.partitions[size_t(inst.partition_of(lat.representative[size_t(x)]))]
                        .underlying();
                std::ostringstream name;
                for (const auto& block : blocks) {
                    name << '{';
                    for (size_t i = 0; i < block.size(); ++i)
                        name << (i ? "," : "") << block[i] + 1;
                    name << '}';
                }
                node["partition"] = name.str();
            }
            nodes.push_back(node);
        }
        json leq = json::array();
        for (int x = 0; x < lat.size; ++x) {
            json row = json::array();
            for (int y = 0; y < lat.size; ++y) row.push_back(int(lat.le(x, y)));
            leq.push_back(row);
        }
        emit(json{{"schema", 1},
                  {"monoid", lm.description},
                  {"size", lat.size},
                  {"bottom", lat.bottom},
                  {"top", lat.top},
                  {"nodes", nodes},
                  {"leq", leq},
                  {"sigma", lat.sigma}},
             out_path);
    });

    // betti
    auto* betti_cmd = app.add_subcommand("betti", "reduced Betti numbers of an order complex");
    std::string poset_path;
    betti_cmd->add_option("--poset", poset_path, "poset dump: node count + cover pairs")->required();
    betti_cmd->add_option("--prime", prime_text, "prime (default 2)");
    betti_cmd->add_option("--out", out_path, "output path");
    betti_cmd->callback([&]() {
        std::ifstream in(poset_path);
        if (!in) fail(ErrorCode::InvalidArgument, "cannot read poset file");
        int n;
        if (!(in >> n)) fail(ErrorCode::InvalidArgument, "poset file needs a node count");
        std::vector<std::pair<int, int>> covers;
        int a, b;
        while (in >> a >> b) covers.emplace_back(a, b);
        u64 p = prime_text == "auto" ? 2 : u64(std::stol(prime_text));
        if (!is_prime(long(p))) fail(ErrorCode::BadPrime, "prime flag must name a prime");
        BettiNumbers bt = reduced_betti(order_complex(FinitePoset::from_covers(n, covers)), p);
        emit(json{{"schema", 1},
                  {"prime", p},
                  {"betti_minus_one", bt.minus_one},
                  {"betti", bt.b}},
             out_path);
    });

    // idempotents
    auto* idem = app.add_subcommand("idempotents", "eta and gamma idempotent dump");
    add_monoid_flags(idem);
    idem->add_option("--prime", prime_text, "prime or auto");
    idem->add_option("--out", out_path, "output path");
    idem->callback([&]() {
        LoadedMonoid lm = load_monoid(spec);
        SupportLattice lat = support_lattice(lm.monoid);
        u64 p = resolve_prime(prime_text, lm.monoid, lat);
        RepContext ctx = build_rep_context(lm.monoid, p);
        json etas = json::array();
        for (int x = 0; x < ctx.lattice.size; ++x) {
            json e = algebra_element_json(ctx.eta[size_t(x)]);
            e["node"] = x;
            etas.push_back(e);
        }
        json gammas = json::array();
        for (int l = 0; l < ctx.label_count(); ++l) {
            json g = algebra_element_json(ctx.gamma[size_t(l)]);
            g["label"] = label_json(ctx, l);
            gammas.push_back(g);
        }
        emit(json{{"schema", 1},
                  {"monoid", lm.description},
                  {"prime", p},
                  {"eta", etas},
                  {"gamma", gammas}},
             out_path);
    });

    // ext
    auto* ext_cmd = app.add_subcommand("ext", "Ext table (both code paths, agreement flag)");
    add_monoid_flags(ext_cmd);
    ext_cmd->add_option("--prime", prime_text, "prime or auto");
    ext_cmd->add_option("--out", out_path, "output path");
    ext_cmd->add_flag("--json", "emit JSON (always on; flag kept for scripts)");
    ext_cmd->callback([&]() {
        LoadedMonoid lm = load_monoid(spec);
        SupportLattice lat = support_lattice(lm.monoid);
        u64 p = resolve_prime(prime_text, lm.monoid, lat);
        RepContext ctx = build_rep_context(lm.monoid, p);
        TopologicalExt topo(ctx);
        ExtTable t_topo = topo.table();
        json labels = json::array();
        for (int l = 0; l < ctx.label_count(); ++l) labels.push_back(label_json(ctx, l));
        json out = {{"schema", 1},
                    {"monoid", lm.description},
                    {"prime", p},
                    {"max_degree", t_topo.max_degree},
                    {"labels", labels},
                    {"entries", ext_entries_json(ctx, t_topo)}};
        if (lm.hsiao) {
            ExtTable t_hsiao = ext_table_hsiao(*lm.hsiao, ctx);
            out["closed_form_agrees"] = (t_topo == t_hsiao);
        }
        emit(out, out_path);
    });

    // quiver
    auto* quiver_cmd = app.add_subcommand("quiver", "quiver DOT + relation sidecar");
    add_monoid_flags(quiver_cmd);
    quiver_cmd->add_option("--prime", prime_text, "prime or auto");
    std::string dot_path;
    quiver_cmd->add_option("--dot", dot_path, "DOT output path (default stdout)");
    quiver_cmd->add_option("--out", out_path, "relations JSON path");
    quiver_cmd->callback([&]() {
        LoadedMonoid lm = load_monoid(spec);
        SupportLattice lat = support_lattice(lm.monoid);
        u64 p = resolve_prime(prime_text, lm.monoid, lat);
        RepContext ctx = build_rep_context(lm.monoid, p);
        TopologicalExt topo(ctx);
        Quiver quiver = build_quiver(ctx, topo);

        // vertices by (rank, apex, character)
        std::vector<int> order(size_t(ctx.label_count()));
        for (int l = 0; l < ctx.label_count(); ++l) order[size_t(l)] = l;
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return ctx.labels.rank[size_t(a)] < ctx.labels.rank[size_t(b)];
        });
        std::ostringstream dot;
        dot << "digraph quiver {\n";
        for (int l : order) dot << "  \"" << dot_vertex(ctx, l) << "\";\n";
        auto arrows = quiver.arrows;
        for (auto [v, w] : arrows)
            dot << "  \"" << dot_vertex(ctx, v) << "\" -> \"" << dot_vertex(ctx, w) << "\";\n";
        dot << "}\n";
        if (dot_path.empty()) {
            std::cout << dot.str();
        } else {
            std::ofstream out(dot_path);
            if (!out) fail(ErrorCode::InvalidArgument, "cannot open DOT output file");
            out << dot.str();
        }
        json rels = json::array();
        for (const Relation& r : quiver.relations)
            rels.push_back(json{{"source", r.source}, {"target", r.target}, {"mids", r.mids}});
        json sidecar = {{"schema", 1},
                        {"monoid", lm.description},
                        {"prime", p},
                        {"arrow_count", quiver.arrows.size()},
                        {"relations", rels}};
        if (!out_path.empty()) emit(sidecar, out_path);
    });

    // koszul
    auto* koszul_cmd = app.add_subcommand("koszul", "Koszulity diagnostics");
    add_monoid_flags(koszul_cmd);
    koszul_cmd->add_option("--prime", prime_text, "prime or auto");
    koszul_cmd->add_flag("--report", "emit the JSON report (always on; flag kept for scripts)");
    koszul_cmd->add_option("--out", out_path, "output path");
    koszul_cmd->callback([&]() {
        LoadedMonoid lm = load_monoid(spec);
        SupportLattice lat = support_lattice(lm.monoid);
        u64 p = resolve_prime(prime_text, lm.monoid, lat);
        RepContext ctx = build_rep_context(lm.monoid, p);
        TopologicalExt topo(ctx);
        KoszulReport rep = koszul_diagnostics(ctx, topo);
        emit(json{{"schema", 1},
                  {"monoid", lm.description},
                  {"prime", p},
                  {"concentrated", rep.concentrated},
                  {"ext_algebra_dim", rep.ext_algebra_dim},
                  {"interval_count", rep.interval_count},
                  {"dims_equal", rep.dims_equal}},
             out_path);
    });

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "linear-algebra ground truth");
    oracle_cmd->require_subcommand(1);
    auto* oracle_ext = oracle_cmd->add_subcommand("ext", "full Ext table from minimal resolutions");
    add_monoid_flags(oracle_ext);
    oracle_ext->add_option("--prime", prime_text, "prime or auto");
    oracle_ext->add_option("--out", out_path, "output path");
    oracle_ext->callback([&]() {
        LoadedMonoid lm = load_monoid(spec);
        SupportLattice lat = support_lattice(lm.monoid);
        u64 p = resolve_prime(prime_text, lm.monoid, lat);
        RepContext ctx = build_rep_context(lm.monoid, p);
        OracleContext oc = build_oracle_context(ctx);
        int maxdeg = ctx.lattice.lattice_rank();
        json entries = json::array();
        for (int v = 0; v < ctx.label_count(); ++v) {
            Resolution res = minimal_resolution(oc, v, maxdeg + 1);
            for (int q = 0; q <= res.length(); ++q)
                for (int w = 0; w < ctx.label_count(); ++w)
                    if (res.top_multiplicities[size_t(q)][size_t(w)] != 0)
                        entries.push_back(json{{"from", v},
                                               {"to", w},
                                               {"q", q},
                                               {"dim", res.top_multiplicities[size_t(q)][size_t(w)]}});
        }
        json labels = json::array();
        for (int l = 0; l < ctx.label_count(); ++l) labels.push_back(label_json(ctx, l));
        emit(json{{"schema", 1},
                  {"monoid", lm.description},
                  {"prime", p},
                  {"max_degree", maxdeg},
                  {"labels", labels},
                  {"entries", entries},
                  {"radical_dim", oc.rad.basis.size()},
                  {"radical_nilpotency_index", oc.rad.nilpotency_index}},
             out_path);
    });
    std::string label_text;
    std::string kind = "minimal";
    auto resolve_callback = [&]() {
        LoadedMonoid lm = load_monoid(spec);
        SupportLattice lat = support_lattice(lm.monoid);
        u64 p = resolve_prime(prime_text, lm.monoid, lat);
        RepContext ctx = build_rep_context(lm.monoid, p);
        OracleContext oc = build_oracle_context(ctx);
        int label = parse_label(ctx, label_text);
        Resolution res;
        if (kind == "minimal")
            res = minimal_resolution(oc, label, ctx.lattice.lattice_rank() + 1);
        else if (kind == "order")
            res = order_complex_resolution(oc, label);
        else if (kind == "cellular")
            res = minimal_cellular_resolution(oc, label);
        else
            fail(ErrorCode::InvalidArgument, "unknown resolution kind: " + kind);
        json tops = json::array();
        for (const auto& row : res.top_multiplicities) tops.push_back(row);
        emit(json{{"schema", 1},
                  {"monoid", lm.description},
                  {"prime", p},
                  {"label", label_json(ctx, label)},
                  {"kind", kind},
                  {"ranks", res.dims},
                  {"top_multiplicities", tops}},
             out_path);
    };
    for (CLI::App* cmd : {oracle_cmd->add_subcommand("resolve", "resolution of one simple"),
                          app.add_subcommand("resolve", "resolution of one simple")}) {
        add_monoid_flags(cmd);
        cmd->add_option("--prime", prime_text, "prime or auto");
        cmd->add_option("--label", label_text, "simple label APEX:CHAR")->required();
        cmd->add_option("--kind", kind, "minimal | order | cellular");
        cmd->add_option("--out", out_path, "output path");
        cmd->callback(resolve_callback);
    }

    // crosscheck
    auto* cross = app.add_subcommand("crosscheck", "run every agreement assertion");
    add_monoid_flags(cross);
    cross->add_option("--prime", prime_text, "prime or auto");
    cross->add_option("--level", level, "fast | full");
    cross->add_option("--out", out_path, "output path");
    cross->callback([&]() {
        LoadedMonoid lm = load_monoid(spec);
        SupportLattice lat = support_lattice(lm.monoid);
        u64 p = resolve_prime(prime_text, lm.monoid, lat);
        CrosscheckResult res = run_crosscheck(lm, p, level);
        emit(res.report, out_path);
        if (!res.ok) std::exit(2);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const Error& e) {
        json err = {{"schema", 1},
                    {"error", json{{"code", error_name(e.code())}, {"message", e.what()}}}};
        std::cout << err.dump(2) << '\n';
        return 1;
    } catch (const std::exception& e) {
        json err = {{"schema", 1}, {"error", json{{"code", "Internal"}, {"message", e.what()}}}};
        std::cout << err.dump(2) << '\n';
        return 1;
    }
    return 0;
}
