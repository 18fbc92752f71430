// Command-line surface over the library: graph generation, certification,
// extraction, embedding, discrepancy, and the brute-force oracles.
// Exit codes: 0 success, 1 usage/IO errors, 2 honest guarantee failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ramsey_forge/density.hpp"
#include "ramsey_forge/discrepancy.hpp"
#include "ramsey_forge/embed.hpp"
#include "ramsey_forge/extract.hpp"
#include "ramsey_forge/io.hpp"
#include "ramsey_forge/oracles.hpp"
#include "ramsey_forge/pseudorandom.hpp"
#include "ramsey_forge/report.hpp"
#include "ramsey_forge/sparse.hpp"

using namespace rf;

namespace {

struct Options {
    uint64_t seed = 0;
    int retries = 64;
    int oracle_cap = 0;  // 0 = defaults
    std::string format = "json";
    std::string out_path;
};

void emit(const Options& opt, const std::string& text) {
    if (opt.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(opt.out_path, std::ios::binary);
    if (!f) throw ParseError("cannot open output '" + opt.out_path + "'");
    f << text;
}

void emit_json(const Options& opt, const Json& j) { emit(opt, j.dump(2) + "\n"); }

Graph load_graph(const std::string& path) { return read_graph_file(path); }

// named patterns (k3, p4, c5, e2, star:3, ...) or an edge-list file
PatternGraph parse_pattern(const std::string& spec) {
    auto num_after = [&](size_t at) { return std::stoi(spec.substr(at)); };
    if (spec.size() >= 2 && spec.find('.') == std::string::npos && spec.find('/') == std::string::npos) {
        char c = char(std::tolower(spec[0]));
        if (spec.rfind("star:", 0) == 0) return PatternGraph::star(num_after(5));
        if ((c == 'k' || c == 'p' || c == 'c' || c == 'e') && std::isdigit(spec[1])) {
            int m = num_after(1);
            switch (c) {
                case 'k': return PatternGraph::clique(m);
                case 'p': return PatternGraph::path(m);
                case 'c': return PatternGraph::cycle(m);
                case 'e': return PatternGraph::empty(m);
            }
        }
    }
    return PatternGraph(load_graph(spec));
}

Rational parse_lambda_sq(const std::string& lambda, int n) {
    if (lambda == "sqrt") return Rational(n);
    Rational l = Rational::parse(lambda);
    return l * l;
}

std::string graph_text(const Graph& g, const std::string& format) {
    std::ostringstream os;
    if (format == "matrix") write_adjacency_matrix(os, g);
    else write_edge_list(os, g);
    return os.str();
}


Json density_cert_json(const Graph& g, const DensityCertificate& c) {
    return Json{{"side", c.side == DensityCertificate::Side::low ? "low" : "high"},
                {"eps", to_json(c.eps)},
                {"w", to_json(c.w)},
                {"size", c.w.count()},
                {"floor", c.floor_claim},
                {"density", to_json(density_set_or_zero(g, c.w))}};
}

OracleBudget budget_from(const Options& opt) {
    OracleBudget b;
    if (opt.oracle_cap > 0) {
        b.homogeneous_max_n = opt.oracle_cap;
        b.sparse_dense_max_n = std::min(opt.oracle_cap, 24);
        b.half_subset_max_n = std::min(opt.oracle_cap, 30);
    }
    return b;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ramsey-forge: constructive Ramsey-type graph algorithms with exact certificates"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--seed", opt.seed, "seed for every randomized operation");
    app.add_option("--budget-retries", opt.retries, "retry budget for sampled searches");
    app.add_option("--oracle-cap", opt.oracle_cap, "override oracle size caps");
    app.add_option("--format", opt.format, "json|csv|edgelist|matrix output");
    app.add_option("--out", opt.out_path, "write the report to a file instead of stdout");

    // ---- gen ----------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "generate graphs");
    long gen_q = 13;
    int gen_r = 3, gen_t = 2, gen_n = 16, gen_m = 2;
    std::string gen_p = "1/2", gen_input;
    auto* gen_paley = gen->add_subcommand("paley", "Paley graph on F_q");
    gen_paley->add_option("--q", gen_q, "prime, q = 1 mod 4")->required();
    auto* gen_dgt = gen->add_subcommand("dgt", "Delsarte-Goethals-Turyn graph on F_r^2");
    gen_dgt->add_option("--r", gen_r, "prime")->required();
    gen_dgt->add_option("--t", gen_t, "lines through the origin, 1..r+1")->required();
    auto* gen_gnp = gen->add_subcommand("gnp", "seeded G(n,p)");
    gen_gnp->add_option("--n", gen_n)->required();
    gen_gnp->add_option("--p", gen_p, "edge probability a/b");
    auto* gen_blow = gen->add_subcommand("blowup", "independent-set blow-up");
    gen_blow->add_option("--input", gen_input)->required();
    gen_blow->add_option("--m", gen_m, "blow-up factor")->required();

    // ---- certify ------------------------------------------------------
    auto* certify = app.add_subcommand("certify", "pseudo-randomness certification");
    std::string cert_input, cert_p = "1/2", cert_lambda = "sqrt", cert_mode = "exhaustive";
    std::string cert_q = "1/4", cert_delta = "1/4";
    uint64_t cert_samples = 10000;
    auto* cert_mix = certify->add_subcommand("mixing", "(p,lambda)-pseudo-randomness");
    cert_mix->add_option("--input", cert_input)->required();
    cert_mix->add_option("--p", cert_p);
    cert_mix->add_option("--lambda", cert_lambda, "'sqrt' for sqrt(n), else a rational a/b");
    cert_mix->add_option("--mode", cert_mode, "spectral|exhaustive|sampled");
    cert_mix->add_option("--samples", cert_samples);
    auto* cert_bi = certify->add_subcommand("bidense", "bi-(q,delta)-density");
    cert_bi->add_option("--input", cert_input)->required();
    cert_bi->add_option("--q", cert_q);
    cert_bi->add_option("--delta", cert_delta);
    cert_bi->add_option("--mode", cert_mode);
    cert_bi->add_option("--samples", cert_samples);
    auto* cert_spec = certify->add_subcommand("spectrum", "full symmetric spectrum");
    cert_spec->add_option("--input", cert_input)->required();

    // ---- extract / partition / hom -------------------------------------
    std::string ex_input, ex_pattern = "p4", ex_eps = "1/4";
    auto* extract_cmd = app.add_subcommand("extract", "sparse-or-dense induced subgraph (Theorem 1)");
    extract_cmd->add_option("--input", ex_input)->required();
    extract_cmd->add_option("--pattern", ex_pattern);
    extract_cmd->add_option("--eps", ex_eps);
    auto* part_cmd = app.add_subcommand("partition", "equitable density partition");
    part_cmd->add_option("--input", ex_input)->required();
    part_cmd->add_option("--pattern", ex_pattern);
    part_cmd->add_option("--eps", ex_eps);
    auto* hom_cmd = app.add_subcommand("hom", "homogeneous-set lower bound pipeline");
    hom_cmd->add_option("--input", ex_input)->required();
    hom_cmd->add_option("--pattern", ex_pattern);

    // ---- embed / ramsey -------------------------------------------------
    std::string em_input, em_coloring, em_pattern = "p3", em_h1 = "p3", em_h2 = "p3";
    std::string em_p = "1/3", em_lambda = "sqrt", em_preset;
    auto* embed_cmd = app.add_subcommand("embed", "induced monochromatic embedding (one pattern)");
    embed_cmd->add_option("--input", em_input)->required();
    embed_cmd->add_option("--coloring", em_coloring, "colored edge list (1=red, 2=blue)")->required();
    embed_cmd->add_option("--pattern", em_pattern);
    embed_cmd->add_option("--p", em_p);
    auto* ramsey_cmd = app.add_subcommand("ramsey", "two-color induced Ramsey pipeline");
    ramsey_cmd->add_option("--input", em_input);
    ramsey_cmd->add_option("--coloring", em_coloring)->required();
    ramsey_cmd->add_option("--h1", em_h1);
    ramsey_cmd->add_option("--h2", em_h2);
    ramsey_cmd->add_option("--p", em_p);
    ramsey_cmd->add_option("--lambda", em_lambda);
    ramsey_cmd->add_option("--preset", em_preset, "paley:<q> or dgt:<r>:<t> host");

    // ---- discrepancy ----------------------------------------------------
    std::string d_input, d_pattern = "k3", d_eps = "1/2";
    int d_k = 4;
    long d_n = 8;
    auto* disc = app.add_subcommand("discrepancy", "half-set deviation tools");
    auto* disc_w = disc->add_subcommand("witness", "Theorem 3 deviation witness");
    disc_w->add_option("--input", d_input)->required();
    disc_w->add_option("--pattern", d_pattern);
    disc_w->add_option("--eps", d_eps);
    auto* disc_c = disc->add_subcommand("construct", "K_k-free low-discrepancy blow-up");
    disc_c->add_option("--k", d_k)->required();
    disc_c->add_option("--n", d_n)->required();
    auto* disc_e = disc->add_subcommand("envelope", "csv row: k, n, lower witness, upper bound");
    disc_e->add_option("--k", d_k)->required();
    disc_e->add_option("--n", d_n)->required();

    // ---- oracle ---------------------------------------------------------
    std::string o_input, o_pattern = "k3", o_eps = "1/4";
    int o_k = 3;
    auto* oracle = app.add_subcommand("oracle", "brute-force ground truth");
    auto* o_count = oracle->add_subcommand("count", "labeled induced copies");
    o_count->add_option("--input", o_input)->required();
    o_count->add_option("--pattern", o_pattern);
    auto* o_hom = oracle->add_subcommand("hom", "maximum homogeneous set");
    o_hom->add_option("--input", o_input)->required();
    auto* o_sd = oracle->add_subcommand("sparsedense", "best sparse-or-dense subset");
    o_sd->add_option("--input", o_input)->required();
    o_sd->add_option("--eps", o_eps);
    auto* o_half = oracle->add_subcommand("halfset", "best half-set deviation");
    o_half->add_option("--input", o_input)->required();
    auto* o_ram = oracle->add_subcommand("inducedramsey", "exhaustive induced Ramsey check");
    o_ram->add_option("--input", o_input)->required();
    o_ram->add_option("--pattern", o_pattern);
    auto* o_uni = oracle->add_subcommand("universal", "k-universality check");
    o_uni->add_option("--input", o_input)->required();
    o_uni->add_option("--k", o_k);

    // global options may follow a subcommand name
    std::function<void(CLI::App*)> allow_fallthrough = [&](CLI::App* node) {
        node->fallthrough();
        for (CLI::App* sub : node->get_subcommands({})) allow_fallthrough(sub);
    };
    allow_fallthrough(&app);

    CLI11_PARSE(app, argc, argv);

    try {
        OracleBudget budget = budget_from(opt);

        if (gen->parsed()) {
            Graph g = Graph::empty(0);
            if (gen_paley->parsed()) g = paley(gen_q);
            else if (gen_dgt->parsed()) g = dgt(gen_r, gen_t);
            else if (gen_gnp->parsed()) g = gnp(gen_n, Rational::parse(gen_p), opt.seed);
            else if (gen_blow->parsed()) g = load_graph(gen_input).blow_up(gen_m);
            else throw CLI::CallForHelp();
            emit(opt, graph_text(g, opt.format == "matrix" ? "matrix" : "edgelist"));
            return 0;
        }

        if (certify->parsed()) {
            Graph g = load_graph(cert_input);
            if (cert_spec->parsed()) {
                SpectralProfile prof = spectral_profile(g);
                Json evs = Json::array();
                for (double ev : prof.eigenvalues) evs.push_back(ev);
                emit_json(opt, Json{{"command", "certify spectrum"},
                                    {"input", graph_summary(g)},
                                    {"regular", prof.regular},
                                    {"degree", prof.degree},
                                    {"second", prof.second},
                                    {"eigen_sum", prof.eigen_sum},
                                    {"max_residual", prof.max_residual},
                                    {"eigenvalues", evs}});
                return 0;
            }
            CertMode mode = cert_mode == "spectral"   ? CertMode::spectral
                            : cert_mode == "sampled"  ? CertMode::sampled
                                                      : CertMode::exhaustive;
            if (cert_mix->parsed()) {
                PseudorandomCert cert = certify_mixing(g, Rational::parse(cert_p),
                                                       parse_lambda_sq(cert_lambda, g.vertex_count()),
                                                       mode, opt.seed, cert_samples);
                Json j{{"command", "certify mixing"},
                       {"input", graph_summary(g)},
                       {"p", to_json(cert.p)},
                       {"lambda_sq", to_json(cert.lambda_sq)},
                       {"mode", cert_mode},
                       {"pairs_checked", cert.pairs_checked},
                       {"pass", cert.pass}};
                if (cert.worst)
                    j["worst"] = Json{{"a", to_json(cert.worst->a)},
                                      {"b", to_json(cert.worst->b)},
                                      {"statistic", cert.worst->statistic}};
                if (mode == CertMode::spectral) j["spectral_lambda"] = cert.spectral_lambda;
                emit_json(opt, j);
                return cert.pass ? 0 : 2;
            }
            if (cert_bi->parsed()) {
                BiDenseResult res = bi_dense_check(g, Rational::parse(cert_q), Rational::parse(cert_delta),
                                                   mode, opt.seed, cert_samples);
                Json j{{"command", "certify bidense"},
                       {"input", graph_summary(g)},
                       {"q", Rational::parse(cert_q).str()},
                       {"delta", Rational::parse(cert_delta).str()},
                       {"pairs_checked", res.pairs_checked},
                       {"pass", res.pass}};
                if (res.violation)
                    j["violation"] = Json{{"a", to_json(res.violation->first)},
                                          {"b", to_json(res.violation->second)},
                                          {"density", to_json(res.violation_density)}};
                emit_json(opt, j);
                return res.pass ? 0 : 2;
            }
        }

        if (extract_cmd->parsed()) {
            Graph g = load_graph(ex_input);
            PatternGraph h = parse_pattern(ex_pattern);
            DensityCertificate cert = sparse_or_dense_subset(g, h, Rational::parse(ex_eps), opt.seed);
            std::string why;
            if (!check_density_certificate(g, cert, &why)) throw ContractError(why);
            emit_json(opt, Json{{"command", "extract"},
                                {"input", graph_summary(g)},
                                {"certificate", density_cert_json(g, cert)}});
            return 0;
        }

        if (part_cmd->parsed()) {
            Graph g = load_graph(ex_input);
            PatternGraph h = parse_pattern(ex_pattern);
            Rational eps = Rational::parse(ex_eps);
            EquitablePartition p = equitable_density_partition(g, h, eps, opt.seed);
            std::string why;
            if (!check_equitable_partition(g, p, eps, &why)) throw ContractError(why);
            Json parts = Json::array();
            for (size_t i = 0; i < p.parts.size(); ++i)
                parts.push_back(Json{{"vertices", to_json(p.parts[i])},
                                     {"side", p.sides[i] == DensityCertificate::Side::low ? "low" : "high"},
                                     {"density", to_json(density_set_or_zero(g, p.parts[i]))}});
            emit_json(opt, Json{{"command", "partition"},
                                {"input", graph_summary(g)},
                                {"eps", eps.str()},
                                {"parts", parts},
                                {"part_bound_log2", p.part_bound.approx() > 0
                                                        ? std::log2(p.part_bound.approx())
                                                        : 0.0}});
            return 0;
        }

        if (hom_cmd->parsed()) {
            Graph g = load_graph(ex_input);
            PatternGraph h = parse_pattern(ex_pattern);
            HomogeneousWitness w = hom_lower_bound(g, h, opt.seed);
            auto cls = classify_homogeneous(g, w.set);
            if (!cls) throw ContractError("hom output is not homogeneous");
            emit_json(opt, Json{{"command", "hom"},
                                {"input", graph_summary(g)},
                                {"set", to_json(w.set)},
                                {"size", w.set.count()},
                                {"kind", w.is_clique ? "clique" : "independent"},
                                {"floor", erdos_szekeres_floor(g.vertex_count())}});
            return 0;
        }

        if (embed_cmd->parsed()) {
            Graph g = load_graph(em_input);
            EdgeColoring coloring = read_coloring_file(em_coloring);
            PatternGraph h = parse_pattern(em_pattern);
            int k = h.k(), n = g.vertex_count();
            std::vector<VertexSet> parts(static_cast<size_t>(k), Bitset(n));
            long base = n / k, extra = n % k, at = 0;
            for (int b = 0; b < k; ++b) {
                long want = base + (b < extra ? 1 : 0);
                for (long i = 0; i < want; ++i) parts[size_t(b)].set(int(at++));
            }
            EmbedParams params = EmbedParams::for_pattern(Rational::parse(em_p), k, h.degeneracy());
            try {
                Embedding e = embed_induced_monochromatic(g, coloring, h, parts, params);
                if (auto bad = verify_embedding(g, &coloring, h, e.map, e.color))
                    throw ContractError("embedding failed verification: " + bad->reason);
                emit_json(opt, Json{{"command", "embed"},
                                    {"input", graph_summary(g)},
                                    {"map", e.map},
                                    {"color", *e.color},
                                    {"pass", true}});
                return 0;
            } catch (const EmbedFailureError& e) {
                emit_json(opt, Json{{"command", "embed"},
                                    {"input", graph_summary(g)},
                                    {"pass", false},
                                    {"failed_step", e.fail_position + 1},
                                    {"survivors", to_json(e.survivors)}});
                return 2;
            }
        }

        if (ramsey_cmd->parsed()) {
            Graph g = Graph::empty(0);
            if (!em_preset.empty()) {
                if (em_preset.rfind("paley:", 0) == 0) g = paley(std::stol(em_preset.substr(6)));
                else if (em_preset.rfind("dgt:", 0) == 0) {
                    auto rest = em_preset.substr(4);
                    auto colon = rest.find(':');
                    g = dgt(std::stoi(rest.substr(0, colon)), std::stoi(rest.substr(colon + 1)));
                } else throw ParseError("unknown preset '" + em_preset + "'");
            } else {
                if (em_input.empty()) throw ParseError("ramsey: --input or --preset required");
                g = load_graph(em_input);
            }
            EdgeColoring coloring = read_coloring_file(em_coloring);
            PatternGraph h1 = parse_pattern(em_h1), h2 = parse_pattern(em_h2);
            try {
                PipelineResult res =
                    induced_ramsey_pipeline(g, coloring, h1, h2, Rational::parse(em_p),
                                            parse_lambda_sq(em_lambda, g.vertex_count()), opt.seed);
                const PatternGraph& hw = res.color == kRed ? h1 : h2;
                if (auto bad = verify_embedding(g, &coloring, hw, res.embedding.map, res.color))
                    throw ContractError("pipeline result failed verification: " + bad->reason);
                Json j = res.report;
                j["map"] = res.embedding.map;
                j["pass"] = true;
                emit_json(opt, j);
                return 0;
            } catch (const GuaranteeFailure& e) {
                emit_json(opt, Json{{"command", "ramsey"}, {"pass", false}, {"detail", e.what()}});
                return 2;
            }
        }

        if (disc->parsed()) {
            if (disc_w->parsed()) {
                Graph g = load_graph(d_input);
                PatternGraph h = parse_pattern(d_pattern);
                DiscrepancyReport rep = deviation_witness(g, h, Rational::parse(d_eps), opt.seed);
                emit_json(opt, Json{{"command", "discrepancy witness"},
                                    {"input", graph_summary(g)},
                                    {"s", to_json(rep.s)},
                                    {"deviation", to_json(rep.deviation)},
                                    {"r_choice", std::string(1, rep.r_choice)},
                                    {"claimed_target", to_json(rep.claimed_target)},
                                    {"below_guarantee", rep.below_guarantee},
                                    {"details", rep.details}});
                return rep.below_guarantee ? 2 : 0;
            }
            if (disc_c->parsed()) {
                LowDiscrepancyGraph out = low_discrepancy_graph(d_k, d_n, opt.seed);
                if (opt.format == "edgelist") {
                    emit(opt, graph_text(out.graph, "edgelist"));
                } else {
                    Json j = out.certificate;
                    j["command"] = "discrepancy construct";
                    emit_json(opt, j);
                }
                return 0;
            }
            if (disc_e->parsed()) {
                LowDiscrepancyGraph out = low_discrepancy_graph(d_k, d_n, opt.seed);
                DiscrepancyReport rep =
                    deviation_witness(out.graph, PatternGraph::clique(d_k), Rational(1, 2), opt.seed);
                // measured upper: exhaustive best half-set below the cap
                std::string upper;
                if (d_n <= 24) {
                    VertexSet s = best_half_subset(out.graph, budget);
                    upper = half_set_deviation(out.graph, s).str();
                } else {
                    double bound = std::pow(2.0, -double(d_k) / 4 + 2) * double(d_n) * double(d_n);
                    upper = std::to_string(bound);
                }
                emit(opt, "k,n,lower_witness,upper_bound\n" + std::to_string(d_k) + "," +
                              std::to_string(d_n) + "," + rep.deviation.str() + "," + upper + "\n");
                return 0;
            }
        }

        if (oracle->parsed()) {
            if (o_count->parsed()) {
                Graph g = load_graph(o_input);
                PatternGraph h = parse_pattern(o_pattern);
                mpz_class c = count_labeled_induced(g, h, budget);
                emit_json(opt, Json{{"operation", "count_labeled_induced"},
                                    {"input", graph_summary(g)},
                                    {"result", c.get_str()}});
                return 0;
            }
            if (o_hom->parsed()) {
                Graph g = load_graph(o_input);
                HomogeneousSet hs = max_homogeneous(g, budget);
                emit_json(opt, Json{{"operation", "max_homogeneous"},
                                    {"input", graph_summary(g)},
                                    {"result", hs.set.count()},
                                    {"witness", to_json(hs.set)},
                                    {"kind", hs.is_clique ? "clique" : "independent"}});
                return 0;
            }
            if (o_sd->parsed()) {
                Graph g = load_graph(o_input);
                VertexSet w = best_sparse_or_dense(g, Rational::parse(o_eps), budget);
                emit_json(opt, Json{{"operation", "best_sparse_or_dense"},
                                    {"input", graph_summary(g)},
                                    {"result", w.count()},
                                    {"witness", to_json(w)},
                                    {"density", to_json(density_set_or_zero(g, w))}});
                return 0;
            }
            if (o_half->parsed()) {
                Graph g = load_graph(o_input);
                VertexSet s = best_half_subset(g, budget);
                emit_json(opt, Json{{"operation", "best_half_subset"},
                                    {"input", graph_summary(g)},
                                    {"result", to_json(half_set_deviation(g, s))},
                                    {"witness", to_json(s)}});
                return 0;
            }
            if (o_ram->parsed()) {
                Graph g = load_graph(o_input);
                PatternGraph h = parse_pattern(o_pattern);
                bool res = exhaustive_induced_ramsey(g, h, budget);
                emit_json(opt, Json{{"operation", "exhaustive_induced_ramsey"},
                                    {"input", graph_summary(g)},
                                    {"result", res}});
                return 0;
            }
            if (o_uni->parsed()) {
                Graph g = load_graph(o_input);
                bool res = is_k_universal(g, o_k, budget);
                emit_json(opt, Json{{"operation", "is_k_universal"},
                                    {"input", graph_summary(g)},
                                    {"k", o_k},
                                    {"result", res}});
                return 0;
            }
        }

        std::cerr << app.help() << std::endl;
        return 1;
    } catch (const GuaranteeFailure& e) {
        std::cerr << "guarantee failure: " << e.what() << std::endl;
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    }
}
