// ngrank: complement-rank computations, bound checks and constructions.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ngrank/closed_forms.hpp"
#include "ngrank/constructions.hpp"
#include "ngrank/exact_rank.hpp"
#include "ngrank/graph.hpp"
#include "ngrank/graph6.hpp"
#include "ngrank/sweep.hpp"
#include "ngrank/verifiers.hpp"

using nlohmann::json;
using namespace ngrank;

namespace {

struct GraphInput {
    std::string graph6;
    std::string family;

    Graph load() const {
        if (!family.empty()) return make_family(FamilySpec::parse(family));
        if (graph6.empty()) throw std::invalid_argument("give a graph6 string or --family");
        return parse_graph6(graph6);
    }
};

void add_graph_input(CLI::App* cmd, GraphInput& in) {
    cmd->add_option("graph6", in.graph6, "Graph in graph6 format");
    cmd->add_option("-f,--family", in.family, "Family spec, e.g. P4+P4+K1, K2,3, !K2,2, E5");
}

json recognition_json(const FamilyRecognition& f) {
    json j = {{"is_complete", f.is_complete}, {"is_empty", f.is_empty}};
    j["complete_bipartite_parts"] =
        f.complete_bipartite_parts ? json::array({f.complete_bipartite_parts->first, f.complete_bipartite_parts->second})
                                   : json(nullptr);
    j["union_of_two_cliques"] =
        f.union_of_two_cliques ? json::array({f.union_of_two_cliques->first, f.union_of_two_cliques->second})
                               : json(nullptr);
    return j;
}

json rank_pair_json(const RankPair& r) {
    return {{"n", r.n}, {"f_g", r.f_g}, {"f_gbar", r.f_gbar}, {"product", r.product()}, {"sum", r.sum()}};
}

json verdict_json(const BoundVerdict& v) {
    return {{"theorem", std::string(to_string(v.theorem_id))},
            {"applicable", v.applicable},
            {"bound", v.bound},
            {"achieved", v.achieved},
            {"holds", v.holds},
            {"equality", v.equality},
            {"characterization_match", v.characterization_match},
            {"detail", v.detail}};
}

int run_rank(const GraphInput& in, bool as_json) {
    const auto g = in.load();
    const auto facts = graph_facts(g);
    const auto mult = multiplicity_identities(g);
    bool violation = false;
    json verdicts = json::array();
    std::ostringstream text;
    text << "graph6  " << emit_graph6(g) << "\n"
         << "n       " << g.order() << "\n"
         << "ranks   rank(A+I) = " << facts.ranks.f_g << ", rank(J-A) = " << facts.ranks.f_gbar
         << ", product " << facts.ranks.product() << ", sum " << facts.ranks.sum() << "\n";
    for (auto id : kAllTheorems) {
        const auto v = verify(id, facts);
        violation = violation || v.is_violation();
        verdicts.push_back(verdict_json(v));
        text << "  " << to_string(id) << ": ";
        if (!v.applicable) {
            text << "n/a\n";
            continue;
        }
        text << (v.is_violation() ? "VIOLATION" : "ok") << " (bound " << v.bound << ", achieved " << v.achieved
             << (v.equality ? ", equality" : "") << ")\n";
    }
    violation = violation || !mult.reconstruction_ok || !mult.within_dimension || !mult.extremal_characterization_ok;
    text << "multiplicities  m_-1 = " << mult.m_minus1 << ", m_0(W) = " << mult.m0_restricted << "\n";

    if (as_json) {
        std::cout << json{{"graph6", emit_graph6(g)},
                          {"ranks", rank_pair_json(facts.ranks)},
                          {"verdicts", verdicts},
                          {"multiplicities",
                           {{"m_minus1", mult.m_minus1},
                            {"m0_restricted", mult.m0_restricted},
                            {"reconstruction_ok", mult.reconstruction_ok},
                            {"within_dimension", mult.within_dimension},
                            {"extremal_characterization_ok", mult.extremal_characterization_ok}}}}
                         .dump()
                  << "\n";
    } else {
        std::cout << text.str();
    }
    return violation ? 1 : 0;
}

int run_classify(const GraphInput& in, bool as_json) {
    const auto g = in.load();
    const auto c = classify_small_rank(g);
    const auto f = recognize_family(g);
    if (as_json) {
        std::cout << json{{"graph6", emit_graph6(g)},
                          {"rank", c.rank},
                          {"class", std::string(to_string(c.rank_class))},
                          {"cross_check", c.cross_check},
                          {"family", recognition_json(f)}}
                         .dump()
                  << "\n";
    } else {
        std::cout << to_string(c.rank_class) << " (rank(A+I) = " << c.rank << ", cross-check "
                  << (c.cross_check ? "ok" : "FAILED") << ")\n"
                  << "family  " << recognition_json(f).dump() << "\n";
    }
    return c.cross_check ? 0 : 1;
}

std::vector<TheoremId> parse_checks(const std::string& spec) {
    if (spec == "all") return {kAllTheorems.begin(), kAllTheorems.end()};
    std::vector<TheoremId> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(parse_theorem_id(item));
    return out;
}

struct SweepArgs {
    std::size_t n = 0;
    std::string file;
    std::string checks = "all";
    std::string mode = "exact";
    std::string out;
    std::string format = "jsonl";
    std::size_t workers = 0;
    std::uint64_t prime = 0;
    std::size_t inventory_limit = 100000;
    bool long_run = false;
    bool lenient = false;
};

int run_sweep(const SweepArgs& a) {
    if ((a.n == 0) == a.file.empty()) throw std::invalid_argument("sweep: give exactly one of --n or --file");
    const auto source = a.file.empty() ? SweepSource::labeled(a.n, a.long_run) : SweepSource::file(a.file, a.lenient);
    SweepOptions opts;
    opts.checks = parse_checks(a.checks);
    opts.mode = parse_sweep_mode(a.mode);
    opts.workers = a.workers;
    if (a.prime) opts.prime = a.prime;
    opts.inventory_limit = a.inventory_limit;
    if (a.format != "jsonl" && a.format != "csv") throw std::invalid_argument("sweep: --format must be jsonl or csv");
    const auto format = a.format == "csv" ? ReportFormat::Csv : ReportFormat::Jsonl;

    const auto report = sweep(source, opts);
    if (a.out.empty()) {
        write_report(report, format, std::cout);
    } else {
        write_report(report, format, std::filesystem::path(a.out));
    }
    std::fprintf(stderr, "%s: %llu graphs, %zu violations, %.2f s\n", report.source.c_str(),
                 static_cast<unsigned long long>(report.graph_count), report.violations.size(), report.seconds);
    return report.violations.empty() ? 0 : 1;
}

int run_construct(std::size_t n, std::size_t to, const std::string& claim_name, int variant) {
    const auto claim = parse_claim(claim_name);
    const auto last = to ? to : n;
    bool ok = true;
    for (auto k = n; k <= last; ++k) {
        const auto c = tightness_witness(claim, k, variant);
        const auto& cert = c.certificate;
        ok = ok && cert.verified;
        std::cout << json{{"graph6", emit_graph6(c.graph)},
                          {"n", k},
                          {"recipe", cert.recipe.as_family().to_string()},
                          {"case", cert.recipe.case_id},
                          {"claim", std::string(to_string(cert.claim))},
                          {"ranks", rank_pair_json(cert.rank_pair)},
                          {"verified", cert.verified}}
                         .dump()
                  << "\n";
    }
    return ok ? 0 : 1;
}

int run_paths(std::size_t max_m) {
    bool ok = true;
    std::cout << "m,formula_rank,elimination_rank,match,rank_j_minus_a,kernel_dim_symbolic,note\n";
    for (std::size_t m = 1; m <= max_m; ++m) {
        const auto g = path_graph(m);
        const auto formula = path_complement_rank(m);
        const auto pair = complement_rank_pair(g);
        const bool match = formula == pair.f_g;
        std::string symbolic = "";
        std::string note;
        if (m % 2 == 0) {
            const auto t = kernel_of_j_minus_path(m);
            symbolic = std::to_string(t.kernel_dim);
            const bool lemma = pair.f_gbar == m && t.kernel_dim == 0 && t.elimination_kernel_dim == 0;
            ok = ok && lemma;
            note = lemma ? "even: J-A nonsingular" : "even: J-A CHECK FAILED";
        } else {
            note = "odd: exploratory";
        }
        ok = ok && match;
        std::cout << m << ',' << formula << ',' << pair.f_g << ',' << (match ? "yes" : "NO") << ',' << pair.f_gbar
                  << ',' << symbolic << ',' << note << '\n';
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ngrank: complement rank rank(A_G + I), its Nordhaus-Gaddum bounds and full-rank constructions"};
    app.require_subcommand(1);

    GraphInput rank_in;
    bool rank_json = false;
    auto* rank = app.add_subcommand("rank", "Rank pair and every bound verdict for one graph");
    add_graph_input(rank, rank_in);
    rank->add_flag("--json", rank_json, "Emit JSON");

    GraphInput class_in;
    bool class_json = false;
    auto* classify = app.add_subcommand("classify", "Small-rank class and family recognition");
    add_graph_input(classify, class_in);
    classify->add_flag("--json", class_json, "Emit JSON");

    SweepArgs sa;
    auto* sweep_cmd = app.add_subcommand("sweep", "Run the bound checks over a corpus");
    sweep_cmd->add_option("--n", sa.n, "Enumerate all labeled graphs of this order");
    sweep_cmd->add_option("--file", sa.file, "graph6 file, one graph per line");
    sweep_cmd->add_option("--checks", sa.checks, "all, or comma-separated theorem ids")->capture_default_str();
    sweep_cmd->add_option("--mode", sa.mode, "exact | modular-with-boundary-reverify")->capture_default_str();
    sweep_cmd->add_option("--out", sa.out, "Report path (stdout if omitted)");
    sweep_cmd->add_option("--format", sa.format, "jsonl | csv")->capture_default_str();
    sweep_cmd->add_option("--workers", sa.workers, "Worker threads (default: NGRANK_WORKERS or all cores)");
    sweep_cmd->add_option("--prime", sa.prime, "Modulus for modular mode (default: random 61-bit prime)");
    sweep_cmd->add_option("--inventory-limit", sa.inventory_limit, "graph6 strings kept per equality inventory")
        ->capture_default_str();
    sweep_cmd->add_flag("--long-run", sa.long_run, "Allow --n 8 (268M labeled graphs)");
    sweep_cmd->add_flag("--lenient", sa.lenient, "Skip malformed graph6 lines instead of failing");

    std::size_t cn = 0;
    std::size_t cto = 0;
    std::string claim = "FullRankBoth";
    int variant = 0;
    auto* construct = app.add_subcommand("construct", "Build and certify an extremal graph");
    construct->add_option("--n", cn, "Order")->required();
    construct->add_option("--to", cto, "Build every order from --n up to this one");
    construct->add_option("--claim", claim, "FullRankBoth | ProductEquals2n | ProductEquals3nMinus3 | SumEqualsNPlus1")
        ->capture_default_str();
    construct->add_option("--variant", variant, "Alternative witness for ProductEquals3nMinus3 (0 or 1)");

    std::size_t max_m = 30;
    auto* paths = app.add_subcommand("paths", "Path rank formula against elimination");
    paths->add_option("--max-m", max_m, "Largest path order")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (rank->parsed()) return run_rank(rank_in, rank_json);
        if (classify->parsed()) return run_classify(class_in, class_json);
        if (sweep_cmd->parsed()) return run_sweep(sa);
        if (construct->parsed()) return run_construct(cn, cto, claim, variant);
        if (paths->parsed()) return run_paths(max_m);
    } catch (const std::exception& e) {
        std::cerr << "ngrank: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
