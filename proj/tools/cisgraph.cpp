// cisgraph: construct, inspect and verify the graphs of the CIS toolkit.
//
// Exit codes: 0 success/verified, 1 counterexample or negative verdict,
// 2 input error, 3 budget exceeded.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cis/families.hpp"
#include "cis/graph6.hpp"
#include "cis/predicate_expr.hpp"
#include "cis/report.hpp"
#include "cis/suites.hpp"

using nlohmann::json;

namespace {

bool looks_like_family_spec(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) return false;
    std::string kind = s.substr(0, colon);
    for (const char* k : {"K", "Kmn", "C", "LKnn", "PX", "Q", "R", "S", "Cayley"})
        if (kind == k) return true;
    return false;
}

cis::Graph parse_graph_arg(const std::string& s) {
    // ':' (58) is below the graph6 byte range, so the two syntaxes cannot collide
    if (looks_like_family_spec(s)) return cis::FamilySpec::parse(s).build();
    return cis::graph6_decode(s);
}

json report_to_json(const cis::GraphReport& r) {
    json j;
    j["id"] = r.id;
    j["graph6"] = r.g6;
    j["order"] = r.order;
    j["edges"] = r.edges;
    j["connected"] = r.connected;
    j["regular"] = r.regular;
    if (r.regular) j["valency"] = r.valency;
    j["irreducible"] = r.irreducible;
    if (r.enumeration_error) {
        j["error"] = *r.enumeration_error;
    } else {
        j["alpha"] = *r.alpha;
        j["omega"] = *r.omega;
        j["well_covered"] = *r.well_covered;
        if (r.wc_witness)
            j["wc_witness"] = {r.wc_witness->first.to_string(), r.wc_witness->second.to_string()};
        j["co_well_covered"] = *r.co_well_covered;
        if (r.cowc_witness)
            j["cowc_witness"] = {r.cowc_witness->first.to_string(),
                                 r.cowc_witness->second.to_string()};
        j["cis"] = *r.cis;
        if (r.cis_witness)
            j["cis_witness"] = {{"clique", r.cis_witness->first.to_string()},
                                {"stable", r.cis_witness->second.to_string()}};
    }
    if (r.vertex_transitive) j["vertex_transitive"] = *r.vertex_transitive;
    if (r.aut_order) j["aut_order"] = *r.aut_order;
    if (r.symmetry_error) j["symmetry_error"] = *r.symmetry_error;
    if (r.chi) j["chi"] = *r.chi;
    if (r.chi_error) j["chi_error"] = *r.chi_error;
    if (r.time_ms) j["time_ms"] = *r.time_ms;
    return j;
}

void print_suite(const cis::SuiteResult& r) { std::cout << cis::suite_result_to_text(r); }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cisgraph: exact toolkit for CIS graphs, their families and verification suites"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    long limit_cliques = cis::default_enumeration_limit;
    long budget = 5'000'000;
    int jobs = 1;
    unsigned seed = 0;
    std::string format = "g6";
    bool long_run = false;
    app.add_option("--limit-cliques", limit_cliques, "maximal-set enumeration limit");
    app.add_option("--budget", budget, "symmetry search node budget");
    app.add_option("--jobs", jobs, "worker threads for exhaustive scans");
    app.add_option("--seed", seed, "seed for randomized suite cases");
    app.add_option("--format", format, "g6 | edges (graphs), jsonl (reports)");
    app.add_flag("--long", long_run, "enable long-running variants (order-8 scans, Q_7 Cayley check)");

    auto* c_construct = app.add_subcommand("construct", "build a family graph and print it");
    std::string construct_spec;
    c_construct->add_option("spec", construct_spec, "family spec, e.g. Q:7 or Kmn:3,4")->required();

    auto* c_props = app.add_subcommand("props", "full property report per input graph");
    std::vector<std::string> props_inputs;
    bool props_chi = false, props_vt = false, props_timings = false;
    c_props->add_option("inputs", props_inputs, "graph6 strings or family specs")->required();
    c_props->add_flag("--chi", props_chi, "compute the exact chromatic number");
    c_props->add_flag("--vt", props_vt, "compute vertex-transitivity and |Aut|");
    c_props->add_flag("--timings", props_timings, "include timings (makes output non-reproducible)");

    auto* c_enum = app.add_subcommand("enumerate", "stream all isomorphism classes matching a predicate");
    int enum_order = 0;
    std::string enum_pred = "true";
    c_enum->add_option("-n,--order", enum_order, "graph order (<=7; 8 needs --long)")->required();
    c_enum->add_option("--pred", enum_pred, "predicate expression, terms joined by & and negated by !");

    auto* c_scan = app.add_subcommand("scan", "scan a graph6 catalog file");
    std::string scan_path, scan_pred;
    bool closure_check = false;
    c_scan->add_option("file", scan_path, "file with one graph6 line per graph")->required();
    c_scan->add_option("--pred", scan_pred, "only report graphs matching this predicate");
    c_scan->add_flag("--closure-check", closure_check,
                     "check vertex-transitive CIS graphs for membership in the family closure");

    auto* c_verify = app.add_subcommand("verify", "run a named verification suite");
    std::string verify_suite;
    c_verify->add_option("suite", verify_suite, "one of: families, vt-cis-equivalence, lex-product, "
                                                "quotient, coollemma, triangle-free, locals, "
                                                "omega3-small, valency7-positive, q-noncayley, "
                                                "open-questions")
        ->required();

    auto* c_explore = app.add_subcommand("explore", "open-question scans (reports, not proofs)");
    std::string explore_q;
    int explore_max_order = 7, explore_from = 4, explore_to = 8;
    c_explore->add_option("question", explore_q, "q1 | q2 | q3")->required();
    c_explore->add_option("--max-order", explore_max_order, "scan bound for q1/q3");
    c_explore->add_option("--from", explore_from, "first Q_n index for q2");
    c_explore->add_option("--to", explore_to, "last Q_n index for q2");

    auto* c_iso = app.add_subcommand("iso", "test two graphs for isomorphism");
    std::vector<std::string> iso_inputs;
    c_iso->add_option("inputs", iso_inputs, "two graph6 strings or family specs")
        ->expected(2)
        ->required();

    auto* c_canon = app.add_subcommand("canon", "print the canonical graph6 form");
    std::vector<std::string> canon_inputs;
    c_canon->add_option("inputs", canon_inputs, "graph6 strings or family specs")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    cis::SymmetryOptions sym{budget};
    cis::SuiteOptions sopt;
    sopt.seed = seed;
    sopt.long_run = long_run;
    sopt.jobs = jobs;
    sopt.clique_limit = limit_cliques;
    sopt.sym = sym;

    try {
        if (*c_construct) {
            cis::Graph g = cis::FamilySpec::parse(construct_spec).build();
            if (format == "edges")
                std::cout << cis::edge_list_encode(g);
            else
                std::cout << cis::graph6_encode(g) << '\n';
            return 0;
        }

        if (*c_props) {
            cis::ReportOptions ropt;
            ropt.with_chi = props_chi;
            ropt.with_vt = props_vt;
            ropt.with_timing = props_timings;
            ropt.clique_limit = limit_cliques;
            ropt.sym = sym;
            bool first = true;
            for (const auto& input : props_inputs) {
                cis::Graph g = parse_graph_arg(input);
                auto rep = cis::analyze_graph(g, input, ropt);
                if (format == "jsonl") {
                    std::cout << report_to_json(rep).dump() << '\n';
                } else {
                    if (!first) std::cout << '\n';
                    std::cout << cis::report_to_text(rep, g);
                }
                first = false;
            }
            return 0;
        }

        if (*c_enum) {
            if (enum_order > 7 && !long_run)
                throw cis::error(cis::errc::order_too_large,
                                 "order-8 enumeration iterates 2^28 labeled graphs; pass --long");
            auto pred = cis::PredicateExpr::parse(enum_pred);
            cis::for_each_graph_class(
                enum_order,
                [&](const cis::Graph& g) {
                    if (pred.eval(g, limit_cliques, sym)) std::cout << cis::graph6_encode(g) << '\n';
                },
                jobs);
            return 0;
        }

        if (*c_scan) {
            std::ifstream in(scan_path);
            if (!in) throw cis::error(cis::errc::bad_input, "cannot open " + scan_path);
            std::optional<cis::PredicateExpr> pred;
            if (!scan_pred.empty()) pred = cis::PredicateExpr::parse(scan_pred);
            cis::SuiteResult summary;
            summary.suite = "scan";
            cis::ReportOptions ropt;
            ropt.with_vt = true;
            ropt.clique_limit = limit_cliques;
            ropt.sym = sym;
            std::map<int, std::vector<std::string>> closure_cache; // order -> canonical forms
            std::string line;
            long lineno = 0;
            bool first = true;
            while (std::getline(in, line)) {
                ++lineno;
                while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
                if (line.empty()) continue;
                cis::Graph g = cis::complete_graph(1);
                try {
                    g = cis::graph6_decode(line);
                } catch (const cis::error& e) {
                    std::cerr << "scan: skipping line " << lineno << ": " << e.what() << '\n';
                    continue;
                }
                if (pred && !pred->eval(g, limit_cliques, sym)) continue;
                auto rep = cis::analyze_graph(g, scan_path + ":" + std::to_string(lineno), ropt);
                if (format == "jsonl") {
                    std::cout << report_to_json(rep).dump() << '\n';
                } else {
                    if (!first) std::cout << '\n';
                    std::cout << cis::report_to_text(rep, g);
                }
                first = false;
                bool vt = rep.vertex_transitive.value_or(false);
                bool cis_flag = rep.cis.value_or(false);
                if (closure_check && vt && cis_flag) {
                    auto& canon = closure_cache[g.order()];
                    if (canon.empty())
                        for (const auto& member : cis::closure_members(g.order(), 8, sym))
                            canon.push_back(cis::canonical_form(member, sym));
                    std::string key = cis::canonical_form(g, sym);
                    bool found = std::find(canon.begin(), canon.end(), key) != canon.end();
                    summary.record(found, g,
                                   "vertex-transitive CIS graph at line " + std::to_string(lineno) +
                                       " must lie in the family closure");
                } else {
                    summary.record(true, g, "scanned");
                }
            }
            if (format != "jsonl" && !first) std::cout << '\n';
            print_suite(summary);
            return summary.passed() ? 0 : 1;
        }

        if (*c_verify) {
            auto res = cis::run_suite(verify_suite, sopt);
            print_suite(res);
            return res.passed() ? 0 : 1;
        }

        if (*c_explore) {
            cis::SuiteResult res;
            if (explore_q == "q1")
                res = cis::explore_q1(explore_max_order, sopt);
            else if (explore_q == "q2")
                res = cis::explore_q2(explore_from, explore_to, sopt);
            else if (explore_q == "q3")
                res = cis::explore_q3(explore_max_order, sopt);
            else
                throw cis::error(cis::errc::bad_input, "question must be q1, q2 or q3");
            print_suite(res);
            return res.passed() ? 0 : 1;
        }

        if (*c_iso) {
            cis::Graph a = parse_graph_arg(iso_inputs[0]);
            cis::Graph b = parse_graph_arg(iso_inputs[1]);
            bool iso = cis::are_isomorphic(a, b, sym);
            std::cout << "isomorphic=" << (iso ? "true" : "false") << '\n';
            return iso ? 0 : 1;
        }

        if (*c_canon) {
            for (const auto& input : canon_inputs)
                std::cout << cis::canonical_form(parse_graph_arg(input), sym) << '\n';
            return 0;
        }
    } catch (const cis::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        switch (e.code()) {
        case cis::errc::enumeration_limit:
        case cis::errc::search_budget_exceeded:
        case cis::errc::group_too_large:
            return 3;
        default:
            return 2;
        }
    }
    return 0;
}
