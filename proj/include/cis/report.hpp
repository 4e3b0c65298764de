#pragma once

#include <chrono>
#include <optional>
#include <sstream>
#include <string>

#include "cis/enumerate.hpp"
#include "cis/graph6.hpp"
#include "cis/reduction.hpp"
#include "cis/symmetry.hpp"

namespace cis {

struct ReportOptions {
    bool with_vt = false;     // vertex-transitivity and automorphism group order
    bool with_chi = false;    // exact chromatic number
    bool with_timing = false; // timings make reports non-reproducible, so opt-in
    long clique_limit = default_enumeration_limit;
    int chi_max_order = 64;
    SymmetryOptions sym{};
};

/// One self-contained record per analyzed graph. Negative verdicts carry
/// witnesses that re-verify against the graph before serialization.
struct GraphReport {
    std::string id;
    std::string g6;
    int order = 0;
    int edges = 0;
    bool connected = false;
    bool regular = false;
    int valency = -1;
    bool irreducible = false;
    std::optional<int> alpha, omega;
    std::optional<bool> well_covered, co_well_covered, cis;
    std::optional<std::pair<VertexSet, VertexSet>> wc_witness, cowc_witness, cis_witness;
    std::optional<std::string> enumeration_error;
    std::optional<bool> vertex_transitive;
    std::optional<std::string> aut_order;
    std::optional<std::string> symmetry_error;
    std::optional<int> chi;
    std::optional<std::string> chi_error;
    std::optional<double> time_ms;
};

inline GraphReport analyze_graph(const Graph& g, const std::string& id,
                                 const ReportOptions& opt = {}) {
    auto start = std::chrono::steady_clock::now();
    GraphReport r;
    r.id = id;
    r.g6 = graph6_encode(g);
    r.order = g.order();
    r.edges = g.edge_count();
    auto prof = profile(g);
    r.connected = prof.is_connected;
    r.regular = prof.is_regular;
    r.valency = prof.is_regular ? prof.valency : -1;
    r.irreducible = is_irreducible(g);

    try {
        auto cliques = maximal_cliques(g, opt.clique_limit);
        detail::require_complete(cliques, "clique family truncated");
        auto stables = maximal_stable_sets(g, opt.clique_limit);
        detail::require_complete(stables, "stable-set family truncated");
        r.alpha = stables.max_size();
        r.omega = cliques.max_size();
        auto wc = detail::equal_sizes(stables);
        r.well_covered = wc.verdict;
        r.wc_witness = wc.witness;
        auto cowc = detail::equal_sizes(cliques);
        r.co_well_covered = cowc.verdict;
        r.cowc_witness = cowc.witness;
        r.cis = true;
        for (const auto& c : cliques.members) {
            for (const auto& s : stables.members)
                if (!c.intersects(s)) {
                    r.cis = false;
                    r.cis_witness = {{c, s}};
                    break;
                }
            if (!*r.cis) break;
        }
    } catch (const error& e) {
        if (e.code() != errc::enumeration_limit) throw;
        r.enumeration_error = e.what();
    }

    if (opt.with_vt) {
        try {
            auto grp = automorphism_group(g, opt.sym);
            r.vertex_transitive = grp.orbits.size() == 1;
            r.aut_order = group_order(grp).decimal;
        } catch (const error& e) {
            if (e.code() != errc::search_budget_exceeded) throw;
            r.symmetry_error = e.what();
        }
    }
    if (opt.with_chi) {
        try {
            r.chi = chromatic_number(g, opt.chi_max_order);
        } catch (const error& e) {
            if (e.code() != errc::order_too_large_for_coloring) throw;
            r.chi_error = e.what();
        }
    }
    if (opt.with_timing) {
        auto end = std::chrono::steady_clock::now();
        r.time_ms = std::chrono::duration<double, std::milli>(end - start).count();
    }
    return r;
}

/// key=value lines; records are separated by one blank line. Witnesses are
/// re-verified here so an emitted certificate is always checkable.
inline std::string report_to_text(const GraphReport& r, const Graph& g) {
    std::ostringstream out;
    auto flag = [](bool b) { return b ? "true" : "false"; };
    out << "id=" << r.id << '\n';
    out << "graph6=" << r.g6 << '\n';
    out << "order=" << r.order << '\n';
    out << "edges=" << r.edges << '\n';
    out << "connected=" << flag(r.connected) << '\n';
    out << "regular=" << flag(r.regular) << '\n';
    if (r.regular) out << "valency=" << r.valency << '\n';
    out << "irreducible=" << flag(r.irreducible) << '\n';
    if (r.enumeration_error) {
        out << "error=" << *r.enumeration_error << '\n';
    } else {
        out << "alpha=" << *r.alpha << '\n';
        out << "omega=" << *r.omega << '\n';
        out << "well_covered=" << flag(*r.well_covered) << '\n';
        if (r.wc_witness) {
            if (!is_maximal_stable_set(g, r.wc_witness->first) ||
                !is_maximal_stable_set(g, r.wc_witness->second) ||
                r.wc_witness->first.count() == r.wc_witness->second.count())
                throw std::logic_error("well-covered witness failed re-verification");
            out << "wc_witness_a=" << r.wc_witness->first.to_string() << '\n';
            out << "wc_witness_b=" << r.wc_witness->second.to_string() << '\n';
        }
        out << "co_well_covered=" << flag(*r.co_well_covered) << '\n';
        if (r.cowc_witness) {
            if (!is_maximal_clique(g, r.cowc_witness->first) ||
                !is_maximal_clique(g, r.cowc_witness->second) ||
                r.cowc_witness->first.count() == r.cowc_witness->second.count())
                throw std::logic_error("co-well-covered witness failed re-verification");
            out << "cowc_witness_a=" << r.cowc_witness->first.to_string() << '\n';
            out << "cowc_witness_b=" << r.cowc_witness->second.to_string() << '\n';
        }
        out << "cis=" << flag(*r.cis) << '\n';
        if (r.cis_witness) {
            if (!verify_cis_witness(g, r.cis_witness->first, r.cis_witness->second))
                throw std::logic_error("CIS witness failed re-verification");
            out << "cis_witness_clique=" << r.cis_witness->first.to_string() << '\n';
            out << "cis_witness_stable=" << r.cis_witness->second.to_string() << '\n';
        }
    }
    if (r.vertex_transitive) out << "vertex_transitive=" << flag(*r.vertex_transitive) << '\n';
    if (r.aut_order) out << "aut_order=" << *r.aut_order << '\n';
    if (r.symmetry_error) out << "symmetry_error=" << *r.symmetry_error << '\n';
    if (r.chi) out << "chi=" << *r.chi << '\n';
    if (r.chi_error) out << "chi_error=" << *r.chi_error << '\n';
    if (r.time_ms) out << "time_ms=" << *r.time_ms << '\n';
    return out.str();
}

} // namespace cis
