#pragma once

#include <string>
#include <vector>

#include "cis/enumerate.hpp"
#include "cis/reduction.hpp"
#include "cis/symmetry.hpp"

namespace cis {

/// Conjunctions of (optionally negated) named predicates:
///   connected, regular, irreducible, co-irreducible, cis, well-covered,
///   co-well-covered, triangle-free, complete-bipartite, vertex-transitive,
///   p4, max-clique-separated, true
/// plus the comparisons omega=K, omega<=K, omega>=K, alpha=K, alpha<=K,
/// alpha>=K, valency=K. Terms are joined with '&', negated with a leading
/// '!': e.g. "connected&omega<=2&cis" or "co-well-covered&omega=3&max-clique-separated".
class PredicateExpr {
    enum class Atom {
        always,
        connected,
        regular,
        irreducible,
        co_irreducible,
        cis,
        well_covered,
        co_well_covered,
        triangle_free,
        complete_bipartite,
        vertex_transitive,
        p4,
        max_clique_separated,
        omega_cmp,
        alpha_cmp,
        valency_cmp,
    };
    struct Term {
        bool negate = false;
        Atom atom = Atom::always;
        int cmp = 0;   // -1: <=, 0: =, +1: >=
        int value = 0; // comparison operand
    };
    std::vector<Term> terms_;

public:
    static PredicateExpr parse(const std::string& text) {
        PredicateExpr e;
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t amp = text.find('&', start);
            std::string tok =
                amp == std::string::npos ? text.substr(start) : text.substr(start, amp - start);
            Term t;
            while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t')) tok.erase(0, 1);
            while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t')) tok.pop_back();
            if (tok.empty()) throw error(errc::bad_input, "empty predicate term");
            if (tok[0] == '!') {
                t.negate = true;
                tok.erase(0, 1);
            }
            auto cmp_tail = [&](const std::string& head) -> bool {
                if (tok.rfind(head, 0) != 0) return false;
                std::string rest = tok.substr(head.size());
                if (rest.rfind("<=", 0) == 0) {
                    t.cmp = -1;
                    rest = rest.substr(2);
                } else if (rest.rfind(">=", 0) == 0) {
                    t.cmp = +1;
                    rest = rest.substr(2);
                } else if (rest.rfind("=", 0) == 0) {
                    t.cmp = 0;
                    rest = rest.substr(1);
                } else {
                    return false;
                }
                try {
                    std::size_t used = 0;
                    t.value = std::stoi(rest, &used);
                    if (used != rest.size()) throw std::invalid_argument(rest);
                } catch (...) {
                    throw error(errc::bad_input, "bad comparison value in '" + tok + "'");
                }
                return true;
            };
            if (tok == "true")
                t.atom = Atom::always;
            else if (tok == "connected")
                t.atom = Atom::connected;
            else if (tok == "regular")
                t.atom = Atom::regular;
            else if (tok == "irreducible")
                t.atom = Atom::irreducible;
            else if (tok == "co-irreducible")
                t.atom = Atom::co_irreducible;
            else if (tok == "cis")
                t.atom = Atom::cis;
            else if (tok == "well-covered")
                t.atom = Atom::well_covered;
            else if (tok == "co-well-covered")
                t.atom = Atom::co_well_covered;
            else if (tok == "triangle-free")
                t.atom = Atom::triangle_free;
            else if (tok == "complete-bipartite")
                t.atom = Atom::complete_bipartite;
            else if (tok == "vertex-transitive")
                t.atom = Atom::vertex_transitive;
            else if (tok == "p4")
                t.atom = Atom::p4;
            else if (tok == "max-clique-separated")
                t.atom = Atom::max_clique_separated;
            else if (cmp_tail("omega"))
                t.atom = Atom::omega_cmp;
            else if (cmp_tail("alpha"))
                t.atom = Atom::alpha_cmp;
            else if (cmp_tail("valency"))
                t.atom = Atom::valency_cmp;
            else
                throw error(errc::bad_input, "unknown predicate '" + tok + "'");
            e.terms_.push_back(t);
            if (amp == std::string::npos) break;
            start = amp + 1;
        }
        return e;
    }

    bool eval(const Graph& g, long clique_limit = default_enumeration_limit,
              const SymmetryOptions& sym = {}) const {
        auto compare = [](int lhs, int cmp, int rhs) {
            if (cmp < 0) return lhs <= rhs;
            if (cmp > 0) return lhs >= rhs;
            return lhs == rhs;
        };
        for (const auto& t : terms_) {
            bool v = true;
            switch (t.atom) {
            case Atom::always: v = true; break;
            case Atom::connected: v = is_connected(g); break;
            case Atom::regular: v = profile(g).is_regular; break;
            case Atom::irreducible: v = is_irreducible(g); break;
            case Atom::co_irreducible: v = is_co_irreducible(g); break;
            case Atom::cis: v = is_cis(g, clique_limit).is_cis; break;
            case Atom::well_covered: v = is_well_covered(g, clique_limit).verdict; break;
            case Atom::co_well_covered: v = is_co_well_covered(g, clique_limit).verdict; break;
            case Atom::triangle_free: v = is_triangle_free(g); break;
            case Atom::complete_bipartite: v = is_complete_bipartite(g); break;
            case Atom::vertex_transitive: v = transitivity(g, sym).is_vertex_transitive; break;
            case Atom::p4: v = p4_property(g).holds; break;
            case Atom::max_clique_separated: v = max_cliques_separated(g, clique_limit); break;
            case Atom::omega_cmp:
                v = compare(maximal_cliques(g, clique_limit).max_size(), t.cmp, t.value);
                break;
            case Atom::alpha_cmp:
                v = compare(maximal_stable_sets(g, clique_limit).max_size(), t.cmp, t.value);
                break;
            case Atom::valency_cmp: {
                auto p = profile(g);
                v = p.is_regular && compare(p.valency, t.cmp, t.value);
                break;
            }
            }
            if (t.negate) v = !v;
            if (!v) return false;
        }
        return true;
    }
};

} // namespace cis
