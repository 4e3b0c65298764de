#pragma once

#include <numeric>
#include <vector>

#include "cis/error.hpp"
#include "cis/graph.hpp"

namespace cis {

/// Z_{m_1} x ... x Z_{m_k} under componentwise addition. Elements are
/// addressed by rank: the tuple reads as a mixed-radix number, first
/// coordinate most significant.
class AbelianGroup {
    std::vector<int> moduli_;
    int order_;

public:
    explicit AbelianGroup(std::vector<int> moduli) : moduli_(std::move(moduli)) {
        if (moduli_.empty()) throw error(errc::bad_parameter, "group needs at least one modulus");
        long ord = 1;
        for (int m : moduli_) {
            if (m < 2) throw error(errc::bad_parameter, "modulus must be at least 2");
            ord *= m;
            if (ord > max_vertices)
                throw error(errc::bad_parameter, "group order exceeds vertex cap");
        }
        order_ = static_cast<int>(ord);
    }

    int order() const { return order_; }
    int identity() const { return 0; }
    const std::vector<int>& moduli() const { return moduli_; }

    std::vector<int> tuple_of(int rank) const {
        std::vector<int> t(moduli_.size());
        for (int i = static_cast<int>(moduli_.size()) - 1; i >= 0; --i) {
            t[i] = rank % moduli_[i];
            rank /= moduli_[i];
        }
        return t;
    }

    int rank_of(const std::vector<int>& tuple) const {
        if (tuple.size() != moduli_.size())
            throw error(errc::bad_parameter, "tuple arity does not match moduli");
        int r = 0;
        for (std::size_t i = 0; i < moduli_.size(); ++i) {
            int c = tuple[i] % moduli_[i];
            if (c < 0) c += moduli_[i];
            r = r * moduli_[i] + c;
        }
        return r;
    }

    int multiply(int a, int b) const {
        auto ta = tuple_of(a), tb = tuple_of(b);
        for (std::size_t i = 0; i < moduli_.size(); ++i) ta[i] = (ta[i] + tb[i]) % moduli_[i];
        return rank_of(ta);
    }

    int inverse(int a) const {
        auto t = tuple_of(a);
        for (std::size_t i = 0; i < moduli_.size(); ++i) t[i] = (moduli_[i] - t[i]) % moduli_[i];
        return rank_of(t);
    }
};

/// Finite group given by its full multiplication table. Validated on
/// construction: Latin square rows and columns, two-sided identity,
/// associativity.
class GroupTable {
    int order_;
    std::vector<int> table_; // table_[a*order_+b] = a*b
    int identity_;

public:
    GroupTable(int order, std::vector<int> table) : order_(order), table_(std::move(table)) {
        if (order < 1 || order > max_vertices)
            throw error(errc::bad_parameter, "group order out of range");
        if (static_cast<int>(table_.size()) != order * order)
            throw error(errc::bad_group_table, "table size must be order^2");
        for (int x : table_)
            if (x < 0 || x >= order) throw error(errc::bad_group_table, "entry out of range");
        for (int a = 0; a < order; ++a) {
            std::vector<bool> row(order, false), col(order, false);
            for (int b = 0; b < order; ++b) {
                if (row[at(a, b)]) throw error(errc::bad_group_table, "repeated entry in row");
                row[at(a, b)] = true;
                if (col[at(b, a)]) throw error(errc::bad_group_table, "repeated entry in column");
                col[at(b, a)] = true;
            }
        }
        identity_ = -1;
        for (int e = 0; e < order; ++e) {
            bool ok = true;
            for (int a = 0; a < order && ok; ++a) ok = at(e, a) == a && at(a, e) == a;
            if (ok) {
                identity_ = e;
                break;
            }
        }
        if (identity_ < 0) throw error(errc::bad_group_table, "no identity element");
        for (int a = 0; a < order; ++a)
            for (int b = 0; b < order; ++b)
                for (int c = 0; c < order; ++c)
                    if (at(at(a, b), c) != at(a, at(b, c)))
                        throw error(errc::bad_group_table, "associativity fails");
    }

    int order() const { return order_; }
    int identity() const { return identity_; }
    int multiply(int a, int b) const { return at(a, b); }

    int inverse(int a) const {
        for (int b = 0; b < order_; ++b)
            if (at(a, b) == identity_) return b;
        throw error(errc::bad_group_table, "no inverse"); // unreachable after validation
    }

private:
    int at(int a, int b) const { return table_[a * order_ + b]; }
};

/// Inverse-closed, identity-free subset of a group, kept as a sorted list
/// of element ranks. Duplicate listings collapse.
template <class Group>
class ConnectionSet {
    std::vector<int> elems_;

public:
    ConnectionSet(const Group& g, std::vector<int> elems) {
        std::sort(elems.begin(), elems.end());
        elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
        for (int s : elems) {
            if (s < 0 || s >= g.order()) throw error(errc::bad_parameter, "element out of range");
            if (s == g.identity())
                throw error(errc::identity_in_connection_set, "connection set contains the identity");
        }
        for (int s : elems)
            if (!std::binary_search(elems.begin(), elems.end(), g.inverse(s)))
                throw error(errc::not_inverse_closed,
                            "inverse of element " + std::to_string(s) + " missing");
        elems_ = std::move(elems);
    }

    const std::vector<int>& elements() const { return elems_; }
    int size() const { return static_cast<int>(elems_.size()); }
};

/// Vertices are the group elements by rank; g ~ h iff g^{-1}h lies in the
/// connection set. |S|-regular by construction.
template <class Group>
Graph cayley_graph(const Group& g, const ConnectionSet<Group>& s) {
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < g.order(); ++a)
        for (int x : s.elements()) {
            int b = g.multiply(a, x);
            if (a < b) edges.emplace_back(a, b);
        }
    return Graph::from_edges(g.order(), edges);
}

} // namespace cis
