#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "quadgenus/error.hpp"
#include "quadgenus/labels.hpp"

namespace qg {

using Vertex = int; // dense index into the graph's label table

/// Loopless simple graph over labelled vertices.
/// Vertex indices follow label order (numerics ascending, then words).
class SimpleGraph {
public:
    static constexpr int kMaxVertices = 31;

    SimpleGraph() = default;

    explicit SimpleGraph(std::vector<Label> labels) : labels_(std::move(labels)) {
        std::sort(labels_.begin(), labels_.end());
        if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end())
            throw ValidationError("duplicate vertex label");
        if (static_cast<int>(labels_.size()) > kMaxVertices)
            throw ValidationError("too many vertices (max " + std::to_string(kMaxVertices) + ")");
        adj_.assign(labels_.size(), 0);
    }

    void add_edge(Vertex u, Vertex v) {
        if (u == v) throw ValidationError("loop at vertex " + label(u).str());
        if (adjacent(u, v)) throw ValidationError("parallel edge " + label(u).str() + "-" + label(v).str());
        adj_[u] |= 1u << v;
        adj_[v] |= 1u << u;
        ++q_;
    }

    int p() const { return static_cast<int>(labels_.size()); }
    int q() const { return q_; }
    const Label& label(Vertex v) const { return labels_[v]; }
    const std::vector<Label>& labels() const { return labels_; }

    Vertex index_of(const Label& l) const {
        auto it = std::lower_bound(labels_.begin(), labels_.end(), l);
        if (it == labels_.end() || *it != l)
            throw ValidationError("unknown vertex '" + l.str() + "'");
        return static_cast<Vertex>(it - labels_.begin());
    }
    bool has_label(const Label& l) const {
        auto it = std::lower_bound(labels_.begin(), labels_.end(), l);
        return it != labels_.end() && *it == l;
    }

    bool adjacent(Vertex u, Vertex v) const { return (adj_[u] >> v) & 1u; }
    uint32_t neighbor_mask(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return __builtin_popcount(adj_[v]); }

    std::vector<Vertex> neighbors(Vertex v) const {
        std::vector<Vertex> out;
        for (uint32_t m = adj_[v]; m; m &= m - 1) out.push_back(__builtin_ctz(m));
        return out;
    }

    bool connected() const {
        if (p() == 0) return false;
        uint32_t seen = 1, frontier = 1;
        while (frontier) {
            uint32_t next = 0;
            for (uint32_t m = frontier; m; m &= m - 1) next |= adj_[__builtin_ctz(m)];
            frontier = next & ~seen;
            seen |= next;
        }
        return __builtin_popcount(seen) == p();
    }

    friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) = default;

    /// K_p on numeric labels 0..p-1.
    static SimpleGraph complete(int p) {
        SimpleGraph g(numeric_labels(p));
        for (Vertex u = 0; u < p; ++u)
            for (Vertex v = u + 1; v < p; ++v) g.add_edge(u, v);
        return g;
    }

    /// K_p minus the edges of a K_i on the final i vertices; those vertices
    /// get the customary apex names x, y, z, w, u, v.
    static SimpleGraph complete_minus_clique(int p, int i) {
        if (i < 0 || i > p) throw ValidationError("clique size out of range");
        static const char* kApex[] = {"x", "y", "z", "w", "u", "v"};
        if (i > 6) throw ValidationError("at most 6 apex vertices supported");
        std::vector<Label> ls = numeric_labels(p - i);
        for (int k = 0; k < i; ++k) ls.push_back(Label::word(kApex[k]));
        SimpleGraph g(std::move(ls));
        int m = p - i;
        for (Vertex u = 0; u < m; ++u)
            for (Vertex v = u + 1; v < m; ++v) g.add_edge(u, v);
        for (Vertex u = 0; u < m; ++u)
            for (Vertex a = m; a < p; ++a) g.add_edge(u, a);
        return g;
    }

    /// Join K_m + complement-of-K_t; same graph as K_{m+t} minus K_t.
    static SimpleGraph join_complement(int m, int t) { return complete_minus_clique(m + t, t); }

private:
    static std::vector<Label> numeric_labels(int p) {
        std::vector<Label> ls;
        ls.reserve(p);
        for (int v = 0; v < p; ++v) ls.push_back(Label::number(v));
        return ls;
    }

    std::vector<Label> labels_;
    std::vector<uint32_t> adj_;
    int q_ = 0;
};

/// CLI graph mini-language: complete:p | complete_minus_clique:p,i | join:m,t
inline SimpleGraph parse_graph_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw ParseError("graph spec needs 'name:args'");
    std::string name = spec.substr(0, colon), args = spec.substr(colon + 1);
    auto two_ints = [&](int& a, int& b) {
        auto comma = args.find(',');
        if (comma == std::string::npos) throw ParseError("graph spec '" + name + "' needs two arguments");
        a = std::stoi(args.substr(0, comma));
        b = std::stoi(args.substr(comma + 1));
    };
    if (name == "complete") return SimpleGraph::complete(std::stoi(args));
    if (name == "complete_minus_clique") {
        int p, i;
        two_ints(p, i);
        return SimpleGraph::complete_minus_clique(p, i);
    }
    if (name == "join") {
        int m, t;
        two_ints(m, t);
        return SimpleGraph::join_complement(m, t);
    }
    throw ParseError("unknown graph spec '" + name + "'");
}

} // namespace qg
