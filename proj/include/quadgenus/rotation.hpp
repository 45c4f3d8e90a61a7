#pragma once

#include <algorithm>
#include <compare>
#include <utility>
#include <vector>

#include "quadgenus/graph.hpp"

namespace qg {

/// Oriented edge (u,v); every edge uv contributes the two darts (u,v), (v,u).
struct Dart {
    Vertex from = -1, to = -1;
    friend bool operator==(const Dart&, const Dart&) = default;
    friend std::strong_ordering operator<=>(const Dart&, const Dart&) = default;
};

inline Dart reversed(Dart d) { return {d.to, d.from}; }

/// A graph plus one clockwise cyclic neighbor order per vertex.
/// Rotations are stored rotated so the least neighbor comes first; two
/// schemes compare equal iff they are the same embedding.
class RotationScheme {
public:
    RotationScheme() = default;

    RotationScheme(SimpleGraph graph, std::vector<std::vector<Vertex>> rotations)
        : graph_(std::move(graph)), rot_(std::move(rotations)) {
        if (static_cast<int>(rot_.size()) != graph_.p())
            throw ValidationError("rotation count does not match vertex count");
        for (Vertex v = 0; v < graph_.p(); ++v) validate_row(v);
        for (auto& row : rot_) canonicalize(row);
        build_succ();
    }

    const SimpleGraph& graph() const { return graph_; }
    int p() const { return graph_.p(); }
    int q() const { return graph_.q(); }
    const std::vector<Vertex>& rotation(Vertex v) const { return rot_[v]; }

    /// pi_v(u): neighbor following u in the clockwise order at v.
    Vertex next_at(Vertex v, Vertex u) const { return succ_[v * p() + u]; }

    /// Face successor of a dart: (u,v) -> (v, pi_v(u)).
    Dart face_next(Dart d) const { return {d.to, next_at(d.to, d.from)}; }

    /// Scheme with vertices renamed by perm (perm[v] = image index); the
    /// image keeps the same label table.
    RotationScheme relabeled(const std::vector<Vertex>& perm) const {
        std::vector<std::vector<Vertex>> rows(p());
        for (Vertex v = 0; v < p(); ++v) {
            auto& out = rows[perm[v]];
            out.reserve(rot_[v].size());
            for (Vertex u : rot_[v]) out.push_back(perm[u]);
        }
        return RotationScheme(graph_, std::move(rows));
    }

    friend bool operator==(const RotationScheme& a, const RotationScheme& b) = default;

private:
    void validate_row(Vertex v) {
        const auto& row = rot_[v];
        uint32_t seen = 0;
        for (Vertex u : row) {
            if (u < 0 || u >= graph_.p())
                throw ValidationError("rotation at " + graph_.label(v).str() + " names a bad vertex");
            if (!graph_.adjacent(v, u))
                throw ValidationError("rotation at " + graph_.label(v).str() + " names non-neighbor " +
                                      graph_.label(u).str());
            if (seen & (1u << u))
                throw ValidationError("rotation at " + graph_.label(v).str() + " repeats neighbor " +
                                      graph_.label(u).str());
            seen |= 1u << u;
        }
        if (seen != graph_.neighbor_mask(v))
            throw ValidationError("rotation at " + graph_.label(v).str() + " misses a neighbor");
    }

    static void canonicalize(std::vector<Vertex>& row) {
        if (row.empty()) return;
        auto least = std::min_element(row.begin(), row.end());
        std::rotate(row.begin(), least, row.end());
    }

    void build_succ() {
        succ_.assign(static_cast<size_t>(p()) * p(), -1);
        for (Vertex v = 0; v < p(); ++v) {
            const auto& row = rot_[v];
            for (size_t i = 0; i < row.size(); ++i)
                succ_[v * p() + row[i]] = row[(i + 1) % row.size()];
        }
    }

    SimpleGraph graph_;
    std::vector<std::vector<Vertex>> rot_;
    std::vector<Vertex> succ_;
};

} // namespace qg
