#pragma once

#include <algorithm>
#include <vector>

#include "quadgenus/rotation.hpp"

namespace qg {

using Face = std::vector<Dart>; // closed boundary walk, one dart per step

/// Faces of the embedding carried by a rotation scheme. Each dart lies on
/// exactly one face; faces are rotated to start at their least dart and
/// listed sorted by that dart.
class FaceList {
public:
    FaceList() = default;
    explicit FaceList(std::vector<Face> faces) : faces_(std::move(faces)) {
        for (auto& f : faces_) canonicalize(f);
        std::sort(faces_.begin(), faces_.end(),
                  [](const Face& a, const Face& b) { return a.front() < b.front(); });
    }

    const std::vector<Face>& faces() const { return faces_; }
    int count() const { return static_cast<int>(faces_.size()); }
    int total_darts() const {
        int n = 0;
        for (const auto& f : faces_) n += static_cast<int>(f.size());
        return n;
    }

    /// Faces are named by their least dart.
    const Face& by_id(Dart least) const {
        for (const auto& f : faces_)
            if (f.front() == least) return f;
        throw ValidationError("no face with least dart " + std::to_string(least.from) + ">" +
                              std::to_string(least.to));
    }
    int index_of(Dart least) const {
        for (size_t i = 0; i < faces_.size(); ++i)
            if (faces_[i].front() == least) return static_cast<int>(i);
        return -1;
    }

private:
    static void canonicalize(Face& f) {
        auto least = std::min_element(f.begin(), f.end());
        std::rotate(f.begin(), least, f.end());
    }

    std::vector<Face> faces_;
};

/// Partitions the 2q darts into face boundary walks via the successor rule
/// succ(u,v) = (v, pi_v(u)), all rotations read clockwise.
inline FaceList trace_faces(const RotationScheme& scheme) {
    const SimpleGraph& g = scheme.graph();
    if (!g.connected())
        throw ValidationError("disconnected graph: not a 2-cell embedding candidate");
    const int p = g.p();
    std::vector<char> used(static_cast<size_t>(p) * p, 0);
    std::vector<Face> faces;
    for (Vertex u = 0; u < p; ++u) {
        for (uint32_t m = g.neighbor_mask(u); m; m &= m - 1) {
            Dart start{u, __builtin_ctz(m)};
            if (used[start.from * p + start.to]) continue;
            Face f;
            Dart d = start;
            do {
                used[d.from * p + d.to] = 1;
                f.push_back(d);
                d = scheme.face_next(d);
            } while (!(d == start));
            faces.push_back(std::move(f));
        }
    }
    return FaceList(std::move(faces));
}

} // namespace qg
