#pragma once

#include <map>
#include <string>

#include "quadgenus/faces.hpp"

namespace qg {

/// Face counts by length plus the Euler-derived genus.
struct FaceCensus {
    int p = 0, q = 0, r = 0;
    std::map<int, int> by_length; // r_i, i >= 3
    int genus = 0;

    int count(int len) const {
        auto it = by_length.find(len);
        return it == by_length.end() ? 0 : it->second;
    }
    std::string str() const {
        std::string s = "{";
        for (auto [len, n] : by_length) {
            if (s.size() > 1) s += ", ";
            s += std::to_string(len) + ":" + std::to_string(n);
        }
        return s + "}";
    }
    friend bool operator==(const FaceCensus&, const FaceCensus&) = default;
};

inline FaceCensus census_of(const FaceList& faces, const RotationScheme& scheme) {
    FaceCensus c;
    c.p = scheme.p();
    c.q = scheme.q();
    c.r = faces.count();
    for (const auto& f : faces.faces()) c.by_length[static_cast<int>(f.size())]++;
    if (faces.total_darts() != 2 * c.q)
        throw CorruptionError("invalid rotation system state: dart partition broken");
    int chi = c.p - c.q + c.r;
    if (chi % 2 != 0 || chi > 2)
        throw CorruptionError("invalid rotation system state: Euler characteristic " +
                              std::to_string(chi));
    c.genus = (2 - chi) / 2;
    return c;
}

inline FaceCensus census_of(const RotationScheme& scheme) {
    return census_of(trace_faces(scheme), scheme);
}

inline int min_face_length(const FaceCensus& census) {
    if (census.by_length.empty()) throw ValidationError("empty face census");
    return census.by_length.begin()->first;
}

/// For a complete-graph embedding with min face >= 4, returns
/// sum_{i>=5} (i-4) r_i = 2q - 4r and checks the exact relation
/// 8*genus = p(p-5) + 8 + that sum.
inline int genus_identity_check(const FaceCensus& census) {
    if (min_face_length(census) < 4)
        throw ValidationError("genus identity needs min face length >= 4");
    if (census.q != census.p * (census.p - 1) / 2)
        throw ValidationError("genus identity applies to complete graphs only");
    int excess = 0;
    for (auto [len, n] : census.by_length)
        if (len >= 5) excess += (len - 4) * n;
    if (excess != 2 * census.q - 4 * census.r)
        throw CorruptionError("invalid rotation system state: census sums inconsistent");
    if (8 * census.genus != census.p * (census.p - 5) + 8 + excess)
        throw CorruptionError("invalid rotation system state: genus identity violated");
    return excess;
}

} // namespace qg
