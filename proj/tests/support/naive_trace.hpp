#pragma once

// Test-only face-tracing oracle. Deliberately primitive and independent of
// the library's dart bookkeeping: rotations are plain string rows, darts are
// string pairs, the successor is found by scanning the row. Used to
// cross-check trace_faces and everything built on it.

#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Row = std::vector<std::string>;
using Rows = std::map<std::string, Row>;

inline std::string row_after(const Row& row, const std::string& u) {
    for (size_t i = 0; i < row.size(); ++i)
        if (row[i] == u) return row[(i + 1) % row.size()];
    throw std::runtime_error("oracle: '" + u + "' not in row");
}

// Multiset of face lengths of the embedding given by clockwise rows.
inline std::multiset<int> face_lengths(const Rows& rows) {
    std::set<std::pair<std::string, std::string>> unused;
    for (auto& [v, row] : rows)
        for (auto& u : row) unused.insert({v, u});
    std::multiset<int> lengths;
    while (!unused.empty()) {
        auto start = *unused.begin();
        auto d = start;
        int len = 0;
        do {
            unused.erase(d);
            ++len;
            d = {d.second, row_after(rows.at(d.second), d.first)};
        } while (d != start);
        lengths.insert(len);
    }
    return lengths;
}

inline int euler_genus(int p, int q, int r) {
    int chi = p - q + r;
    if (chi % 2 != 0) throw std::runtime_error("oracle: odd Euler characteristic");
    return (2 - chi) / 2;
}

} // namespace oracle
