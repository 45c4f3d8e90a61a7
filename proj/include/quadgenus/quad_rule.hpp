#pragma once

#include <optional>
#include <string>

#include "quadgenus/census.hpp"

namespace qg {

/// Outcome of the corner-rule test for all-quadrilateral embeddings.
struct QuadRuleResult {
    bool pass = false;
    std::string witness; // first failing corner, empty on pass

    explicit operator bool() const { return pass; }
};

/// Corner rule: whenever row i reads "..., j, k, ..." and row k reads
/// "..., i, l, ...", row j must read "..., l, i, ..." and row l must read
/// "..., k, j, ...". Holds at every corner iff every face has length 4.
inline QuadRuleResult quadrangular_rule_check(const RotationScheme& s) {
    const SimpleGraph& g = s.graph();
    for (Vertex i = 0; i < s.p(); ++i) {
        for (Vertex j : s.rotation(i)) {
            Vertex k = s.next_at(i, j);
            Vertex l = s.next_at(k, i);
            auto corner = [&] {
                return "corner (" + g.label(i).str() + ": " + g.label(j).str() + "," +
                       g.label(k).str() + ")";
            };
            if (!g.adjacent(j, l) || s.next_at(j, l) != i)
                return QuadRuleResult{false, corner() + ": row " + g.label(j).str() +
                                                 " lacks \"" + g.label(l).str() + ", " +
                                                 g.label(i).str() + "\""};
            if (s.next_at(l, k) != j)
                return QuadRuleResult{false, corner() + ": row " + g.label(l).str() +
                                                 " lacks \"" + g.label(k).str() + ", " +
                                                 g.label(j).str() + "\""};
        }
    }
    return QuadRuleResult{true, {}};
}

} // namespace qg
