#pragma once

#include <optional>

#include "quadgenus/census.hpp"
#include "quadgenus/quad_rule.hpp"

namespace qg {

struct VerifyReport {
    FaceCensus census;
    int min_face_len = 0;
    int required_min_face = 0;
    bool pass = false;
    std::optional<QuadRuleResult> quad_rule; // populated when required == 4
};

inline VerifyReport verify_scheme(const RotationScheme& scheme, int min_face) {
    VerifyReport r;
    r.census = census_of(scheme);
    r.min_face_len = min_face_length(r.census);
    r.required_min_face = min_face;
    r.pass = r.min_face_len >= min_face;
    if (min_face == 4) r.quad_rule = quadrangular_rule_check(scheme);
    return r;
}

} // namespace qg
