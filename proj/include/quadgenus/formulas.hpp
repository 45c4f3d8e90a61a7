#pragma once

#include "quadgenus/error.hpp"

namespace qg {

/// Quadrangular genus of K_p in orientable surfaces: ceil(p(p-5)/8) + 1.
inline int gamma4(int p) {
    if (p < 5) throw ValidationError("gamma4 requires p >= 5");
    return (p * (p - 5) + 7) / 8 + 1;
}

/// Nonorientable counterpart: ceil(p(p-5)/4) + 2. Value oracle only.
inline int gamma4_nonorientable(int p) {
    if (p < 5) throw ValidationError("gamma4_nonorientable requires p >= 5");
    return (p * (p - 5) + 3) / 4 + 2;
}

} // namespace qg
