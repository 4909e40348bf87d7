#pragma once

// Extra fixtures used by several test files.

#include "ioma/algebra.hpp"

namespace ioma::testing {

/// Direct square of the two-element Boolean model; quantum-Wajsberg.
inline FiniteAlgebra make_p4() {
    return FiniteAlgebra::validate(
        {"00", "01", "10", "11"},
        {{3, 3, 3, 3}, {2, 3, 2, 3}, {1, 1, 3, 3}, {0, 1, 2, 3}},
        3, 0);
}

/// Four-element Lukasiewicz chain; quantum-Wajsberg, totally ordered.
inline FiniteAlgebra make_l4() {
    return FiniteAlgebra::validate(
        {"0", "a", "b", "1"},
        {{3, 3, 3, 3}, {2, 3, 3, 3}, {1, 2, 3, 3}, {0, 1, 2, 3}},
        3, 0);
}

}  // namespace ioma::testing
