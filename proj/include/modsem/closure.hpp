#pragma once

#include <cstddef>
#include <string>
#include <utility>

#include "modsem/errors.hpp"

namespace modsem {

// Iterates x, step(x), step(step(x)), ... until two consecutive values are
// equal and returns that value. `step` is expected to be the inflation of some
// operator, so the sequence is increasing; on a carrier whose chains have at
// most `bound` strict steps it must stabilize within `bound` applications.
template <class T, class Step>
T iterate_to_stability(T start, Step&& step, std::size_t bound, const char* what = "closure") {
    T current = std::move(start);
    for (std::size_t i = 0; i <= bound; ++i) {
        T next = step(current);
        if (next == current) return current;
        current = std::move(next);
    }
    throw IterationLimit(std::string(what) + " did not stabilize within " + std::to_string(bound + 1) +
                         " steps");
}

} // namespace modsem
