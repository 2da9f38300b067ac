// Enumeration bounds.  Every routine that can enumerate an exponential family
// takes a Limits value and refuses (refusal_error) before starting work that
// would exceed it.  Defaults are sized for desk-scale instances.
#pragma once

#include <cstddef>

#include "errors.hpp"

namespace omwb {

struct Limits {
    int max_ground_set = 9;         // covector/vector/tope enumeration bound on n
    std::size_t max_faces = 500000; // per-complex face budget

    void check_ground_set(int n, const char* what) const {
        if (n > max_ground_set)
            throw refusal_error(std::string(what) + ": ground set of size " + std::to_string(n) +
                                " exceeds the enumeration bound " + std::to_string(max_ground_set));
    }
    void check_faces(std::size_t count, const char* what) const {
        if (count > max_faces)
            throw refusal_error(std::string(what) + ": face count " + std::to_string(count) +
                                " exceeds the complex budget " + std::to_string(max_faces));
    }
};

} // namespace omwb
