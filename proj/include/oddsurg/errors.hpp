#pragma once

#include <stdexcept>

namespace oddsurg {

// Legendrian (tb, rot) pair outside the Eliashberg-Fraser range.
struct InvalidInvariants : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The Chern vector has no rational preimage under the linking matrix,
// so c_1 restricts to a non-torsion class on the boundary.
struct NonTorsionChern : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A value expected in Z + 1/2 was not.
struct NotHalfInteger : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace oddsurg
