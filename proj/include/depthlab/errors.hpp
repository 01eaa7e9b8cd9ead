#pragma once

#include <stdexcept>
#include <string>

namespace depthlab {

struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when an operation would need to materialize a set larger than the
// configured cap.  Operations refuse rather than approximate.
struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

// Internal contradiction: bad fusion data, non-integral inner product,
// a table failing orthogonality, and the like.
struct InconsistencyError : std::runtime_error {
    explicit InconsistencyError(const std::string& msg) : std::runtime_error(msg) {}
};

// Materialization cap; DEPTHLAB_CAP overrides the default of 10^4.
std::size_t materialization_cap();

}  // namespace depthlab
