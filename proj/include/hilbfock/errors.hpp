#pragma once

#include <stdexcept>

namespace hilbfock {

// An input document failed schema or invariant checks.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A provably-true internal property failed; indicates an arithmetic bug.
struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace hilbfock
