#pragma once

#include <stdexcept>
#include <string>

namespace sgt {

/// A configured search or enumeration budget ran out before the result
/// was decided.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A gadget-family operation could not validate its input structure.
struct GadgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace sgt
