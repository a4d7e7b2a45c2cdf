#pragma once

#include <stdexcept>

namespace alcove {

// Malformed or out-of-range input (bad type string, node index, point syntax).
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A configured search cap or budget would be exceeded. Never raised for
// silent truncation: any operation that cannot finish within its limits
// throws this instead.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace alcove
