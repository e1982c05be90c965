#pragma once

#include <stdexcept>
#include <string>

namespace pf {

// Bad caller input: malformed files, invalid parameters, violated preconditions.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A hard size cap was exceeded. The message names the cap.
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A self-check failed; indicates a bug in a construction or detector.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace pf
