#pragma once

#include <stdexcept>
#include <string>

namespace oscc {

// Root of every error thrown by the library. Each module derives its own
// kinds so callers can catch precisely or catch everything at the CLI edge.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace oscc
