#pragma once

#include <stdexcept>

namespace fairtile {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input fails a structural precondition: too few vertices, coincident or
// non-finite points, zero-length edges, non-convex vertex lists.
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

}  // namespace fairtile
