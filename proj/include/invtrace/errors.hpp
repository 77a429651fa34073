#pragma once

#include <stdexcept>
#include <string>

namespace invtrace {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad type/rank, non-dominant weight, unparsable objective.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A configured resource cap (rank, orbit size, pair queue) was hit.
class Infeasible : public Error {
 public:
  using Error::Error;
};

// Exact sign or root identification could not be settled within the
// refinement budget.
class Undecided : public Error {
 public:
  using Error::Error;
};

}  // namespace invtrace
