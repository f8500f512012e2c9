#pragma once

#include <stdexcept>
#include <string>

namespace rpg {

/// Malformed or infeasible caller input (bad parameters, out-of-range vertices,
/// over-sized requests).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A postcondition the library guarantees did not hold.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace rpg
