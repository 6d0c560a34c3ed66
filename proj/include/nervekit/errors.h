#pragma once

#include <stdexcept>
#include <string>

namespace nervekit {

// Malformed input: bad files, out-of-range vertices, mismatched dimensions.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// A caller broke an operation's documented precondition.
class PreconditionError : public std::logic_error {
 public:
  explicit PreconditionError(const std::string& what) : std::logic_error(what) {}
};

// A configured size or enumeration cap would be exceeded.
class LimitError : public std::runtime_error {
 public:
  explicit LimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nervekit
