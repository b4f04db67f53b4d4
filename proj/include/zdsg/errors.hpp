#pragma once

#include <stdexcept>
#include <string>

namespace zdsg {

/// Caller violated a precondition (bad index, unsupported size, wrong table shape).
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

/// Reading or writing an external file failed.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace zdsg
