#pragma once

#include <stdexcept>
#include <string>

namespace booklab {

enum class ErrorKind {
  kInvalidParameter,
  kCapacityExceeded,
  kUnsupportedRegime,
  kInvalidMove,
  kInvalidInput,
  kResourceLimit,
  kParse,
};

/// Single exception type for the library; kind() drives CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

const char* to_string(ErrorKind kind) noexcept;

}  // namespace booklab
