#pragma once

#include <stdexcept>
#include <string>

namespace prodspec {

// Categories line up with the CLI exit codes (2, 3, 4) and the C API status
// values; Internal marks a broken invariant inside the library itself.
enum class ErrorKind {
  Precondition,
  Disconnected,
  Parse,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace prodspec
