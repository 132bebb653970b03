#pragma once

#include <stdexcept>
#include <string>

namespace rab {

enum class ErrorKind {
  kUsage,
  kParse,
  kValidate,
  kPrecondition,
  kLimit,
  kInternal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

// Internal consistency checks. These guard the well-definedness arguments the
// word model relies on; a failure is a bug, not a user error.
inline void require_internal(bool ok, const std::string& msg) {
  if (!ok) fail(ErrorKind::kInternal, msg);
}

}  // namespace rab
