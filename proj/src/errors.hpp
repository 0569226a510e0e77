#pragma once

#include <stdexcept>
#include <string>

namespace frobtwist {

enum class ErrorKind {
  invalid_input,  // malformed files, violated preconditions, domain mismatches
  limit,          // a size guard was exceeded
  internal        // an invariant the library relies on failed
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail_input(const std::string& msg) {
  throw Error(ErrorKind::invalid_input, msg);
}

[[noreturn]] inline void fail_limit(const std::string& msg) {
  throw Error(ErrorKind::limit, msg);
}

[[noreturn]] inline void fail_internal(const std::string& msg) {
  throw Error(ErrorKind::internal, msg);
}

}  // namespace frobtwist
