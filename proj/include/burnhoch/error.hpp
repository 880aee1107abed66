#pragma once

#include <stdexcept>
#include <string>

namespace burnhoch {

enum class ErrorKind {
  descriptor_mismatch,
  domain,
  validation,
  capability,
  incomplete_mackey,
  not_stabilized,
  parse,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace burnhoch
