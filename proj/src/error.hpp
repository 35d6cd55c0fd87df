#pragma once

#include <stdexcept>
#include <string>

namespace fjump {

enum class ErrKind {
  parse,          // malformed input text
  precondition,   // contract violation by the caller
  cap_exceeded,   // an iteration cap was hit before stabilization
  overflow,       // exponent or ladder arithmetic left the checked range
  internal,       // invariant violation; indicates a bug
};

class Error : public std::runtime_error {
 public:
  Error(ErrKind kind, std::string msg) : std::runtime_error(std::move(msg)), kind_(kind) {}
  ErrKind kind() const { return kind_; }

 private:
  ErrKind kind_;
};

[[noreturn]] inline void fail_parse(const std::string& m) { throw Error(ErrKind::parse, m); }
[[noreturn]] inline void fail_pre(const std::string& m) { throw Error(ErrKind::precondition, m); }
[[noreturn]] inline void fail_cap(const std::string& m) { throw Error(ErrKind::cap_exceeded, m); }
[[noreturn]] inline void fail_overflow(const std::string& m) { throw Error(ErrKind::overflow, m); }
[[noreturn]] inline void fail_internal(const std::string& m) { throw Error(ErrKind::internal, m); }

}  // namespace fjump
