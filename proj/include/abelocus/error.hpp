#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace abelocus {

enum class ErrorKind {
  InvalidArgument,
  NotComplementary,
  NoSolution,
  NotInSiegelSpace,
  OutsideFamily,
  Degenerate,
  EmbeddingInvalid,
  LemmaViolation,
  UnsupportedMagnitude,
  BoundExceeded,
  InternalConsistency,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a kind so that front ends can
/// map it to an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace abelocus

#define ABELOCUS_STRINGIFY2(x) #x
#define ABELOCUS_STRINGIFY(x) ABELOCUS_STRINGIFY2(x)
// Checks a fact that the mathematics guarantees; a failure is a library bug.
#define ABELOCUS_ASSERT(x)                                                   \
  do {                                                                       \
    if (!(x))                                                                \
      ::abelocus::fail(::abelocus::ErrorKind::InternalConsistency,           \
                       __FILE__ ":" ABELOCUS_STRINGIFY(__LINE__)             \
                                    ": consistency check failed: " #x);      \
  } while (0)
