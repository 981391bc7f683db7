#pragma once

#include <stdexcept>
#include <string>

namespace apsp {

enum class ErrorCode {
  kInvalidArgument,
  kParse,
  kIo,
  kVertexNotPresent,
  kDisconnected,
  kTooLarge,
  kCorrupt,
};

/// Every failure raised by the library carries one of the codes above so the
/// C API can translate it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message) : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace apsp
