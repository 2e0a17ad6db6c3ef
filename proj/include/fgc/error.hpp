#pragma once

#include <stdexcept>
#include <string>

namespace fgc {

enum class ErrorCode {
  InvalidArgument,  // bad parameters / domain violations
  Parse,            // malformed descriptor expression or group file
  Validate,         // table fails a group law, negative coefficient, ...
  Unsupported,      // request outside the supported range (e.g. iso > 64)
  Io,               // file system trouble
  Internal,         // consistency failure that signals a bug or corrupted data
  CheckFailed,      // a verification produced a counterexample
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace fgc
