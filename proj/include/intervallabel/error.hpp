#pragma once

#include <stdexcept>
#include <string>

namespace intervallabel {

enum class ErrorCode {
  kInvalidArgument = 1,
  kParse = 2,
  kTooLarge = 3,
  kNotApplicable = 4,
  kIo = 5,
};

// Every failure raised by the library carries one of the codes above so the
// C boundary can translate it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace intervallabel
