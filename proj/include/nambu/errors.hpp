#ifndef NAMBU_ERRORS_HPP
#define NAMBU_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nambu {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SyntaxError : Error {
  std::size_t pos;
  SyntaxError(const std::string& msg, std::size_t at)
      : Error(msg + " (at offset " + std::to_string(at) + ")"), pos(at) {}
};

struct UnknownSymbol : Error {
  using Error::Error;
};

struct UnboundParameter : Error {
  explicit UnboundParameter(const std::string& name)
      : Error("unbound parameter: " + name) {}
};

struct NonRealResult : Error {
  using Error::Error;
};

struct SingularFrame : Error {
  using Error::Error;
};

struct NonClosedExponential : Error {
  using Error::Error;
};

struct DegenerateBasis : Error {
  using Error::Error;
};

struct AnsatzNotClosed : Error {
  using Error::Error;
};

struct FormatError : Error {
  using Error::Error;
};

struct JacobiViolation : Error {
  using Error::Error;
};

struct NotProportional : Error {
  using Error::Error;
};

struct StepSizeInvalid : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace nambu

#endif
