#pragma once

#include <stdexcept>
#include <string>

namespace mvgeo {

enum class ErrorCode {
  EmptyInput,
  EmptyBody,
  InvalidParams,
  SingularMatrix,
  OriginNotInterior,
  DegenerateRadial,
  DegenerateBody,
  WrongStratum,
  InvalidDimension,
  ParseError,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mvgeo
