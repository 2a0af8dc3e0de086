#pragma once

#include <stdexcept>
#include <string>

namespace srlsoa {

enum class ErrorCode {
  MissingFile,
  BadMagic,
  TruncatedPayload,
  NonFiniteValue,
  IoFailure,
  IndexOutOfRange,
  ShapeMismatch,
  BadKernelSize,
  BadConfig,
  NonFiniteLoss,
  KTooLarge,
  EmptyAnnotation,
  EmptyTrainSet,
  EmptyConfusion,
  SingularSystem,
  DegenerateData,
  ParseError,
  DimMismatch,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace srlsoa
