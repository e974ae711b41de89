#pragma once

#include <stdexcept>
#include <string>

namespace bstab {

enum class ErrorKind {
  NotDistinctRoots,
  ComplexRoots,
  DegenerateInput,
  SepTooSmall,
  SearchBudgetExceeded,
  InvalidAmbient,
  AmbientMismatch,
  NotInKernel,
  InKernelOfLine,
  AlphaSearchFailed,
  SingularForm,
  WrongSignature,
  AssumptionViolated,
  IndexOutOfRange,
  InvalidParams,
  LatticeMismatch,
  DependentCharacters,
  SepViolation,
  DecompositionFailed,
  InvalidInput,
};

const char* error_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  const char* name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace bstab
