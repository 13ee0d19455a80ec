#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace homalg {

enum class ErrorKind {
  DimensionMismatch,
  SingularMatrix,
  RoleMismatch,
  UnknownKind,
  NotMultiplicative,
  OperatorInvalid,
  NotCommuting,
  HessianInvalid,
  EndomorphismInvalid,
  NotAMorphism,
  UnknownDirection,
  UnknownRecipe,
  ParseError,
  SchemaError,
};

inline std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::RoleMismatch: return "RoleMismatch";
    case ErrorKind::UnknownKind: return "UnknownKind";
    case ErrorKind::NotMultiplicative: return "NotMultiplicative";
    case ErrorKind::OperatorInvalid: return "OperatorInvalid";
    case ErrorKind::NotCommuting: return "NotCommuting";
    case ErrorKind::HessianInvalid: return "HessianInvalid";
    case ErrorKind::EndomorphismInvalid: return "EndomorphismInvalid";
    case ErrorKind::NotAMorphism: return "NotAMorphism";
    case ErrorKind::UnknownDirection: return "UnknownDirection";
    case ErrorKind::UnknownRecipe: return "UnknownRecipe";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SchemaError: return "SchemaError";
  }
  return "?";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), detail_(what) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// The message without the kind prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace homalg
