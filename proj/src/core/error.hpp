#pragma once

#include <stdexcept>
#include <string>

namespace tropexp {

enum class ErrorCode {
  NotSurjective,
  NotSaturated,
  NotAVertexCone,
  NotAStratum,
  MissingOneComplex,
  InvalidTube,
  NotBivalent,
  ImproperIntersection,
  PointOutsideBase,
  ParseError,
  SchemaError,
  ValidationError,
  UnknownName,
  Unsupported,
  Internal,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotSurjective: return "NotSurjective";
    case ErrorCode::NotSaturated: return "NotSaturated";
    case ErrorCode::NotAVertexCone: return "NotAVertexCone";
    case ErrorCode::NotAStratum: return "NotAStratum";
    case ErrorCode::MissingOneComplex: return "MissingOneComplex";
    case ErrorCode::InvalidTube: return "InvalidTube";
    case ErrorCode::NotBivalent: return "NotBivalent";
    case ErrorCode::ImproperIntersection: return "ImproperIntersection";
    case ErrorCode::PointOutsideBase: return "PointOutsideBase";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::Internal: return "Internal";
  }
  return "Internal";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + msg), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tropexp
