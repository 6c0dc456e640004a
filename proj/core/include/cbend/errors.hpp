#pragma once

#include <stdexcept>
#include <string>

namespace cbend {

enum class ErrorKind {
  PositiveVector,
  DegenerateProjection,
  ZeroArgument,
  UnitModulus,
  FlagMismatch,
  NotHolomorphic,
  DegenerateTriangle,
  NotReal,
  NotAdjacent,
  DegeneratePair,
  DegenerateZ,
  InvalidSignature,
  NotInternalEdge,
  NotBipartite,
  InvalidPath,
  DegenerateValue,
  NonPositiveParameter,
  NotSymmetry,
  InsufficientDepth,
  MissingProvenance,
  Schema,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cbend
