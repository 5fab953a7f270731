#pragma once

#include <stdexcept>
#include <string>

namespace toricfil {

enum class ErrorKind {
  NotFullDimensional,
  NotStronglyConvex,
  DimensionMismatch,
  NormalOutsideCone,
  PointOutsideDualCone,
  NotCobounded,
  ConeMismatch,
  NonpositiveScale,
  NotMPrimary,
  NotInteriorValuation,
  NoCommonBound,
  OutOfRangeT,
  ToleranceTooTight,
  NotQGorenstein,
  NotKlt,
  ModeMismatch,
  UnsupportedRank,
  ParseError,
  ValidationError,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace toricfil
