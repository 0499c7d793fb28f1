#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pmt {

enum class ErrorCode {
  InvalidTree,
  InvalidConfiguration,
  NonAdjacent,
  DestinationOccupied,
  PebbleRestsOnTransShipment,
  SourceNotHole,
  TransShipmentSource,
  PathBlocked,
  TransShipmentTarget,
  InsufficientCandidates,
  NotConnectedSubtree,
  NotEnoughHoles,
  InfeasibleAssumption,
  InternalStuck,
  DegenerateGeometry,
  PreconditionHoleDeficit,
  TargetIsTransShipment,
  ValidationFailed,
  AssumptionUnsatisfiable,
  ParseError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by the plan replayer; index is the offending move.
class PlanError : public Error {
 public:
  PlanError(ErrorCode cause, std::size_t index, const std::string& what)
      : Error(cause, what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class ParseError : public Error {
 public:
  ParseError(int line, std::string field, const std::string& what)
      : Error(ErrorCode::ParseError, "line " + std::to_string(line) + " (" + field + "): " + what),
        line_(line),
        field_(std::move(field)) {}
  int line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  int line_;
  std::string field_;
};

}  // namespace pmt
