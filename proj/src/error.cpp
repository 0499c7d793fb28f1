#include "pmt/error.hpp"

namespace pmt {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidTree: return "InvalidTree";
    case ErrorCode::InvalidConfiguration: return "InvalidConfiguration";
    case ErrorCode::NonAdjacent: return "NonAdjacent";
    case ErrorCode::DestinationOccupied: return "DestinationOccupied";
    case ErrorCode::PebbleRestsOnTransShipment: return "PebbleRestsOnTransShipment";
    case ErrorCode::SourceNotHole: return "SourceNotHole";
    case ErrorCode::TransShipmentSource: return "TransShipmentSource";
    case ErrorCode::PathBlocked: return "PathBlocked";
    case ErrorCode::TransShipmentTarget: return "TransShipmentTarget";
    case ErrorCode::InsufficientCandidates: return "InsufficientCandidates";
    case ErrorCode::NotConnectedSubtree: return "NotConnectedSubtree";
    case ErrorCode::NotEnoughHoles: return "NotEnoughHoles";
    case ErrorCode::InfeasibleAssumption: return "InfeasibleAssumption";
    case ErrorCode::InternalStuck: return "InternalStuck";
    case ErrorCode::DegenerateGeometry: return "DegenerateGeometry";
    case ErrorCode::PreconditionHoleDeficit: return "PreconditionHoleDeficit";
    case ErrorCode::TargetIsTransShipment: return "TargetIsTransShipment";
    case ErrorCode::ValidationFailed: return "ValidationFailed";
    case ErrorCode::AssumptionUnsatisfiable: return "AssumptionUnsatisfiable";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace pmt
