#include "grin/errors.hpp"

namespace grin {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::NegativeWeight: return "NegativeWeight";
    case ErrorCode::MalformedGraph6: return "MalformedGraph6";
    case ErrorCode::MalformedEdgeList: return "MalformedEdgeList";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::EmptyEdgeSet: return "EmptyEdgeSet";
    case ErrorCode::NotTwoRegular: return "NotTwoRegular";
    case ErrorCode::DisconnectedCycle: return "DisconnectedCycle";
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::IsolatedInSet: return "IsolatedInSet";
    case ErrorCode::CycleNotInSet: return "CycleNotInSet";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::NTooLarge: return "NTooLarge";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

bool is_input_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateEdge:
    case ErrorCode::SelfLoop:
    case ErrorCode::VertexOutOfRange:
    case ErrorCode::NegativeWeight:
    case ErrorCode::MalformedGraph6:
    case ErrorCode::MalformedEdgeList:
    case ErrorCode::UnknownName:
    case ErrorCode::NTooLarge:
    case ErrorCode::IoError:
      return true;
    default:
      return false;
  }
}

}  // namespace grin
