#ifndef GRIN_ERRORS_HPP
#define GRIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace grin {

enum class ErrorCode {
  DuplicateEdge,
  SelfLoop,
  VertexOutOfRange,
  NegativeWeight,
  MalformedGraph6,
  MalformedEdgeList,
  DimensionMismatch,
  EmptyEdgeSet,
  NotTwoRegular,
  DisconnectedCycle,
  DisconnectedGraph,
  IsolatedInSet,
  CycleNotInSet,
  DegreeTooSmall,
  UnknownName,
  NTooLarge,
  IoError,
  InvalidArgument,
  Internal,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

// True for codes caused by bad user input (files, names, CLI args), as opposed
// to internal invariant failures. The CLI maps the former to exit code 2.
bool is_input_error(ErrorCode code);

}  // namespace grin

#endif
