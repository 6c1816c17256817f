#pragma once

#include <stdexcept>
#include <string>

namespace sparsetree {

enum class ErrorKind {
  InvalidArgument,
  ParseError,
  MissingTerminal,
  UnknownVertex,
  DuplicateVertex,
  NonpositiveCapacity,
  SelfLoop,
  WeightSumNotOne,
  VertexSetMismatch,
  NonInjectiveCorrespondence,
  UnknownTerminal,
  IdentifierCollision,
  NotATree,
  NotUnitCapacities,
  NotLeafTerminalForm,
  NoNonterminalAvailable,
  UnmappedVertex,
  TooManyExtensions,
  UnknownEdge,
  SameTerminal,
  NotALeafTerminal,
  NonterminalAdjacency,
  SingleRay,
  OverlappingSets,
  EmptySide,
  TooManyTerminals,
  ZeroDemand,
};

const char* to_string(ErrorKind kind);

// Library failures. The message names the offending element.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sparsetree
