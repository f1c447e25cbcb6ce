#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace flagbundle {

// Every domain failure carries one of these kinds; the CLI reports the
// kebab-case name returned by to_string().
enum class ErrorKind {
  MalformedToken,
  InvalidRank,
  NotACartanMatrix,
  RankMismatch,
  IndexOutOfRange,
  NotConnected,
  GroupTooLarge,
  InvalidLattice,
  NotInLattice,
  NotDominant,
  DiagramMismatch,
  LatticeMismatch,
  ComponentMissesI,
  RankTooLarge,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace flagbundle
