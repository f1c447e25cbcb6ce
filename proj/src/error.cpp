#include "flagbundle/error.hpp"

namespace flagbundle {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedToken: return "malformed-token";
    case ErrorKind::InvalidRank: return "invalid-rank";
    case ErrorKind::NotACartanMatrix: return "not-a-cartan-matrix";
    case ErrorKind::RankMismatch: return "rank-mismatch";
    case ErrorKind::IndexOutOfRange: return "index-out-of-range";
    case ErrorKind::NotConnected: return "not-connected";
    case ErrorKind::GroupTooLarge: return "group-too-large";
    case ErrorKind::InvalidLattice: return "invalid-lattice";
    case ErrorKind::NotInLattice: return "not-in-lattice";
    case ErrorKind::NotDominant: return "not-dominant";
    case ErrorKind::DiagramMismatch: return "diagram-mismatch";
    case ErrorKind::LatticeMismatch: return "lattice-mismatch";
    case ErrorKind::ComponentMissesI: return "component-misses-I";
    case ErrorKind::RankTooLarge: return "rank-too-large";
  }
  return "unknown";
}

}  // namespace flagbundle
