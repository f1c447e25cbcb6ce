#pragma once

#include <optional>
#include <string>

#include "flagbundle/diagrams.hpp"
#include "flagbundle/linalg.hpp"
#include "flagbundle/types.hpp"

namespace flagbundle {

struct TagBasis {};
// Degrees d_t attached to the nodes of a Dynkin diagram.
using Tag = Coordinates<TagBasis>;

// A lattice L with Q^vee <= L <= P^vee, given by a basis whose columns are
// in fundamental-coweight coordinates. In these coordinates the tagging map
// is the identity, so admissibility of a tag is plain lattice membership.
class IsogenyLattice {
 public:
  // P^vee, the adjoint group.
  static IsogenyLattice adjoint(const DynkinDiagram& d);
  // Q^vee, spanned by the simple coroots (the Cartan columns).
  static IsogenyLattice simply_connected(const DynkinDiagram& d);
  // Throws Error(InvalidLattice) unless the basis is square, nonsingular and
  // its span contains every simple coroot.
  static IsogenyLattice custom(const DynkinDiagram& d, const IntMatrix& basis);

  const DynkinDiagram& diagram() const noexcept { return diagram_; }
  const IntMatrix& basis() const noexcept { return basis_; }
  const SmithForm& smith() const noexcept { return smith_; }
  int rank() const noexcept { return diagram_.rank(); }
  // "adjoint", "sc" or "custom".
  const std::string& name() const noexcept { return name_; }

  // Same diagram and same span.
  bool operator==(const IsogenyLattice& o) const;

 private:
  IsogenyLattice(DynkinDiagram d, IntMatrix basis, std::string name);

  DynkinDiagram diagram_;
  IntMatrix basis_;
  SmithForm smith_;
  std::string name_;
};

// theta in L, stored in fundamental-coweight coordinates.
class Cocycle {
 public:
  // Throws Error(NotInLattice) / Error(RankMismatch).
  Cocycle(IsogenyLattice lattice, Coweight coords);

  const Coweight& coords() const noexcept { return coords_; }
  const IsogenyLattice& lattice() const noexcept { return lattice_; }

 private:
  IsogenyLattice lattice_;
  Coweight coords_;
};

Tag tag_of(const Cocycle& theta);

struct AdmissibilityWitness {
  Cocycle cocycle;                  // tag_of(cocycle) == the queried tag
  IntVector basis_coefficients;     // cocycle = basis * basis_coefficients
};

std::optional<AdmissibilityWitness> is_admissible(const Tag& t, const IsogenyLattice& l);

// Index of the admissible tags in Z^k, |det basis|.
Int admissible_index(const IsogenyLattice& l);

// Product of the Smith invariant factors; equals admissible_index.
Int smith_index(const IsogenyLattice& l);

bool membership(std::span<const Int> v, const IsogenyLattice& l);

}  // namespace flagbundle
