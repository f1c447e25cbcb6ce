#include "flagbundle/lattice.hpp"

#include <cstdlib>

#include "flagbundle/error.hpp"

namespace flagbundle {

IsogenyLattice::IsogenyLattice(DynkinDiagram d, IntMatrix basis, std::string name)
    : diagram_(std::move(d)),
      basis_(std::move(basis)),
      smith_(smith_normal_form(basis_)),
      name_(std::move(name)) {}

IsogenyLattice IsogenyLattice::adjoint(const DynkinDiagram& d) {
  return {d, IntMatrix::identity(static_cast<std::size_t>(d.rank())), "adjoint"};
}

IsogenyLattice IsogenyLattice::simply_connected(const DynkinDiagram& d) {
  return {d, cartan_matrix(d), "sc"};
}

IsogenyLattice IsogenyLattice::custom(const DynkinDiagram& d, const IntMatrix& basis) {
  const auto k = static_cast<std::size_t>(d.rank());
  if (basis.rows() != k || basis.cols() != k)
    throw Error(ErrorKind::InvalidLattice, "basis must be " + std::to_string(k) + "x" +
                                               std::to_string(k));
  if (determinant(basis) == 0) throw Error(ErrorKind::InvalidLattice, "basis is singular");
  IsogenyLattice l(d, basis, "custom");
  const IntMatrix c = cartan_matrix(d);
  for (std::size_t t = 0; t < k; ++t)
    if (!membership(c.column(t), l))
      throw Error(ErrorKind::InvalidLattice,
                  "simple coroot " + std::to_string(t + 1) + " is not in the lattice");
  return l;
}

bool IsogenyLattice::operator==(const IsogenyLattice& o) const {
  if (!(diagram_ == o.diagram_)) return false;
  for (std::size_t c = 0; c < basis_.cols(); ++c)
    if (!membership(basis_.column(c), o) || !membership(o.basis_.column(c), *this)) return false;
  return true;
}

Cocycle::Cocycle(IsogenyLattice lattice, Coweight coords)
    : lattice_(std::move(lattice)), coords_(std::move(coords)) {
  if (!membership(coords_.span(), lattice_))
    throw Error(ErrorKind::NotInLattice,
                "cocycle " + to_string(coords_.span()) + " is not in the " + lattice_.name() +
                    " lattice of " + lattice_.diagram().to_string());
}

Tag tag_of(const Cocycle& theta) {
  // delta(theta)_t = alpha_t(theta), the t-th fundamental-coweight coordinate.
  return Tag(theta.coords().values);
}

std::optional<AdmissibilityWitness> is_admissible(const Tag& t, const IsogenyLattice& l) {
  if (t.size() != static_cast<std::size_t>(l.rank()))
    throw Error(ErrorKind::RankMismatch, "tag rank does not match lattice rank");
  auto x = solve_integer(l.smith(), t.span());
  if (!x) return std::nullopt;
  return AdmissibilityWitness{Cocycle(l, Coweight(t.values)), std::move(*x)};
}

Int admissible_index(const IsogenyLattice& l) { return std::llabs(determinant(l.basis())); }

Int smith_index(const IsogenyLattice& l) {
  Int p = 1;
  for (Int f : l.smith().invariant_factors()) p = checked_mul(p, f);
  return p;
}

bool membership(std::span<const Int> v, const IsogenyLattice& l) {
  if (v.size() != static_cast<std::size_t>(l.rank()))
    throw Error(ErrorKind::RankMismatch, "vector of rank " + std::to_string(v.size()) +
                                             " tested against lattice of rank " +
                                             std::to_string(l.rank()));
  return solve_integer(l.smith(), v).has_value();
}

}  // namespace flagbundle
