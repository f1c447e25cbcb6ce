#pragma once

#include <utility>
#include <vector>

#include "flagbundle/lattice.hpp"
#include "flagbundle/rootsys.hpp"
#include "flagbundle/weyl.hpp"

namespace flagbundle {

// Numerical model of a G/B-bundle over the projective line: the isogeny
// lattice of G and a dominant cocycle theta in it. Two models with the same
// lattice are isomorphic exactly when their tags agree.
class FlagBundleModel {
 public:
  // Throws Error(NotDominant) if some coordinate of theta is negative and
  // Error(NotInLattice) if theta is not in the lattice.
  FlagBundleModel(IsogenyLattice lattice, Coweight theta);

  const DynkinDiagram& diagram() const noexcept { return theta_.lattice().diagram(); }
  const IsogenyLattice& lattice() const noexcept { return theta_.lattice(); }
  const Cocycle& theta() const noexcept { return theta_; }

 private:
  Cocycle theta_;
};

// The degrees d_t(w) = <w(alpha_t), theta> of the fundamental section
// indexed by w. The two sections through the t-th pivotal P^1-bundle of
// C_w are C_w and C_{w s_t}, and d_t(w s_t) = -d_t(w).
struct SectionDegrees {
  WeylElement w;
  IntVector degrees;
};

// Greedy sign-fixing reflections. Returns (w . raw, w) with w . raw
// dominant, where w acts on coweights.
std::pair<Coweight, WeylElement> normalize_to_dominant(const RootSystem& rs, const Coweight& raw);

Tag tag(const FlagBundleModel& m);

SectionDegrees fundamental_section_degrees(const RootSystem& rs, const FlagBundleModel& m,
                                           const WeylElement& w);
// One entry per element of W, in canonical order.
std::vector<SectionDegrees> fundamental_sections(const RootSystem& rs, const FlagBundleModel& m,
                                                 std::size_t limit = kDefaultEnumerationLimit);

bool is_minimal_section(const SectionDegrees& sd);
// Every fundamental section with all degrees >= 0. A single element (the
// identity) when theta is strictly dominant.
std::vector<SectionDegrees> minimal_sections(const RootSystem& rs, const FlagBundleModel& m,
                                             std::size_t limit = kDefaultEnumerationLimit);

// Throws Error(DiagramMismatch) / Error(LatticeMismatch).
bool isomorphic(const FlagBundleModel& a, const FlagBundleModel& b);

// Connected components of the diagram, read off the Cartan matrix.
std::vector<NodeSet> diagram_components(const RootSystem& rs);
// Throws Error(ComponentMissesI) unless every component contains a node of I.
void require_components_meet(const RootSystem& rs, const NodeSet& i);

// In what follows I is the set of nodes outside the Levi part of P, and
// Phi+(I) is generated by the simple roots not in I.

// b - c; equals b when I is every node.
CoefficientVector rel_canonical_decomposition(const RootSystem& rs, const NodeSet& i);
// |Phi+| - |Phi+(I)|
Int dim_GP(const RootSystem& rs, const NodeSet& i);

// dim G/P == sum_{j not in I} (b_j - c_j) d_j + sum_{i in I} b_i d_i
bool degree_identity_holds(const RootSystem& rs, const NodeSet& i, const Tag& t);

// Every tag with d_i >= 1 on I and d_j >= 0 off I satisfying the degree
// identity. Each result is checked to vanish off I; a violation throws
// std::logic_error.
std::vector<Tag> unsplit_tag_solutions(const RootSystem& rs, const NodeSet& i);

// b_j - c_j > 0 for every j not in I.
bool homogeneity_inequality_1(const RootSystem& rs, const NodeSet& i);
// sum_{i in I} b_i >= dim G/P.
bool homogeneity_inequality_2(const RootSystem& rs, const NodeSet& i);

// d_j == 0 for every j not in I.
bool restricted_trivial(const Tag& t, const NodeSet& i);

}  // namespace flagbundle
