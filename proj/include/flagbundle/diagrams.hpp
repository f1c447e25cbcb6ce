#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "flagbundle/linalg.hpp"

namespace flagbundle {

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family f);

struct Component {
  Family family;
  int rank;

  bool operator==(const Component&) const = default;
  auto operator<=>(const Component&) const = default;
};

// Valid family/rank pair: A,B,C >= 1; D >= 3; E in 6..8; F4; G2.
bool valid_component(Component c);

// Each isomorphism class has one canonical name: A_n, B_n (n >= 2),
// C_n (n >= 3), D_n (n >= 4), E6-8, F4, G2.
bool canonical_component(Component c);

// A semisimple Dynkin diagram. Global node indices 1..rank() run through
// the components in order, each component occupying a consecutive block.
class DynkinDiagram {
 public:
  DynkinDiagram() = default;
  explicit DynkinDiagram(std::vector<Component> components);

  const std::vector<Component>& components() const noexcept { return components_; }
  int rank() const noexcept { return rank_; }
  bool connected() const noexcept { return components_.size() == 1; }

  // 0-based position of the first node of component `c`.
  int offset(std::size_t c) const { return offsets_.at(c); }
  // Component holding the 1-based node index.
  std::size_t component_of(int node) const;

  std::string to_string() const;

  bool operator==(const DynkinDiagram& o) const { return components_ == o.components_; }

 private:
  std::vector<Component> components_;
  std::vector<int> offsets_;
  int rank_ = 0;
};

// Grammar: <FAMILY><RANK>("+"<FAMILY><RANK>)*, case-insensitive, no spaces.
DynkinDiagram parse_diagram(std::string_view spec);

// Canonical name per component, components sorted by (family, rank).
DynkinDiagram canonicalize(const DynkinDiagram& d);

// Cartan matrix entries C(i, j) = <alpha_i, alpha_j^vee> of a finite-type
// root system. Construction validates the matrix and recognises its type.
class CartanMatrix {
 public:
  explicit CartanMatrix(const DynkinDiagram& d);
  static CartanMatrix from_entries(const IntMatrix& m);

  const IntMatrix& entries() const noexcept { return entries_; }
  int rank() const noexcept { return static_cast<int>(entries_.rows()); }
  Int operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }

  bool operator==(const CartanMatrix& o) const { return entries_ == o.entries_; }

 private:
  CartanMatrix() = default;
  IntMatrix entries_;
};

IntMatrix cartan_block(Component c);
IntMatrix cartan_matrix(const DynkinDiagram& d);

// Returns an empty string when the generalized-Cartan invariants hold,
// otherwise a description of the first violation. Nonsingularity is part of
// the check.
std::string cartan_invariant_violation(const IntMatrix& m);

struct Classification {
  DynkinDiagram diagram;  // canonical
  // permutation[i] is the 1-based node of `diagram` matched by input node
  // i + 1, so that m(i, j) == cartan_matrix(diagram)(p[i] - 1, p[j] - 1).
  std::vector<int> permutation;
};

// Throws Error(NotACartanMatrix) when m violates the invariants or matches
// no finite type.
Classification classify_cartan(const IntMatrix& m);

// Every connected canonical diagram of rank <= max_rank.
std::vector<DynkinDiagram> connected_diagrams(int max_rank);

}  // namespace flagbundle
