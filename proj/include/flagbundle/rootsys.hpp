#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "flagbundle/diagrams.hpp"
#include "flagbundle/types.hpp"

namespace flagbundle {

// Nonnegative integer vector b_t or c_t of root-coordinate sums.
using CoefficientVector = IntVector;

// Positive roots in simple-root coordinates and the matching positive
// coroots in simple-coroot coordinates: positive_coroots()[n] is the coroot
// of positive_roots()[n]. Roots are ordered by height, then lexicographically.
class RootSystem {
 public:
  static RootSystem generate(const DynkinDiagram& d);
  static RootSystem generate(const CartanMatrix& c);

  const CartanMatrix& cartan() const noexcept { return cartan_; }
  int rank() const noexcept { return cartan_.rank(); }
  const std::vector<Root>& positive_roots() const noexcept { return roots_; }
  const std::vector<Coroot>& positive_coroots() const noexcept { return coroots_; }
  std::size_t num_positive() const noexcept { return roots_.size(); }

  std::optional<std::size_t> index_of(const Root& r) const;
  bool is_positive_root(const Root& r) const { return index_of(r).has_value(); }
  // Membership in the full system, positive or negative.
  bool is_root(const Root& r) const;

  // <beta, alpha_i^vee> with i 0-based.
  Int pair_with_simple_coroot(const Root& beta, std::size_t i) const;
  // <alpha_i, beta^vee> with i 0-based.
  Int pair_simple_root_with(std::size_t i, const Coroot& coroot) const;

  // alpha_i^vee as a standard basis vector, i 0-based.
  static Coroot coroot_of_simple(int k, std::size_t i);

 private:
  explicit RootSystem(CartanMatrix c) : cartan_(std::move(c)) {}
  CartanMatrix cartan_;
  std::vector<Root> roots_;
  std::vector<Coroot> coroots_;
  std::map<Root, std::size_t> lookup_;
};

// Positive roots produced by root-string closure from a generalized Cartan
// matrix m, in the ordering described above. Exposed so the coroot side can
// be cross-checked against the transposed matrix.
std::vector<IntVector> positive_root_closure(const IntMatrix& m);

// Positive roots supported on the nodes in s.
std::vector<Root> positive_subsystem(const RootSystem& rs, const NodeSet& s);

CoefficientVector b_coefficients(const RootSystem& rs);
CoefficientVector b_coefficients(const DynkinDiagram& d);

// Sum over the positive roots generated by the simple roots NOT in I.
CoefficientVector c_coefficients(const RootSystem& rs, const NodeSet& i);
CoefficientVector c_coefficients(const DynkinDiagram& d, const NodeSet& i);

// <lambda, beta^vee> for lambda in fundamental-weight coordinates and beta^vee
// in simple-coroot coordinates.
Int pairing(const Weight& lambda, const Coroot& coroot);

// rho = (1, ..., 1) in fundamental-weight coordinates.
Weight rho(int k);

Root highest_root(const RootSystem& rs);
Root highest_root(const DynkinDiagram& d);

}  // namespace flagbundle
