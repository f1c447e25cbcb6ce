#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flagbundle/diagrams.hpp"
#include "flagbundle/linalg.hpp"

namespace flagbundle {

// b-coefficients from the family closed forms, independent of any root
// enumeration.
IntVector table1_closed_form(const DynkinDiagram& d);

// |W| from the classical order formulas.
Int weyl_group_order(const DynkinDiagram& d);

struct CheckResult {
  std::string check;
  std::string diagram;
  bool passed;
  std::string detail;
};

// A single flipped bit in one Cartan entry of one swept diagram.
struct Mutation {
  std::string diagram;
  std::size_t row;
  std::size_t col;
  int bit;
  Int before;
  Int after;
};

struct VerifyOptions {
  int rank_max = 4;
  // When set, the seed picks a diagram, an entry and a bit to flip before
  // the sweep runs on that diagram.
  std::optional<std::uint64_t> mutate_seed;
};

struct VerifyReport {
  std::vector<CheckResult> results;
  std::optional<Mutation> mutation;

  bool passed() const;
  std::size_t failures() const;
};

// Diagrams swept for a rank bound: every connected canonical diagram plus
// a few reducible ones.
std::vector<DynkinDiagram> verify_diagrams(int rank_max);

Mutation pick_mutation(const std::vector<DynkinDiagram>& diagrams, std::uint64_t seed);

// Runs every invariant sweep on `claimed`, reading all structure from the
// matrix `m`, which may have been corrupted.
std::vector<CheckResult> verify_matrix(const DynkinDiagram& claimed, const IntMatrix& m);

VerifyReport run_verify(const VerifyOptions& options);

}  // namespace flagbundle
