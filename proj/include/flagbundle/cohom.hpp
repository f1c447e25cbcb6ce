#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>

#include "flagbundle/rootsys.hpp"
#include "flagbundle/types.hpp"

namespace flagbundle {

using BigInt = boost::multiprecision::cpp_int;

// Line bundle cohomology on G/B has at most one nonzero group.
struct CohomologyResult {
  bool all_zero = true;
  int degree = 0;
  BigInt dimension = 0;

  static CohomologyResult zero() { return {}; }
  static CohomologyResult single(int degree, BigInt dimension) {
    return {false, degree, std::move(dimension)};
  }

  // h^i for any i.
  BigInt h(int i) const { return !all_zero && i == degree ? dimension : BigInt(0); }
  bool operator==(const CohomologyResult&) const = default;
};

// Order in which negative coordinates are reflected away while pushing a
// class into the dominant chamber.
enum class ReflectionStrategy { SmallestIndex, LargestIndex, MostNegative };

// K_X = -2 rho.
LineBundleClass canonical_class(int k);

// r_i'(L) = L + (L.Gamma_i + 1) K_i, i.e. lambda_j -> lambda_j - (lambda_i + 1) C(i, j).
LineBundleClass dot_reflect(const RootSystem& rs, const LineBundleClass& lambda, int i);

// True if <lambda + rho, beta^vee> = 0 for some positive coroot.
bool is_singular(const RootSystem& rs, const LineBundleClass& lambda);

// prod over positive coroots of <lambda + rho, beta^vee> / <rho, beta^vee>.
BigInt euler_characteristic(const RootSystem& rs, const LineBundleClass& lambda);

// Throws Error(NotDominant) if some lambda_i < 0.
BigInt weyl_dimension(const RootSystem& rs, const LineBundleClass& lambda);

CohomologyResult cohomology(const RootSystem& rs, const LineBundleClass& lambda,
                            ReflectionStrategy strategy = ReflectionStrategy::SmallestIndex);

// -lambda - 2 rho
LineBundleClass serre_partner(const LineBundleClass& lambda);

}  // namespace flagbundle
