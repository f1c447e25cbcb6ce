#include "flagbundle/cohom.hpp"

#include <algorithm>
#include <stdexcept>

#include "flagbundle/error.hpp"

namespace flagbundle {

namespace {

void check_rank(const RootSystem& rs, const LineBundleClass& lambda) {
  if (lambda.size() != static_cast<std::size_t>(rs.rank()))
    throw Error(ErrorKind::RankMismatch, "class of rank " + std::to_string(lambda.size()) +
                                             " on a rank " + std::to_string(rs.rank()) +
                                             " diagram");
}

LineBundleClass shifted(const LineBundleClass& lambda) {
  LineBundleClass out = lambda;
  for (auto& x : out.values) x += 1;
  return out;
}

}  // namespace

LineBundleClass canonical_class(int k) {
  return LineBundleClass(IntVector(static_cast<std::size_t>(k), -2));
}

LineBundleClass dot_reflect(const RootSystem& rs, const LineBundleClass& lambda, int i) {
  check_rank(rs, lambda);
  if (i < 1 || i > rs.rank())
    throw Error(ErrorKind::IndexOutOfRange, "reflection index " + std::to_string(i) + " outside 1.." +
                                                std::to_string(rs.rank()));
  const auto idx = static_cast<std::size_t>(i - 1);
  const Int step = lambda[idx] + 1;
  LineBundleClass out = lambda;
  for (std::size_t j = 0; j < out.size(); ++j) out[j] -= step * rs.cartan()(idx, j);
  return out;
}

bool is_singular(const RootSystem& rs, const LineBundleClass& lambda) {
  check_rank(rs, lambda);
  const LineBundleClass shift = shifted(lambda);
  return std::any_of(rs.positive_coroots().begin(), rs.positive_coroots().end(),
                     [&](const Coroot& c) { return pairing(shift, c) == 0; });
}

BigInt euler_characteristic(const RootSystem& rs, const LineBundleClass& lambda) {
  check_rank(rs, lambda);
  const LineBundleClass shift = shifted(lambda);
  const LineBundleClass r = rho(rs.rank());
  BigInt num = 1, den = 1;
  for (const Coroot& c : rs.positive_coroots()) {
    num *= pairing(shift, c);
    den *= pairing(r, c);
  }
  if (num % den != 0) throw std::logic_error("Euler characteristic is not an integer");
  return num / den;
}

BigInt weyl_dimension(const RootSystem& rs, const LineBundleClass& lambda) {
  check_rank(rs, lambda);
  for (Int x : lambda.values)
    if (x < 0)
      throw Error(ErrorKind::NotDominant, "class " + to_string(lambda.span()) + " is not dominant");
  return euler_characteristic(rs, lambda);
}

CohomologyResult cohomology(const RootSystem& rs, const LineBundleClass& lambda,
                            ReflectionStrategy strategy) {
  if (is_singular(rs, lambda)) return CohomologyResult::zero();
  LineBundleClass current = lambda;
  int steps = 0;
  for (;;) {
    std::size_t pick = current.size();
    for (std::size_t i = 0; i < current.size(); ++i) {
      if (current[i] >= 0) continue;
      switch (strategy) {
        case ReflectionStrategy::SmallestIndex:
          if (pick == current.size()) pick = i;
          break;
        case ReflectionStrategy::LargestIndex:
          pick = i;
          break;
        case ReflectionStrategy::MostNegative:
          if (pick == current.size() || current[i] < current[pick]) pick = i;
          break;
      }
    }
    if (pick == current.size()) break;
    current = dot_reflect(rs, current, static_cast<int>(pick) + 1);
    if (static_cast<std::size_t>(++steps) > rs.num_positive())
      throw std::logic_error("dot reflections did not reach the dominant chamber");
  }
  return CohomologyResult::single(steps, weyl_dimension(rs, current));
}

LineBundleClass serre_partner(const LineBundleClass& lambda) {
  LineBundleClass out = lambda;
  for (auto& x : out.values) x = -x - 2;
  return out;
}

}  // namespace flagbundle
